#pragma once

#include <json.hpp>

#include "framelab/frames.hpp"
#include "framelab/operator_rep.hpp"
#include "framelab/shift_invariant.hpp"

namespace framelab {

using Json = nlohmann::json;

// FrameFamily <-> {"dim": J, "index": {"kind": "NAT0"|"INT_WINDOW",
// "offset": o}, "vectors": [[[re, im], ...], ...], "labels": [...]}.
Json family_to_json(const FrameFamily& fam);
FrameFamily family_from_json(const Json& j);

Json report_to_json(const FrameReport& rep);

// {"interp_residual": r, "shift_residual": s, "norm_profile": [[N, norm],
// ...], "verdict": "..."}.
Json diagnostics_to_json(const RepresentationDiagnostics& diag);

Json phi_profile_to_json(const PhiProfile& p);

// {"grid_size": G, "freq_extent": F, "values": [[re, im], ...]} or
// {"builtin": "sinc"|"gauss", ...params}.
Json spectrum_to_json(const SampledSpectrum& s);
SampledSpectrum spectrum_from_json(const Json& j);

Json load_json_file(const std::string& path);  // Error(Config) on failure

}  // namespace framelab
