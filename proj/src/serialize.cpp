#include "framelab/serialize.hpp"

#include <fstream>

namespace framelab {

Json family_to_json(const FrameFamily& fam) {
    fam.validate();
    Json j;
    j["dim"] = fam.dim();
    j["index"] = {{"kind", fam.index.kind == IndexConvention::Kind::Nat0 ? "NAT0" : "INT_WINDOW"},
                  {"offset", fam.index.offset}};
    Json vecs = Json::array();
    for (Eigen::Index k = 0; k < fam.count(); ++k) {
        Json v = Json::array();
        for (Eigen::Index r = 0; r < fam.dim(); ++r) {
            const Complex z = fam.vectors(r, k);
            v.push_back({z.real(), z.imag()});
        }
        vecs.push_back(std::move(v));
    }
    j["vectors"] = std::move(vecs);
    if (fam.labels) j["labels"] = *fam.labels;
    return j;
}

FrameFamily family_from_json(const Json& j) {
    try {
        FrameFamily fam;
        const int dim = j.at("dim").get<int>();
        const auto& idx = j.at("index");
        const std::string kind = idx.at("kind").get<std::string>();
        if (kind == "NAT0") fam.index.kind = IndexConvention::Kind::Nat0;
        else if (kind == "INT_WINDOW") fam.index.kind = IndexConvention::Kind::IntWindow;
        else throw Error(ErrorKind::Config, "unknown index kind: " + kind);
        fam.index.offset = idx.at("offset").get<int>();

        const auto& vecs = j.at("vectors");
        fam.vectors = CMatrix(dim, vecs.size());
        for (size_t k = 0; k < vecs.size(); ++k) {
            if (static_cast<int>(vecs[k].size()) != dim)
                throw Error(ErrorKind::Config, "vector dim mismatch at index " + std::to_string(k));
            for (int r = 0; r < dim; ++r)
                fam.vectors(r, k) = Complex(vecs[k][r][0].get<double>(),
                                            vecs[k][r][1].get<double>());
        }
        if (j.contains("labels")) fam.labels = j["labels"].get<std::vector<std::string>>();
        fam.validate();
        return fam;
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::Config, std::string("family parse: ") + e.what());
    }
}

Json report_to_json(const FrameReport& rep) {
    return Json{{"lower_bound_A", rep.lower_bound_a},
                {"upper_bound_B", rep.upper_bound_b},
                {"rank", rep.rank},
                {"excess", rep.excess},
                {"kernel_dim", rep.kernel_dim},
                {"classification", frame_class_name(rep.classification)},
                {"is_frame_for_ambient", rep.is_frame_for_ambient}};
}

Json diagnostics_to_json(const RepresentationDiagnostics& diag) {
    Json profile = Json::array();
    for (const auto& [n, norm] : diag.norm_profile) profile.push_back({n, norm});
    return Json{{"interp_residual", diag.interp_residual},
                {"shift_residual", diag.shift_residual},
                {"norm_profile", std::move(profile)},
                {"verdict", verdict_name(diag.verdict)},
                {"warnings", diag.warnings}};
}

Json phi_profile_to_json(const PhiProfile& p) {
    return Json{{"gamma_grid", p.gamma_grid},
                {"phi_values", p.phi_values},
                {"ess_inf_support", p.ess_inf_support},
                {"ess_sup", p.ess_sup},
                {"zero_fraction", p.zero_fraction}};
}

Json spectrum_to_json(const SampledSpectrum& s) {
    Json vals = Json::array();
    for (const Complex& z : s.values) vals.push_back({z.real(), z.imag()});
    return Json{{"grid_size", s.grid_size}, {"freq_extent", s.freq_extent},
                {"values", std::move(vals)}};
}

SampledSpectrum spectrum_from_json(const Json& j) {
    try {
        if (j.contains("builtin")) {
            const std::string name = j["builtin"].get<std::string>();
            const int g = j.value("grid_size", 4097);
            const double f = j.value("freq_extent", 1.0);
            if (name == "sinc") return sinc_spectrum(g, f);
            if (name == "gauss") return gauss_spectrum(g, f, j.value("sigma", 0.05));
            throw Error(ErrorKind::Config, "unknown builtin spectrum: " + name);
        }
        SampledSpectrum s;
        s.grid_size = j.at("grid_size").get<int>();
        s.freq_extent = j.at("freq_extent").get<double>();
        for (const auto& v : j.at("values"))
            s.values.emplace_back(v[0].get<double>(), v[1].get<double>());
        s.validate();
        return s;
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::Config, std::string("spectrum parse: ") + e.what());
    }
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Config, "cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::Config, path + ": " + e.what());
    }
}

}  // namespace framelab
