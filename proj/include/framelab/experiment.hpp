#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "framelab/serialize.hpp"

namespace framelab {

inline constexpr const char* kToolVersion = "0.1.0";

struct ExperimentConfig {
    std::string command;                 // analyze | represent | gabor | shiftinv | sweep | demo
    std::string input;                   // file path or builtin name
    Json params = Json::object();        // command-specific key/values
    Tolerance tol;
    std::uint64_t seed = 3;              // fixtures default; chosen so the
                                         // alternating-ladder growth clears the
                                         // verdict threshold with margin
    std::optional<std::string> out_path;
    std::string format = "json";         // json | csv

    static ExperimentConfig from_json(const Json& j);
    Json to_json() const;
};

struct Report {
    Json config_echo;
    Json results;
    Json provenance;  // tool version, tolerances, timestamp
    std::vector<std::string> warnings;

    Json to_json() const;
    std::string to_csv() const;  // flat series for plotting
};

// Named truncation-ladder generator ("aldroubi", "onb-shift",
// "two-onb-alternate", "circulant", "example-70404u"); used by sweep and the
// boundedness diagnostics.
FamilyGenerator builtin_generator(const std::string& name, std::uint64_t seed,
                                  const Json& params);

Report run(const ExperimentConfig& config);

// Writes the report to config.out_path (or stdout when unset).
void emit(const Report& report, const ExperimentConfig& config);

int exit_code_for(ErrorKind kind);

}  // namespace framelab
