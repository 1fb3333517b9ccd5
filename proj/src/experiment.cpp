#include "framelab/experiment.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "framelab/gabor.hpp"

namespace framelab {

namespace {

std::string timestamp_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

Json tolerance_json(const Tolerance& tol) {
    return Json{{"rank_rel", tol.rank_rel},
                {"residual_abs", tol.residual_abs},
                {"zero_level", tol.zero_level}};
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json(const Json& j) {
    try {
        ExperimentConfig c;
        c.command = j.at("command").get<std::string>();
        c.input = j.value("input", "");
        c.params = j.value("params", Json::object());
        if (j.contains("tolerance")) {
            const auto& t = j["tolerance"];
            c.tol.rank_rel = t.value("rank_rel", c.tol.rank_rel);
            c.tol.residual_abs = t.value("residual_abs", c.tol.residual_abs);
            c.tol.zero_level = t.value("zero_level", c.tol.zero_level);
        }
        c.seed = j.value("seed", c.seed);
        if (j.contains("out")) c.out_path = j["out"].get<std::string>();
        c.format = j.value("format", "json");
        if (c.format != "json" && c.format != "csv")
            throw Error(ErrorKind::Config, "format must be json or csv");
        if (c.tol.rank_rel <= 0 || c.tol.rank_rel >= 1 || c.tol.residual_abs <= 0 ||
            c.tol.zero_level <= 0)
            throw Error(ErrorKind::Config, "tolerances must be positive (rank_rel < 1)");
        return c;
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::Config, std::string("config parse: ") + e.what());
    }
}

Json ExperimentConfig::to_json() const {
    Json j{{"command", command}, {"input", input}, {"params", params},
           {"tolerance", tolerance_json(tol)}, {"seed", seed}, {"format", format}};
    if (out_path) j["out"] = *out_path;
    return j;
}

Json Report::to_json() const {
    return Json{{"config", config_echo}, {"results", results},
                {"provenance", provenance}, {"warnings", warnings}};
}

std::string Report::to_csv() const {
    std::ostringstream out;
    if (results.contains("series")) {
        const auto& rows = results["series"];
        bool header = false;
        for (const auto& row : rows) {
            if (!header) {
                bool first = true;
                for (auto it = row.begin(); it != row.end(); ++it, first = false)
                    out << (first ? "" : ",") << it.key();
                out << "\n";
                header = true;
            }
            bool first = true;
            for (auto it = row.begin(); it != row.end(); ++it, first = false)
                out << (first ? "" : ",") << it.value().dump();
            out << "\n";
        }
        return out.str();
    }
    out << "key,value\n";
    for (auto it = results.begin(); it != results.end(); ++it)
        out << it.key() << "," << it.value().dump() << "\n";
    return out.str();
}

FamilyGenerator builtin_generator(const std::string& name, std::uint64_t seed,
                                  const Json& params) {
    if (name == "aldroubi")
        return [](int n) { return aldroubi_family(n, n); };
    if (name == "onb-shift")
        return [](int n) {
            FrameFamily fam;
            fam.vectors = CMatrix::Identity(n, n);
            return fam;
        };
    if (name == "two-onb-alternate") {
        const int ambient = params.value("ambient", 0);  // 0: use size as ambient
        return [ambient, seed](int n) {
            return alternating_two_onb_family(ambient > 0 ? ambient : n, n, seed);
        };
    }
    if (name == "circulant") {
        const int ambient = params.value("ambient", 0);
        const int step = params.value("step", 1);
        return [ambient, step, seed](int n) {
            return circulant_orbit_family(ambient > 0 ? ambient : n, n, step, seed);
        };
    }
    if (name == "example-70404u")
        return [](int n) {
            if (n % 6 != 0)
                throw Error(ErrorKind::Config, "example-70404u sizes must be multiples of 6");
            return example_70404u_family(n / 2, n);
        };
    throw Error(ErrorKind::Config, "unknown builtin family: " + name);
}

namespace {

FrameFamily resolve_family(const ExperimentConfig& c) {
    if (c.input.empty()) throw Error(ErrorKind::Config, "no input family");
    if (c.input.size() > 5 && c.input.substr(c.input.size() - 5) == ".json")
        return family_from_json(load_json_file(c.input));
    const int size = c.params.value("size", 0);
    if (size < 1) throw Error(ErrorKind::Config, "builtin family needs params.size");
    return builtin_generator(c.input, c.seed, c.params)(size);
}

Json analyze_family(const FrameFamily& fam, const Tolerance& tol) {
    Json r = report_to_json(classify(fam, tol));
    r["shift_residual"] = shift_invariance_residual(fam, tol);
    return r;
}

Report run_analyze(const ExperimentConfig& c) {
    Report rep;
    rep.results = analyze_family(resolve_family(c), c.tol);
    return rep;
}

Report run_represent(const ExperimentConfig& c) {
    Report rep;
    const FrameFamily fam = resolve_family(c);
    auto [t, residual] = construct_iteration_operator(fam, c.tol);
    RepresentationDiagnostics diag;
    diag.iteration_operator = t;
    diag.interp_residual = residual;
    diag.shift_residual = shift_invariance_residual(fam, c.tol);
    diag.norm_profile.emplace_back(static_cast<int>(fam.count()), operator_norm(t));
    rep.results = diagnostics_to_json(diag);
    rep.results.erase("verdict");  // single size: no boundedness claim
    Tolerance head_tol = c.tol;
    if (fam.count() > 1 &&
        excess({fam.vectors.leftCols(fam.count() - 1), fam.index, std::nullopt}, head_tol) > 0)
        rep.warnings.push_back("head family is numerically rank-deficient; "
                               "the interpolant is conditioned on the resolved span");
    return rep;
}

FiniteGaborSystem gabor_from_config(const Json& p) {
    FiniteGaborSystem sys;
    sys.l = p.value("L", 0);
    sys.a = p.value("a", 1);
    sys.b = p.value("b", 1);
    const Json window = p.value("window", Json("delta"));
    sys.g = CVector::Zero(sys.l > 0 ? sys.l : 1);
    if (window.is_string()) {
        const std::string w = window.get<std::string>();
        if (w == "delta") {
            sys.g(0) = 1.0;
        } else if (w == "indicator") {
            const int len = p.value("block", std::max(1, sys.a));
            for (int t = 0; t < std::min(len, sys.l); ++t) sys.g(t) = 1.0 / std::sqrt(double(len));
        } else if (w == "gauss") {
            const double width = p.value("width", double(sys.l) / 8.0);
            for (int t = 0; t < sys.l; ++t) {
                const double d = std::min(double(t), double(sys.l - t));
                sys.g(t) = std::exp(-d * d / (2.0 * width * width));
            }
            sys.g.normalize();
        } else {
            throw Error(ErrorKind::Config, "unknown gabor window: " + w);
        }
    } else {
        if (static_cast<int>(window.size()) != sys.l)
            throw Error(ErrorKind::Config, "custom window dim != L");
        for (int t = 0; t < sys.l; ++t)
            sys.g(t) = Complex(window[t][0].get<double>(), window[t][1].get<double>());
    }
    return sys;
}

GaborOrder order_from_config(const Json& p) {
    GaborOrder order;
    const Json o = p.value("order", Json("raster"));
    if (o.is_string()) {
        const std::string s = o.get<std::string>();
        if (s == "raster") order.kind = GaborOrder::Kind::Raster;
        else if (s == "zigzag") order.kind = GaborOrder::Kind::Zigzag;
        else throw Error(ErrorKind::Config, "unknown gabor order: " + s);
    } else {
        order.kind = GaborOrder::Kind::Custom;
        order.permutation = o.get<std::vector<int>>();
    }
    return order;
}

Report run_gabor(const ExperimentConfig& c) {
    Report rep;
    const Json& p = c.params;
    const FiniteGaborSystem sys = gabor_from_config(p);
    const DensityCheck density = density_check(sys);
    const FrameFamily fam = gabor_family(sys, order_from_config(p));
    rep.results = analyze_family(fam, c.tol);
    rep.results["redundancy"] = density.redundancy;
    rep.results["frame_possible"] = density.frame_possible;
    rep.results["basis_candidate"] = density.basis_candidate;
    rep.results["element_count"] = sys.element_count();
    return rep;
}

Report run_shiftinv(const ExperimentConfig& c) {
    Report rep;
    const Json& p = c.params;
    SampledSpectrum spec = c.input.empty() || c.input == "builtin"
                               ? spectrum_from_json(p.value("spectrum", Json({{"builtin", "sinc"}})))
                               : spectrum_from_json(load_json_file(c.input));
    const double b = p.value("b", 1.0);
    const int gamma_points = p.value("gamma_points", 4096);
    const PhiProfile profile = phi_profile(spec, b, gamma_points, c.tol);
    const SiClass cls = classify_si(profile, c.tol);
    rep.results = Json{{"phi", phi_profile_to_json(profile)},
                       {"classification", si_class_name(cls)}};
    if (cls == SiClass::NotFrameSequence && profile.zero_fraction < 1.0 &&
        profile.ess_inf_support > 0.0)
        rep.warnings.push_back("Phi approaches 0 through positive values; verdict is limited "
                               "by the gamma-grid resolution");
    if (p.contains("K") && p.contains("J")) {
        const SiFamily fam = si_family(spec, b, p["K"].get<int>(), p["J"].get<int>(),
                                       p.value("cyclic", true));
        rep.results["family"] = analyze_family(fam.family, c.tol);
        const auto check = translation_representation_check(fam, c.tol);
        rep.results["translation_check"] = Json{{"is_iterated", check.is_iterated},
                                                {"max_step_residual", check.max_step_residual},
                                                {"shift_residual", check.shift_residual},
                                                {"first_violation", check.first_violation}};
    }
    return rep;
}

Report run_sweep(const ExperimentConfig& c) {
    Report rep;
    const std::vector<int> sizes = c.params.value("sizes", std::vector<int>{});
    if (sizes.size() < 3 || !std::is_sorted(sizes.begin(), sizes.end()) ||
        std::adjacent_find(sizes.begin(), sizes.end()) != sizes.end())
        throw Error(ErrorKind::Config, "sweep needs a strictly increasing ladder of >= 3 sizes");
    const FamilyGenerator gen = builtin_generator(c.input, c.seed, c.params);

    Json series = Json::array();
    for (int n : sizes) {
        Json row{{"size", n}};
        try {
            const FrameFamily fam = gen(n);
            const FrameReport fr = classify(fam, c.tol);
            row["classification"] = frame_class_name(fr.classification);
            row["excess"] = fr.excess;
            row["lower_bound_A"] = fr.lower_bound_a;
            row["upper_bound_B"] = fr.upper_bound_b;
            row["shift_residual"] = shift_invariance_residual(fam, c.tol);
            auto [t, residual] = construct_iteration_operator(fam, c.tol);
            row["operator_norm"] = operator_norm(t);
            row["interp_residual"] = residual;
        } catch (const Error& e) {
            row["warning"] = std::string(e.kind_name()) + ": " + e.what();
            rep.warnings.push_back("size " + std::to_string(n) + ": " + e.what());
        }
        series.push_back(std::move(row));
    }
    rep.results["series"] = std::move(series);

    try {
        const RepresentationDiagnostics diag = boundedness_profile(gen, sizes, c.tol);
        Json d = diagnostics_to_json(diag);
        d.erase("norm_profile");  // already in the series
        rep.results["summary"] = std::move(d);
    } catch (const Error& e) {
        rep.results["summary"] = Json{{"verdict", "INCONCLUSIVE"},
                                      {"error", std::string(e.kind_name()) + ": " + e.what()}};
    }
    return rep;
}

Report run_demo(const ExperimentConfig& c) {
    ExperimentConfig d = c;
    const std::string name = c.input;
    if (name == "aldroubi") {
        d.command = "sweep";
        d.input = "aldroubi";
        if (!d.params.contains("sizes")) d.params["sizes"] = {50, 100, 200};
        return run_sweep(d);
    }
    if (name == "two-onb-alternate") {
        d.command = "sweep";
        d.input = "two-onb-alternate";
        if (!d.params.contains("sizes")) d.params["sizes"] = {32, 64, 128};
        if (!d.params.contains("ambient")) d.params["ambient"] = 128;
        Report rep = run_sweep(d);
        const FrameFamily fam = builtin_generator("two-onb-alternate", d.seed, d.params)(
            d.params["sizes"].back().get<int>());
        const InterleavingClassification cls = interleaving_classify(fam);
        rep.results["interleaving"] =
            Json{{"I1", cls.i1}, {"I2", cls.i2}, {"I3", cls.i3}, {"I4", cls.i4},
                 {"predicted_unbounded", cls.predicted_unbounded}};
        return rep;
    }
    if (name == "sinc-half-shift") {
        d.command = "shiftinv";
        d.input = "";
        if (!d.params.contains("b")) d.params["b"] = 0.5;
        if (!d.params.contains("K")) { d.params["K"] = 66; d.params["J"] = 66; }
        return run_shiftinv(d);
    }
    if (name == "gabor-thirds") {
        const int l = d.params.value("L", 24);
        Report rep;
        const FrameFamily lattice = example_70404u_lattice(l);
        rep.results["lattice"] = analyze_family(lattice, c.tol);
        const FrameFamily interleaved = example_70404u_family(l, 2 * l);
        rep.results["interleaved"] = analyze_family(interleaved, c.tol);
        const InterleavingClassification cls = interleaving_classify(interleaved);
        rep.results["interleaving"] = Json{{"predicted_unbounded", cls.predicted_unbounded}};
        return rep;
    }
    throw Error(ErrorKind::Config, "unknown demo: " + name +
                                       " (expected aldroubi, sinc-half-shift, gabor-thirds, "
                                       "two-onb-alternate)");
}

}  // namespace

Report run(const ExperimentConfig& config) {
    Report rep;
    if (config.command == "analyze") rep = run_analyze(config);
    else if (config.command == "represent") rep = run_represent(config);
    else if (config.command == "gabor") rep = run_gabor(config);
    else if (config.command == "shiftinv") rep = run_shiftinv(config);
    else if (config.command == "sweep") rep = run_sweep(config);
    else if (config.command == "demo") rep = run_demo(config);
    else throw Error(ErrorKind::Config, "unknown command: " + config.command);

    rep.config_echo = config.to_json();
    rep.provenance = Json{{"tool_version", kToolVersion},
                          {"tolerance", tolerance_json(config.tol)},
                          {"timestamp", timestamp_utc()}};
    return rep;
}

void emit(const Report& report, const ExperimentConfig& config) {
    const std::string text =
        config.format == "csv" ? report.to_csv() : report.to_json().dump(2) + "\n";
    if (config.out_path) {
        std::ofstream out(*config.out_path);
        if (!out) throw Error(ErrorKind::Config, "cannot write " + *config.out_path);
        out << text;
    } else {
        std::cout << text;
    }
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Config: return 2;
        case ErrorKind::NumericFailure: return 3;
        case ErrorKind::RepresentationImpossible: return 4;
        case ErrorKind::Range: return 5;
        case ErrorKind::Pattern: return 6;
        case ErrorKind::Label: return 7;
        case ErrorKind::NotFrameSequence: return 8;
        case ErrorKind::Discretization: return 9;
    }
    return 1;
}

}  // namespace framelab
