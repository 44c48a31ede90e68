#include "asq/cli.hpp"

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "asq/io.hpp"

namespace asq {

namespace {

std::string now_iso8601() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&t));
    return buf;
}

GridSpec parse_grid(const std::string& text) {
    GridSpec g;
    char c1 = 0, c2 = 0;
    std::istringstream is(text);
    if (!(is >> g.min >> c1 >> g.max >> c2 >> g.count) || c1 != ':' || c2 != ':')
        throw ParamOutOfRangeError("expected grid min:max:count, got '" + text + "'");
    g.validate();
    return g;
}

struct StateOptions {
    std::string kind = "werner";
    double p = 0.0, gamma = M_PI / 4, phi = 0.0;
    std::vector<double> probs;
    std::vector<double> corr;
    double alpha = 0.25;
    Eigen::Index dB = 2;
    std::string file;
};

void add_state_options(CLI::App* cmd, StateOptions& opt) {
    cmd->add_option("--state", opt.kind,
                    "werner | boundary-rank3 | bd-probs | bd-corr | bd-alpha | "
                    "maximally-mixed | file")
        ->default_val(opt.kind);
    cmd->add_option("--p", opt.p, "Werner mixing weight");
    cmd->add_option("--gamma", opt.gamma, "Werner pure-state angle (radians)");
    cmd->add_option("--phi", opt.phi, "Werner phase (radians)");
    cmd->add_option("--probs", opt.probs, "Bell-diagonal probabilities p1 p2 p3 p4")->expected(4);
    cmd->add_option("--c", opt.corr, "Bell-diagonal correlations c1 c2 c3")->expected(3);
    cmd->add_option("--alpha", opt.alpha, "Bell-diagonal alpha-family parameter");
    cmd->add_option("--dB", opt.dB, "B-side dimension for maximally-mixed");
    cmd->add_option("--state-file", opt.file, "matrix JSON file for --state file");
}

DensityMatrix build_state(const StateOptions& opt) {
    if (opt.kind == "werner") return modified_werner({opt.p, opt.gamma, opt.phi});
    if (opt.kind == "boundary-rank3") return boundary_rank3();
    if (opt.kind == "bd-probs") {
        if (opt.probs.size() != 4) throw ParamOutOfRangeError("bd-probs needs --probs p1 p2 p3 p4");
        return bd_from_probs(opt.probs[0], opt.probs[1], opt.probs[2], opt.probs[3]);
    }
    if (opt.kind == "bd-corr") {
        if (opt.corr.size() != 3) throw ParamOutOfRangeError("bd-corr needs --c c1 c2 c3");
        return bd_from_correlations(opt.corr[0], opt.corr[1], opt.corr[2]);
    }
    if (opt.kind == "bd-alpha") return bd_alpha_family(opt.alpha);
    if (opt.kind == "maximally-mixed") return maximally_mixed({2, opt.dB});
    if (opt.kind == "file") return load_density_matrix(opt.file);
    throw ParamOutOfRangeError("unknown --state '" + opt.kind + "'");
}

UnitaryMatrix build_unitary(const std::string& text, Eigen::Index dim) {
    const auto colon = text.find(':');
    const std::string head = text.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (head == "cnot") return cnot();
    if (head == "utheta") return u_theta(std::stod(arg));
    if (head == "haar") return haar_random(dim, RngSeed{arg.empty() ? 0 : std::stoull(arg)});
    if (head == "file") return load_unitary(arg);
    throw ParamOutOfRangeError("unknown unitary spec '" + text +
                               "' (expected cnot | utheta:<t> | haar:<seed> | file:<path>)");
}

struct OutputOptions {
    std::string out;
    std::string manifest;
    double tol_rank = kDefaultRankTol;
    double tol_boundary = kBoundaryTol;
    std::uint64_t seed = 0;
};

void add_output_options(CLI::App* cmd, OutputOptions& opt) {
    cmd->add_option("--out", opt.out, "CSV output path");
    cmd->add_option("--manifest", opt.manifest, "JSON run-manifest path");
    cmd->add_option("--tol-rank", opt.tol_rank, "rank tolerance")->default_val(opt.tol_rank);
    cmd->add_option("--tol-boundary", opt.tol_boundary, "AS boundary tolerance")
        ->default_val(opt.tol_boundary);
    cmd->add_option("--seed", opt.seed, "RNG seed")->default_val(0);
}

void emit(const std::vector<ScanRecord>& records, const OutputOptions& out,
          const std::string& command,
          const std::vector<std::pair<std::string, std::string>>& manifest_params) {
    if (!out.out.empty()) write_csv_file(records, out.out);
    if (!out.manifest.empty()) {
        RunManifest m;
        m.command = command;
        for (const auto& [k, v] : manifest_params) m.parameters[k] = v;
        m.parameters["tol_rank"] = format_double(out.tol_rank);
        m.parameters["tol_boundary"] = format_double(out.tol_boundary);
        if (!out.out.empty()) m.parameters["out"] = out.out;
        m.seed = out.seed;
        m.timestamp = now_iso8601();
        write_manifest_file(m, out.manifest);
    }
}

ScanRecord state_record(const std::string& experiment, const DensityMatrix& rho, double prob,
                        const Tolerances& tol,
                        std::vector<std::pair<std::string, double>> params) {
    SpectrumReport spec = is_absolutely_separable(rho, tol.boundary_tol);
    ScanRecord rec;
    rec.experiment = experiment;
    rec.params = std::move(params);
    rec.eigenvalues.assign(spec.eigenvalues.data(),
                           spec.eigenvalues.data() + spec.eigenvalues.size());
    rec.as_lhs = spec.as_lhs;
    rec.classification = label_name(classify(rho, tol.boundary_tol), rho.dims);
    rec.rank = static_cast<int>(rank_with_tol(rho.mat, tol.rank_tol));
    rec.prob_plus = prob;
    return rec;
}

void print_record(const ScanRecord& rec) {
    std::cout << "experiment: " << rec.experiment << '\n';
    std::cout << "eigenvalues:";
    for (double ev : rec.eigenvalues) std::cout << ' ' << format_double(ev);
    std::cout << '\n';
    std::cout << "as_lhs: " << format_double(rec.as_lhs) << '\n';
    std::cout << "classification: " << rec.classification << '\n';
    std::cout << "rank: " << rec.rank << '\n';
    std::cout << "prob: " << format_double(rec.prob_plus) << '\n';
}

int run_impl(const std::vector<std::string>& args) {
    CLI::App app{"absolute-separability breaking under quantum-switch action"};
    app.require_subcommand(1);

    StateOptions state_opt;
    OutputOptions out_opt;

    auto* classify_cmd = app.add_subcommand("classify", "spectrum, AS condition and PPT label of a state");
    add_state_options(classify_cmd, state_opt);
    add_output_options(classify_cmd, out_opt);

    auto* switch_cmd = app.add_subcommand("switch", "apply the switch of two unitaries and classify the output");
    std::string u1_spec = "cnot", u2_spec = "utheta:0", branch_name = "plus";
    add_state_options(switch_cmd, state_opt);
    switch_cmd->add_option("--u1", u1_spec, "cnot | utheta:<t> | haar:<seed> | file:<path>");
    switch_cmd->add_option("--u2", u2_spec, "cnot | utheta:<t> | haar:<seed> | file:<path>");
    switch_cmd->add_option("--branch", branch_name, "plus | minus")
        ->check(CLI::IsMember({"plus", "minus"}));
    add_output_options(switch_cmd, out_opt);

    auto* wscan_cmd = app.add_subcommand("werner-scan", "final-state eigenvalues over a theta grid");
    double wp = 0.15, wgamma = M_PI / 4, wphi = 0.0;
    std::string theta_grid_text = "0:3.14159265358979:181";
    wscan_cmd->add_option("--p", wp)->default_val(wp);
    wscan_cmd->add_option("--gamma", wgamma);
    wscan_cmd->add_option("--phi", wphi);
    wscan_cmd->add_option("--theta", theta_grid_text, "theta grid min:max:count");
    add_output_options(wscan_cmd, out_opt);

    auto* wsurf_cmd = app.add_subcommand("werner-surface", "AS-condition value over a (p, theta) grid");
    std::string p_grid_text = "0:1:101";
    wsurf_cmd->add_option("--p", p_grid_text, "p grid min:max:count");
    wsurf_cmd->add_option("--theta", theta_grid_text, "theta grid min:max:count");
    wsurf_cmd->add_option("--gamma", wgamma);
    wsurf_cmd->add_option("--phi", wphi);
    add_output_options(wsurf_cmd, out_opt);

    auto* scatter_cmd = app.add_subcommand("random-scatter", "switch with Haar-random unitaries on a fixed state");
    long n_samples = 1000;
    std::string mode_name = "cnot";
    add_state_options(scatter_cmd, state_opt);
    scatter_cmd->add_option("--samples", n_samples)->default_val(n_samples);
    scatter_cmd->add_option("--mode", mode_name, "cnot (CNOT + random) | pair (two random)")
        ->check(CLI::IsMember({"cnot", "pair"}));
    add_output_options(scatter_cmd, out_opt);

    auto* bdgeo_cmd = app.add_subcommand("bd-geometry", "Bell-diagonal cube sweep under switch(CNOT, U(theta))");
    double bd_theta = M_PI / 6;
    int resolution = 41;
    bdgeo_cmd->add_option("--theta", bd_theta)->default_val(bd_theta);
    bdgeo_cmd->add_option("--resolution", resolution, "grid points per axis")->default_val(resolution);
    add_output_options(bdgeo_cmd, out_opt);

    auto* bdalpha_cmd = app.add_subcommand("bd-alpha", "alpha family: grid scan, or random-unitary switch with --samples");
    std::string alpha_grid_text = "0.17:0.5:34";
    double alpha = 0.18;
    long alpha_samples = 0;
    bdalpha_cmd->add_option("--alpha-grid", alpha_grid_text, "alpha grid min:max:count");
    bdalpha_cmd->add_option("--alpha", alpha, "fixed alpha for --samples mode");
    bdalpha_cmd->add_option("--samples", alpha_samples,
                            "if > 0, run switch(CNOT, Haar) samples at --alpha instead of the grid");
    add_output_options(bdalpha_cmd, out_opt);

    auto* hd_cmd = app.add_subcommand("higher-dim", "two Haar unitaries on the 2xdB maximally mixed state");
    Eigen::Index hd_dB = 3;
    long hd_samples = 1000;
    hd_cmd->add_option("--dB", hd_dB)->default_val(hd_dB);
    hd_cmd->add_option("--samples", hd_samples)->default_val(hd_samples);
    add_output_options(hd_cmd, out_opt);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    const Tolerances tol{out_opt.tol_rank, out_opt.tol_boundary};

    if (*classify_cmd) {
        DensityMatrix rho = build_state(state_opt);
        ScanRecord rec = state_record("classify", rho, 1.0, tol,
                                      {{"p", state_opt.p}, {"gamma", state_opt.gamma},
                                       {"phi", state_opt.phi}, {"alpha", state_opt.alpha}});
        std::cout << "verdict: "
                  << verdict_name(is_absolutely_separable(rho, tol.boundary_tol).verdict) << '\n';
        print_record(rec);
        emit({rec}, out_opt, "classify", {{"state", state_opt.kind}});
        return 0;
    }
    if (*switch_cmd) {
        DensityMatrix rho = build_state(state_opt);
        UnitaryMatrix u1 = build_unitary(u1_spec, rho.dim());
        UnitaryMatrix u2 = build_unitary(u2_spec, rho.dim());
        Branch branch = branch_name == "plus" ? Branch::plus : Branch::minus;
        SwitchOutcome res = switch_unitary_closed(u1, u2, rho, branch);
        ScanRecord rec = state_record("switch", res.state, res.probability, tol,
                                      {{"branch", branch == Branch::plus ? 1.0 : -1.0}});
        print_record(rec);
        emit({rec}, out_opt, "switch",
             {{"state", state_opt.kind}, {"u1", u1_spec}, {"u2", u2_spec}, {"branch", branch_name}});
        return 0;
    }
    if (*wscan_cmd) {
        auto records = werner_eigen_scan(wp, parse_grid(theta_grid_text), wgamma, wphi, tol);
        emit(records, out_opt, "werner-scan",
             {{"p", format_double(wp)}, {"theta", theta_grid_text},
              {"gamma", format_double(wgamma)}, {"phi", format_double(wphi)}});
        std::cout << "werner-scan: " << records.size() << " records\n";
        return 0;
    }
    if (*wsurf_cmd) {
        auto records = werner_violation_surface(parse_grid(p_grid_text), parse_grid(theta_grid_text),
                                                wgamma, wphi, tol);
        emit(records, out_opt, "werner-surface",
             {{"p", p_grid_text}, {"theta", theta_grid_text},
              {"gamma", format_double(wgamma)}, {"phi", format_double(wphi)}});
        std::cout << "werner-surface: " << records.size() << " records\n";
        return 0;
    }
    if (*scatter_cmd) {
        DensityMatrix rho = build_state(state_opt);
        ScatterMode mode = mode_name == "cnot" ? ScatterMode::cnot_plus_random
                                               : ScatterMode::random_pair;
        auto records = random_unitary_scatter(rho, n_samples, RngSeed{out_opt.seed}, mode, tol);
        long violating = 0;
        for (const auto& r : records)
            if (!r.skipped && r.as_lhs > tol.boundary_tol) ++violating;
        emit(records, out_opt, "random-scatter",
             {{"state", state_opt.kind}, {"samples", std::to_string(n_samples)},
              {"mode", mode_name}});
        std::cout << "random-scatter: " << records.size() << " records, " << violating
                  << " violating\n";
        return 0;
    }
    if (*bdgeo_cmd) {
        BdGeometryResult result = bd_geometry_scan(bd_theta, resolution, tol);
        long survivors = 0;
        for (const auto& r : result.records)
            if (!r.skipped && r.params[5].second > 0.5 && r.classification != "NPT_entangled" &&
                r.as_lhs <= tol.boundary_tol)
                ++survivors;
        emit(result.records, out_opt, "bd-geometry",
             {{"theta", format_double(bd_theta)}, {"resolution", std::to_string(resolution)}});
        std::cout << "bd-geometry: " << result.records.size() << " valid points, "
                  << result.invalid_points << " invalid, " << survivors
                  << " initial-AS points still AS after the switch\n";
        return 0;
    }
    if (*bdalpha_cmd) {
        if (alpha_samples > 0) {
            auto records = bd_alpha_random(alpha, alpha_samples, RngSeed{out_opt.seed}, tol);
            emit(records, out_opt, "bd-alpha",
                 {{"alpha", format_double(alpha)}, {"samples", std::to_string(alpha_samples)}});
            std::cout << "bd-alpha (random): " << records.size() << " records\n";
        } else {
            auto records = bd_alpha_scan(parse_grid(alpha_grid_text), tol);
            emit(records, out_opt, "bd-alpha", {{"alpha_grid", alpha_grid_text}});
            std::cout << "bd-alpha (scan): " << records.size() << " records\n";
        }
        return 0;
    }
    if (*hd_cmd) {
        auto records = higher_dim_scan(hd_dB, hd_samples, RngSeed{out_opt.seed}, tol);
        emit(records, out_opt, "higher-dim",
             {{"dB", std::to_string(hd_dB)}, {"samples", std::to_string(hd_samples)}});
        std::cout << "higher-dim: " << records.size() << " records\n";
        return 0;
    }
    return 2;
}

}  // namespace

int cli_run(const std::vector<std::string>& args) {
    try {
        return run_impl(args);
    } catch (const std::invalid_argument& e) {
        std::cerr << "argument error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace asq
