#include "asq/experiments.hpp"

#include <cmath>

namespace asq {

void GridSpec::validate() const {
    if (count < 2) throw ParamOutOfRangeError("GridSpec: step count must be >= 2");
    if (!(min < max)) throw ParamOutOfRangeError("GridSpec: min must be < max");
}

namespace {

ScanRecord make_record(std::string experiment, long index,
                       std::vector<std::pair<std::string, double>> params,
                       const SwitchOutcome& outcome, const Tolerances& tol) {
    ScanRecord rec;
    rec.experiment = std::move(experiment);
    rec.index = index;
    rec.params = std::move(params);
    SpectrumReport spec = is_absolutely_separable(outcome.state, tol.boundary_tol);
    rec.eigenvalues.assign(spec.eigenvalues.data(),
                           spec.eigenvalues.data() + spec.eigenvalues.size());
    rec.as_lhs = spec.as_lhs;
    rec.classification = label_name(classify(outcome.state, tol.boundary_tol), outcome.state.dims);
    rec.rank = static_cast<int>(rank_with_tol(outcome.state.mat, tol.rank_tol));
    rec.prob_plus = outcome.probability;
    return rec;
}

ScanRecord make_skipped(std::string experiment, long index,
                        std::vector<std::pair<std::string, double>> params, Eigen::Index dim) {
    ScanRecord rec;
    rec.experiment = std::move(experiment);
    rec.index = index;
    rec.params = std::move(params);
    rec.eigenvalues.assign(static_cast<std::size_t>(dim), 0.0);
    rec.classification = "skipped";
    rec.skipped = true;
    return rec;
}

}  // namespace

std::vector<ScanRecord> werner_eigen_scan(double p, const GridSpec& theta_grid, double gamma,
                                          double phi, const Tolerances& tol) {
    theta_grid.validate();
    DensityMatrix rho = modified_werner({p, gamma, phi});
    UnitaryMatrix gate = cnot();
    std::vector<ScanRecord> out;
    out.reserve(theta_grid.count);
    for (int i = 0; i < theta_grid.count; ++i) {
        const double theta = theta_grid.at(i);
        SwitchOutcome res = switch_unitary_closed(gate, u_theta(theta), rho, Branch::plus);
        out.push_back(make_record("werner-scan", i,
                                  {{"p", p}, {"theta", theta}, {"gamma", gamma}, {"phi", phi}},
                                  res, tol));
    }
    return out;
}

std::vector<ScanRecord> werner_violation_surface(const GridSpec& p_grid, const GridSpec& theta_grid,
                                                 double gamma, double phi, const Tolerances& tol) {
    p_grid.validate();
    theta_grid.validate();
    UnitaryMatrix gate = cnot();
    std::vector<ScanRecord> out;
    out.reserve(static_cast<std::size_t>(p_grid.count) * theta_grid.count);
    long index = 0;
    for (int ip = 0; ip < p_grid.count; ++ip) {
        const double p = p_grid.at(ip);
        DensityMatrix rho = modified_werner({p, gamma, phi});
        for (int it = 0; it < theta_grid.count; ++it) {
            const double theta = theta_grid.at(it);
            SwitchOutcome res = switch_unitary_closed(gate, u_theta(theta), rho, Branch::plus);
            out.push_back(make_record("werner-surface", index++,
                                      {{"p", p}, {"theta", theta}, {"gamma", gamma}, {"phi", phi}},
                                      res, tol));
        }
    }
    return out;
}

std::vector<ScanRecord> random_unitary_scatter(const DensityMatrix& rho, long n_samples,
                                               RngSeed seed, ScatterMode mode,
                                               const Tolerances& tol) {
    if (n_samples < 1) throw ParamOutOfRangeError("random_unitary_scatter: need n_samples >= 1");
    const Eigen::Index n = rho.dim();
    UnitaryMatrix gate = cnot();
    std::vector<ScanRecord> out;
    out.reserve(n_samples);
    for (long i = 0; i < n_samples; ++i) {
        const double mode_flag = mode == ScatterMode::cnot_plus_random ? 0.0 : 1.0;
        std::vector<std::pair<std::string, double>> params = {
            {"sample", static_cast<double>(i)}, {"mode", mode_flag}};
        try {
            SwitchOutcome res = [&] {
                if (mode == ScatterMode::cnot_plus_random) {
                    if (n != 4)
                        throw DimensionMismatchError("random_unitary_scatter: CNOT mode needs a 2x2 state");
                    return switch_unitary_closed(gate, haar_random(n, derive_seed(seed, i)), rho,
                                                 Branch::plus);
                }
                UnitaryMatrix u1 = haar_random(n, derive_seed(seed, 2 * i));
                UnitaryMatrix u2 = haar_random(n, derive_seed(seed, 2 * i + 1));
                return switch_unitary_closed(u1, u2, rho, Branch::plus);
            }();
            out.push_back(make_record("random-scatter", i, std::move(params), res, tol));
        } catch (const ZeroProbabilityBranchError&) {
            out.push_back(make_skipped("random-scatter", i, std::move(params), n));
        }
    }
    return out;
}

BdGeometryResult bd_geometry_scan(double theta, int resolution, const Tolerances& tol) {
    if (resolution < 10)
        throw ParamOutOfRangeError("bd_geometry_scan: resolution must be >= 10");
    UnitaryMatrix gate = cnot();
    UnitaryMatrix u = u_theta(theta);
    BdGeometryResult result;
    GridSpec axis{-1.0, 1.0, resolution};
    long index = 0;
    for (int i = 0; i < resolution; ++i) {
        for (int j = 0; j < resolution; ++j) {
            for (int k = 0; k < resolution; ++k) {
                const double c1 = axis.at(i), c2 = axis.at(j), c3 = axis.at(k);
                auto probs = bd_probs_from_correlations(c1, c2, c3);
                bool valid = true;
                for (double p : probs)
                    if (p < -1e-12) valid = false;
                if (!valid) {
                    ++result.invalid_points;
                    continue;
                }
                DensityMatrix rho = bd_from_correlations(c1, c2, c3);
                const bool init_sep =
                    std::abs(c1) + std::abs(c2) + std::abs(c3) <= 1.0 + kBoundaryTol;
                SpectrumReport init_spec = is_absolutely_separable(rho, tol.boundary_tol);
                const bool init_as = init_spec.verdict != AsVerdict::not_AS;
                std::vector<std::pair<std::string, double>> params = {
                    {"c1", c1}, {"c2", c2}, {"c3", c3}, {"theta", theta},
                    {"init_sep", init_sep ? 1.0 : 0.0}, {"init_as", init_as ? 1.0 : 0.0}};
                try {
                    SwitchOutcome res = switch_unitary_closed(gate, u, rho, Branch::plus);
                    result.records.push_back(
                        make_record("bd-geometry", index, std::move(params), res, tol));
                } catch (const ZeroProbabilityBranchError&) {
                    result.records.push_back(make_skipped("bd-geometry", index, std::move(params), 4));
                }
                ++index;
            }
        }
    }
    return result;
}

std::vector<ScanRecord> bd_alpha_scan(const GridSpec& alpha_grid, const Tolerances& tol) {
    alpha_grid.validate();
    std::vector<ScanRecord> out;
    out.reserve(alpha_grid.count);
    for (int i = 0; i < alpha_grid.count; ++i) {
        const double alpha = alpha_grid.at(i);
        DensityMatrix rho = bd_alpha_family(alpha);
        // no switch applied; report the state as-is with unit weight
        SwitchOutcome identity_outcome{rho, 1.0, Branch::plus};
        out.push_back(make_record("bd-alpha", i, {{"alpha", alpha}}, identity_outcome, tol));
    }
    return out;
}

std::vector<ScanRecord> bd_alpha_random(double alpha, long n_samples, RngSeed seed,
                                        const Tolerances& tol) {
    if (n_samples < 1) throw ParamOutOfRangeError("bd_alpha_random: need n_samples >= 1");
    DensityMatrix rho = bd_alpha_family(alpha);
    UnitaryMatrix gate = cnot();
    std::vector<ScanRecord> out;
    out.reserve(n_samples);
    for (long i = 0; i < n_samples; ++i) {
        std::vector<std::pair<std::string, double>> params = {
            {"alpha", alpha}, {"sample", static_cast<double>(i)}};
        try {
            SwitchOutcome res =
                switch_unitary_closed(gate, haar_random(4, derive_seed(seed, i)), rho, Branch::plus);
            out.push_back(make_record("bd-alpha-random", i, std::move(params), res, tol));
        } catch (const ZeroProbabilityBranchError&) {
            out.push_back(make_skipped("bd-alpha-random", i, std::move(params), 4));
        }
    }
    return out;
}

std::vector<ScanRecord> higher_dim_scan(Eigen::Index dB, long n_samples, RngSeed seed,
                                        const Tolerances& tol) {
    if (dB < 3) throw ParamOutOfRangeError("higher_dim_scan: dB must be >= 3");
    if (n_samples < 1) throw ParamOutOfRangeError("higher_dim_scan: need n_samples >= 1");
    DensityMatrix rho = maximally_mixed({2, dB});
    const Eigen::Index n = rho.dim();
    std::vector<ScanRecord> out;
    out.reserve(n_samples);
    for (long i = 0; i < n_samples; ++i) {
        std::vector<std::pair<std::string, double>> params = {
            {"dB", static_cast<double>(dB)}, {"sample", static_cast<double>(i)}};
        try {
            UnitaryMatrix u1 = haar_random(n, derive_seed(seed, 2 * i));
            UnitaryMatrix u2 = haar_random(n, derive_seed(seed, 2 * i + 1));
            SwitchOutcome res = switch_unitary_closed(u1, u2, rho, Branch::plus);
            out.push_back(make_record("higher-dim", i, std::move(params), res, tol));
        } catch (const ZeroProbabilityBranchError&) {
            out.push_back(make_skipped("higher-dim", i, std::move(params), n));
        }
    }
    return out;
}

}  // namespace asq
