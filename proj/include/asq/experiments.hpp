#pragma once

#include <string>
#include <utility>
#include <vector>

#include "asq/criteria.hpp"
#include "asq/quantum_switch.hpp"

namespace asq {

// One row of experiment output.
struct ScanRecord {
    std::string experiment;
    long index = 0;
    std::vector<std::pair<std::string, double>> params;
    std::vector<double> eigenvalues;  // descending
    double as_lhs = 0.0;
    std::string classification;
    int rank = 0;
    double prob_plus = 0.0;
    bool skipped = false;
};

// Uniform inclusive grid.
struct GridSpec {
    double min = 0.0;
    double max = 1.0;
    int count = 2;

    double at(int i) const { return min + (max - min) * i / (count - 1); }
    void validate() const;
};

struct Tolerances {
    double rank_tol = kDefaultRankTol;
    double boundary_tol = kBoundaryTol;
};

enum class ScatterMode { cnot_plus_random, random_pair };

// Eigenvalues of the plus-branch switch(CNOT, U(theta)) output on the
// modified Werner state, over a theta grid.
std::vector<ScanRecord> werner_eigen_scan(double p, const GridSpec& theta_grid,
                                          double gamma = M_PI / 4, double phi = 0.0,
                                          const Tolerances& tol = {});

// as_lhs of the plus-branch output over a (p, theta) grid.
std::vector<ScanRecord> werner_violation_surface(const GridSpec& p_grid,
                                                 const GridSpec& theta_grid,
                                                 double gamma = M_PI / 4, double phi = 0.0,
                                                 const Tolerances& tol = {});

// Plus-branch switch with Haar-random unitaries on a fixed input state.
// Per-sample unitaries derive from (seed, index); zero-probability branches
// are recorded with the skip flag rather than resampled.
std::vector<ScanRecord> random_unitary_scatter(const DensityMatrix& rho, long n_samples,
                                               RngSeed seed, ScatterMode mode,
                                               const Tolerances& tol = {});

struct BdGeometryResult {
    std::vector<ScanRecord> records;  // valid grid points only
    long invalid_points = 0;
};

// Sweep (c1,c2,c3) over a uniform cubic grid on [-1,1]^3, keep valid BD
// states, and record the initial separable/AS classification together
// with the post-switch (CNOT, U(theta)) AS verdict. Params init_sep and
// init_as are 0/1 flags; coordinates are the initial ones.
BdGeometryResult bd_geometry_scan(double theta, int resolution, const Tolerances& tol = {});

// as_lhs of the one-parameter Bell-diagonal family, no switch.
std::vector<ScanRecord> bd_alpha_scan(const GridSpec& alpha_grid, const Tolerances& tol = {});

// Plus-branch switch(CNOT, Haar-random) on the alpha family.
std::vector<ScanRecord> bd_alpha_random(double alpha, long n_samples, RngSeed seed,
                                        const Tolerances& tol = {});

// Maximally mixed 2xdB state under two Haar-random unitaries of dimension 2*dB.
std::vector<ScanRecord> higher_dim_scan(Eigen::Index dB, long n_samples, RngSeed seed,
                                        const Tolerances& tol = {});

}  // namespace asq
