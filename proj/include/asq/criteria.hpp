#pragma once

#include <string>

#include "asq/states.hpp"

namespace asq {

enum class AsVerdict { AS_interior, AS_boundary, not_AS };

struct SpectrumReport {
    RealVector eigenvalues;  // descending
    double as_lhs = 0.0;
    AsVerdict verdict = AsVerdict::not_AS;
};

enum class StateLabel { NPT_entangled, PPT_not_AS, AS, AS_boundary };

struct PptReport {
    bool ppt = false;
    double min_pt_eigenvalue = 0.0;
};

inline constexpr double kBoundaryTol = 1e-9;
inline constexpr double kPptTol = 1e-10;

// Left-hand side of the 2xd absolute-separability condition
//   lambda_1 - lambda_{2d-1} - 2 sqrt(lambda_{2d-2} lambda_{2d})
// on a descending spectrum. Eigenvalues within 1e-12 of zero are clamped
// to 0 before the square root; without the clamp an exactly-zero
// eigenvalue carried as ~1e-16 round-off inflates the result by ~1e-8.
double as_lhs(const RealVector& eigs_descending);

// Spectrum, condition value and verdict for a 2xd state. Boundary band is
// |as_lhs| <= boundary_tol.
SpectrumReport is_absolutely_separable(const DensityMatrix& rho,
                                       double boundary_tol = kBoundaryTol);

// Positivity of the partial transpose over B.
PptReport is_ppt(const DensityMatrix& rho);

// Combined label. PPT certifies separability only for dB <= 3; the label
// text from label_name() drops the entanglement claim for larger dB.
StateLabel classify(const DensityMatrix& rho, double boundary_tol = kBoundaryTol);

std::string label_name(StateLabel label, const BipartiteDims& dims);
std::string verdict_name(AsVerdict v);

}  // namespace asq
