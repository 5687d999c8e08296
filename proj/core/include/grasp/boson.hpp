#pragma once

#include <ostream>
#include <vector>

#include "grasp/fock.hpp"

namespace grasp {

/// Single bosonic mode truncated to number states 0..dim-1, with ladder
/// operators.  The commutator [a, adag] = I holds away from the top level;
/// truncation artifacts live in the last row/column.
struct TruncatedBosonSpace {
  int dim;
  Matrix a;
  Matrix adag;

  explicit TruncatedBosonSpace(int dim);
};

/// Square grid over the complex plane: nodes (-W + j d) + i (-W + k d)
/// with d = 2W/(M-1), M odd, quadrature weight d^2 per node.
struct ComplexGrid {
  double halfwidth = 6.0;
  int points = 121;

  double step() const { return 2.0 * halfwidth / (points - 1); }
  double weight() const { return step() * step(); }
  double coordinate(int j) const { return -halfwidth + j * step(); }
  Cplx node(int j, int k) const { return {coordinate(j), coordinate(k)}; }
};

/// Complex field sampled on a grid, row-major with the real-axis index
/// outer.  For quasiprobability fields the real part is the distribution;
/// the imaginary residue is a numerical diagnostic.
struct GridField {
  ComplexGrid grid;
  std::vector<Cplx> values;

  Cplx& at(int j, int k) { return values[static_cast<std::size_t>(j) * grid.points + k]; }
  const Cplx& at(int j, int k) const {
    return values[static_cast<std::size_t>(j) * grid.points + k];
  }
  double max_imag() const;
};

/// Displacement operator exp(alpha adag - alpha* a) via dense matrix
/// exponential.  Reliable while |alpha|^2 is small against dim/4; beyond
/// that a warning is emitted on `warnings` when provided.
Matrix boson_displacement(Cplx alpha, const TruncatedBosonSpace& space,
                          std::ostream* warnings = nullptr);

/// Matrix of e^{xi adag} e^{-xi* a} on the truncated block.  These are the
/// exact untruncated matrix elements, evaluated through generalized
/// Laguerre recurrences; the triangular-product route cancels
/// catastrophically once |xi|^2 is large.
Matrix normal_ordered_displacement_factor(Cplx xi, const TruncatedBosonSpace& space);

/// Displacement matrix elements <m|D(xi)|n> on the truncated block
/// (e^{-|xi|^2/2} times the normal-ordered factor).  Stays accurate at
/// arguments where the truncated matrix exponential no longer is.
Matrix displacement_elements(Cplx xi, const TruncatedBosonSpace& space);

/// Normally ordered characteristic function Tr[rho e^{xi adag} e^{-xi* a}].
Cplx char_normal(const Matrix& rho, Cplx xi, const TruncatedBosonSpace& space);

/// Quasiprobability distribution as the grid Fourier transform of the
/// normally ordered characteristic function.  Refuses (GridError) when the
/// characteristic function has not decayed at the grid boundary, unless
/// `force` is set.  Decay is measured on the inscribed circle |xi| =
/// halfwidth: the square's corner caps always carry a residual tail for
/// finite-rank states and carry negligible quadrature weight.
GridField p_function_grid(const Matrix& rho, const ComplexGrid& grid,
                          const TruncatedBosonSpace& space, bool force = false);

/// Threshold on the boundary magnitude of the characteristic function
/// beyond which the distribution is not representable on the grid.
inline constexpr double kRimDecayThreshold = 1e-3;

/// Largest |char_normal| on the inscribed boundary circle of the grid.
double rim_decay_statistic(const Matrix& rho, const ComplexGrid& grid,
                           const TruncatedBosonSpace& space);

/// Grid quadrature of the field against conj(alpha)^n alpha^m.
Cplx moment_from_p(const GridField& field, int n, int m);

/// Reconstructs F from its displacement expansion
/// F = int (d2xi/pi) Tr[F D(xi)] D(-xi) by grid quadrature.
Matrix weyl_reconstruct_boson(const Matrix& f, const ComplexGrid& grid,
                              const TruncatedBosonSpace& space);

/// Thermal state of mean occupation nbar, normalized on the truncated space.
Matrix thermal_state(double nbar, const TruncatedBosonSpace& space);

/// Closed-form coherent-state amplitudes e^{-|alpha|^2/2} alpha^n / sqrt(n!).
Eigen::VectorXcd coherent_amplitudes(Cplx alpha, int dim);

/// Triangular factors e^{z adag} and e^{z a} (exact finite series).
Matrix exp_raising(Cplx z, const TruncatedBosonSpace& space);
Matrix exp_lowering(Cplx z, const TruncatedBosonSpace& space);

}  // namespace grasp
