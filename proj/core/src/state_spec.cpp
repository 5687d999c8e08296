#include "grasp/state_spec.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace grasp {

FockMatrix density_from_spec(const StateSpec& spec) {
  if (spec.modes < 1 || spec.modes > 6)
    throw ValidationError(ValidationError::Kind::Format,
                          "modes must be between 1 and 6");
  const OccupationBasis basis{spec.modes};
  const int dim = basis.dimension();

  Matrix mat = Matrix::Zero(dim, dim);
  Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> given =
      Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>::Constant(dim, dim, false);

  for (const auto& element : spec.elements) {
    const int r = basis.state_from_bitstring(element.bra);
    const int c = basis.state_from_bitstring(element.ket);
    if (!spec.allow_parity_violation && basis.parity(r) != basis.parity(c))
      throw ValidationError(ValidationError::Kind::Parity,
                            "element (" + element.bra + ", " + element.ket +
                                ") connects states of different parity");
    if (given(r, c)) {
      if (std::abs(mat(r, c) - element.value) > kHermiticityTol)
        throw ValidationError(ValidationError::Kind::Format,
                              "element (" + element.bra + ", " + element.ket +
                                  ") specified twice with different values");
      continue;
    }
    mat(r, c) = element.value;
    given(r, c) = true;
  }

  // Fill entries implied by Hermiticity and reject explicit conflicts.
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) {
      if (!given(r, c)) continue;
      if (given(c, r)) {
        if (std::abs(mat(c, r) - std::conj(mat(r, c))) > kHermiticityTol)
          throw ValidationError(
              ValidationError::Kind::Hermiticity,
              "elements (" + basis.bitstring(r) + ", " + basis.bitstring(c) +
                  ") and (" + basis.bitstring(c) + ", " + basis.bitstring(r) +
                  ") are not conjugates");
      } else {
        mat(c, r) = std::conj(mat(r, c));
      }
    }

  const double trace_gap = std::abs(mat.trace() - Cplx(1.0, 0.0));
  if (trace_gap > kTraceTol)
    throw ValidationError(ValidationError::Kind::Trace,
                          "trace deviates from one by " + std::to_string(trace_gap));

  if (!spec.skip_psd_check) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(mat, Eigen::EigenvaluesOnly);
    const double min_eig = solver.eigenvalues().minCoeff();
    if (min_eig < -kPsdTol)
      throw ValidationError(ValidationError::Kind::Psd,
                            "matrix has negative eigenvalue " +
                                std::to_string(min_eig));
  }

  return {basis, mat};
}

}  // namespace grasp
