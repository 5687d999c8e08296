#include "grasp/fock.hpp"

#include <bit>

namespace grasp {

namespace {

void check_mode(int mode, const OccupationBasis& basis) {
  if (mode < 1 || mode > basis.modes)
    throw DimensionError("mode " + std::to_string(mode) +
                         " out of range for " + std::to_string(basis.modes) +
                         " modes");
}

}  // namespace

int OccupationBasis::parity(int state) const {
  return std::popcount(static_cast<unsigned>(state)) & 1;
}

bool OccupationBasis::occupied(int state, int mode) const {
  return (state >> (modes - mode)) & 1;
}

int OccupationBasis::toggled(int state, int mode) const {
  return state ^ (1 << (modes - mode));
}

std::string OccupationBasis::bitstring(int state) const {
  std::string out(static_cast<std::size_t>(modes), '0');
  for (int mode = 1; mode <= modes; ++mode)
    if (occupied(state, mode)) out[mode - 1] = '1';
  return out;
}

int OccupationBasis::state_from_bitstring(const std::string& bits) const {
  if (static_cast<int>(bits.size()) != modes)
    throw ValidationError(ValidationError::Kind::Format,
                          "occupation bitstring '" + bits + "' must have " +
                              std::to_string(modes) + " characters");
  int state = 0;
  for (char c : bits) {
    if (c != '0' && c != '1')
      throw ValidationError(ValidationError::Kind::Format,
                            "occupation bitstring '" + bits +
                                "' contains a character other than 0/1");
    state = (state << 1) | (c == '1');
  }
  return state;
}

FockMatrix FockMatrix::zero(const OccupationBasis& basis) {
  return {basis, Matrix::Zero(basis.dimension(), basis.dimension())};
}

FockMatrix FockMatrix::identity(const OccupationBasis& basis) {
  return {basis, Matrix::Identity(basis.dimension(), basis.dimension())};
}

FockMatrix annihilation(int mode, const OccupationBasis& basis) {
  check_mode(mode, basis);
  FockMatrix out = FockMatrix::zero(basis);
  for (int state = 0; state < basis.dimension(); ++state) {
    if (!basis.occupied(state, mode)) continue;
    int lower_occupied = 0;
    for (int j = 1; j < mode; ++j)
      if (basis.occupied(state, j)) ++lower_occupied;
    const double sign = (lower_occupied & 1) ? -1.0 : 1.0;
    out.mat(basis.toggled(state, mode), state) = sign;
  }
  return out;
}

FockMatrix creation(int mode, const OccupationBasis& basis) {
  return adjoint(annihilation(mode, basis));
}

std::pair<FockMatrix, FockMatrix> parity_decompose(const FockMatrix& m) {
  FockMatrix even = FockMatrix::zero(m.basis);
  FockMatrix odd = FockMatrix::zero(m.basis);
  for (int r = 0; r < m.basis.dimension(); ++r)
    for (int c = 0; c < m.basis.dimension(); ++c) {
      if (m.basis.parity(r) == m.basis.parity(c))
        even.mat(r, c) = m.mat(r, c);
      else
        odd.mat(r, c) = m.mat(r, c);
    }
  return {even, odd};
}

Cplx trace(const FockMatrix& m) { return m.mat.trace(); }

FockMatrix adjoint(const FockMatrix& m) { return {m.basis, m.mat.adjoint()}; }

FockMatrix matmul(const FockMatrix& a, const FockMatrix& b) {
  if (a.basis != b.basis)
    throw DimensionError("matrix product over mismatched bases");
  return {a.basis, a.mat * b.mat};
}

double max_entry_distance(const FockMatrix& a, const FockMatrix& b) {
  if (a.basis != b.basis)
    throw DimensionError("matrix comparison over mismatched bases");
  return (a.mat - b.mat).cwiseAbs().maxCoeff();
}

}  // namespace grasp
