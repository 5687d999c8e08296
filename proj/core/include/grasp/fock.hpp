#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <utility>

#include "grasp/errors.hpp"

namespace grasp {

using Cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Occupation-number basis of n fermionic modes: all bitstrings of length n
/// in lexicographic order with |0...0> first.  Mode 1 is the leftmost
/// character of a bitstring, i.e. the most significant bit of the state
/// index.
struct OccupationBasis {
  int modes = 0;

  int dimension() const { return 1 << modes; }
  int parity(int state) const;
  bool occupied(int state, int mode) const;  // mode is 1-based
  int toggled(int state, int mode) const;

  std::string bitstring(int state) const;
  int state_from_bitstring(const std::string& bits) const;

  friend bool operator==(const OccupationBasis&, const OccupationBasis&) = default;
};

/// Dense complex matrix over the occupation basis.
struct FockMatrix {
  OccupationBasis basis;
  Matrix mat;

  static FockMatrix zero(const OccupationBasis& basis);
  static FockMatrix identity(const OccupationBasis& basis);
};

/// Jordan-Wigner annihilation operator for a mode: clears the occupation
/// bit and contributes the sign (-1)^(number of occupied lower modes).
FockMatrix annihilation(int mode, const OccupationBasis& basis);

/// Adjoint of annihilation.
FockMatrix creation(int mode, const OccupationBasis& basis);

/// Splits entries into the parity-preserving block (row and column state
/// parities equal) and the rest; the two parts sum to the input.
std::pair<FockMatrix, FockMatrix> parity_decompose(const FockMatrix& m);

Cplx trace(const FockMatrix& m);
FockMatrix adjoint(const FockMatrix& m);
FockMatrix matmul(const FockMatrix& a, const FockMatrix& b);

/// Largest entrywise magnitude of a - b.
double max_entry_distance(const FockMatrix& a, const FockMatrix& b);

}  // namespace grasp
