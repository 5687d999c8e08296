#pragma once

#include <vector>

#include "grasp/fock.hpp"
#include "grasp/grassmann.hpp"

namespace grasp {

/// Sign rule used when Grassmann content moves past the operator part of a
/// kernel during multiplication.  `Graded` is the correct rule; `Ungraded`
/// drops the parity sign and exists solely for the verification suite's
/// mutation guard.
enum class KernelSignRule { Graded, Ungraded };

/// Grassmann-valued operator on the Fock space, stored left-normalized:
/// the kernel equals sum_{r,c} entry(r,c) (x) |r><c| with every Grassmann
/// factor to the left of the operator part.  Rows or columns may instead
/// be the trivial one-dimensional slot, representing kets (dim x 1) and
/// bras (1 x dim); the trivial slot has even parity.
class GradedKernel {
 public:
  GradedKernel(OccupationBasis basis, RegistryPtr registry, int rows, int cols);

  static GradedKernel zero_operator(const OccupationBasis& basis, RegistryPtr reg);
  static GradedKernel identity_operator(const OccupationBasis& basis, RegistryPtr reg);
  /// Lifts a plain matrix to a kernel with scalar entries.
  static GradedKernel embed(const FockMatrix& m, RegistryPtr reg);
  /// poly times the identity operator.
  static GradedKernel scalar_operator(const OccupationBasis& basis,
                                      const GrassmannPoly& poly);
  /// 1x1 kernel over the trivial slot, for multiplying kets and bras by
  /// Grassmann scalars from the ket/bra side.
  static GradedKernel scalar_slot(const OccupationBasis& basis,
                                  const GrassmannPoly& poly);
  static GradedKernel vacuum_ket(const OccupationBasis& basis, RegistryPtr reg);

  int rows() const { return m_rows; }
  int cols() const { return m_cols; }
  /// Parity of a row index: state parity on the Fock side, even on the
  /// trivial slot.
  int row_parity(int r) const { return m_rows == 1 ? 0 : m_basis.parity(r); }
  int col_parity(int c) const { return m_cols == 1 ? 0 : m_basis.parity(c); }

  const OccupationBasis& basis() const { return m_basis; }
  const RegistryPtr& registry() const { return m_registry; }

  GrassmannPoly& at(int r, int c) { return m_entries[index(r, c)]; }
  const GrassmannPoly& at(int r, int c) const { return m_entries[index(r, c)]; }

  GradedKernel& operator+=(const GradedKernel& other);
  GradedKernel& operator-=(const GradedKernel& other);
  GradedKernel& operator*=(Cplx factor);

  friend GradedKernel operator+(GradedKernel a, const GradedKernel& b) {
    a += b;
    return a;
  }
  friend GradedKernel operator-(GradedKernel a, const GradedKernel& b) {
    a -= b;
    return a;
  }

 private:
  std::size_t index(int r, int c) const;

  OccupationBasis m_basis;
  RegistryPtr m_registry;
  int m_rows;
  int m_cols;
  std::vector<GrassmannPoly> m_entries;
};

/// Kernel product.  Moving the Grassmann content of b's entry leftward past
/// the operator |r><s| multiplies each odd-degree monomial by
/// (-1)^(parity(r)+parity(s)); even monomials pass freely.
GradedKernel kernel_multiply(const GradedKernel& a, const GradedKernel& b,
                             KernelSignRule rule = KernelSignRule::Graded);

inline GradedKernel operator*(const GradedKernel& a, const GradedKernel& b) {
  return kernel_multiply(a, b);
}

/// Conjugate transpose; entries conjugate and re-normalize to the left,
/// odd monomials acquiring the row+column parity sign.
GradedKernel adjoint(const GradedKernel& k);

/// Sum over diagonal entries, each odd-degree monomial weighted by
/// (-1)^parity(r) — the cost of moving left-normalized content back past
/// <r|.  For a 1x1 kernel this is just the entry.
GrassmannPoly graded_trace(const GradedKernel& k);

/// Entrywise pair integration (x then x*, pairs in listed order).
GradedKernel integrate_d2(const GradedKernel& k,
                          std::span<const std::pair<int, int>> mode_pairs);

/// Entrywise substitution x -> -x over the masked generators.
GradedKernel substitute_negate(const GradedKernel& k, std::uint64_t gen_mask);

/// Extracts the matrix from a kernel whose entries are all scalar.
FockMatrix to_fock(const GradedKernel& k);

double max_entry_distance(const GradedKernel& a, const GradedKernel& b);

/// Product over modes of (pair_coeff * x_i x*_i + const_coeff); builds the
/// conversion factor (2 g g* - 1) and the moment weight (2 g g* + 1).
GrassmannPoly pair_product_poly(const RegistryPtr& reg,
                                std::span<const std::pair<int, int>> pairs,
                                double pair_coeff, double const_coeff);

/// Coherent-state column, built from the closed quadratic form of the
/// per-mode displacement.  One (x, x*) generator pair per mode, listed in
/// mode order.
GradedKernel coherent_ket(const OccupationBasis& basis, const RegistryPtr& reg,
                          std::span<const std::pair<int, int>> pairs);

/// Conjugate transpose of coherent_ket.
GradedKernel coherent_bra(const OccupationBasis& basis, const RegistryPtr& reg,
                          std::span<const std::pair<int, int>> pairs);

/// Exponential series of a nilpotent kernel; exact, terminates when the
/// running power vanishes.
GradedKernel kernel_exp_nilpotent(const GradedKernel& k,
                                  KernelSignRule rule = KernelSignRule::Graded);

/// Displacement operator: ordered product over modes of
/// exp(cdag_i x_i - x*_i c_i), evaluated by exact exponential series.
GradedKernel displacement(const OccupationBasis& basis, const RegistryPtr& reg,
                          std::span<const std::pair<int, int>> pairs,
                          KernelSignRule rule = KernelSignRule::Graded);

/// Integral of |g><g| over all modes; equals the identity matrix.
FockMatrix identity_resolution_standard(int n_modes,
                                        KernelSignRule rule = KernelSignRule::Graded);

/// Integral of f(g,g*) |g><-g| with f = prod_i (2 g_i g*_i - 1); equals the
/// identity matrix.  `include_factor = false` drops f (regression guard —
/// the result is then not the identity).
FockMatrix identity_resolution_alternate(int n_modes,
                                         KernelSignRule rule = KernelSignRule::Graded,
                                         bool include_factor = true);

/// Reconstructs F from its displacement-operator expansion
/// F = int d2h d2k <k| F D(h) |k> D(-h), evaluated symbolically.
FockMatrix weyl_reconstruct_fermion(const FockMatrix& f,
                                    KernelSignRule rule = KernelSignRule::Graded);

}  // namespace grasp
