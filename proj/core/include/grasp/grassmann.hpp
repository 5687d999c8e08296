#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "grasp/generator_registry.hpp"

namespace grasp {

using Cplx = std::complex<double>;

/// Product of distinct generators in registry order, stored as a bitmask:
/// bit i set means generator i is a factor.  The canonical ordering of the
/// factors is ascending index.
struct Monomial {
  std::uint64_t mask = 0;

  int degree() const;
  bool contains(int index) const { return (mask >> index) & 1u; }
  std::vector<int> indices() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

struct CanonicalizeResult {
  int sign = 0;  // 0 when a generator repeats
  Monomial monomial;
};

/// Sorts a generator sequence into registry order.  `sign` is the parity
/// of the sorting permutation, or 0 (with an empty monomial) when an index
/// appears twice, since the square of any generator vanishes.
CanonicalizeResult canonicalize(const GeneratorRegistry& registry,
                                std::span<const int> sequence);

/// Sparse element of the exterior algebra over a generator registry:
/// a complex-linear combination of canonical monomials.  Values are
/// immutable for sharing purposes; arithmetic produces new values.
class GrassmannPoly {
 public:
  using Terms = std::map<std::uint64_t, Cplx>;

  /// Coefficients below this magnitude are dropped on every update.
  static constexpr double kDedupThreshold = 1e-12;

  GrassmannPoly() = default;
  explicit GrassmannPoly(RegistryPtr registry) : m_registry(std::move(registry)) {}

  static GrassmannPoly zero(RegistryPtr registry);
  static GrassmannPoly scalar(RegistryPtr registry, Cplx value);
  static GrassmannPoly generator(RegistryPtr registry, int index);
  static GrassmannPoly from_monomial(RegistryPtr registry, Monomial m, Cplx coeff);

  const RegistryPtr& registry() const { return m_registry; }
  const Terms& terms() const { return m_terms; }

  bool is_zero() const { return m_terms.empty(); }
  /// True when every surviving term is the empty monomial.
  bool is_scalar() const;
  Cplx constant_term() const;
  Cplx coefficient(Monomial m) const;
  int max_degree() const;

  /// Accumulates `coeff` onto the monomial `mask`, dropping the term if the
  /// result falls below the dedup threshold.
  void add_term(std::uint64_t mask, Cplx coeff);

  GrassmannPoly& operator+=(const GrassmannPoly& other);
  GrassmannPoly& operator-=(const GrassmannPoly& other);
  GrassmannPoly& operator*=(Cplx factor);

  friend GrassmannPoly operator+(GrassmannPoly a, const GrassmannPoly& b) {
    a += b;
    return a;
  }
  friend GrassmannPoly operator-(GrassmannPoly a, const GrassmannPoly& b) {
    a -= b;
    return a;
  }
  friend GrassmannPoly operator*(GrassmannPoly a, Cplx c) {
    a *= c;
    return a;
  }
  friend GrassmannPoly operator*(Cplx c, GrassmannPoly a) {
    a *= c;
    return a;
  }
  friend GrassmannPoly operator-(GrassmannPoly a) {
    a *= Cplx(-1.0, 0.0);
    return a;
  }

 private:
  RegistryPtr m_registry;
  Terms m_terms;
};

/// Bilinear product.  Monomials concatenate and re-sort; the sign is the
/// parity of the interleaving permutation and products with a repeated
/// generator vanish.
GrassmannPoly multiply(const GrassmannPoly& p, const GrassmannPoly& q);

inline GrassmannPoly operator*(const GrassmannPoly& p, const GrassmannPoly& q) {
  return multiply(p, q);
}

/// Complex conjugation: coefficients conjugate, each monomial maps through
/// the registry pairing in reversed factor order and is re-canonicalized.
/// An involution and an anti-homomorphism of the product.
GrassmannPoly conjugate(const GrassmannPoly& p);

/// Berezin integral over one generator: terms without it vanish, terms
/// with it lose the generator after it is moved to the leftmost position
/// (each transposition contributing a sign).
GrassmannPoly berezin_integrate(const GrassmannPoly& p, int gen);

/// Iterated pair integral: for each (x, x*) entry, integrates over x then
/// x*, pairs applied in the listed order.
GrassmannPoly integrate_d2(const GrassmannPoly& p,
                           std::span<const std::pair<int, int>> mode_pairs);

/// Substitutes x -> -x for every generator in `gen_mask`.
GrassmannPoly substitute_negate(const GrassmannPoly& p, std::uint64_t gen_mask);

struct ParitySplit {
  GrassmannPoly even;
  GrassmannPoly odd;
};

/// Splits by monomial degree parity; even + odd == p.
ParitySplit parity_split(const GrassmannPoly& p);

/// Finite exponential series of a polynomial with no constant term.
/// Throws DomainError otherwise (the caller factors scalar exponentials
/// out first).
GrassmannPoly exp_nilpotent(const GrassmannPoly& p);

/// Largest coefficient magnitude of p - q; zero for equal polynomials.
double max_coeff_distance(const GrassmannPoly& p, const GrassmannPoly& q);

/// Largest coefficient magnitude in p.
double max_coeff_magnitude(const GrassmannPoly& p);

}  // namespace grasp
