#include "grasp/grassmann.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace grasp {

namespace {

/// Parity of the number of out-of-order pairs when the ascending factors of
/// `a` are followed by the ascending factors of `b`.  Assumes disjoint masks.
int interleave_sign(std::uint64_t a, std::uint64_t b) {
  int inversions = 0;
  std::uint64_t rest = b;
  while (rest) {
    const int j = std::countr_zero(rest);
    if (j < 63) inversions += std::popcount(a >> (j + 1));
    rest &= rest - 1;
  }
  return (inversions & 1) ? -1 : 1;
}

void check_same_registry(const GrassmannPoly& p, const GrassmannPoly& q) {
  if (!same_registry(p.registry(), q.registry()))
    throw RegistryError("operands belong to different generator registries");
}

}  // namespace

int Monomial::degree() const { return std::popcount(mask); }

std::vector<int> Monomial::indices() const {
  std::vector<int> out;
  std::uint64_t rest = mask;
  while (rest) {
    out.push_back(std::countr_zero(rest));
    rest &= rest - 1;
  }
  return out;
}

CanonicalizeResult canonicalize(const GeneratorRegistry& registry,
                                std::span<const int> sequence) {
  std::uint64_t mask = 0;
  for (int index : sequence) {
    registry.label(index);  // validates the index
    const std::uint64_t bit = std::uint64_t{1} << index;
    if (mask & bit) return {0, Monomial{}};
    mask |= bit;
  }
  // Count inversions directly; sequences are short.
  int inversions = 0;
  for (std::size_t i = 0; i < sequence.size(); ++i)
    for (std::size_t j = i + 1; j < sequence.size(); ++j)
      if (sequence[i] > sequence[j]) ++inversions;
  return {(inversions & 1) ? -1 : 1, Monomial{mask}};
}

GrassmannPoly GrassmannPoly::zero(RegistryPtr registry) {
  return GrassmannPoly(std::move(registry));
}

GrassmannPoly GrassmannPoly::scalar(RegistryPtr registry, Cplx value) {
  GrassmannPoly p(std::move(registry));
  p.add_term(0, value);
  return p;
}

GrassmannPoly GrassmannPoly::generator(RegistryPtr registry, int index) {
  registry->label(index);
  GrassmannPoly p(std::move(registry));
  p.add_term(std::uint64_t{1} << index, Cplx(1.0, 0.0));
  return p;
}

GrassmannPoly GrassmannPoly::from_monomial(RegistryPtr registry, Monomial m,
                                           Cplx coeff) {
  if (m.mask && std::bit_width(m.mask) > static_cast<int>(registry->count()))
    throw RegistryError("monomial uses a generator outside the registry");
  GrassmannPoly p(std::move(registry));
  p.add_term(m.mask, coeff);
  return p;
}

bool GrassmannPoly::is_scalar() const {
  for (const auto& [mask, coeff] : m_terms)
    if (mask != 0) return false;
  return true;
}

Cplx GrassmannPoly::constant_term() const {
  auto it = m_terms.find(0);
  return it == m_terms.end() ? Cplx(0.0, 0.0) : it->second;
}

Cplx GrassmannPoly::coefficient(Monomial m) const {
  auto it = m_terms.find(m.mask);
  return it == m_terms.end() ? Cplx(0.0, 0.0) : it->second;
}

int GrassmannPoly::max_degree() const {
  int deg = 0;
  for (const auto& [mask, coeff] : m_terms)
    deg = std::max(deg, std::popcount(mask));
  return deg;
}

void GrassmannPoly::add_term(std::uint64_t mask, Cplx coeff) {
  auto [it, inserted] = m_terms.try_emplace(mask, coeff);
  if (!inserted) it->second += coeff;
  if (std::abs(it->second) < kDedupThreshold) m_terms.erase(it);
}

GrassmannPoly& GrassmannPoly::operator+=(const GrassmannPoly& other) {
  check_same_registry(*this, other);
  for (const auto& [mask, coeff] : other.m_terms) add_term(mask, coeff);
  return *this;
}

GrassmannPoly& GrassmannPoly::operator-=(const GrassmannPoly& other) {
  check_same_registry(*this, other);
  for (const auto& [mask, coeff] : other.m_terms) add_term(mask, -coeff);
  return *this;
}

GrassmannPoly& GrassmannPoly::operator*=(Cplx factor) {
  if (std::abs(factor) < kDedupThreshold) {
    m_terms.clear();
    return *this;
  }
  for (auto it = m_terms.begin(); it != m_terms.end();) {
    it->second *= factor;
    if (std::abs(it->second) < kDedupThreshold)
      it = m_terms.erase(it);
    else
      ++it;
  }
  return *this;
}

GrassmannPoly multiply(const GrassmannPoly& p, const GrassmannPoly& q) {
  check_same_registry(p, q);
  GrassmannPoly out(p.registry() ? p.registry() : q.registry());
  for (const auto& [ma, ca] : p.terms()) {
    for (const auto& [mb, cb] : q.terms()) {
      if (ma & mb) continue;  // repeated generator
      const int sign = interleave_sign(ma, mb);
      out.add_term(ma | mb, static_cast<double>(sign) * ca * cb);
    }
  }
  return out;
}

GrassmannPoly conjugate(const GrassmannPoly& p) {
  const auto& reg = *p.registry();
  GrassmannPoly out(p.registry());
  for (const auto& [mask, coeff] : p.terms()) {
    std::vector<int> seq = Monomial{mask}.indices();
    std::reverse(seq.begin(), seq.end());
    for (int& index : seq) index = reg.conjugate_index(index);
    const auto canon = canonicalize(reg, seq);
    out.add_term(canon.monomial.mask,
                 static_cast<double>(canon.sign) * std::conj(coeff));
  }
  return out;
}

GrassmannPoly berezin_integrate(const GrassmannPoly& p, int gen) {
  p.registry()->label(gen);
  const std::uint64_t bit = std::uint64_t{1} << gen;
  GrassmannPoly out(p.registry());
  for (const auto& [mask, coeff] : p.terms()) {
    if (!(mask & bit)) continue;  // integral of a gen-free term vanishes
    const int position = std::popcount(mask & (bit - 1));
    const double sign = (position & 1) ? -1.0 : 1.0;
    out.add_term(mask & ~bit, sign * coeff);
  }
  return out;
}

GrassmannPoly integrate_d2(const GrassmannPoly& p,
                           std::span<const std::pair<int, int>> mode_pairs) {
  GrassmannPoly out = p;
  for (const auto& [x, x_star] : mode_pairs) {
    out = berezin_integrate(out, x);
    out = berezin_integrate(out, x_star);
  }
  return out;
}

GrassmannPoly substitute_negate(const GrassmannPoly& p, std::uint64_t gen_mask) {
  GrassmannPoly out(p.registry());
  for (const auto& [mask, coeff] : p.terms()) {
    const int hits = std::popcount(mask & gen_mask);
    out.add_term(mask, (hits & 1) ? -coeff : coeff);
  }
  return out;
}

ParitySplit parity_split(const GrassmannPoly& p) {
  ParitySplit split{GrassmannPoly(p.registry()), GrassmannPoly(p.registry())};
  for (const auto& [mask, coeff] : p.terms()) {
    if (std::popcount(mask) & 1)
      split.odd.add_term(mask, coeff);
    else
      split.even.add_term(mask, coeff);
  }
  return split;
}

GrassmannPoly exp_nilpotent(const GrassmannPoly& p) {
  if (std::abs(p.constant_term()) >= GrassmannPoly::kDedupThreshold)
    throw DomainError("exp_nilpotent requires a zero constant term");
  GrassmannPoly result = GrassmannPoly::scalar(p.registry(), Cplx(1.0, 0.0));
  GrassmannPoly power = GrassmannPoly::scalar(p.registry(), Cplx(1.0, 0.0));
  const int max_order = static_cast<int>(p.registry()->count()) + 1;
  for (int k = 1; k <= max_order && !power.is_zero(); ++k) {
    power = multiply(power, p);
    power *= Cplx(1.0 / static_cast<double>(k), 0.0);
    result += power;
  }
  return result;
}

double max_coeff_distance(const GrassmannPoly& p, const GrassmannPoly& q) {
  return max_coeff_magnitude(p - q);
}

double max_coeff_magnitude(const GrassmannPoly& p) {
  double worst = 0.0;
  for (const auto& [mask, coeff] : p.terms())
    worst = std::max(worst, std::abs(coeff));
  return worst;
}

}  // namespace grasp
