#include "grasp/graded_kernel.hpp"

#include <bit>

namespace grasp {

namespace {

/// Negates the odd-degree monomials of `p` when `flip` is set.
GrassmannPoly with_parity_sign(const GrassmannPoly& p, bool flip) {
  if (!flip) return p;
  GrassmannPoly out(p.registry());
  for (const auto& [mask, coeff] : p.terms())
    out.add_term(mask, (std::popcount(mask) & 1) ? -coeff : coeff);
  return out;
}

void check_compatible(const GradedKernel& a, const GradedKernel& b) {
  if (a.basis() != b.basis())
    throw DimensionError("kernels over different occupation bases");
  if (!same_registry(a.registry(), b.registry()))
    throw RegistryError("kernels over different generator registries");
}

}  // namespace

GradedKernel::GradedKernel(OccupationBasis basis, RegistryPtr registry, int rows,
                           int cols)
    : m_basis(basis),
      m_registry(std::move(registry)),
      m_rows(rows),
      m_cols(cols),
      m_entries(static_cast<std::size_t>(rows) * cols,
                GrassmannPoly(m_registry)) {
  const int dim = m_basis.dimension();
  if ((rows != dim && rows != 1) || (cols != dim && cols != 1))
    throw DimensionError("kernel shape must use the basis dimension or 1");
}

std::size_t GradedKernel::index(int r, int c) const {
  if (r < 0 || r >= m_rows || c < 0 || c >= m_cols)
    throw DimensionError("kernel entry index out of range");
  return static_cast<std::size_t>(r) * m_cols + c;
}

GradedKernel GradedKernel::zero_operator(const OccupationBasis& basis,
                                         RegistryPtr reg) {
  return GradedKernel(basis, std::move(reg), basis.dimension(), basis.dimension());
}

GradedKernel GradedKernel::identity_operator(const OccupationBasis& basis,
                                             RegistryPtr reg) {
  GradedKernel k = zero_operator(basis, std::move(reg));
  for (int r = 0; r < basis.dimension(); ++r)
    k.at(r, r) = GrassmannPoly::scalar(k.registry(), Cplx(1.0, 0.0));
  return k;
}

GradedKernel GradedKernel::embed(const FockMatrix& m, RegistryPtr reg) {
  GradedKernel k = zero_operator(m.basis, std::move(reg));
  for (int r = 0; r < m.basis.dimension(); ++r)
    for (int c = 0; c < m.basis.dimension(); ++c) {
      const Cplx value = m.mat(r, c);
      if (std::abs(value) >= GrassmannPoly::kDedupThreshold)
        k.at(r, c) = GrassmannPoly::scalar(k.registry(), value);
    }
  return k;
}

GradedKernel GradedKernel::scalar_operator(const OccupationBasis& basis,
                                           const GrassmannPoly& poly) {
  GradedKernel k = zero_operator(basis, poly.registry());
  for (int r = 0; r < basis.dimension(); ++r) k.at(r, r) = poly;
  return k;
}

GradedKernel GradedKernel::scalar_slot(const OccupationBasis& basis,
                                       const GrassmannPoly& poly) {
  GradedKernel k(basis, poly.registry(), 1, 1);
  k.at(0, 0) = poly;
  return k;
}

GradedKernel GradedKernel::vacuum_ket(const OccupationBasis& basis,
                                      RegistryPtr reg) {
  GradedKernel k(basis, std::move(reg), basis.dimension(), 1);
  k.at(0, 0) = GrassmannPoly::scalar(k.registry(), Cplx(1.0, 0.0));
  return k;
}

GradedKernel& GradedKernel::operator+=(const GradedKernel& other) {
  check_compatible(*this, other);
  if (m_rows != other.m_rows || m_cols != other.m_cols)
    throw DimensionError("kernel addition with mismatched shapes");
  for (std::size_t i = 0; i < m_entries.size(); ++i)
    m_entries[i] += other.m_entries[i];
  return *this;
}

GradedKernel& GradedKernel::operator-=(const GradedKernel& other) {
  check_compatible(*this, other);
  if (m_rows != other.m_rows || m_cols != other.m_cols)
    throw DimensionError("kernel subtraction with mismatched shapes");
  for (std::size_t i = 0; i < m_entries.size(); ++i)
    m_entries[i] -= other.m_entries[i];
  return *this;
}

GradedKernel& GradedKernel::operator*=(Cplx factor) {
  for (auto& entry : m_entries) entry *= factor;
  return *this;
}

GradedKernel kernel_multiply(const GradedKernel& a, const GradedKernel& b,
                             KernelSignRule rule) {
  check_compatible(a, b);
  if (a.cols() != b.rows())
    throw DimensionError("kernel product with mismatched inner dimension");

  GradedKernel out(a.basis(), a.registry(), a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int s = 0; s < a.cols(); ++s) {
      const GrassmannPoly& left = a.at(r, s);
      if (left.is_zero()) continue;
      const bool flip = rule == KernelSignRule::Graded &&
                        ((a.row_parity(r) + a.col_parity(s)) & 1);
      for (int c = 0; c < b.cols(); ++c) {
        const GrassmannPoly& right = b.at(s, c);
        if (right.is_zero()) continue;
        out.at(r, c) += multiply(left, with_parity_sign(right, flip));
      }
    }
  }
  return out;
}

GradedKernel adjoint(const GradedKernel& k) {
  GradedKernel out(k.basis(), k.registry(), k.cols(), k.rows());
  for (int r = 0; r < k.rows(); ++r)
    for (int c = 0; c < k.cols(); ++c) {
      const GrassmannPoly& entry = k.at(r, c);
      if (entry.is_zero()) continue;
      const bool flip = (k.row_parity(r) + k.col_parity(c)) & 1;
      out.at(c, r) = with_parity_sign(conjugate(entry), flip);
    }
  return out;
}

GrassmannPoly graded_trace(const GradedKernel& k) {
  if (k.rows() != k.cols())
    throw DimensionError("graded trace of a non-square kernel");
  GrassmannPoly out(k.registry());
  for (int r = 0; r < k.rows(); ++r)
    out += with_parity_sign(k.at(r, r), k.row_parity(r) == 1);
  return out;
}

GradedKernel integrate_d2(const GradedKernel& k,
                          std::span<const std::pair<int, int>> mode_pairs) {
  GradedKernel out(k.basis(), k.registry(), k.rows(), k.cols());
  for (int r = 0; r < k.rows(); ++r)
    for (int c = 0; c < k.cols(); ++c)
      out.at(r, c) = integrate_d2(k.at(r, c), mode_pairs);
  return out;
}

GradedKernel substitute_negate(const GradedKernel& k, std::uint64_t gen_mask) {
  GradedKernel out(k.basis(), k.registry(), k.rows(), k.cols());
  for (int r = 0; r < k.rows(); ++r)
    for (int c = 0; c < k.cols(); ++c)
      out.at(r, c) = substitute_negate(k.at(r, c), gen_mask);
  return out;
}

FockMatrix to_fock(const GradedKernel& k) {
  if (k.rows() != k.basis().dimension() || k.cols() != k.basis().dimension())
    throw DimensionError("only operator-shaped kernels convert to matrices");
  FockMatrix out = FockMatrix::zero(k.basis());
  for (int r = 0; r < k.rows(); ++r)
    for (int c = 0; c < k.cols(); ++c) {
      const GrassmannPoly& entry = k.at(r, c);
      if (!entry.is_scalar())
        throw DomainError("kernel entry (" + std::to_string(r) + ", " +
                          std::to_string(c) + ") has residual Grassmann content");
      out.mat(r, c) = entry.constant_term();
    }
  return out;
}

double max_entry_distance(const GradedKernel& a, const GradedKernel& b) {
  check_compatible(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("kernel comparison with mismatched shapes");
  double worst = 0.0;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      worst = std::max(worst, max_coeff_distance(a.at(r, c), b.at(r, c)));
  return worst;
}

GrassmannPoly pair_product_poly(const RegistryPtr& reg,
                                std::span<const std::pair<int, int>> pairs,
                                double pair_coeff, double const_coeff) {
  GrassmannPoly out = GrassmannPoly::scalar(reg, Cplx(1.0, 0.0));
  for (const auto& [x, x_star] : pairs) {
    GrassmannPoly factor = GrassmannPoly::scalar(reg, Cplx(const_coeff, 0.0));
    factor += Cplx(pair_coeff, 0.0) * (GrassmannPoly::generator(reg, x) *
                                       GrassmannPoly::generator(reg, x_star));
    out = out * factor;
  }
  return out;
}

namespace {

/// Kernel form of cdag_i x_i - x*_i c_i for one mode.
GradedKernel mode_generator_kernel(const OccupationBasis& basis,
                                   const RegistryPtr& reg, int mode,
                                   const std::pair<int, int>& pair,
                                   KernelSignRule rule) {
  const auto cdag = GradedKernel::embed(creation(mode, basis), reg);
  const auto c = GradedKernel::embed(annihilation(mode, basis), reg);
  const auto x = GradedKernel::scalar_operator(
      basis, GrassmannPoly::generator(reg, pair.first));
  const auto x_star = GradedKernel::scalar_operator(
      basis, GrassmannPoly::generator(reg, pair.second));

  GradedKernel out = kernel_multiply(cdag, x, rule);
  out -= kernel_multiply(x_star, c, rule);
  return out;
}

}  // namespace

GradedKernel coherent_ket(const OccupationBasis& basis, const RegistryPtr& reg,
                          std::span<const std::pair<int, int>> pairs) {
  if (static_cast<int>(pairs.size()) != basis.modes)
    throw DimensionError("coherent state needs one generator pair per mode");
  GradedKernel product = GradedKernel::identity_operator(basis, reg);
  for (int mode = 1; mode <= basis.modes; ++mode) {
    const GradedKernel x =
        mode_generator_kernel(basis, reg, mode, pairs[mode - 1],
                              KernelSignRule::Graded);
    GradedKernel factor = GradedKernel::identity_operator(basis, reg);
    factor += x;
    GradedKernel xx = kernel_multiply(x, x);
    xx *= Cplx(0.5, 0.0);
    factor += xx;  // the cubic power vanishes per mode
    product = kernel_multiply(product, factor);
  }
  return kernel_multiply(product, GradedKernel::vacuum_ket(basis, reg));
}

GradedKernel coherent_bra(const OccupationBasis& basis, const RegistryPtr& reg,
                          std::span<const std::pair<int, int>> pairs) {
  return adjoint(coherent_ket(basis, reg, pairs));
}

GradedKernel kernel_exp_nilpotent(const GradedKernel& k, KernelSignRule rule) {
  GradedKernel result = GradedKernel::identity_operator(k.basis(), k.registry());
  GradedKernel power = result;
  const int max_order = static_cast<int>(k.registry()->count()) + k.basis().dimension() + 2;
  for (int order = 1; order <= max_order; ++order) {
    power = kernel_multiply(power, k, rule);
    power *= Cplx(1.0 / static_cast<double>(order), 0.0);
    bool vanished = true;
    for (int r = 0; r < power.rows() && vanished; ++r)
      for (int c = 0; c < power.cols() && vanished; ++c)
        vanished = power.at(r, c).is_zero();
    if (vanished) return result;
    result += power;
  }
  throw DomainError("kernel exponential series did not terminate");
}

GradedKernel displacement(const OccupationBasis& basis, const RegistryPtr& reg,
                          std::span<const std::pair<int, int>> pairs,
                          KernelSignRule rule) {
  if (static_cast<int>(pairs.size()) != basis.modes)
    throw DimensionError("displacement needs one generator pair per mode");
  GradedKernel product = GradedKernel::identity_operator(basis, reg);
  for (int mode = 1; mode <= basis.modes; ++mode) {
    const GradedKernel x =
        mode_generator_kernel(basis, reg, mode, pairs[mode - 1], rule);
    product = kernel_multiply(product, kernel_exp_nilpotent(x, rule), rule);
  }
  return product;
}

FockMatrix identity_resolution_standard(int n_modes, KernelSignRule rule) {
  const OccupationBasis basis{n_modes};
  const auto reg = GeneratorRegistry::fermionic_modes(n_modes, {Species::G});
  const auto pairs = reg->family_pairs(Species::G);

  const GradedKernel ket = coherent_ket(basis, reg, pairs);
  const GradedKernel bra = coherent_bra(basis, reg, pairs);
  const GradedKernel projector = kernel_multiply(ket, bra, rule);
  return to_fock(integrate_d2(projector, pairs));
}

FockMatrix identity_resolution_alternate(int n_modes, KernelSignRule rule,
                                         bool include_factor) {
  const OccupationBasis basis{n_modes};
  const auto reg = GeneratorRegistry::fermionic_modes(n_modes, {Species::G});
  const auto pairs = reg->family_pairs(Species::G);

  const GradedKernel ket = coherent_ket(basis, reg, pairs);
  const GradedKernel bra_neg =
      substitute_negate(coherent_bra(basis, reg, pairs),
                        reg->family_mask(Species::G));
  GradedKernel projector = kernel_multiply(ket, bra_neg, rule);
  if (include_factor) {
    const GrassmannPoly f = pair_product_poly(reg, pairs, 2.0, -1.0);
    projector = kernel_multiply(GradedKernel::scalar_operator(basis, f),
                                projector, rule);
  }
  return to_fock(integrate_d2(projector, pairs));
}

FockMatrix weyl_reconstruct_fermion(const FockMatrix& f, KernelSignRule rule) {
  const int n = f.basis.modes;
  if (n < 1 || n > 3)
    throw DomainError("displacement-expansion reconstruction supports 1..3 modes");

  const auto reg = GeneratorRegistry::fermionic_modes(n, {Species::H, Species::K});
  const auto h_pairs = reg->family_pairs(Species::H);
  const auto k_pairs = reg->family_pairs(Species::K);

  const GradedKernel d_h = displacement(f.basis, reg, h_pairs, rule);
  const GradedKernel d_minus_h =
      substitute_negate(d_h, reg->family_mask(Species::H));

  const GradedKernel fd = kernel_multiply(GradedKernel::embed(f, reg), d_h, rule);
  const GradedKernel ket_k = coherent_ket(f.basis, reg, k_pairs);
  const GradedKernel bra_k = adjoint(ket_k);
  const GradedKernel sandwich =
      kernel_multiply(bra_k, kernel_multiply(fd, ket_k, rule), rule);
  const GrassmannPoly overlap = sandwich.at(0, 0);

  GradedKernel integrand = kernel_multiply(
      GradedKernel::scalar_operator(f.basis, overlap), d_minus_h, rule);
  integrand = integrate_d2(integrand, k_pairs);
  integrand = integrate_d2(integrand, h_pairs);
  return to_fock(integrand);
}

}  // namespace grasp
