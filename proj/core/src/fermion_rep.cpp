#include "grasp/fermion_rep.hpp"

#include <bit>

namespace grasp {

namespace {

void check_query(const CorrelationQuery& query, int modes) {
  for (int index : query.creation)
    if (index < 1 || index > modes)
      throw DimensionError("creation index " + std::to_string(index) +
                           " out of range");
  for (int index : query.annihilation)
    if (index < 1 || index > modes)
      throw DimensionError("annihilation index " + std::to_string(index) +
                           " out of range");
}

Cplx scalar_of(const GrassmannPoly& p) {
  if (!p.is_scalar())
    throw DomainError("expected a fully integrated (scalar) polynomial");
  return p.constant_term();
}

/// Restricts a polynomial over the full g/h/k registry to the g-only
/// registry.  The g family occupies the lowest indices in both, so the
/// monomial masks carry over unchanged.
GrassmannPoly restrict_to_g(const GrassmannPoly& p, const RegistryPtr& g_reg) {
  const std::uint64_t g_bits = (std::uint64_t{1} << g_reg->count()) - 1;
  GrassmannPoly out(g_reg);
  for (const auto& [mask, coeff] : p.terms()) {
    if (mask & ~g_bits)
      throw DomainError("auxiliary generators leaked into a representation");
    out.add_term(mask, coeff);
  }
  return out;
}

/// Shared pipeline behind both flavors: forms <k| rho e^{cdag.h} e^{-h*.c} |k>,
/// multiplies by the flavor's exponential factors, and integrates out the
/// k then h families.
GrassmannPoly rep_pipeline(const FockMatrix& rho, Flavor flavor) {
  const int n = rho.basis.modes;
  if (n < 1 || n > 3)
    throw DomainError("representations support 1..3 modes");

  const auto reg =
      GeneratorRegistry::fermionic_modes(n, {Species::G, Species::H, Species::K});
  const auto g_pairs = reg->family_pairs(Species::G);
  const auto h_pairs = reg->family_pairs(Species::H);
  const auto k_pairs = reg->family_pairs(Species::K);
  const OccupationBasis& basis = rho.basis;

  auto gen = [&](int index) { return GrassmannPoly::generator(reg, index); };

  // rho e^{cdag.h} e^{-h*.c}, as a product of per-mode factors.
  GradedKernel m = GradedKernel::embed(rho, reg);
  for (int i = 0; i < n; ++i) {
    GradedKernel factor = GradedKernel::identity_operator(basis, reg);
    factor += kernel_multiply(
        GradedKernel::embed(creation(i + 1, basis), reg),
        GradedKernel::scalar_operator(basis, gen(h_pairs[i].first)));
    m = kernel_multiply(m, factor);
  }
  for (int i = 0; i < n; ++i) {
    GradedKernel factor = GradedKernel::identity_operator(basis, reg);
    factor -= kernel_multiply(
        GradedKernel::scalar_operator(basis, gen(h_pairs[i].second)),
        GradedKernel::embed(annihilation(i + 1, basis), reg));
    m = kernel_multiply(m, factor);
  }

  const GradedKernel ket_k = coherent_ket(basis, reg, k_pairs);
  const GradedKernel bra_k = adjoint(ket_k);
  GrassmannPoly overlap =
      kernel_multiply(bra_k, kernel_multiply(m, ket_k)).at(0, 0);

  // The exponential factors carry no k content, so the k integral may act
  // on the overlap alone.
  overlap = integrate_d2(overlap, k_pairs);

  GrassmannPoly factors = GrassmannPoly::scalar(reg, Cplx(1.0, 0.0));
  for (int i = 0; i < n; ++i) {
    // e^{h*_i g_i} = 1 + h*_i g_i
    GrassmannPoly f1 = GrassmannPoly::scalar(reg, Cplx(1.0, 0.0));
    f1 += gen(h_pairs[i].second) * gen(g_pairs[i].first);
    factors = factors * f1;
  }
  const double sign = flavor == Flavor::Phi ? -1.0 : 1.0;
  for (int i = 0; i < n; ++i) {
    // e^{-+ g*_i h_i} = 1 -+ g*_i h_i
    GrassmannPoly f2 = GrassmannPoly::scalar(reg, Cplx(1.0, 0.0));
    f2 += Cplx(sign, 0.0) * (gen(g_pairs[i].second) * gen(h_pairs[i].first));
    factors = factors * f2;
  }

  GrassmannPoly result = integrate_d2(overlap * factors, h_pairs);
  if (flavor == Flavor::P)
    result = result * pair_product_poly(reg, g_pairs, 2.0, -1.0);

  const auto g_reg = GeneratorRegistry::fermionic_modes(n, {Species::G});
  GrassmannPoly restricted = restrict_to_g(result, g_reg);
  if (!parity_split(restricted).odd.is_zero())
    throw DomainError("representation of a superselected state must be even");
  return restricted;
}

}  // namespace

std::string flavor_name(Flavor f) { return f == Flavor::Phi ? "phi" : "p"; }

PRepresentation compute_phi(const FockMatrix& rho) {
  return {Flavor::Phi, rho.basis.modes, rep_pipeline(rho, Flavor::Phi)};
}

PRepresentation compute_p(const FockMatrix& rho) {
  return {Flavor::P, rho.basis.modes, rep_pipeline(rho, Flavor::P)};
}

FockMatrix reconstruct(const PRepresentation& rep) {
  const OccupationBasis basis{rep.modes};
  const auto& reg = rep.poly.registry();
  const auto pairs = reg->family_pairs(Species::G);

  const GradedKernel ket = coherent_ket(basis, reg, pairs);
  GradedKernel bra = coherent_bra(basis, reg, pairs);
  if (rep.flavor == Flavor::P)
    bra = substitute_negate(bra, reg->family_mask(Species::G));

  const GradedKernel projector = kernel_multiply(ket, bra);
  const GradedKernel weighted = kernel_multiply(
      GradedKernel::scalar_operator(basis, rep.poly), projector);
  return to_fock(integrate_d2(weighted, pairs));
}

PRepresentation convert(const PRepresentation& rep) {
  const auto& reg = rep.poly.registry();
  const auto pairs = reg->family_pairs(Species::G);
  const GrassmannPoly flipped =
      substitute_negate(rep.poly, reg->family_mask(Species::G, /*starred_only=*/true));
  const GrassmannPoly f = pair_product_poly(reg, pairs, 2.0, -1.0);
  return {rep.flavor == Flavor::Phi ? Flavor::P : Flavor::Phi, rep.modes,
          f * flipped};
}

GrassmannPoly weight(int n_modes) {
  const auto reg = GeneratorRegistry::fermionic_modes(n_modes, {Species::G});
  return pair_product_poly(reg, reg->family_pairs(Species::G), 2.0, 1.0);
}

NormalizationResult normalization(const PRepresentation& rep) {
  const auto& reg = rep.poly.registry();
  const auto pairs = reg->family_pairs(Species::G);
  NormalizationResult out{scalar_of(integrate_d2(rep.poly, pairs)), std::nullopt};
  if (rep.flavor == Flavor::Phi) {
    const GrassmannPoly w = pair_product_poly(reg, pairs, 2.0, 1.0);
    out.weighted = scalar_of(integrate_d2(w * rep.poly, pairs));
  }
  return out;
}

namespace {

Cplx correlation_from_poly(const GrassmannPoly& base, const CorrelationQuery& query,
                           bool annihilation_first) {
  const auto& reg = base.registry();
  const auto pairs = reg->family_pairs(Species::G);

  std::vector<int> sequence;
  auto push_creation = [&] {
    for (int l : query.creation)
      sequence.push_back(pairs[l - 1].second);  // g*_l
  };
  auto push_annihilation = [&] {
    for (int m : query.annihilation)
      sequence.push_back(pairs[m - 1].first);  // g_m
  };
  if (annihilation_first) {
    push_annihilation();
    push_creation();
  } else {
    push_creation();
    push_annihilation();
  }

  const auto canon = canonicalize(*reg, sequence);
  if (canon.sign == 0) return Cplx(0.0, 0.0);
  const GrassmannPoly factor = GrassmannPoly::from_monomial(
      reg, canon.monomial, Cplx(static_cast<double>(canon.sign), 0.0));
  return scalar_of(integrate_d2(base * factor, pairs));
}

}  // namespace

Cplx correlation_via_p(const PRepresentation& rep, const CorrelationQuery& query) {
  if (rep.flavor != Flavor::P)
    throw DomainError("correlation_via_p requires the p flavor");
  check_query(query, rep.modes);
  return correlation_from_poly(rep.poly, query, /*annihilation_first=*/false);
}

Cplx correlation_via_phi(const PRepresentation& rep, const CorrelationQuery& query) {
  if (rep.flavor != Flavor::Phi)
    throw DomainError("correlation_via_phi requires the phi flavor");
  check_query(query, rep.modes);
  const auto& reg = rep.poly.registry();
  const GrassmannPoly weighted =
      pair_product_poly(reg, reg->family_pairs(Species::G), 2.0, 1.0) * rep.poly;
  return correlation_from_poly(weighted, query, /*annihilation_first=*/true);
}

Cplx correlation_direct(const FockMatrix& rho, const CorrelationQuery& query) {
  check_query(query, rho.basis.modes);
  Matrix op = Matrix::Identity(rho.basis.dimension(), rho.basis.dimension());
  for (int l : query.creation) op = op * creation(l, rho.basis).mat;
  for (int m : query.annihilation) op = op * annihilation(m, rho.basis).mat;
  return (rho.mat * op).trace();
}

}  // namespace grasp
