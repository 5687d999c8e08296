#include <catch2/catch_amalgamated.hpp>

#include <bit>
#include <random>

#include "grasp/fermion_rep.hpp"

using namespace grasp;

namespace {

GrassmannPoly gen(const RegistryPtr& reg, int i) {
  return GrassmannPoly::generator(reg, i);
}

FockMatrix mixture(double p) {
  FockMatrix rho = FockMatrix::zero(OccupationBasis{1});
  rho.mat(0, 0) = 1.0 - p;
  rho.mat(1, 1) = p;
  return rho;
}

FockMatrix product_mixture(double p1, double p2) {
  FockMatrix rho = FockMatrix::zero(OccupationBasis{2});
  rho.mat(0, 0) = (1.0 - p1) * (1.0 - p2);  // |00>
  rho.mat(1, 1) = (1.0 - p1) * p2;          // |01>
  rho.mat(2, 2) = p1 * (1.0 - p2);          // |10>
  rho.mat(3, 3) = p1 * p2;                  // |11>
  return rho;
}

FockMatrix pair_state() {
  FockMatrix rho = FockMatrix::zero(OccupationBasis{2});
  rho.mat(0, 0) = 0.36;
  rho.mat(0, 3) = 0.48;
  rho.mat(3, 0) = 0.48;
  rho.mat(3, 3) = 0.64;
  return rho;
}

}  // namespace

TEST_CASE("compute_phi_single_mode_closed_form") {
  const double p = 0.25;
  const PRepresentation rep = compute_phi(mixture(p));
  CHECK(rep.flavor == Flavor::Phi);
  const auto& reg = rep.poly.registry();
  const auto expected = GrassmannPoly::scalar(reg, p) +
                        (1.0 - 2.0 * p) * (gen(reg, 0) * gen(reg, 1));
  CHECK(max_coeff_distance(rep.poly, expected) == 0.0);

  // Vacuum: u = 0, so phi = g g*.
  const PRepresentation vac = compute_phi(mixture(0.0));
  CHECK(max_coeff_distance(vac.poly,
                           gen(vac.poly.registry(), 0) * gen(vac.poly.registry(), 1)) ==
        0.0);
}

TEST_CASE("compute_phi_factorizes_over_modes") {
  const double p1 = 0.25, p2 = 0.4;
  const PRepresentation rep = compute_phi(product_mixture(p1, p2));
  const auto& reg = rep.poly.registry();
  const auto factor = [&](int mode, double p) {
    return GrassmannPoly::scalar(reg, p) +
           (1.0 - 2.0 * p) * (gen(reg, 2 * mode) * gen(reg, 2 * mode + 1));
  };
  CHECK(max_coeff_distance(rep.poly, factor(0, p1) * factor(1, p2)) < 1e-15);
}

TEST_CASE("compute_p_single_mode_closed_form") {
  const double p = 0.25;
  const PRepresentation rep = compute_p(mixture(p));
  const auto& reg = rep.poly.registry();
  const auto expected =
      GrassmannPoly::scalar(reg, -p) + gen(reg, 0) * gen(reg, 1);
  CHECK(max_coeff_distance(rep.poly, expected) == 0.0);

  // Vacuum: v = 0, so P = g g*.
  const PRepresentation vac = compute_p(mixture(0.0));
  CHECK(max_coeff_distance(vac.poly,
                           gen(vac.poly.registry(), 0) * gen(vac.poly.registry(), 1)) ==
        0.0);
}

TEST_CASE("reconstruct_roundtrips_are_exact") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 20; ++round) {
    const double p = (rng() >> 11) * 0x1.0p-53;
    const FockMatrix rho = mixture(p);
    CHECK(max_entry_distance(reconstruct(compute_p(rho)), rho) < 1e-14);
    CHECK(max_entry_distance(reconstruct(compute_phi(rho)), rho) < 1e-14);
  }
  const FockMatrix pair = pair_state();
  CHECK(max_entry_distance(reconstruct(compute_p(pair)), pair) < 1e-14);
  CHECK(max_entry_distance(reconstruct(compute_phi(pair)), pair) < 1e-14);
}

TEST_CASE("reconstruct_hand_built_phi") {
  const double p = 0.3;
  const auto reg = GeneratorRegistry::fermionic_modes(1, {Species::G});
  const auto phi = GrassmannPoly::scalar(reg, p) +
                   (1.0 - 2.0 * p) * (gen(reg, 0) * gen(reg, 1));
  const FockMatrix rho = reconstruct({Flavor::Phi, 1, phi});
  CHECK(max_entry_distance(rho, mixture(p)) < 1e-15);
}

TEST_CASE("convert_matches_direct_computation") {
  const double p = 0.25;
  const FockMatrix rho = mixture(p);
  const PRepresentation phi = compute_phi(rho);
  const PRepresentation converted = convert(phi);
  CHECK(converted.flavor == Flavor::P);
  CHECK(max_coeff_distance(converted.poly, compute_p(rho).poly) == 0.0);

  // Hand expansion: (2gg* - 1)(p - (1-2p) g g*) = -p + g g*.
  const auto& reg = phi.poly.registry();
  const auto gg = gen(reg, 0) * gen(reg, 1);
  const auto flipped = GrassmannPoly::scalar(reg, p) - (1.0 - 2.0 * p) * gg;
  const auto f = 2.0 * gg - GrassmannPoly::scalar(reg, 1.0);
  CHECK(max_coeff_distance(f * flipped,
                           GrassmannPoly::scalar(reg, -p) + gg) == 0.0);
}

TEST_CASE("convert_is_involution") {
  std::mt19937_64 rng(19);
  const auto reg = GeneratorRegistry::fermionic_modes(2, {Species::G});
  for (int round = 0; round < 10; ++round) {
    GrassmannPoly even(reg);
    for (int t = 0; t < 5; ++t) {
      const std::uint64_t mask = rng() & 0b1111;
      if (std::popcount(mask) % 2) continue;
      even.add_term(mask, Cplx((rng() >> 11) * 0x1.0p-53, 0.3));
    }
    const PRepresentation rep{Flavor::Phi, 2, even};
    CHECK(max_coeff_distance(convert(convert(rep)).poly, rep.poly) < 1e-14);
  }
}

TEST_CASE("convert_two_path_consistency_two_modes") {
  const FockMatrix rho = product_mixture(0.2, 0.7);
  CHECK(max_coeff_distance(convert(compute_phi(rho)).poly, compute_p(rho).poly) <
        1e-15);
  CHECK(max_coeff_distance(convert(compute_p(rho)).poly, compute_phi(rho).poly) <
        1e-15);
}

TEST_CASE("weight_polynomial") {
  const auto w1 = weight(1);
  const auto& reg1 = w1.registry();
  CHECK(max_coeff_distance(w1, GrassmannPoly::scalar(reg1, 1.0) +
                                   2.0 * (gen(reg1, 0) * gen(reg1, 1))) == 0.0);

  const auto w2 = weight(2);
  const auto& reg2 = w2.registry();
  const auto g11 = gen(reg2, 0) * gen(reg2, 1);
  const auto g22 = gen(reg2, 2) * gen(reg2, 3);
  const auto expected = GrassmannPoly::scalar(reg2, 1.0) + 2.0 * g11 + 2.0 * g22 +
                        4.0 * (g11 * g22);
  CHECK(max_coeff_distance(w2, expected) == 0.0);
}

TEST_CASE("normalization_values") {
  const double p = 0.25;
  const auto norm_p = normalization(compute_p(mixture(p)));
  CHECK(std::abs(norm_p.integral - Cplx(1.0, 0.0)) == 0.0);
  CHECK_FALSE(norm_p.weighted.has_value());

  const auto norm_phi = normalization(compute_phi(mixture(p)));
  CHECK(std::abs(norm_phi.integral - Cplx(0.5, 0.0)) == 0.0);  // 1 - 2p
  REQUIRE(norm_phi.weighted.has_value());
  CHECK(std::abs(*norm_phi.weighted - Cplx(1.0, 0.0)) == 0.0);
}

TEST_CASE("first_moment_single_mode") {
  const double p = 0.25;
  const FockMatrix rho = mixture(p);
  const CorrelationQuery query{{1}, {1}};  // <cdag_1 c_1>
  CHECK(std::abs(correlation_via_p(compute_p(rho), query) - Cplx(p, 0.0)) < 1e-15);
  CHECK(std::abs(correlation_via_phi(compute_phi(rho), query) - Cplx(p, 0.0)) <
        1e-15);
  CHECK(std::abs(correlation_direct(rho, query) - Cplx(p, 0.0)) < 1e-15);
}

TEST_CASE("pair_state_second_moment") {
  const FockMatrix rho = pair_state();
  const CorrelationQuery query{{1, 2}, {2, 1}};  // <cdag1 cdag2 c2 c1>
  const Cplx expected(0.64, 0.0);
  CHECK(std::abs(correlation_via_p(compute_p(rho), query) - expected) < 1e-15);
  CHECK(std::abs(correlation_via_phi(compute_phi(rho), query) - expected) < 1e-15);
  CHECK(std::abs(correlation_direct(rho, query) - expected) < 1e-15);
}

TEST_CASE("unbalanced_correlations_vanish") {
  const FockMatrix rho = mixture(0.25);
  const CorrelationQuery creation_only{{1}, {}};  // <cdag_1>
  CHECK(std::abs(correlation_via_p(compute_p(rho), creation_only)) == 0.0);
  CHECK(std::abs(correlation_via_phi(compute_phi(rho), creation_only)) == 0.0);
  CHECK(std::abs(correlation_direct(rho, creation_only)) == 0.0);
}

TEST_CASE("identity_query_reproduces_normalization") {
  const FockMatrix rho = pair_state();
  const CorrelationQuery identity{{}, {}};
  CHECK(std::abs(correlation_via_p(compute_p(rho), identity) - Cplx(1.0, 0.0)) <
        1e-15);
  CHECK(std::abs(correlation_via_phi(compute_phi(rho), identity) - Cplx(1.0, 0.0)) <
        1e-15);
}

TEST_CASE("repeated_operator_queries_vanish") {
  const FockMatrix rho = pair_state();
  const CorrelationQuery doubled{{1, 1}, {}};  // cdag_1 cdag_1 = 0
  CHECK(std::abs(correlation_direct(rho, doubled)) == 0.0);
  CHECK(std::abs(correlation_via_p(compute_p(rho), doubled)) == 0.0);
}

TEST_CASE("representations_are_even_polynomials") {
  const FockMatrix rho = pair_state();
  CHECK(parity_split(compute_p(rho).poly).odd.is_zero());
  CHECK(parity_split(compute_phi(rho).poly).odd.is_zero());
}

TEST_CASE("query_and_flavor_errors") {
  const FockMatrix rho = mixture(0.25);
  const PRepresentation rep_p = compute_p(rho);
  CHECK_THROWS_AS(correlation_via_p(rep_p, CorrelationQuery{{2}, {}}),
                  DimensionError);
  CHECK_THROWS_AS(correlation_via_phi(rep_p, CorrelationQuery{{1}, {1}}),
                  DomainError);
}
