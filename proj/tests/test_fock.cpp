#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "grasp/state_spec.hpp"

using namespace grasp;

namespace {

Matrix unit_ket(const OccupationBasis& basis, const std::string& bits) {
  Matrix v = Matrix::Zero(basis.dimension(), 1);
  v(basis.state_from_bitstring(bits), 0) = 1.0;
  return v;
}

}  // namespace

TEST_CASE("basis_ordering_and_parity") {
  const OccupationBasis basis{2};
  CHECK(basis.dimension() == 4);
  CHECK(basis.bitstring(0) == "00");
  CHECK(basis.bitstring(1) == "01");
  CHECK(basis.bitstring(2) == "10");
  CHECK(basis.bitstring(3) == "11");
  CHECK(basis.parity(0) == 0);
  CHECK(basis.parity(1) == 1);
  CHECK(basis.parity(3) == 0);
  CHECK(basis.occupied(2, 1));       // "10": mode 1 occupied
  CHECK_FALSE(basis.occupied(2, 2));
  CHECK_THROWS_AS(basis.state_from_bitstring("012"), ValidationError);
  CHECK_THROWS_AS(basis.state_from_bitstring("2"), ValidationError);
}

TEST_CASE("annihilation_single_mode") {
  const OccupationBasis basis{1};
  const FockMatrix c = annihilation(1, basis);
  CHECK((c.mat * unit_ket(basis, "1") - unit_ket(basis, "0")).cwiseAbs().maxCoeff() == 0.0);
  CHECK((c.mat * unit_ket(basis, "0")).cwiseAbs().maxCoeff() == 0.0);

  const FockMatrix cd = creation(1, basis);
  const Matrix anti = c.mat * cd.mat + cd.mat * c.mat;
  CHECK((anti - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("annihilation_jordan_wigner_sign") {
  const OccupationBasis basis{2};
  const FockMatrix c2 = annihilation(2, basis);
  // c_2 |11> = -|10>: one occupied lower mode.
  CHECK((c2.mat * unit_ket(basis, "11") + unit_ket(basis, "10")).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("creation_examples") {
  const OccupationBasis basis{2};
  const FockMatrix cd1 = creation(1, basis);
  const FockMatrix cd2 = creation(2, basis);
  CHECK((cd1.mat * cd1.mat).cwiseAbs().maxCoeff() == 0.0);  // Pauli exclusion
  CHECK((cd1.mat * cd2.mat * unit_ket(basis, "00") - unit_ket(basis, "11"))
            .cwiseAbs()
            .maxCoeff() == 0.0);
  CHECK((cd1.mat * cd2.mat + cd2.mat * cd1.mat).cwiseAbs().maxCoeff() == 0.0);

  const OccupationBasis single{1};
  CHECK((creation(1, single).mat * unit_ket(single, "0") - unit_ket(single, "1"))
            .cwiseAbs()
            .maxCoeff() == 0.0);
}

TEST_CASE("car_algebra_up_to_four_modes") {
  for (int n = 1; n <= 4; ++n) {
    const OccupationBasis basis{n};
    const Matrix id = Matrix::Identity(basis.dimension(), basis.dimension());
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        const Matrix ci = annihilation(i, basis).mat;
        const Matrix cj = annihilation(j, basis).mat;
        const Matrix cdj = creation(j, basis).mat;
        CHECK((ci * cj + cj * ci).cwiseAbs().maxCoeff() == 0.0);
        Matrix mixed = ci * cdj + cdj * ci;
        if (i == j) mixed -= id;
        CHECK(mixed.cwiseAbs().maxCoeff() == 0.0);
      }
  }
}

TEST_CASE("mode_out_of_range") {
  const OccupationBasis basis{2};
  CHECK_THROWS_AS(annihilation(0, basis), DimensionError);
  CHECK_THROWS_AS(annihilation(3, basis), DimensionError);
}

TEST_CASE("density_diagonal_mixture") {
  StateSpec spec;
  spec.modes = 1;
  spec.elements = {{"0", "0", 0.75}, {"1", "1", 0.25}};
  const FockMatrix rho = density_from_spec(spec);
  CHECK(rho.mat(0, 0) == Cplx(0.75, 0.0));
  CHECK(rho.mat(1, 1) == Cplx(0.25, 0.0));
  CHECK(std::abs(trace(rho) - Cplx(1.0, 0.0)) < 1e-14);
}

TEST_CASE("density_pure_pair_state") {
  // psi = 0.6|00> + 0.8|11>
  StateSpec spec;
  spec.modes = 2;
  spec.elements = {{"00", "00", 0.36},
                   {"00", "11", 0.48},
                   {"11", "11", 0.64}};  // conjugate element implied
  const FockMatrix rho = density_from_spec(spec);
  CHECK(std::abs(rho.mat(3, 0) - Cplx(0.48, 0.0)) < 1e-14);
  CHECK(std::abs(trace(rho) - Cplx(1.0, 0.0)) < 1e-14);
  // Rank one: rho^2 = rho.
  CHECK((rho.mat * rho.mat - rho.mat).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("density_rejects_parity_violation") {
  StateSpec spec;
  spec.modes = 1;
  spec.elements = {{"0", "0", 0.5}, {"1", "1", 0.5}, {"0", "1", 0.5}};
  try {
    density_from_spec(spec);
    FAIL("expected a parity validation error");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == ValidationError::Kind::Parity);
    CHECK(std::string(e.what()).find("(0, 1)") != std::string::npos);
  }

  spec.allow_parity_violation = true;
  spec.skip_psd_check = true;
  CHECK_NOTHROW(density_from_spec(spec));
}

TEST_CASE("density_rejects_bad_trace_and_hermiticity") {
  StateSpec bad_trace;
  bad_trace.modes = 1;
  bad_trace.elements = {{"0", "0", 0.75}, {"1", "1", 0.35}};
  try {
    density_from_spec(bad_trace);
    FAIL("expected a trace validation error");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == ValidationError::Kind::Trace);
  }

  StateSpec bad_herm;
  bad_herm.modes = 2;
  bad_herm.elements = {{"00", "00", 0.5},
                       {"11", "11", 0.5},
                       {"00", "11", Cplx(0.1, 0.2)},
                       {"11", "00", Cplx(0.1, 0.2)}};  // should be conjugate
  try {
    density_from_spec(bad_herm);
    FAIL("expected a hermiticity validation error");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == ValidationError::Kind::Hermiticity);
  }
}

TEST_CASE("density_rejects_non_psd") {
  StateSpec spec;
  spec.modes = 1;
  spec.elements = {{"0", "0", 1.5}, {"1", "1", -0.5}};
  try {
    density_from_spec(spec);
    FAIL("expected a psd validation error");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == ValidationError::Kind::Psd);
  }
  spec.skip_psd_check = true;
  CHECK_NOTHROW(density_from_spec(spec));
}

TEST_CASE("parity_decompose_examples") {
  const OccupationBasis basis{1};
  FockMatrix diag = FockMatrix::zero(basis);
  diag.mat(0, 0) = 0.3;
  diag.mat(1, 1) = 0.7;
  auto [even_d, odd_d] = parity_decompose(diag);
  CHECK(odd_d.mat.cwiseAbs().maxCoeff() == 0.0);

  FockMatrix flip = FockMatrix::zero(basis);
  flip.mat(1, 0) = 1.0;  // |1><0|
  auto [even_f, odd_f] = parity_decompose(flip);
  CHECK(even_f.mat.cwiseAbs().maxCoeff() == 0.0);
  CHECK(odd_f.mat(1, 0) == Cplx(1.0, 0.0));

  const OccupationBasis basis2{2};
  std::mt19937_64 rng(17);
  FockMatrix random = FockMatrix::zero(basis2);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      random.mat(r, c) = Cplx((rng() >> 11) * 0x1.0p-53, (rng() >> 11) * 0x1.0p-53);
  auto [even_r, odd_r] = parity_decompose(random);
  CHECK(max_entry_distance({basis2, even_r.mat + odd_r.mat}, random) == 0.0);
}

TEST_CASE("trace_adjoint_matmul") {
  const OccupationBasis basis{2};
  CHECK(trace(FockMatrix::identity(basis)) == Cplx(4.0, 0.0));

  const OccupationBasis single{1};
  CHECK(max_entry_distance(adjoint(annihilation(1, single)), creation(1, single)) == 0.0);

  FockMatrix rho = FockMatrix::zero(single);
  rho.mat(0, 0) = 0.6;
  rho.mat(1, 1) = 0.4;
  const FockMatrix number = matmul(creation(1, single), annihilation(1, single));
  CHECK(std::abs(trace(matmul(rho, number)) - Cplx(0.4, 0.0)) < 1e-15);

  const OccupationBasis other{2};
  CHECK_THROWS_AS(matmul(rho, FockMatrix::identity(other)), DimensionError);
}
