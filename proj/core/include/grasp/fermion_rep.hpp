#pragma once

#include <optional>
#include <vector>

#include "grasp/graded_kernel.hpp"

namespace grasp {

/// The two quasiprobability flavors: `Phi` expands the state over |g><g|
/// projectors, `P` over |g><-g| with the conversion factor built in.
enum class Flavor { Phi, P };

std::string flavor_name(Flavor f);

/// Quasiprobability distribution of a fermionic state: an even Grassmann
/// polynomial over the g-family generators of `modes` modes.
struct PRepresentation {
  Flavor flavor = Flavor::P;
  int modes = 0;
  GrassmannPoly poly;
};

/// Normally ordered correlation query
/// <cdag_{l1} ... cdag_{lp} c_{mq} ... c_{m1}>: `creation` lists l1..lp and
/// `annihilation` lists mq..m1, both in left-to-right operator order.
struct CorrelationQuery {
  std::vector<int> creation;
  std::vector<int> annihilation;
};

/// Distribution for the |g><g| expansion, computed from the displacement
/// completeness relation by exact Berezin integration.
PRepresentation compute_phi(const FockMatrix& rho);

/// Distribution for the |g><-g| expansion; normalized to one under pair
/// integration.
PRepresentation compute_p(const FockMatrix& rho);

/// Integrates the representation against its projector kernel, returning
/// the density matrix exactly.
FockMatrix reconstruct(const PRepresentation& rep);

/// Maps between the two flavors: out(g,g*) = f(g,g*) in(g,-g*) with
/// f = prod_i (2 g_i g*_i - 1).  An involution.
PRepresentation convert(const PRepresentation& rep);

/// Moment weight w(g,g*) = prod_i (2 g_i g*_i + 1) over a fresh g-family
/// registry of n modes.
GrassmannPoly weight(int n_modes);

struct NormalizationResult {
  Cplx integral;                  // pair integral of the distribution itself
  std::optional<Cplx> weighted;   // pair integral of w * phi (phi flavor only)
};

/// P flavor integrates to one; phi reports both its bare integral (the
/// parity-weighted trace) and the weighted integral (one).
NormalizationResult normalization(const PRepresentation& rep);

/// Moment from the P flavor: integral of P times g*_{l1}..g*_{lp}
/// g_{mq}..g_{m1}.  Zero whenever p - q is odd.
Cplx correlation_via_p(const PRepresentation& rep, const CorrelationQuery& query);

/// Moment from the phi flavor: integral of w * phi times
/// g_{mq}..g_{m1} g*_{l1}..g*_{lp} — the variable order is reversed
/// relative to the P-flavor formula.
Cplx correlation_via_phi(const PRepresentation& rep, const CorrelationQuery& query);

/// Dense-matrix oracle: Tr(rho cdag_{l1}..cdag_{lp} c_{mq}..c_{m1}).
Cplx correlation_direct(const FockMatrix& rho, const CorrelationQuery& query);

}  // namespace grasp
