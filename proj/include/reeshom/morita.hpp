#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "reeshom/bimodule.hpp"
#include "reeshom/hochschild.hpp"
#include "reeshom/rees.hpp"

namespace reeshom {

/// Morita equivalence data for one idempotent e = (i, p(lambda,i)^-1, lambda):
/// P = eA, Q = Ae, B = eAe, the two multiplication maps, and the
/// identification of B with the group algebra along g -> (i, g p^-1, lambda).
struct MoritaWitness {
  AlgebraPtr algebra;    // A(S)
  AlgebraPtr group_alg;  // Q[G]
  std::size_t i = 0, lambda = 0;
  AlgebraElement idempotent;
  CornerModules corners;
  std::vector<Index> group_to_block;  // group element -> corner basis index
  std::vector<Index> block_to_group;
  BalancedTensor pq;  // P (x)_A Q, a (B,B)-bimodule
  BalancedTensor qp;  // Q (x)_B P, an (A,A)-bimodule
  BimoduleMap pq_mult;  // multiplication onto B
  BimoduleMap qp_mult;  // multiplication onto A
  bool pq_bijective = false;
  bool qp_bijective = false;
  bool mult_maps_intertwine = false;
  bool corner_is_group_algebra = false;

  bool all_ok() const {
    return pq_bijective && qp_bijective && mult_maps_intertwine && corner_is_group_algebra;
  }
};

MoritaWitness build_witness(const ReesSemigroup& s, std::size_t i, std::size_t lambda);

/// Result of transporting a bimodule through the corner: the module itself
/// plus, per basis element, its expansion into elementary tensors
/// (left factor, middle factor, right factor, coefficient).
struct TransportedBimodule {
  Bimodule module;
  std::vector<std::vector<std::tuple<Index, Index, Index, Rational>>> lift;
};

// P (x)_A X (x)_A Q with the corner actions relabelled along the group
// isomorphism; an (Q[G], Q[G])-bimodule.
TransportedBimodule phi(const MoritaWitness& w, const Bimodule& x);

// Q (x)_B Y (x)_B P, an (A,A)-bimodule, for Y over the group algebra.
TransportedBimodule gamma(const MoritaWitness& w, const Bimodule& y);

// Verifies Gamma(Phi(x)) ~ x via the canonical evaluation map. Requires x
// induced (throws NotInduced otherwise).
bool roundtrip_check(const MoritaWitness& w, const Bimodule& x);

// Constructive projectivity witnesses for P: a right-module splitting
// p -> e (x) p of the action P (x) A -> P, and a left-module splitting
// p -> b (x) g_mu of B (x) P -> P through the block generators
// g_mu = (i, p(lambda,i)^-1, mu). Returns a failure description, or nothing.
std::optional<std::string> p_projectivity_violation(const ReesSemigroup& s,
                                                    const MoritaWitness& w);

struct InvarianceColumn {
  std::string name;
  HomologyReport report;
};

/// Side-by-side Hochschild dimensions for A(S), Q[G], l1(S) and the two
/// unitizations, with the paired equality assertions. Degree 0 of the full
/// algebra and the unitizations is reported but excluded from the matched
/// region.
struct InvarianceReport {
  std::size_t max_degree = 0;
  std::vector<InvarianceColumn> columns;
  // Degrees with both rank computations available (0 .. max_degree-1).
  std::size_t certified_degrees = 0;
  bool main_equal = false;      // A(S) vs Q[G], all certified degrees
  bool all_equal_from_1 = false;  // all five columns, certified degrees >= 1
};

InvarianceReport invariance_harness(const ReesSemigroup& s, std::size_t max_degree,
                                    std::uint64_t chain_cap = kDefaultChainCap,
                                    unsigned threads = 1);

}  // namespace reeshom
