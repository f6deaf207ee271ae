#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reeshom/hochschild.hpp"
#include "reeshom/rees.hpp"

namespace reeshom {

struct CheckReport {
  std::string check_name;
  std::string instance_name;
  bool passed = false;
  std::vector<std::pair<std::string, std::string>> details;

  void add(const std::string& key, const std::string& value) { details.emplace_back(key, value); }
};

enum class AlgebraKind { Full, Reduced };

/// Right-module splitting of multiplication, as a dim^2 x dim matrix into
/// A (x) A. On the reduced algebra rho(x) = e_{i(x)} (x) x; on the full
/// algebra the zero element forces the corrected form
/// rho(x) = e_{i(x)} (x) (x - zero) + e_1 (x) zero, rho(zero) = e_1 (x) zero.
SparseMatrix right_splitting(const ReesSemigroup& s, AlgebraKind which);

/// Mirror through the right idempotents f_lambda: a left-module splitting
/// x -> (x - zero) (x) f_{lambda(x)} + zero (x) f_1.
SparseMatrix left_splitting(const ReesSemigroup& s, AlgebraKind which);

// First violation of pi.rho = id or rho(t.s) = t.rho(s) for a left-module
// splitting candidate.
std::optional<std::string> left_splitting_violation(const AlgebraPtr& a, const SparseMatrix& rho);

// Verifies that the four splittings (left/right, full/reduced) split
// multiplication and are module maps.
CheckReport projectivity_check(const ReesSemigroup& s);

CheckReport self_induced_check(const AlgebraPtr& a, const std::string& instance_name);

/// The averaged diagonal rho((j,g,mu)) =
///   1/|G| sum_h (j, g h p(lambda,i)^-1, lambda) (x) (i, h^-1, mu)
/// on the reduced algebra.
SparseMatrix biprojective_diagonal(const ReesSemigroup& s, std::size_t i, std::size_t lambda);

// First violation of pi.rho = id or of the two-sided bimodule identity
// x.rho(y) = rho(xy) = rho(x).y on basis pairs.
std::optional<std::string> bimodule_splitting_violation(const AlgebraPtr& a,
                                                        const SparseMatrix& rho);

CheckReport biprojectivity_check(const ReesSemigroup& s);

/// dim H^1(A, A*) computed as dim H_1(A, A) for the four algebras A(S),
/// l1(S) and their unitizations; passes when all vanish.
CheckReport weak_amenability_check(const ReesSemigroup& s, std::size_t max_degree = 1,
                                   std::uint64_t chain_cap = kDefaultChainCap);

// dim H^1(A, A*) from the cochain complex of dual-module valued cochains,
// assembled directly rather than by transposing the chain complex.
std::size_t h1_dual_direct(const AlgebraPtr& a);

}  // namespace reeshom
