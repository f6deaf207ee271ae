#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reeshom/algebra.hpp"
#include "reeshom/group.hpp"
#include "reeshom/version.hpp"

namespace reeshom {

// A group element index, or the absorbing marker o (nullopt).
using SandwichEntry = std::optional<Index>;
using SandwichMatrix = std::vector<std::vector<SandwichEntry>>;  // [lambda][i]

/// Element of a Rees semigroup: a triple (i, g, lambda) or the zero.
struct ReesElement {
  bool zero = true;
  Index i = 0, g = 0, lambda = 0;

  static ReesElement make_zero() { return {}; }
  static ReesElement triple(Index i, Index g, Index lambda) { return {false, i, g, lambda}; }
  bool operator==(const ReesElement&) const = default;
};

/// Rees semigroup over (I, Lambda, G, P). Construction validates the
/// sandwich condition (a non-zero entry in every row and column) and checks
/// associativity of the product rule, exhaustively for small instances and
/// by seeded sampling above 2000 elements.
class ReesSemigroup {
 public:
  ReesSemigroup(GroupTable group, std::size_t i_size, std::size_t lambda_size,
                SandwichMatrix sandwich, bool force = false,
                std::uint64_t sample_seed = kDefaultSeed);

  const GroupTable& group() const { return group_; }
  std::size_t i_size() const { return i_size_; }
  std::size_t lambda_size() const { return lambda_size_; }
  const SandwichMatrix& sandwich() const { return sandwich_; }
  const SandwichEntry& p(std::size_t lambda, std::size_t i) const { return sandwich_[lambda][i]; }

  // Number of non-zero elements |I|*|G|*|Lambda|.
  std::size_t n_triples() const { return i_size_ * group_.order * lambda_size_; }

  Index triple_index(Index i, Index g, Index lambda) const {
    return static_cast<Index>((static_cast<std::size_t>(i) * group_.order + g) * lambda_size_ +
                              lambda);
  }
  ReesElement element_at(Index idx) const;
  Index zero_index() const { return static_cast<Index>(n_triples()); }
  std::string element_name(const ReesElement& x) const;

  ReesElement mul(const ReesElement& x, const ReesElement& y) const;

  // Convolution algebra on all of S, with the zero element as the last basis
  // vector. Cached; repeated calls return the same object.
  AlgebraPtr full_algebra() const;
  // Quotient by the span of the zero element: products that hit zero vanish.
  AlgebraPtr reduced_algebra() const;

  // e_i = (i, p(mu,i)^-1, mu) with mu the smallest row with p(mu,i) non-zero;
  // a left identity on the block row iS. Element of the reduced algebra.
  AlgebraElement idempotent_e(std::size_t i) const;
  Index idempotent_e_index(std::size_t i) const;
  // f_lambda = (j, p(lambda,j)^-1, lambda), j minimal; a right identity on
  // S_lambda.
  AlgebraElement idempotent_f(std::size_t lambda) const;
  Index idempotent_f_index(std::size_t lambda) const;

  // Basis index of (i, g * p(lambda,i)^-1, lambda); the group-to-block
  // isomorphism for blocks with a non-zero sandwich entry.
  Index block_iso_index(std::size_t i, std::size_t lambda, Index g) const;

 private:
  AlgebraPtr build_algebra(bool reduced) const;
  void verify_associativity(std::uint64_t seed) const;

  GroupTable group_;
  std::size_t i_size_, lambda_size_;
  SandwichMatrix sandwich_;

  struct Cache;
  std::shared_ptr<Cache> cache_;
};

ReesSemigroup rees_new(GroupTable group, std::size_t i_size, std::size_t lambda_size,
                       SandwichMatrix sandwich, bool force = false);

// Smallest (i, lambda) with a non-zero sandwich entry, scanning i first.
std::pair<std::size_t, std::size_t> default_witness_position(const ReesSemigroup& s);

/// Partition of the reduced-algebra basis into the |I|*|Lambda| blocks
/// {i} x G x {lambda}.
struct BlockDecomposition {
  std::size_t i_size = 0, lambda_size = 0;
  // blocks[i * lambda_size + lambda] = basis indices, |G| of them each.
  std::vector<std::vector<Index>> blocks;
  const std::vector<Index>& block(std::size_t i, std::size_t lambda) const {
    return blocks[i * lambda_size + lambda];
  }
};

BlockDecomposition block_decomposition(const ReesSemigroup& s);

// p(lambda,i) = (s[alpha(i)] * t[beta(lambda)])^-1 when alpha(i) = beta(lambda),
// o otherwise. Requires alpha(I) = beta(Lambda) as sets.
SandwichMatrix groupoid_sandwich(std::size_t x_size, const std::vector<Index>& alpha,
                                 const std::vector<Index>& beta, const GroupTable& g,
                                 const std::vector<Index>& s_choices,
                                 const std::vector<Index>& t_choices);

}  // namespace reeshom
