#include "reeshom/rees.hpp"

#include <mutex>
#include <random>

#include "reeshom/errors.hpp"

namespace reeshom {

struct ReesSemigroup::Cache {
  std::once_flag full_once, reduced_once;
  AlgebraPtr full, reduced;
};

ReesSemigroup::ReesSemigroup(GroupTable group, std::size_t i_size, std::size_t lambda_size,
                             SandwichMatrix sandwich, bool force, std::uint64_t sample_seed)
    : group_(std::move(group)),
      i_size_(i_size),
      lambda_size_(lambda_size),
      sandwich_(std::move(sandwich)),
      cache_(std::make_shared<Cache>()) {
  if (i_size_ == 0 || lambda_size_ == 0)
    throw BadShapeError("ReesSemigroup: index sets must be non-empty");
  if (sandwich_.size() != lambda_size_)
    throw BadShapeError("ReesSemigroup: sandwich matrix has " + std::to_string(sandwich_.size()) +
                        " rows, expected " + std::to_string(lambda_size_));
  for (std::size_t l = 0; l < lambda_size_; ++l) {
    if (sandwich_[l].size() != i_size_)
      throw BadShapeError("ReesSemigroup: sandwich row " + std::to_string(l + 1) + " has " +
                          std::to_string(sandwich_[l].size()) + " entries, expected " +
                          std::to_string(i_size_));
    for (const auto& entry : sandwich_[l])
      if (entry && *entry >= group_.order)
        throw BadShapeError("ReesSemigroup: sandwich entry out of group range");
  }
  for (std::size_t l = 0; l < lambda_size_; ++l) {
    bool nonzero = false;
    for (std::size_t i = 0; i < i_size_ && !nonzero; ++i) nonzero = sandwich_[l][i].has_value();
    if (!nonzero)
      throw EmptyRowError("ReesSemigroup: sandwich row " + std::to_string(l + 1) +
                          " has no non-zero entry", l);
  }
  for (std::size_t i = 0; i < i_size_; ++i) {
    bool nonzero = false;
    for (std::size_t l = 0; l < lambda_size_ && !nonzero; ++l) nonzero = sandwich_[l][i].has_value();
    if (!nonzero)
      throw EmptyColumnError("ReesSemigroup: sandwich column " + std::to_string(i + 1) +
                             " has no non-zero entry", i);
  }
  if (!force && n_triples() > kMaxTriples)
    throw SizeGuardError("ReesSemigroup: instance has " + std::to_string(n_triples()) +
                         " non-zero elements (limit " + std::to_string(kMaxTriples) +
                         "; pass force to override)", n_triples());
  verify_associativity(sample_seed);
}

ReesElement ReesSemigroup::element_at(Index idx) const {
  if (idx == zero_index()) return ReesElement::make_zero();
  Index lambda = static_cast<Index>(idx % lambda_size_);
  Index rest = static_cast<Index>(idx / lambda_size_);
  return ReesElement::triple(static_cast<Index>(rest / group_.order),
                             static_cast<Index>(rest % group_.order), lambda);
}

std::string ReesSemigroup::element_name(const ReesElement& x) const {
  if (x.zero) return "∅";
  return "(" + std::to_string(x.i + 1) + "," + group_.names[x.g] + "," +
         std::to_string(x.lambda + 1) + ")";
}

ReesElement ReesSemigroup::mul(const ReesElement& x, const ReesElement& y) const {
  if (x.zero || y.zero) return ReesElement::make_zero();
  const SandwichEntry& p = sandwich_[x.lambda][y.i];
  if (!p) return ReesElement::make_zero();
  return ReesElement::triple(x.i, group_.mul(group_.mul(x.g, *p), y.g), y.lambda);
}

void ReesSemigroup::verify_associativity(std::uint64_t seed) const {
  const std::size_t n = n_triples() + 1;
  auto check = [&](const ReesElement& x, const ReesElement& y, const ReesElement& z) {
    if (mul(mul(x, y), z) != mul(x, mul(y, z)))
      throw NotAssociativeError("ReesSemigroup: product rule not associative at (" +
                                element_name(x) + ", " + element_name(y) + ", " +
                                element_name(z) + ")");
  };
  if (n <= 2000) {
    const std::size_t t = n_triples();
    for (Index a = 0; a < t; ++a)
      for (Index b = 0; b < t; ++b)
        for (Index c = 0; c < t; ++c) check(element_at(a), element_at(b), element_at(c));
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Index> dist(0, static_cast<Index>(n - 1));
    for (int k = 0; k < 100000; ++k)
      check(element_at(dist(rng)), element_at(dist(rng)), element_at(dist(rng)));
  }
}

AlgebraPtr ReesSemigroup::build_algebra(bool reduced) const {
  const std::size_t t = n_triples();
  const std::size_t dim = reduced ? t : t + 1;
  FiniteAlgebra::ProductMap products;
  products.reserve(dim * dim);
  for (Index a = 0; a < t; ++a) {
    ReesElement x = element_at(a);
    for (Index b = 0; b < t; ++b) {
      ReesElement z = mul(x, element_at(b));
      if (z.zero) {
        if (!reduced) products[product_key(a, b)] = unit_vec(zero_index());
      } else {
        products[product_key(a, b)] = unit_vec(triple_index(z.i, z.g, z.lambda));
      }
    }
  }
  std::vector<std::string> names;
  names.reserve(dim);
  for (Index a = 0; a < t; ++a) names.push_back(element_name(element_at(a)));
  if (!reduced) {
    const Index zero = zero_index();
    names.push_back(element_name(ReesElement::make_zero()));
    for (Index a = 0; a <= zero; ++a) {
      products[product_key(zero, a)] = unit_vec(zero);
      products[product_key(a, zero)] = unit_vec(zero);
    }
  }
  return std::make_shared<FiniteAlgebra>(dim, std::move(products), std::move(names), std::nullopt,
                                         reduced ? "A(S)" : "l1(S)", true);
}

AlgebraPtr ReesSemigroup::full_algebra() const {
  std::call_once(cache_->full_once, [&] { cache_->full = build_algebra(false); });
  return cache_->full;
}

AlgebraPtr ReesSemigroup::reduced_algebra() const {
  std::call_once(cache_->reduced_once, [&] { cache_->reduced = build_algebra(true); });
  return cache_->reduced;
}

Index ReesSemigroup::idempotent_e_index(std::size_t i) const {
  for (Index mu = 0; mu < lambda_size_; ++mu) {
    if (sandwich_[mu][i]) {
      return triple_index(static_cast<Index>(i), group_.inv(*sandwich_[mu][i]), mu);
    }
  }
  throw Error("idempotent_e: unreachable, sandwich column is all zero");
}

AlgebraElement ReesSemigroup::idempotent_e(std::size_t i) const {
  if (i >= i_size_) throw Error("idempotent_e: index out of range");
  return {reduced_algebra(), unit_vec(idempotent_e_index(i))};
}

Index ReesSemigroup::idempotent_f_index(std::size_t lambda) const {
  for (Index j = 0; j < i_size_; ++j) {
    if (sandwich_[lambda][j]) {
      return triple_index(j, group_.inv(*sandwich_[lambda][j]), static_cast<Index>(lambda));
    }
  }
  throw Error("idempotent_f: unreachable, sandwich row is all zero");
}

AlgebraElement ReesSemigroup::idempotent_f(std::size_t lambda) const {
  if (lambda >= lambda_size_) throw Error("idempotent_f: index out of range");
  return {reduced_algebra(), unit_vec(idempotent_f_index(lambda))};
}

Index ReesSemigroup::block_iso_index(std::size_t i, std::size_t lambda, Index g) const {
  const SandwichEntry& p = sandwich_[lambda][i];
  if (!p)
    throw ZeroSandwichEntryError("block_iso_index: sandwich entry (" + std::to_string(lambda + 1) +
                                 "," + std::to_string(i + 1) + ") is zero");
  return triple_index(static_cast<Index>(i), group_.mul(g, group_.inv(*p)),
                      static_cast<Index>(lambda));
}

ReesSemigroup rees_new(GroupTable group, std::size_t i_size, std::size_t lambda_size,
                       SandwichMatrix sandwich, bool force) {
  return ReesSemigroup(std::move(group), i_size, lambda_size, std::move(sandwich), force);
}

std::pair<std::size_t, std::size_t> default_witness_position(const ReesSemigroup& s) {
  for (std::size_t i = 0; i < s.i_size(); ++i)
    for (std::size_t lambda = 0; lambda < s.lambda_size(); ++lambda)
      if (s.p(lambda, i)) return {i, lambda};
  throw Error("default_witness_position: unreachable, sandwich condition guarantees an entry");
}

BlockDecomposition block_decomposition(const ReesSemigroup& s) {
  BlockDecomposition d;
  d.i_size = s.i_size();
  d.lambda_size = s.lambda_size();
  d.blocks.resize(d.i_size * d.lambda_size);
  const std::size_t order = s.group().order;
  for (std::size_t i = 0; i < d.i_size; ++i)
    for (std::size_t l = 0; l < d.lambda_size; ++l) {
      auto& block = d.blocks[i * d.lambda_size + l];
      block.reserve(order);
      for (Index g = 0; g < order; ++g)
        block.push_back(s.triple_index(static_cast<Index>(i), g, static_cast<Index>(l)));
    }
  return d;
}

SandwichMatrix groupoid_sandwich(std::size_t x_size, const std::vector<Index>& alpha,
                                 const std::vector<Index>& beta, const GroupTable& g,
                                 const std::vector<Index>& s_choices,
                                 const std::vector<Index>& t_choices) {
  if (s_choices.size() != x_size || t_choices.size() != x_size)
    throw RangeMismatchError("groupoid_sandwich: need one path choice per point");
  for (Index x : alpha)
    if (x >= x_size) throw RangeMismatchError("groupoid_sandwich: alpha value out of range");
  for (Index x : beta)
    if (x >= x_size) throw RangeMismatchError("groupoid_sandwich: beta value out of range");

  std::vector<bool> in_alpha(x_size, false), in_beta(x_size, false);
  for (Index x : alpha) in_alpha[x] = true;
  for (Index x : beta) in_beta[x] = true;
  if (in_alpha != in_beta)
    throw RangeMismatchError("groupoid_sandwich: alpha(I) and beta(Lambda) differ as sets");

  SandwichMatrix p(beta.size(), std::vector<SandwichEntry>(alpha.size()));
  for (std::size_t l = 0; l < beta.size(); ++l)
    for (std::size_t i = 0; i < alpha.size(); ++i)
      if (alpha[i] == beta[l])
        p[l][i] = g.inv(g.mul(s_choices[alpha[i]], t_choices[beta[l]]));
  return p;
}

}  // namespace reeshom
