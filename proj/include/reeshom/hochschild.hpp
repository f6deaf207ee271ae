#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reeshom/bimodule.hpp"
#include "reeshom/version.hpp"

namespace reeshom {

/// Chain complex with exact boundary matrices; d_n . d_{n+1} = 0 is verified
/// on construction.
struct ChainComplex {
  std::vector<std::size_t> dims;         // C_0 .. C_N
  std::vector<SparseMatrix> boundaries;  // boundaries[k] = d_{k+1} : C_{k+1} -> C_k

  ChainComplex(std::vector<std::size_t> dims, std::vector<SparseMatrix> boundaries);
  std::size_t top_degree() const { return dims.size() - 1; }
};

/// C_n = X (x) A^(x)n with the alternating-sum boundary. Basis order is
/// lexicographic, X-major then tensor factors left to right.
ChainComplex hochschild_complex(const AlgebraPtr& a, const Bimodule& x, std::size_t max_degree,
                                std::uint64_t chain_cap = kDefaultChainCap);

struct HomologyReport {
  std::string algebra_name;
  std::string coefficient_name;
  std::size_t max_degree = 0;
  std::vector<std::size_t> chain_dims;
  std::vector<std::size_t> boundary_ranks;   // rank d_1 .. rank d_N
  std::vector<std::size_t> homology_dims;    // degrees 0 .. N
  std::vector<std::size_t> cohomology_dims;  // computed from the transposed complex
  // The top degree lacks d_{N+1}: its value is a lower bound only.
  bool top_degree_truncated = true;
  std::vector<double> timings_ms;
};

/// Exact homology dimensions in each degree; cohomology dimensions are
/// recomputed from the transposed boundaries as a cross-check and must agree.
HomologyReport homology_report(const ChainComplex& c, std::string algebra_name = "",
                               std::string coefficient_name = "");

std::vector<std::size_t> cohomology_dims(const ChainComplex& c);

struct HomotopyViolation {
  std::size_t degree = 0;
  std::uint64_t chain = 0;
  std::string description;
};

struct HomotopyResult {
  bool ok = true;
  std::optional<HomotopyViolation> violation;
};

/// Builds the bar complex of the left module x over the unitization of a and
/// verifies b.s + s.b = id degree by degree, where s prepends the adjoined
/// unit. Never materializes matrices; enumerates basis chains.
HomotopyResult bar_homotopy_check(const AlgebraPtr& a, const Bimodule& x, std::size_t max_degree,
                                  std::uint64_t enum_cap = kDefaultHomotopyCap);

/// Verifies that rho : A -> A(x)A splits multiplication as a right-module
/// map, then checks b.(rho(x)1) + (rho(x)1).b = id on A^(x)n for
/// 2 <= n <= max_degree. Throws BadSplitting if the preconditions fail.
HomotopyResult hunital_homotopy_check(const AlgebraPtr& a, const SparseMatrix& rho,
                                      std::size_t max_degree,
                                      std::uint64_t enum_cap = kDefaultHomotopyCap);

// The homotopy identity alone, without the splitting preconditions. Used to
// exhibit failure witnesses for corrupted splittings.
HomotopyResult simplicial_homotopy_identity(const AlgebraPtr& a, const SparseMatrix& rho,
                                            std::size_t max_degree,
                                            std::uint64_t enum_cap = kDefaultHomotopyCap);

// First violation of the splitting preconditions (pi.rho = id, rho(st) =
// rho(s)t), if any.
std::optional<std::string> right_splitting_violation(const AlgebraPtr& a,
                                                     const SparseMatrix& rho);

}  // namespace reeshom
