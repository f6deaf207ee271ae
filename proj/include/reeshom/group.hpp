#pragma once

#include <string>
#include <vector>

#include "reeshom/sparse.hpp"

namespace reeshom {

/// Finite group presented by its Cayley table. Construction validates
/// associativity exhaustively and locates identity and inverses.
struct GroupTable {
  std::size_t order = 0;
  std::vector<std::vector<Index>> table;  // table[a][b] = a*b
  Index identity = 0;
  std::vector<Index> inverses;
  std::vector<std::string> names;
  std::string group_name;

  Index mul(Index a, Index b) const { return table[a][b]; }
  Index inv(Index a) const { return inverses[a]; }
  bool is_abelian() const;
  std::size_t conjugacy_class_count() const;
};

GroupTable cyclic_group(std::size_t n);
GroupTable symmetric_group_3();

// Validates the table; throws NotAssociative / NoIdentity / NoInverse with the
// violating triple or element named.
GroupTable group_from_table(std::vector<std::vector<Index>> table, Index identity,
                            std::vector<std::string> names, std::string group_name = "G");

// Same, locating the identity by search.
GroupTable group_from_table(std::vector<std::vector<Index>> table,
                            std::vector<std::string> names, std::string group_name = "G");

}  // namespace reeshom
