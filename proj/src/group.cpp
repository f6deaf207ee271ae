#include "reeshom/group.hpp"

#include <algorithm>
#include <array>

#include "reeshom/errors.hpp"

namespace reeshom {

bool GroupTable::is_abelian() const {
  for (Index a = 0; a < order; ++a)
    for (Index b = 0; b < a; ++b)
      if (table[a][b] != table[b][a]) return false;
  return true;
}

std::size_t GroupTable::conjugacy_class_count() const {
  std::vector<bool> seen(order, false);
  std::size_t classes = 0;
  for (Index a = 0; a < order; ++a) {
    if (seen[a]) continue;
    ++classes;
    for (Index g = 0; g < order; ++g) seen[mul(mul(g, a), inv(g))] = true;
  }
  return classes;
}

GroupTable cyclic_group(std::size_t n) {
  if (n == 0) throw Error("cyclic_group: order must be at least 1");
  std::vector<std::vector<Index>> table(n, std::vector<Index>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = static_cast<Index>((a + b) % n);
  std::vector<std::string> names(n);
  names[0] = "e";
  for (std::size_t a = 1; a < n; ++a) names[a] = a == 1 ? "a" : "a" + std::to_string(a);
  return group_from_table(std::move(table), 0, std::move(names), "C" + std::to_string(n));
}

GroupTable symmetric_group_3() {
  // Permutations of {0,1,2}; product st applies t first.
  const std::array<std::array<Index, 3>, 6> perms = {{
      {0, 1, 2},  // e
      {1, 0, 2},  // (12)
      {2, 1, 0},  // (13)
      {0, 2, 1},  // (23)
      {1, 2, 0},  // (123)
      {2, 0, 1},  // (132)
  }};
  const std::vector<std::string> names = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
  std::vector<std::vector<Index>> table(6, std::vector<Index>(6));
  for (Index s = 0; s < 6; ++s) {
    for (Index t = 0; t < 6; ++t) {
      std::array<Index, 3> st;
      for (int x = 0; x < 3; ++x) st[x] = perms[s][perms[t][x]];
      auto it = std::find(perms.begin(), perms.end(), st);
      table[s][t] = static_cast<Index>(it - perms.begin());
    }
  }
  return group_from_table(std::move(table), 0, names, "S3");
}

GroupTable group_from_table(std::vector<std::vector<Index>> table, Index identity,
                            std::vector<std::string> names, std::string group_name) {
  const std::size_t n = table.size();
  if (n == 0) throw Error("group_from_table: empty table");
  for (const auto& row : table) {
    if (row.size() != n) throw Error("group_from_table: table is not square");
    for (Index v : row)
      if (v >= n) throw Error("group_from_table: element index out of range");
  }
  if (names.size() != n) throw Error("group_from_table: wrong number of element names");
  if (identity >= n) throw NoIdentityError("group_from_table: identity index out of range");

  auto name_of = [&](Index a) { return names[a]; };
  for (Index a = 0; a < n; ++a) {
    if (table[identity][a] != a || table[a][identity] != a)
      throw NoIdentityError("group_from_table: '" + name_of(identity) +
                            "' is not an identity at element '" + name_of(a) + "'");
  }
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw NotAssociativeError("group_from_table: associativity fails at (" + name_of(a) +
                                    ", " + name_of(b) + ", " + name_of(c) + ")");

  std::vector<Index> inverses(n);
  for (Index a = 0; a < n; ++a) {
    bool found = false;
    for (Index b = 0; b < n; ++b) {
      if (table[a][b] == identity && table[b][a] == identity) {
        inverses[a] = b;
        found = true;
        break;
      }
    }
    if (!found)
      throw NoInverseError("group_from_table: element '" + name_of(a) + "' has no inverse");
  }

  GroupTable g;
  g.order = n;
  g.table = std::move(table);
  g.identity = identity;
  g.inverses = std::move(inverses);
  g.names = std::move(names);
  g.group_name = std::move(group_name);
  return g;
}

GroupTable group_from_table(std::vector<std::vector<Index>> table,
                            std::vector<std::string> names, std::string group_name) {
  const std::size_t n = table.size();
  for (Index e = 0; e < n; ++e) {
    bool ok = true;
    for (Index a = 0; a < n && ok; ++a)
      ok = a < table.size() && table[e].size() == n && table[a].size() == n &&
           table[e][a] == a && table[a][e] == a;
    if (ok) return group_from_table(std::move(table), e, std::move(names), std::move(group_name));
  }
  throw NoIdentityError("group_from_table: table has no identity element");
}

}  // namespace reeshom
