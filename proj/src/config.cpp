#include "reeshom/config.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "reeshom/errors.hpp"

namespace reeshom {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

std::size_t parse_count(const std::string& v, const std::string& key, std::size_t line) {
  if (!all_digits(v)) throw ConfigError("line " + std::to_string(line) + ": " + key +
                                        " expects a non-negative integer, got '" + v + "'", line);
  return static_cast<std::size_t>(std::stoull(v));
}

bool parse_bool(const std::string& v, const std::string& key, std::size_t line) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw ConfigError("line " + std::to_string(line) + ": " + key + " expects true or false", line);
}

Index resolve_element(const GroupTable& g, const std::string& token, std::size_t line) {
  for (Index k = 0; k < g.order; ++k)
    if (g.names[k] == token) return k;
  if (all_digits(token)) {
    std::size_t idx = std::stoull(token);
    if (idx < g.order) return static_cast<Index>(idx);
  }
  std::string where = line ? "line " + std::to_string(line) + ": " : "";
  throw UnknownGroupElementError(where + "unknown group element '" + token + "' in " +
                                 g.group_name, line);
}

}  // namespace

GroupTable build_group(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::Cyclic:
      return cyclic_group(spec.n);
    case GroupSpec::Kind::Symmetric3:
      return symmetric_group_3();
    case GroupSpec::Kind::Table: {
      const std::size_t n = spec.elements.size();
      for (const auto& name : spec.elements)
        if (name == "o")
          throw ConfigError("group element name 'o' is reserved for the zero sandwich entry");
      std::vector<std::vector<Index>> table(spec.table.size());
      for (std::size_t r = 0; r < spec.table.size(); ++r) {
        for (const auto& cell : spec.table[r]) {
          auto it = std::find(spec.elements.begin(), spec.elements.end(), cell);
          if (it == spec.elements.end())
            throw ConfigError("group table entry '" + cell + "' is not a declared element");
          table[r].push_back(static_cast<Index>(it - spec.elements.begin()));
        }
        if (table[r].size() != n) throw ConfigError("group table is not square");
      }
      if (table.size() != n) throw ConfigError("group table is not square");
      return group_from_table(std::move(table), spec.elements, "G");
    }
  }
  throw ConfigError("unknown group kind");
}

ReesSemigroup build_instance(const InstanceConfig& c, std::uint64_t seed) {
  GroupTable g = build_group(c.group);
  if (c.sandwich.size() != c.lambda_size)
    throw ConfigError("sandwich block has " + std::to_string(c.sandwich.size()) +
                      " rows, expected lambda_size = " + std::to_string(c.lambda_size));
  SandwichMatrix p(c.lambda_size);
  for (std::size_t l = 0; l < c.lambda_size; ++l) {
    if (c.sandwich[l].size() != c.i_size)
      throw ConfigError("sandwich row " + std::to_string(l + 1) + " has " +
                        std::to_string(c.sandwich[l].size()) +
                        " entries, expected i_size = " + std::to_string(c.i_size));
    for (const auto& tok : c.sandwich[l])
      p[l].push_back(tok == "o" ? SandwichEntry{} : SandwichEntry{resolve_element(g, tok, 0)});
  }
  return ReesSemigroup(std::move(g), c.i_size, c.lambda_size, std::move(p), c.force, seed);
}

namespace {

InstanceConfig parse_text_config(const std::string& text) {
  InstanceConfig c;
  bool saw_group = false, saw_sandwich = false, saw_lambda = false;
  std::vector<std::string> lines;
  {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) lines.push_back(line);
  }
  std::vector<std::size_t> sandwich_lines;

  enum class Block { None, Sandwich, Table };
  Block block = Block::None;
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::size_t line_no = ln + 1;
    std::string raw = lines[ln];
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string s = trim(raw);
    if (s.empty()) continue;

    if (block == Block::Sandwich) {
      if (c.sandwich.size() < c.lambda_size) {
        c.sandwich.push_back(split_ws(s));
        sandwich_lines.push_back(line_no);
        if (c.sandwich.size() == c.lambda_size) block = Block::None;
        continue;
      }
      block = Block::None;
    } else if (block == Block::Table) {
      if (c.group.table.size() < c.group.elements.size()) {
        c.group.table.push_back(split_ws(s));
        if (c.group.table.size() == c.group.elements.size()) block = Block::None;
        continue;
      }
      block = Block::None;
    }

    if (s == "sandwich:") {
      if (!saw_lambda)
        throw ConfigError("line " + std::to_string(line_no) +
                          ": sandwich block must come after lambda_size", line_no);
      block = Block::Sandwich;
      saw_sandwich = true;
      continue;
    }
    if (s == "table:") {
      if (c.group.kind != GroupSpec::Kind::Table || c.group.elements.empty())
        throw ConfigError("line " + std::to_string(line_no) +
                          ": table block requires 'group = table' and an elements line", line_no);
      block = Block::Table;
      continue;
    }

    std::size_t eq = s.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value', got '" +
                        s + "'", line_no);
    std::string key = trim(s.substr(0, eq));
    std::string value = trim(s.substr(eq + 1));

    if (key == "name") {
      c.name = value;
    } else if (key == "group") {
      saw_group = true;
      auto toks = split_ws(value);
      if (toks.size() == 2 && toks[0] == "cyclic") {
        c.group.kind = GroupSpec::Kind::Cyclic;
        c.group.n = parse_count(toks[1], "cyclic order", line_no);
      } else if (toks.size() == 1 && toks[0] == "symmetric3") {
        c.group.kind = GroupSpec::Kind::Symmetric3;
      } else if (toks.size() == 1 && toks[0] == "table") {
        c.group.kind = GroupSpec::Kind::Table;
      } else {
        throw ConfigError("line " + std::to_string(line_no) +
                          ": group expects 'cyclic N', 'symmetric3' or 'table'", line_no);
      }
    } else if (key == "elements") {
      c.group.elements = split_ws(value);
    } else if (key == "i_size") {
      c.i_size = parse_count(value, key, line_no);
    } else if (key == "lambda_size") {
      c.lambda_size = parse_count(value, key, line_no);
      saw_lambda = true;
    } else if (key == "max_degree") {
      c.max_degree = parse_count(value, key, line_no);
    } else if (key == "chain_cap") {
      c.chain_cap = parse_count(value, key, line_no);
    } else if (key == "force") {
      c.force = parse_bool(value, key, line_no);
    } else {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'",
                        line_no);
    }
  }
  if (!saw_group) throw ConfigError("missing 'group' line");
  if (!saw_sandwich) throw ConfigError("missing 'sandwich:' block");
  if (c.sandwich.size() != c.lambda_size)
    throw ConfigError("sandwich block has " + std::to_string(c.sandwich.size()) +
                      " rows, expected " + std::to_string(c.lambda_size));

  // Positioned name resolution before the full validation pass.
  GroupTable g = build_group(c.group);
  for (std::size_t l = 0; l < c.sandwich.size(); ++l) {
    if (c.sandwich[l].size() != c.i_size)
      throw ConfigError("line " + std::to_string(sandwich_lines[l]) + ": sandwich row has " +
                        std::to_string(c.sandwich[l].size()) + " entries, expected i_size = " +
                        std::to_string(c.i_size), sandwich_lines[l]);
    for (const auto& tok : c.sandwich[l])
      if (tok != "o") resolve_element(g, tok, sandwich_lines[l]);
  }
  return c;
}

}  // namespace

InstanceConfig parse_config(const std::string& text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  InstanceConfig c;
  if (first != std::string::npos && text[first] == '{') {
    try {
      c = config_from_json(nlohmann::json::parse(text, nullptr, true, true));
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(std::string("invalid JSON config: ") + e.what());
    }
  } else {
    c = parse_text_config(text);
  }
  // Full validation: sandwich condition, associativity, size guard.
  build_instance(c);
  return c;
}

std::string emit_config(const InstanceConfig& c) {
  std::ostringstream os;
  os << "name = " << c.name << "\n";
  switch (c.group.kind) {
    case GroupSpec::Kind::Cyclic:
      os << "group = cyclic " << c.group.n << "\n";
      break;
    case GroupSpec::Kind::Symmetric3:
      os << "group = symmetric3\n";
      break;
    case GroupSpec::Kind::Table: {
      os << "group = table\n";
      os << "elements =";
      for (const auto& e : c.group.elements) os << " " << e;
      os << "\n";
      os << "table:\n";
      for (const auto& row : c.group.table) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
        os << "\n";
      }
      break;
    }
  }
  os << "i_size = " << c.i_size << "\n";
  os << "lambda_size = " << c.lambda_size << "\n";
  os << "max_degree = " << c.max_degree << "\n";
  os << "chain_cap = " << c.chain_cap << "\n";
  os << "force = " << (c.force ? "true" : "false") << "\n";
  os << "sandwich:\n";
  for (const auto& row : c.sandwich) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
    os << "\n";
  }
  return os.str();
}

nlohmann::json config_to_json(const InstanceConfig& c) {
  nlohmann::json j;
  j["name"] = c.name;
  switch (c.group.kind) {
    case GroupSpec::Kind::Cyclic:
      j["group"] = {{"kind", "cyclic"}, {"n", c.group.n}};
      break;
    case GroupSpec::Kind::Symmetric3:
      j["group"] = {{"kind", "symmetric3"}};
      break;
    case GroupSpec::Kind::Table:
      j["group"] = {{"kind", "table"}, {"elements", c.group.elements}, {"table", c.group.table}};
      break;
  }
  j["i_size"] = c.i_size;
  j["lambda_size"] = c.lambda_size;
  j["sandwich"] = c.sandwich;
  j["max_degree"] = c.max_degree;
  j["chain_cap"] = c.chain_cap;
  j["force"] = c.force;
  return j;
}

InstanceConfig config_from_json(const nlohmann::json& j) {
  InstanceConfig c;
  try {
    c.name = j.value("name", "");
    const auto& g = j.at("group");
    std::string kind = g.at("kind").get<std::string>();
    if (kind == "cyclic") {
      c.group.kind = GroupSpec::Kind::Cyclic;
      c.group.n = g.at("n").get<std::size_t>();
    } else if (kind == "symmetric3") {
      c.group.kind = GroupSpec::Kind::Symmetric3;
    } else if (kind == "table") {
      c.group.kind = GroupSpec::Kind::Table;
      c.group.elements = g.at("elements").get<std::vector<std::string>>();
      c.group.table = g.at("table").get<std::vector<std::vector<std::string>>>();
    } else {
      throw ConfigError("unknown group kind '" + kind + "'");
    }
    c.i_size = j.at("i_size").get<std::size_t>();
    c.lambda_size = j.at("lambda_size").get<std::size_t>();
    c.sandwich = j.at("sandwich").get<std::vector<std::vector<std::string>>>();
    c.max_degree = j.value("max_degree", std::size_t{3});
    c.chain_cap = j.value("chain_cap", kDefaultChainCap);
    c.force = j.value("force", false);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("invalid JSON config: ") + e.what());
  }
  return c;
}

}  // namespace reeshom
