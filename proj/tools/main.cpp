#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "reeshom/errors.hpp"
#include "reeshom/report.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw reeshom::ConfigError("cannot open config file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct CommonOptions {
  std::string config_path;
  std::string json_path;
  int max_degree = -1;
  std::string idempotent;
  bool force = false;
  bool oracle = false;
  std::uint64_t seed = reeshom::kDefaultSeed;
  unsigned threads = 1;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("config", o.config_path, "instance config file (text or JSON)")->required();
  cmd->add_option("--json", o.json_path, "write the canonical JSON report to this path");
  cmd->add_option("--max-degree", o.max_degree, "top homology degree (default from config)");
  cmd->add_option("--idempotent", o.idempotent, "witness position as 'i,lambda' (1-based)");
  cmd->add_flag("--force", o.force, "override the chain-space size guard");
  cmd->add_flag("--oracle", o.oracle, "cross-check with the dense oracle where size permits");
  cmd->add_option("--seed", o.seed, "seed for sampled associativity checks on large instances");
  cmd->add_option("--threads", o.threads, "fan out independent homology columns");
}

int run_command(reeshom::Command command, const CommonOptions& o) {
  reeshom::RunOptions opt;
  opt.command = command;
  if (o.max_degree >= 0) opt.max_degree = static_cast<std::size_t>(o.max_degree);
  if (!o.idempotent.empty()) {
    std::size_t comma = o.idempotent.find(',');
    if (comma == std::string::npos)
      throw reeshom::ConfigError("--idempotent expects 'i,lambda' (1-based)");
    std::size_t i = std::stoull(o.idempotent.substr(0, comma));
    std::size_t l = std::stoull(o.idempotent.substr(comma + 1));
    if (i == 0 || l == 0) throw reeshom::ConfigError("--idempotent positions are 1-based");
    opt.idempotent = {i - 1, l - 1};
  }
  opt.force = o.force;
  opt.oracle = o.oracle;
  opt.seed = o.seed;
  opt.threads = o.threads == 0 ? 1 : o.threads;

  reeshom::InstanceConfig cfg = reeshom::parse_config(read_file(o.config_path));
  reeshom::RunReport rep = reeshom::run(cfg, opt);
  std::cout << rep.human;
  if (!o.json_path.empty()) {
    std::ofstream out(o.json_path, std::ios::binary);
    if (!out) throw reeshom::ConfigError("cannot write JSON report to '" + o.json_path + "'");
    out << reeshom::dump_canonical(rep.json);
  }
  return rep.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Hochschild homology of finite Rees semigroup algebras"};
  app.require_subcommand(1);

  CommonOptions hh_opts, morita_opts, checks_opts, all_opts;
  add_common(app.add_subcommand("hh", "homology/cohomology tables"), hh_opts);
  add_common(app.add_subcommand("morita", "Morita witness and roundtrip checks"), morita_opts);
  add_common(app.add_subcommand("checks", "projectivity, self-inducedness, biprojectivity, "
                                          "weak amenability and homotopy certificates"),
             checks_opts);
  add_common(app.add_subcommand("all", "everything"), all_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }

  try {
    if (app.got_subcommand("hh")) return run_command(reeshom::Command::Hh, hh_opts);
    if (app.got_subcommand("morita")) return run_command(reeshom::Command::Morita, morita_opts);
    if (app.got_subcommand("checks")) return run_command(reeshom::Command::Checks, checks_opts);
    return run_command(reeshom::Command::All, all_opts);
  } catch (const reeshom::SizeGuardError& e) {
    std::cerr << "size guard: " << e.what() << "\n";
    return 3;
  } catch (const reeshom::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
