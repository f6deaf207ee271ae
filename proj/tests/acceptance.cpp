// Acceptance suite: exercises every bundled instance end to end and prints
// one PASS/FAIL line per criterion. Exit status is the number of failures.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "reeshom/checks.hpp"
#include "reeshom/morita.hpp"
#include "reeshom/oracle.hpp"
#include "reeshom/report.hpp"

using namespace reeshom;

namespace {

struct Instance {
  std::string name;
  InstanceConfig config;
  ReesSemigroup semigroup;
  InvarianceReport harness;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int failures = 0;

void criterion(int n, const std::string& label, bool pass) {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << n << ": " << label << "\n";
  std::cout.flush();
  if (!pass) ++failures;
}

const std::vector<std::size_t>& column(const Instance& inst, const std::string& name) {
  for (const auto& col : inst.harness.columns)
    if (col.name == name) return col.report.homology_dims;
  throw std::runtime_error("missing column " + name);
}

bool prefix_equal(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b,
                  std::size_t from, std::size_t to) {
  for (std::size_t n = from; n <= to; ++n)
    if (a.at(n) != b.at(n)) return false;
  return true;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli_path, configs_dir;
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string key = argv[i];
    if (key == "--cli") cli_path = argv[i + 1];
    if (key == "--configs") configs_dir = argv[i + 1];
  }
  if (cli_path.empty() || configs_dir.empty()) {
    std::cerr << "usage: acceptance --cli <reeshom binary> --configs <dir>\n";
    return 2;
  }

  const std::vector<std::string> bundle = {
      "example1-gzero",     "example2-matrix-units", "example2-matrix-units-n3",
      "rectangular-band",   "c2-sparse-sandwich",    "c3-sparse-sandwich",
      "s3-sandwich",        "groupoid-derived",
  };

  std::map<std::string, Instance> instances;
  for (const std::string& name : bundle) {
    InstanceConfig cfg = parse_config(read_file(configs_dir + "/" + name + ".cfg"));
    ReesSemigroup s = build_instance(cfg);
    std::cerr << "computing homology tables for " << name << " (dim " << s.n_triples()
              << ")...\n";
    InvarianceReport harness = invariance_harness(s, 3);
    instances.emplace(name, Instance{name, std::move(cfg), std::move(s), std::move(harness)});
  }

  // 1. Matrix-units reproduction: structure constants and homology, timed.
  {
    bool pass = true;
    double elapsed2 = 0, elapsed3 = 0;
    for (auto [name, n, budget] :
         {std::tuple<std::string, std::size_t, double>{"example2-matrix-units", 2, 5.0},
          {"example2-matrix-units-n3", 3, 120.0}}) {
      const Instance& inst = instances.at(name);
      const ReesSemigroup& s = inst.semigroup;
      AlgebraPtr a = s.reduced_algebra();
      pass &= a->dim() == n * n;
      for (Index i = 0; i < n && pass; ++i)
        for (Index j = 0; j < n; ++j)
          for (Index k = 0; k < n; ++k)
            for (Index l = 0; l < n; ++l) {
              const SparseVec& prod =
                  a->product(s.triple_index(i, 0, j), s.triple_index(k, 0, l));
              pass &= (j == k) ? prod == unit_vec(s.triple_index(i, 0, l)) : prod.empty();
            }
      auto t0 = std::chrono::steady_clock::now();
      ChainComplex c = hochschild_complex(a, regular_bimodule(a), 3);
      HomologyReport rep = homology_report(c);
      double elapsed = seconds_since(t0);
      (n == 2 ? elapsed2 : elapsed3) = elapsed;
      pass &= prefix_equal(rep.homology_dims, {1, 0, 0}, 0, 2);
      pass &= prefix_equal(column(inst, "Q[G]"), {1, 0, 0}, 0, 2);
      pass &= elapsed < budget;
    }
    std::ostringstream label;
    label << "matrix-units structure constants and HH = [1,0,0] (n=2: " << elapsed2
          << " s, n=3: " << elapsed3 << " s)";
    criterion(1, label.str(), pass);
  }

  // 2. Main-theorem table on the non-degenerate instances.
  {
    const std::map<std::string, std::vector<std::size_t>> expected = {
        {"rectangular-band", {1, 0, 0}}, {"c2-sparse-sandwich", {2, 0, 0}},
        {"c3-sparse-sandwich", {3, 0, 0}}, {"s3-sandwich", {3, 0, 0}},
        {"groupoid-derived", {2, 0, 0}},
    };
    bool pass = true;
    for (const auto& [name, dims] : expected) {
      const Instance& inst = instances.at(name);
      pass &= prefix_equal(column(inst, "A(S)"), dims, 0, 2);
      pass &= prefix_equal(column(inst, "Q[G]"), dims, 0, 2);
      pass &= prefix_equal(column(inst, "A(S)"), column(inst, "Q[G]"), 0, 2);
    }
    criterion(2, "dim HH_n(A(S)) = dim HH_n(Q[G]) = expected table, n = 0..2", pass);
  }

  // 3. Reduced vs full, with the documented degree-0 discrepancy flagged.
  {
    bool pass = true;
    for (const auto& [name, inst] : instances)
      pass &= prefix_equal(column(inst, "l1(S)"), column(inst, "A(S)"), 1, 2);
    const Instance& mu = instances.at("example2-matrix-units");
    pass &= column(mu, "l1(S)")[0] == 2 && column(mu, "A(S)")[0] == 1;
    criterion(3, "dim HH_n(l1(S)) = dim HH_n(A(S)) for n = 1,2; degree-0 reads 2 vs 1", pass);
  }

  // 4. Unitizations change nothing in degrees 1 and 2.
  {
    bool pass = true;
    for (const auto& [name, inst] : instances) {
      pass &= prefix_equal(column(inst, "A(S)#"), column(inst, "A(S)"), 1, 2);
      pass &= prefix_equal(column(inst, "l1(S)#"), column(inst, "l1(S)"), 1, 2);
    }
    criterion(4, "dim HH_n(A#) = dim HH_n(A) for n = 1,2 on both algebras", pass);
  }

  // 5. Morita witnesses at every valid position, with choice independence.
  {
    bool pass = true;
    for (const auto& [name, inst] : instances) {
      const ReesSemigroup& s = inst.semigroup;
      std::vector<std::array<std::size_t, 5>> tables;
      for (std::size_t i = 0; i < s.i_size(); ++i)
        for (std::size_t l = 0; l < s.lambda_size(); ++l) {
          if (!s.p(l, i)) continue;
          MoritaWitness w = build_witness(s, i, l);
          pass &= w.pq_bijective && w.qp_bijective && w.mult_maps_intertwine;
          pass &= w.corner_is_group_algebra;
          pass &= roundtrip_check(w, regular_bimodule(w.algebra));
          pass &= !p_projectivity_violation(s, w).has_value();
          tables.push_back({w.corners.p.dim(), w.corners.q.dim(), w.corners.corner->dim(),
                            w.pq.quotient.dim(), w.qp.quotient.dim()});
        }
      for (const auto& t : tables) pass &= t == tables.front();
    }
    criterion(5, "multiplication isomorphisms, B = Q[G], roundtrip, choice independence",
              pass);
  }

  // 6. Homotopy certificates to degree 4 (d.d = 0 is verified on every
  //    complex constructed throughout this suite).
  {
    bool pass = true;
    for (const auto& [name, inst] : instances) {
      const ReesSemigroup& s = inst.semigroup;
      std::cerr << "homotopy certificates for " << name << "...\n";
      for (auto kind : {AlgebraKind::Reduced, AlgebraKind::Full}) {
        AlgebraPtr a = kind == AlgebraKind::Reduced ? s.reduced_algebra() : s.full_algebra();
        pass &= bar_homotopy_check(a, regular_bimodule(a), 4).ok;
        pass &= hunital_homotopy_check(a, right_splitting(s, kind), 4).ok;
      }
    }
    criterion(6, "bar and h-unitality homotopies hold exactly to degree 4", pass);
  }

  // 7. Biprojectivity with the negative control.
  {
    bool pass = true;
    for (const auto& [name, inst] : instances)
      pass &= biprojectivity_check(inst.semigroup).passed;
    const ReesSemigroup& c2 = instances.at("c2-sparse-sandwich").semigroup;
    SparseMatrix rho = biprojective_diagonal(c2, 0, 0);
    SparseMatrix unscaled(rho.rows(), rho.cols());
    for (Index r = 0; r < rho.rows(); ++r)
      unscaled.set_row(r, scaled(rho.row(r), Rational(c2.group().order)));
    pass &= bimodule_splitting_violation(c2.reduced_algebra(), unscaled).has_value();
    criterion(7, "averaged diagonal splits multiplication; unaveraged control fails", pass);
  }

  // 8. Weak amenability, with one direct cochain computation.
  {
    bool pass = true;
    for (const auto& [name, inst] : instances)
      pass &= weak_amenability_check(inst.semigroup).passed;
    const ReesSemigroup& mu = instances.at("example2-matrix-units").semigroup;
    for (AlgebraPtr a : {mu.reduced_algebra(), mu.full_algebra()}) {
      ChainComplex c = hochschild_complex(a, regular_bimodule(a), 2);
      pass &= h1_dual_direct(a) == homology_report(c).homology_dims[1];
      pass &= h1_dual_direct(a) == 0;
    }
    criterion(8, "H^1(A, A*) = 0 for all four algebras; direct cochain route agrees", pass);
  }

  // 9. Dense oracle equivalence at small dimension.
  {
    bool pass = true;
    for (const auto& [name, inst] : instances) {
      if (inst.semigroup.n_triples() > 9) continue;
      std::cerr << "dense oracle for " << name << "...\n";
      std::vector<std::size_t> dense =
          oracle::homology_dims_dense(*inst.semigroup.reduced_algebra(), 3);
      pass &= prefix_equal(dense, column(inst, "A(S)"), 0, 2);
      if (inst.semigroup.full_algebra()->dim() <= 9) {
        std::vector<std::size_t> dense_full =
            oracle::homology_dims_dense(*inst.semigroup.full_algebra(), 3);
        pass &= prefix_equal(dense_full, column(inst, "l1(S)"), 0, 2);
      }
    }
    criterion(9, "sparse homology equals the dense brute-force oracle, degrees 0..2", pass);
  }

  // 10. Byte-identical JSON reports across repeats and thread counts.
  {
    const std::string cfg = configs_dir + "/c2-sparse-sandwich.cfg";
    auto run_cli = [&](const std::string& out, int threads) {
      std::string cmd = "\"" + cli_path + "\" all \"" + cfg + "\" --json \"" + out +
                        "\" --threads " + std::to_string(threads) + " > /dev/null";
      return std::system(cmd.c_str()) == 0;
    };
    bool pass = run_cli("acceptance_run_a.json", 1) && run_cli("acceptance_run_b.json", 1) &&
                run_cli("acceptance_run_c.json", 4);
    if (pass) {
      std::string a = read_file("acceptance_run_a.json");
      std::string b = read_file("acceptance_run_b.json");
      std::string c = read_file("acceptance_run_c.json");
      pass = !a.empty() && a == b && a == c;
    }
    criterion(10, "repeated `all` runs and thread counts give byte-identical JSON", pass);
  }

  std::cout << (failures == 0 ? "acceptance: all criteria passed\n"
                              : "acceptance: " + std::to_string(failures) + " criteria FAILED\n");
  return failures == 0 ? 0 : 1;
}
