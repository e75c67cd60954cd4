#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cmopt/chambers.hpp"
#include "cmopt/errors.hpp"
#include "cmopt/instance_io.hpp"
#include "cmopt/solver.hpp"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string join_nums(const cmopt::Vec& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ' ';
    s += num(v[k]);
  }
  return s;
}

// element indices are 1-based on all user-facing surfaces
std::string join_basis(const std::vector<int>& b) {
  std::string s;
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(b[k] + 1);
  }
  return s;
}

std::vector<int> one_based(const std::vector<int>& b) {
  std::vector<int> r(b);
  for (int& x : r) ++x;
  return r;
}

json solution_json(const cmopt::Solution& s) {
  return json{{"best",
               {{"chamber_witness", s.best.chamber_witness},
                {"basis", one_based(s.best.basis)},
                {"point", s.best.point},
                {"value", s.best.value}}},
              {"candidates_examined", s.candidates_examined},
              {"chambers", s.chambers},
              {"operations", s.operations},
              {"oracle_queries", s.oracle_queries}};
}

void print_solution(const cmopt::Solution& s) {
  std::cout << "basis: " << join_basis(s.best.basis) << "\n";
  std::cout << "point: " << join_nums(s.best.point) << "\n";
  std::cout << "value: " << num(s.best.value) << "\n";
  std::cout << "chambers: " << s.chambers << "\n";
}

struct Options {
  bool json_out = false;
  std::uint64_t max_enum = 1'000'000;
  int threads = 1;
};

int cmd_solve(const std::string& path, const Options& opt) {
  cmopt::InstanceFile f = cmopt::parse_instance(read_file(path));
  auto m = f.make_matroid();
  auto obj = f.make_objective();
  cmopt::SolveOptions so;
  so.threads = opt.threads;
  cmopt::Solution s = cmopt::solve(f.instance, *m, *obj, so);
  if (opt.json_out)
    std::cout << solution_json(s).dump(2) << "\n";
  else
    print_solution(s);
  return 0;
}

int cmd_verify(const std::string& path, const Options& opt) {
  cmopt::InstanceFile f = cmopt::parse_instance(read_file(path));
  auto m = f.make_matroid();
  auto obj = f.make_objective();
  cmopt::SolveOptions so;
  so.threads = opt.threads;
  cmopt::Solution s = cmopt::solve(f.instance, *m, *obj, so);
  cmopt::EnumLimits limits;
  limits.max_count = opt.max_enum;
  cmopt::Solution bf = cmopt::brute_force_solve(f.instance, *m, *obj, limits);
  const bool match =
      std::fabs(s.best.value - bf.best.value) <= 1e-9 * std::max(1.0, std::fabs(bf.best.value));
  if (opt.json_out) {
    std::cout << json{{"solve", solution_json(s)}, {"brute_force", solution_json(bf)}, {"match", match}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "solve_value: " << num(s.best.value) << "\n";
    std::cout << "solve_basis: " << join_basis(s.best.basis) << "\n";
    std::cout << "brute_force_value: " << num(bf.best.value) << "\n";
    std::cout << "brute_force_basis: " << join_basis(bf.best.basis) << "\n";
    std::cout << "match: " << (match ? "yes" : "no") << "\n";
  }
  return match ? 0 : 2;
}

int cmd_chambers(const std::string& path, bool points, const Options& opt) {
  cmopt::InstanceFile f = cmopt::parse_instance(read_file(path));
  cmopt::GeneratorSet gens = cmopt::build_generators(f.instance);

  std::vector<cmopt::Chamber> chs;
  if (gens.normals.empty())
    chs.push_back(cmopt::Chamber{{}, cmopt::unit_vec(f.instance.d, 0)});
  else if (f.instance.d == 2)
    chs = cmopt::enumerate_chambers_2d(gens);
  else
    chs = cmopt::enumerate_chambers_nd(gens);

  if (points) {
    // CSV of the candidate points w(B(v)), one chamber per line.
    auto m = f.make_matroid();
    for (const cmopt::Chamber& c : chs) {
      std::vector<double> b;
      b.reserve(static_cast<std::size_t>(f.instance.n));
      for (const cmopt::Vec& w : f.instance.weights) b.push_back(cmopt::dot(c.witness, w));
      cmopt::Basis basis = cmopt::greedy_max_basis(*m, b);
      cmopt::Vec p = cmopt::weight_sum(f.instance, basis);
      for (std::size_t k = 0; k < p.size(); ++k) {
        if (k) std::cout << ',';
        std::cout << num(p[k]);
      }
      std::cout << "\n";
    }
    return 0;
  }

  if (opt.json_out) {
    json list = json::array();
    for (const cmopt::Chamber& c : chs) {
      std::string signs;
      for (auto s : c.signs) signs += s > 0 ? '+' : '-';
      list.push_back(json{{"signs", signs}, {"witness", c.witness}});
    }
    std::cout << json{{"chambers", chs.size()}, {"list", list}}.dump(2) << "\n";
  } else {
    std::cout << "chambers: " << chs.size() << "\n";
    for (std::size_t i = 0; i < chs.size(); ++i) {
      std::string signs;
      for (auto s : chs[i].signs) signs += s > 0 ? '+' : '-';
      std::cout << "chamber " << i << ": signs " << (signs.empty() ? "-none-" : signs)
                << " witness " << join_nums(chs[i].witness) << "\n";
    }
  }
  return 0;
}

int cmd_cluster(const std::string& path, const Options& opt) {
  cmopt::ClusterInstance ci{cmopt::parse_points_file(read_file(path))};
  cmopt::ClusterResult r = cmopt::solve_balanced_clustering(ci);
  if (opt.json_out) {
    std::cout << json{{"cluster1", one_based(r.cluster1)},
                      {"cluster2", one_based(r.cluster2)},
                      {"variance_sum", r.variance_sum}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "cluster1: " << join_basis(r.cluster1) << "\n";
    std::cout << "cluster2: " << join_basis(r.cluster2) << "\n";
    std::cout << "variance_sum: " << num(r.variance_sum) << "\n";
  }
  return 0;
}

int cmd_qassign(const std::string& path, const Options& opt) {
  cmopt::QAInstance qa = cmopt::parse_matrix_file(read_file(path));
  cmopt::QAResult r = cmopt::solve_quadratic_assignment(qa);
  if (opt.json_out) {
    std::cout << json{{"x", r.x}, {"support", one_based(r.support)}, {"value", r.value}}.dump(2)
              << "\n";
  } else {
    std::string xs;
    for (std::size_t k = 0; k < r.x.size(); ++k) {
      if (k) xs += ' ';
      xs += std::to_string(r.x[k]);
    }
    std::cout << "x: " << xs << "\n";
    std::cout << "support: " << join_basis(r.support) << "\n";
    std::cout << "value: " << num(r.value) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convex matroid optimization solver"};
  app.require_subcommand(1);

  Options opt;
  std::uint64_t seed = 0;  // reserved; the solver is deterministic
  app.add_flag("--json", opt.json_out, "machine-readable output");
  app.add_option("--seed", seed, "reserved (results are deterministic)");
  app.add_option("--max-enum", opt.max_enum, "cap on brute-force basis enumeration");
  app.add_option("--threads", opt.threads, "parallel chamber workers")->check(CLI::PositiveNumber);

  std::string solve_file, verify_file, chambers_file, cluster_file, qassign_file;
  bool chamber_points = false;

  CLI::App* solve = app.add_subcommand("solve", "solve an instance file");
  solve->add_option("file", solve_file, "instance file")->required();
  CLI::App* verify = app.add_subcommand("verify", "solve and check against brute force");
  verify->add_option("file", verify_file, "instance file")->required();
  CLI::App* chambers = app.add_subcommand("chambers", "dump arrangement chambers");
  chambers->add_option("file", chambers_file, "instance file")->required();
  chambers->add_flag("--points", chamber_points, "emit CSV of candidate points instead");
  CLI::App* cluster = app.add_subcommand("cluster", "balanced two-cluster partition");
  cluster->add_option("file", cluster_file, "points file")->required();
  CLI::App* qassign = app.add_subcommand("qassign", "psd quadratic assignment");
  qassign->add_option("file", qassign_file, "matrix file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_file, opt);
    if (verify->parsed()) return cmd_verify(verify_file, opt);
    if (chambers->parsed()) return cmd_chambers(chambers_file, chamber_points, opt);
    if (cluster->parsed()) return cmd_cluster(cluster_file, opt);
    if (qassign->parsed()) return cmd_qassign(qassign_file, opt);
  } catch (const cmopt::LimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
