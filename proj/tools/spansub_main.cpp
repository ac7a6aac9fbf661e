// spansub command-line tool: instance generators, the spanning-subdivision
// solver, the certificate verifier, and a parameter-sweep benchmark.
// Data goes to files; diagnostics go to stderr. Exit codes for `solve`:
// 0 success, 2 solver failure, 3 precondition violation, 1 usage/parse error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spansub/assembler.hpp"
#include "spansub/instances.hpp"
#include "spansub/io.hpp"

namespace {

spansub::Digraph load_digraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw spansub::ParseError("cannot open " + path);
  return spansub::read_digraph(in);
}

void save_digraph(const std::string& path, const spansub::Digraph& d) {
  std::ofstream out(path);
  if (!out) throw spansub::ParseError("cannot write " + path);
  spansub::write_digraph(out, d);
}

void audit(const spansub::Digraph& d) {
  std::cerr << "n=" << d.order() << " arcs=" << d.arc_count()
            << " delta0=" << spansub::min_semi_degree(d) << "\n";
}

struct BenchConfig {
  std::vector<int> ns;
  std::vector<double> epsilons;
  std::vector<int> ms;
  int seeds = 0;
  std::uint64_t seed0 = 0;
  spansub::SolverParams base;
};

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(value);
  while (std::getline(is, cur, ',')) {
    std::size_t a = cur.find_first_not_of(" \t");
    std::size_t b = cur.find_last_not_of(" \t");
    if (a == std::string::npos) continue;
    parts.push_back(cur.substr(a, b - a + 1));
  }
  return parts;
}

BenchConfig parse_bench_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw spansub::ParseError("cannot open " + path);
  BenchConfig cfg;
  std::string line;
  long long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw spansub::ParseError("bench config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = line.substr(start, eq - start);
    key.erase(key.find_last_not_of(" \t") + 1);
    std::string value = line.substr(eq + 1);
    try {
      if (key == "n")
        for (const auto& s : split_list(value)) cfg.ns.push_back(std::stoi(s));
      else if (key == "epsilon")
        for (const auto& s : split_list(value)) cfg.epsilons.push_back(std::stod(s));
      else if (key == "m")
        for (const auto& s : split_list(value)) cfg.ms.push_back(std::stoi(s));
      else if (key == "seeds")
        cfg.seeds = std::stoi(value);
      else if (key == "seed0")
        cfg.seed0 = std::stoull(value);
      else if (key == "alpha")
        cfg.base.alpha = std::stod(value);
      else if (key == "beta")
        cfg.base.beta = std::stod(value);
      else if (key == "gamma")
        cfg.base.gamma = std::stod(value);
      else if (key == "C")
        cfg.base.C = std::stod(value);
      else if (key == "retries")
        cfg.base.retries = std::stoi(value);
      else if (key == "budget")
        cfg.base.ham_budget = std::stoll(value);
      else
        throw spansub::ParseError("bench config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    } catch (const std::invalid_argument&) {
      throw spansub::ParseError("bench config line " + std::to_string(lineno) + ": bad value for '" + key + "'");
    }
  }
  return cfg;
}

int run_bench(const std::string& config_path, const std::string& csv_path) {
  BenchConfig cfg = parse_bench_config(config_path);
  std::ofstream csv(csv_path);
  if (!csv) throw spansub::ParseError("cannot write " + csv_path);
  csv << "n,epsilon,m,seed,success,stage_failed,wall_ms,retries_used\n";
  for (int n : cfg.ns)
    for (double eps : cfg.epsilons)
      for (int m : cfg.ms)
        for (int s = 0; s < cfg.seeds; ++s) {
          const std::uint64_t seed = cfg.seed0 + static_cast<std::uint64_t>(s);
          spansub::SolverParams params = cfg.base;
          params.epsilon = eps;
          params.seed = seed;
          auto t0 = std::chrono::steady_clock::now();
          int success = 0;
          std::string stage;
          int retries_used = 0;
          try {
            spansub::Digraph d = spansub::gen_random_semidegree(n, eps, seed);
            spansub::PatternDigraph h = spansub::gen_random_pattern(m, spansub::mix_seed(seed, 0xbe7cULL));
            spansub::SolveInfo sinfo;
            spansub::SubdivisionCertificate cert = spansub::solve(d, h, params, &sinfo);
            (void)cert;
            success = 1;
            retries_used = sinfo.attempts - 1;
          } catch (const spansub::SolveFailed& e) {
            stage = e.stage;
            retries_used = e.attempts - 1;
          } catch (const spansub::PreconditionViolated&) {
            stage = "precondition";
          }
          auto t1 = std::chrono::steady_clock::now();
          long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
          csv << n << ',' << eps << ',' << m << ',' << seed << ',' << success << ',' << stage << ','
              << ms << ',' << retries_used << '\n';
        }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spanning subdivisions of sparse patterns in dense digraphs"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate instances");
  gen->require_subcommand(1);

  int g_n = 100, g_m = 1, g_k = 2;
  double g_eps = 0.15;
  std::uint64_t g_seed = 0;
  std::string g_out;

  auto* gen_random = gen->add_subcommand("random", "random digraph with a semi-degree floor");
  gen_random->add_option("--n", g_n, "vertex count")->required();
  gen_random->add_option("--epsilon", g_eps, "degree slack in (0, 1/2)")->required();
  gen_random->add_option("--seed", g_seed, "rng seed");
  gen_random->add_option("--out", g_out, "output path")->required();

  auto* gen_extremal = gen->add_subcommand("extremal", "tight bidirected complete bipartite host");
  gen_extremal->add_option("--n", g_n, "vertex count")->required();
  gen_extremal->add_option("--m", g_m, "pattern arc count")->required();
  gen_extremal->add_option("--k", g_k, "pattern vertex count")->required();
  gen_extremal->add_option("--out", g_out, "output path")->required();

  auto* gen_pattern = gen->add_subcommand("pattern", "random pattern digraph");
  gen_pattern->add_option("--m", g_m, "arc count")->required();
  gen_pattern->add_option("--seed", g_seed, "rng seed");
  gen_pattern->add_option("--out", g_out, "output path")->required();

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "find a spanning subdivision");
  std::string s_digraph, s_pattern, s_cert;
  spansub::SolverParams params;
  solve_cmd->add_option("--digraph", s_digraph, "host digraph file")->required();
  solve_cmd->add_option("--pattern", s_pattern, "pattern digraph file")->required();
  solve_cmd->add_option("--out", s_cert, "certificate output path")->required();
  solve_cmd->add_option("--epsilon", params.epsilon, "degree slack");
  solve_cmd->add_option("--alpha", params.alpha, "absorbing path budget");
  solve_cmd->add_option("--beta", params.beta, "absorb capacity fraction");
  solve_cmd->add_option("--gamma", params.gamma, "reservoir coverage fraction");
  solve_cmd->add_option("--C", params.C, "minimum n/m ratio");
  solve_cmd->add_option("--seed", params.seed, "rng seed");
  solve_cmd->add_option("--retries", params.retries, "attempt budget");
  solve_cmd->add_option("--budget", params.ham_budget, "hamiltonian step budget (0 = default)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check a certificate");
  std::string v_digraph, v_pattern, v_cert;
  verify_cmd->add_option("--digraph", v_digraph, "host digraph file")->required();
  verify_cmd->add_option("--pattern", v_pattern, "pattern digraph file")->required();
  verify_cmd->add_option("--cert", v_cert, "certificate file")->required();

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "sweep a parameter grid, emit CSV");
  std::string b_config, b_csv;
  bench_cmd->add_option("--config", b_config, "grid config (key = value lines)")->required();
  bench_cmd->add_option("--out", b_csv, "CSV output path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen_random->parsed()) {
      spansub::Digraph d = spansub::gen_random_semidegree(g_n, g_eps, g_seed);
      save_digraph(g_out, d);
      audit(d);
      return 0;
    }
    if (gen_extremal->parsed()) {
      spansub::Digraph d = spansub::gen_extremal(g_n, g_m, g_k);
      save_digraph(g_out, d);
      audit(d);
      return 0;
    }
    if (gen_pattern->parsed()) {
      spansub::PatternDigraph h = spansub::gen_random_pattern(g_m, g_seed);
      save_digraph(g_out, h.digraph());
      audit(h.digraph());
      return 0;
    }
    if (solve_cmd->parsed()) {
      spansub::Digraph d = load_digraph(s_digraph);
      spansub::PatternDigraph h{load_digraph(s_pattern)};
      try {
        spansub::SolveInfo info;
        spansub::SubdivisionCertificate cert = spansub::solve(d, h, params, &info);
        spansub::CertificateReport rep = spansub::verify_certificate(d, h, cert);
        if (!rep.ok) {
          std::cerr << "internal error: solver emitted a certificate the verifier rejects ("
                    << spansub::to_string(rep.violation) << ")\n";
          return 2;
        }
        std::ofstream out(s_cert);
        if (!out) throw spansub::ParseError("cannot write " + s_cert);
        spansub::write_certificate(out, h, cert);
        std::cerr << "solved in " << info.attempts << " attempt(s)\n";
        return 0;
      } catch (const spansub::SolveFailed& e) {
        std::cerr << "solve failed at stage '" << e.stage << "' after " << e.attempts
                  << " attempt(s): " << e.what() << "\n";
        return 2;
      } catch (const spansub::PreconditionViolated& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 3;
      }
    }
    if (verify_cmd->parsed()) {
      spansub::Digraph d = load_digraph(v_digraph);
      spansub::PatternDigraph h{load_digraph(v_pattern)};
      std::ifstream in(v_cert);
      if (!in) throw spansub::ParseError("cannot open " + v_cert);
      spansub::SubdivisionCertificate cert = spansub::read_certificate(in, h);
      spansub::CertificateReport rep = spansub::verify_certificate(d, h, cert);
      if (rep.ok) {
        std::cerr << "certificate accepted\n";
        return 0;
      }
      std::cerr << "certificate rejected: " << spansub::to_string(rep.violation) << "\n";
      std::size_t shown = 0;
      for (const std::string& inst : rep.instances) {
        if (++shown > 20) {
          std::cerr << "  ... " << rep.instances.size() - 20 << " more\n";
          break;
        }
        std::cerr << "  " << inst << "\n";
      }
      return 1;
    }
    if (bench_cmd->parsed()) return run_bench(b_config, b_csv);
  } catch (const spansub::PreconditionViolated& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
