#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tropcone/io.hpp"
#include "tropcone/oracle.hpp"
#include "tropcone/random.hpp"

namespace tropcone {

namespace cli_detail {

using ordered_json = nlohmann::ordered_json;

inline ordered_json index_json(int v) {
  return v < 0 ? ordered_json(nullptr) : ordered_json(v + 1);
}

template <class T>
ordered_json vec_json(const TropVector<T>& v) {
  ordered_json arr = ordered_json::array();
  for (Eigen::Index c = 0; c < v.rows(); ++c) arr.push_back(token(v(c)));
  return arr;
}

template <class T>
int emit_solve(const TwoRowSystem<T>& sys, bool json, std::ostream& out) {
  const Basis<T> basis = compute_basis(sys);
  if (!json) {
    for (const Generator<T>& g : basis.gens) out << format_generator(g, basis.n) << '\n';
    out << "basis size: " << basis.gens.size() << '\n';
    return 0;
  }
  ordered_json doc;
  doc["command"] = "solve";
  doc["n"] = basis.n;
  doc["basis_size"] = basis.gens.size();
  ordered_json gens = ordered_json::array();
  for (const Generator<T>& g : basis.gens) {
    ordered_json item;
    item["class"] = to_string(g.klass);
    item["i"] = index_json(g.i);
    item["k"] = index_json(g.k);
    item["l"] = index_json(g.l);
    item["vec"] = vec_json(g.dense(basis.n));
    gens.push_back(std::move(item));
  }
  doc["generators"] = std::move(gens);
  out << doc.dump(2) << '\n';
  return 0;
}

inline int emit_verify(const TwoRowSystem<Rat>& sys, const std::vector<TropVector<Rat>>& given,
                       bool json, std::ostream& out) {
  std::vector<TropVector<Rat>> bad_solution, dependent, not_generated;
  for (const auto& v : given)
    if (!is_solution(sys, v)) bad_solution.push_back(v);
  for (size_t a = 0; a < given.size(); ++a) {
    std::vector<TropVector<Rat>> rest;
    for (size_t b = 0; b < given.size(); ++b)
      if (b != a) rest.push_back(given[b]);
    if (decompose(given[a], rest)) dependent.push_back(given[a]);
  }
  for (const TropVector<Rat>& b : compute_basis(sys).dense_all())
    if (!decompose(b, given)) not_generated.push_back(b);
  const bool ok = bad_solution.empty() && dependent.empty() && not_generated.empty();

  if (json) {
    ordered_json doc;
    doc["command"] = "verify";
    doc["vectors"] = given.size();
    doc["solutions_ok"] = bad_solution.empty();
    doc["independent"] = dependent.empty();
    doc["generating"] = not_generated.empty();
    doc["ok"] = ok;
    ordered_json fails = ordered_json::array();
    for (const auto& v : bad_solution) fails.push_back(vec_json(v));
    for (const auto& v : dependent) fails.push_back(vec_json(v));
    for (const auto& v : not_generated) fails.push_back(vec_json(v));
    doc["failures"] = std::move(fails);
    out << doc.dump(2) << '\n';
    return ok ? 0 : 1;
  }
  auto print_list = [&](const char* what, const std::vector<TropVector<Rat>>& vs) {
    out << what << ": " << (vs.empty() ? "ok" : "FAIL") << '\n';
    for (const auto& v : vs) {
      out << "  vec=";
      for (Eigen::Index c = 0; c < v.rows(); ++c) out << ' ' << token(v(c));
      out << '\n';
    }
  };
  out << "vectors: " << given.size() << '\n';
  print_list("solutions", bad_solution);
  print_list("independent", dependent);
  print_list("generating", not_generated);
  out << "verify: " << (ok ? "ok" : "FAIL") << '\n';
  return ok ? 0 : 1;
}

template <class T>
int emit_oracle(const TwoRowSystem<T>& sys, bool json, std::ostream& out) {
  const OracleReport<T> report = cross_check(sys);
  const Basis<T> basis = compute_basis(sys);
  const bool ok = report.basis_match && report.solution_violations.empty() &&
                  report.membership_failures.empty();
  if (json) {
    ordered_json doc;
    doc["command"] = "oracle";
    doc["basis_match"] = report.basis_match;
    doc["basis_size"] = basis.gens.size();
    ordered_json missing = ordered_json::array(), extra = ordered_json::array();
    for (const auto& v : report.missing) missing.push_back(vec_json(v));
    for (const auto& v : report.extra) extra.push_back(vec_json(v));
    doc["missing"] = std::move(missing);
    doc["extra"] = std::move(extra);
    doc["solution_violations"] = report.solution_violations.size();
    doc["membership_failures"] = report.membership_failures.size();
    doc["ok"] = ok;
    out << doc.dump(2) << '\n';
    return ok ? 0 : 1;
  }
  auto print_vecs = [&](const std::vector<TropVector<T>>& vs) {
    for (const auto& v : vs) {
      out << "  vec=";
      for (Eigen::Index c = 0; c < v.rows(); ++c) out << ' ' << token(v(c));
      out << '\n';
    }
  };
  out << "basis_match: " << (report.basis_match ? "true" : "false") << '\n';
  out << "basis size: " << basis.gens.size() << '\n';
  out << "missing: " << report.missing.size() << '\n';
  print_vecs(report.missing);
  out << "extra: " << report.extra.size() << '\n';
  print_vecs(report.extra);
  out << "solution violations: " << report.solution_violations.size() << '\n';
  out << "membership failures: " << report.membership_failures.size() << '\n';
  return ok ? 0 : 1;
}

inline int emit_bench(int n, std::uint64_t seed, bool json, std::ostream& out) {
  Rng rng(seed);
  const TwoRowSystem<Int> sys = random_system<Int>(n, rng, /*bottom_pct=*/0, -9, 9);
  const auto t0 = std::chrono::steady_clock::now();
  const Basis<Int> basis = compute_basis(sys);
  const auto t1 = std::chrono::steady_clock::now();
  const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  std::ostringstream ms_text;
  ms_text << std::fixed << std::setprecision(3) << ms;
  if (json) {
    ordered_json doc;
    doc["command"] = "bench";
    doc["n"] = n;
    doc["time_ms"] = ms;
    doc["basis"] = basis.gens.size();
    out << doc.dump(2) << '\n';
  } else {
    out << "n=" << n << " time_ms=" << ms_text.str() << " basis=" << basis.gens.size()
        << '\n';
  }
  return 0;
}

inline ParsedSystem load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 1, 1);
  return parse_system(in);
}

}  // namespace cli_detail

/// Entry point shared by the binary and the tests. `args` excludes the
/// program name. Exit status: 0 success, 1 verification failure or basis
/// mismatch, 2 parse or usage errors.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"basis solver for systems of two max-plus linear inequalities"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string solve_file, verify_file, verify_basis, oracle_file;
  int bench_n = 0;
  std::uint64_t bench_seed = 1;

  CLI::App* solve = app.add_subcommand("solve", "print the basis of the solution cone");
  solve->add_option("file", solve_file, "system file")->required();
  CLI::App* verify =
      app.add_subcommand("verify", "check that given vectors form the basis");
  verify->add_option("file", verify_file, "system file")->required();
  verify->add_option("basisfile", verify_basis, "vectors to check")->required();
  CLI::App* oracle =
      app.add_subcommand("oracle", "cross-check the solver against brute force");
  oracle->add_option("file", oracle_file, "system file")->required();
  CLI::App* bench = app.add_subcommand("bench", "time the solver on a random system");
  bench->add_option("--n", bench_n, "dimension")->required();
  bench->add_option("--seed", bench_seed, "rng seed");

  std::vector<const char*> argv;
  argv.push_back("tropcone");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return 2;
  }
  const bool json = format == "json";

  try {
    if (solve->parsed()) {
      const ParsedSystem parsed = cli_detail::load_system(solve_file);
      return parsed.integral ? cli_detail::emit_solve(to_integer(parsed.system), json, out)
                             : cli_detail::emit_solve(parsed.system, json, out);
    }
    if (verify->parsed()) {
      const ParsedSystem parsed = cli_detail::load_system(verify_file);
      std::ifstream bin(verify_basis);
      if (!bin) throw ParseError("cannot open '" + verify_basis + "'", 1, 1);
      const std::vector<TropVector<Rat>> given =
          parse_vectors(bin, parsed.system.n());
      return cli_detail::emit_verify(parsed.system, given, json, out);
    }
    if (oracle->parsed()) {
      const ParsedSystem parsed = cli_detail::load_system(oracle_file);
      return parsed.integral ? cli_detail::emit_oracle(to_integer(parsed.system), json, out)
                             : cli_detail::emit_oracle(parsed.system, json, out);
    }
    if (bench->parsed()) return cli_detail::emit_bench(bench_n, bench_seed, json, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace tropcone
