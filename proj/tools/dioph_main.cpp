// Command-line front end: solve / present / structure / verify / example,
// with text or JSON output. Exit codes: 0 success, 2 invalid input,
// 3 a verification check failed, 4 internal invariant violation.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dioph/dioph.hpp"
#include "dioph/report.hpp"

namespace {

using dioph::Coefficients;
using dioph::Int;
using dioph::json;

Int parse_int(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t k = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (k == s.size()) throw std::invalid_argument("bad integer literal: " + s);
  for (; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw std::invalid_argument("bad integer literal: " + s);
  return Int(s);
}

std::vector<Int> read_coefficient_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::vector<Int> out;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) out.push_back(parse_int(tok));
  }
  return out;
}

struct CommonArgs {
  std::vector<std::string> coeffs;
  std::string file;
  std::string format = "text";
  std::string strategy = "all";

  Coefficients coefficients() const {
    std::vector<Int> a;
    if (!file.empty()) a = read_coefficient_file(file);
    for (const std::string& s : coeffs) a.push_back(parse_int(s));
    return Coefficients::validate(std::move(a));
  }

  dioph::IndexSetStrategy index_strategy() const {
    return strategy == "greedy-minimal"
               ? dioph::IndexSetStrategy::greedy_minimal
               : dioph::IndexSetStrategy::all;
  }
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_strategy) {
  cmd->add_option("coefficients", args.coeffs,
                  "coefficients a_1 ... a_n as decimal integers");
  cmd->add_option("--file", args.file,
                  "read coefficients from a file (one or more integers per "
                  "line, # starts a comment)");
  cmd->add_option("--format", args.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  if (with_strategy)
    cmd->add_option("--m-strategy", args.strategy,
                    "how to choose the coprime index set")
        ->check(CLI::IsMember({"all", "greedy-minimal"}));
}

void print_checks_text(const json& doc) {
  for (const auto& chk : doc.at("checks")) {
    std::cout << (chk.at("pass").get<bool>() ? "[ OK ] " : "[FAIL] ")
              << chk.at("name").get<std::string>();
    if (chk.contains("note") && !chk.at("note").get<std::string>().empty())
      std::cout << "  (" << chk.at("note").get<std::string>() << ")";
    std::cout << "\n";
  }
}

std::string join_strings(const json& arr, const std::string& sep) {
  std::string out;
  for (const auto& item : arr) {
    if (!out.empty()) out += sep;
    out += item.is_string() ? item.get<std::string>() : item.dump();
  }
  return out;
}

void print_matrix_text(const json& rows, const std::string& indent) {
  for (const auto& row : rows)
    std::cout << indent << "[" << join_strings(row, ", ") << "]\n";
}

int emit(const json& doc, const std::string& format) {
  if (format == "json") {
    std::cout << doc.dump(2) << "\n";
    return doc.at("pass").get<bool>() ? 0 : 3;
  }
  const std::string cmd = doc.at("command").get<std::string>();
  std::cout << cmd;
  if (doc.contains("coefficients"))
    std::cout << " (" << join_strings(doc.at("coefficients"), ", ") << ")";
  std::cout << "\n";
  if (cmd == "solve") {
    std::cout << "  index set: {" << join_strings(doc.at("index_set"), ", ")
              << "}  pivot: " << doc.at("pivot") << "  det: "
              << doc.at("det").get<std::string>() << "\n  basis:\n";
    print_matrix_text(doc.at("basis"), "    ");
    std::cout << "  coordinate matrix (pivot coordinates, permuted order):\n";
    print_matrix_text(doc.at("coordinate_matrix"), "    ");
  } else if (cmd == "present") {
    std::cout << "  d = " << doc.at("d") << ", e = " << doc.at("e")
              << ", rank = " << doc.at("rank") << " (expected "
              << doc.at("expected_rank") << ")\n  relation matrix:\n";
    print_matrix_text(doc.at("relation_matrix"), "    ");
    std::cout << "  Smith diagonal: ("
              << join_strings(doc.at("snf_diagonal"), ", ") << ")\n";
  } else if (cmd == "structure") {
    const json& q = doc.at("quotients");
    auto render = [](const json& s) {
      std::string inv = s.at("display").get<std::string>();
      std::string ele = s.at("display_elementary").get<std::string>();
      return inv == ele ? inv : inv + "  (= " + ele + ")";
    };
    std::cout << "  i = " << doc.at("i") << "\n";
    std::cout << "  S/S_i: " << render(q.at("S_mod_Si")) << "\n";
    std::cout << "  S/U_i: " << render(q.at("S_mod_Ui")) << "\n";
    if (!q.at("W_mod_S").is_null())
      std::cout << "  W/S:   " << render(q.at("W_mod_S")) << "\n";
    if (!doc.at("d_chain").is_null())
      std::cout << "  divisor chain: ("
                << join_strings(doc.at("d_chain"), ", ") << ")\n";
    if (!doc.at("C").is_null()) {
      std::cout << "  C matrix:\n";
      print_matrix_text(doc.at("C"), "    ");
    }
  } else if (cmd == "verify") {
    std::cout << "  seed: " << doc.at("seed") << "  instances: "
              << doc.at("count") << "\n";
    for (const auto& inst : doc.at("instances")) {
      std::cout << "  (" << join_strings(inst.at("coefficients"), ", ") << ") "
                << (inst.at("pass").get<bool>() ? "ok" : "FAILED") << "\n";
      if (!inst.at("pass").get<bool>())
        for (const auto& chk : inst.at("checks"))
          if (!chk.at("pass").get<bool>())
            std::cout << "    [FAIL] " << chk.at("name").get<std::string>()
                      << "\n";
    }
  }
  if (doc.contains("checks")) print_checks_text(doc);
  bool pass = doc.at("pass").get<bool>();
  std::cout << (pass ? "all checks passed" : "CHECKS FAILED") << "\n";
  return pass ? 0 : 3;
}

std::vector<Coefficients> random_instances(std::size_t count,
                                           std::size_t max_n,
                                           std::int64_t max_coeff,
                                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_n(2, max_n);
  std::uniform_int_distribution<std::int64_t> pick(-max_coeff, max_coeff);
  std::vector<Coefficients> out;
  while (out.size() < count) {
    std::size_t n = pick_n(rng);
    std::vector<Int> a(n);
    Int g = 0;
    for (auto& x : a) {
      x = pick(rng);
      g = dioph::gcd_nonneg(g, x);
    }
    if (g != 1) continue;
    out.push_back(Coefficients::validate(std::move(a)));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solution modules of a_1 X_1 + ... + a_n X_n = 0"};
  app.require_subcommand(1);

  CommonArgs solve_args, present_args, structure_args, verify_args;
  std::string example_format = "text";
  std::size_t pivot_opt = 0;
  std::size_t structure_i = 1;
  std::size_t verify_count = 0;
  std::size_t verify_max_n = 5;
  std::int64_t verify_max_coeff = 1000;
  std::uint64_t verify_seed = 1;
  std::int64_t verify_bound = 3;

  CLI::App* solve = app.add_subcommand(
      "solve", "construct and certify a basis of the solution module");
  add_common(solve, solve_args, true);
  CLI::Option* pivot_flag =
      solve->add_option("--pivot", pivot_opt,
                        "force this index (1-based) as the pivot");

  CLI::App* present = app.add_subcommand(
      "present", "generators and relations with Smith-form verification");
  add_common(present, present_args, true);

  CLI::App* structure = app.add_subcommand(
      "structure", "quotient structures, divisor chain, and the C matrix");
  add_common(structure, structure_args, false);
  structure->add_option("--i", structure_i, "anchor index (1-based)");

  CLI::App* verify = app.add_subcommand(
      "verify", "run the full cross-oracle battery on the given or random "
                "coefficients");
  add_common(verify, verify_args, false);
  verify->add_option("--count", verify_count, "number of random instances");
  verify->add_option("--max-n", verify_max_n, "largest vector length");
  verify->add_option("--max-coeff", verify_max_coeff,
                     "largest coefficient magnitude");
  verify->add_option("--seed", verify_seed, "random seed");
  verify->add_option("--bound", verify_bound,
                     "box bound for the enumeration check");

  CLI::App* example = app.add_subcommand(
      "example", "recompute the reference instance (12, 4, 2, 3) and diff "
                 "against the stored values");
  example->add_option("--format", example_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      Coefficients c = solve_args.coefficients();
      std::optional<std::size_t> forced;
      if (pivot_flag->count()) {
        if (pivot_opt == 0 || pivot_opt > c.size())
          throw std::invalid_argument("--pivot out of range");
        forced = pivot_opt - 1;
      }
      return emit(dioph::solve_report(c, solve_args.index_strategy(), forced),
                  solve_args.format);
    }
    if (present->parsed()) {
      Coefficients c = present_args.coefficients();
      return emit(dioph::present_report(c, present_args.index_strategy()),
                  present_args.format);
    }
    if (structure->parsed()) {
      Coefficients c = structure_args.coefficients();
      if (structure_i == 0 || structure_i > c.size())
        throw std::invalid_argument("--i out of range");
      return emit(dioph::structure_report(c, structure_i - 1),
                  structure_args.format);
    }
    if (verify->parsed()) {
      std::vector<Coefficients> instances;
      if (!verify_args.coeffs.empty() || !verify_args.file.empty())
        instances.push_back(verify_args.coefficients());
      if (verify_count > 0) {
        auto more = random_instances(verify_count, verify_max_n,
                                     verify_max_coeff, verify_seed);
        instances.insert(instances.end(), more.begin(), more.end());
      }
      if (instances.empty())
        throw std::invalid_argument(
            "verify needs coefficients or --count > 0");
      dioph::BatteryOptions opts;
      opts.box_bound = verify_bound;
      return emit(dioph::verify_report(instances, verify_seed, opts),
                  verify_args.format);
    }
    if (example->parsed())
      return emit(dioph::example_report(), example_format);
  } catch (const dioph::internal_error& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
