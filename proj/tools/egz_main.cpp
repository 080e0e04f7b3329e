// egz: evaluate, verify, search, construct, reduce — zero-sum subsequence
// computations over Z_2^d.
//
// Exit codes: 0 success / witness found, 1 negative result, 2 input error,
// 3 undecided (budget exhausted).

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "egz/algebra.hpp"
#include "egz/constants.hpp"
#include "egz/constructions.hpp"
#include "egz/engine.hpp"
#include "egz/reductions.hpp"

using nlohmann::json;

namespace {

json sequence_json(const egz::ZSequence& s) {
  json arr = json::array();
  for (std::size_t i = 0; i < s.size(); ++i)
    arr.push_back(egz::render_element(s.at(i)));
  return arr;
}

json constant_json(int k, int d, bool modified, const egz::ConstantResult& r) {
  json j;
  j["k"] = k;
  j["d"] = d;
  j["modified"] = modified;
  j["value"] = r.decided ? json(r.value) : json(nullptr);
  j["provenance"] =
      r.provenance == egz::Provenance::closed_form ? "closed_form" : "brute_force";
  j["extremal"] = r.extremal ? sequence_json(*r.extremal) : json(nullptr);
  j["status"] = r.decided ? "decided" : "undecided";
  return j;
}

egz::ZSequence load_sequence(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return egz::parse_sequence(in);
}

int cmd_eval(int k, int d, bool modified, bool as_json) {
  int value = 0;
  std::string_view which;
  try {
    value = modified ? egz::eval_s_prime(k, d) : egz::eval_s(k, d);
    which = modified ? egz::eval_s_prime_case(k, d) : egz::eval_s_case(k, d);
  } catch (const egz::TheoremRangeError& e) {
    std::cerr << "error: " << e.what()
              << "; closed forms cover 1 <= d <= 2k+1 only\n";
    return 2;
  }
  egz::ConstantResult res;
  res.decided = true;
  res.value = value;
  res.provenance = egz::Provenance::closed_form;
  if (as_json) {
    std::cout << constant_json(k, d, modified, res).dump() << "\n";
  } else {
    std::cout << "value: " << value << "\n"
              << "case: " << which << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& path, int r, bool as_json) {
  egz::ZSequence s = load_sequence(path);
  if (r < 0 || static_cast<std::size_t>(r) > s.size()) {
    std::cerr << "error: r must satisfy 0 <= r <= " << s.size() << "\n";
    return 2;
  }
  const bool zero_sum = egz::is_zero_sum(s);
  auto witness = egz::find_exact(s, static_cast<std::size_t>(r));

  if (as_json) {
    json j;
    j["d"] = s.dim().value();
    j["length"] = s.size();
    j["r"] = r;
    j["zero_sum"] = zero_sum;
    if (witness) {
      json pos = json::array();
      for (std::size_t p : witness->positions) pos.push_back(p);
      j["witness"] = pos;
    } else {
      j["witness"] = nullptr;
    }
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "zero-sum: " << (zero_sum ? "yes" : "no") << "\n";
    std::cout << "witness(r=" << r << "):";
    if (witness) {
      for (std::size_t p : witness->positions) std::cout << " " << p;
      std::cout << "\n";
    } else {
      std::cout << " none\n";
    }
  }
  return witness ? 0 : 1;
}

int cmd_brute(int d, int r, bool modified, bool force,
              const egz::SearchBudget& budget, bool isomorph_rejection,
              bool as_json) {
  egz::Dimension dim(d);
  egz::SearchOptions opts;
  opts.isomorph_rejection = isomorph_rejection;
  const egz::ConstantResult res =
      modified ? egz::brute_s_prime(dim, r, budget, opts, force)
               : egz::brute_s(dim, r, budget, opts, force);

  if (as_json) {
    std::cout << constant_json(r / 2, d, modified, res).dump() << "\n";
  } else if (!res.decided) {
    std::cout << "status: undecided (budget exhausted)\n"
              << "nodes: " << res.stats.nodes << "\n"
              << "seconds: " << res.stats.seconds << "\n";
  } else {
    std::cout << "value: " << res.value << "\n";
    std::cout << "extremal:";
    if (res.extremal)
      for (std::size_t i = 0; i < res.extremal->size(); ++i)
        std::cout << " " << egz::render_element(res.extremal->at(i));
    std::cout << "\n";
    std::cout << "nodes: " << res.stats.nodes << "\n"
              << "seconds: " << res.stats.seconds << "\n";
  }
  return res.decided ? 0 : 3;
}

int cmd_construct(const std::string& family, int k, int d) {
  egz::ZSequence s =
      family == "d2k" ? egz::construct_d_eq_2k(k) : egz::construct_two_d_plus_two(d);
  std::cout << egz::render_sequence(s);
  return 0;
}

int cmd_reduce(const std::string& path, int k) {
  egz::ZSequence s = load_sequence(path);
  if (!egz::is_zero_sum(s)) {
    std::cerr << "error: sequence is not zero-sum\n";
    return 1;
  }
  egz::ReductionStrategy strategy{};
  const egz::Witness w = egz::find_length_2k_in_zero_sum(s, k, &strategy);
  if (!egz::validate_witness(s, w)) {
    std::cerr << "internal error: witness failed validation\n";
    return 2;
  }
  json j;
  switch (strategy) {
    case egz::ReductionStrategy::duplication: j["strategy"] = "duplication"; break;
    case egz::ReductionStrategy::complement: j["strategy"] = "complement"; break;
    case egz::ReductionStrategy::engine: j["strategy"] = "engine"; break;
  }
  json pos = json::array();
  for (std::size_t p : w.positions) pos.push_back(p);
  j["positions"] = pos;
  std::cout << j.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zero-sum subsequence computations over Z_2^d"};
  app.require_subcommand(1);

  std::string output = "text";
  app.add_option("--output", output, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  auto* eval = app.add_subcommand("eval", "closed-form constant value");
  int eval_k = 0, eval_d = 0;
  bool eval_modified = false;
  eval->add_option("--k", eval_k, "half the target subsequence length")
      ->required()
      ->check(CLI::PositiveNumber);
  eval->add_option("--d", eval_d, "dimension")->required()->check(CLI::PositiveNumber);
  eval->add_flag("--modified", eval_modified, "modified constant (zero-sum inputs)");

  auto* verify = app.add_subcommand(
      "verify", "check a sequence file for a zero-sum r-subsequence");
  std::string verify_file;
  int verify_r = 0;
  verify->add_option("file", verify_file, "sequence file")->required();
  verify->add_option("--r", verify_r, "subsequence length")->required();

  auto* brute = app.add_subcommand("brute", "brute-force constant computation");
  int brute_d = 0, brute_r = 0;
  bool brute_modified = false, brute_force_flag = false, no_rejection = false;
  egz::SearchBudget budget;
  brute->add_option("--d", brute_d, "dimension")->required()->check(CLI::PositiveNumber);
  brute->add_option("--r", brute_r, "subsequence length (even)")
      ->required()
      ->check(CLI::PositiveNumber);
  brute->add_flag("--modified", brute_modified, "modified constant");
  brute->add_flag("--force", brute_force_flag, "run beyond the feasibility guard");
  brute->add_option("--max-nodes", budget.max_nodes, "search node budget");
  brute->add_option("--max-seconds", budget.max_wall_seconds, "wall-clock budget");
  brute->add_option("--threads", budget.threads,
                    "worker threads (0 = machine parallelism)");
  brute->add_flag("--no-isomorph-rejection", no_rejection,
                  "deduplicate by exact multiset only");

  auto* construct =
      app.add_subcommand("construct", "emit an extremal construction");
  std::string family;
  int cons_k = 0, cons_d = 0;
  construct->add_option("--family", family, "d2k or two_d_plus_two")
      ->required()
      ->check(CLI::IsMember({"d2k", "two_d_plus_two"}));
  construct->add_option("--k", cons_k, "parameter for family d2k");
  construct->add_option("--d", cons_d, "parameter for family two_d_plus_two");

  auto* reduce = app.add_subcommand(
      "reduce", "find a zero-sum 2k-subsequence in a zero-sum sequence");
  std::string reduce_file;
  int reduce_k = 0;
  reduce->add_option("file", reduce_file, "sequence file")->required();
  reduce->add_option("--k", reduce_k, "half the target length")
      ->required()
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const bool as_json = output == "json";
  try {
    if (eval->parsed()) return cmd_eval(eval_k, eval_d, eval_modified, as_json);
    if (verify->parsed()) return cmd_verify(verify_file, verify_r, as_json);
    if (brute->parsed())
      return cmd_brute(brute_d, brute_r, brute_modified, brute_force_flag,
                       budget, !no_rejection, as_json);
    if (construct->parsed()) {
      if (family == "d2k" && cons_k < 1) {
        std::cerr << "error: --family d2k requires --k >= 1\n";
        return 2;
      }
      if (family == "two_d_plus_two" && cons_d < 1) {
        std::cerr << "error: --family two_d_plus_two requires --d\n";
        return 2;
      }
      return cmd_construct(family, cons_k, cons_d);
    }
    if (reduce->parsed()) return cmd_reduce(reduce_file, reduce_k);
  } catch (const egz::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
