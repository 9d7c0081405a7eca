#pragma once

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "garside/garside.hpp"
#include "garside/serialize.hpp"

namespace garside::cli {

enum ExitCode { kOk = 0, kNotConjugate = 1, kInputError = 2, kBudgetExceeded = 3 };

inline constexpr int kRigidPowerMaxStrands = 6;

struct GlobalOptions {
  int n = 4;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> budget_ms;
  bool json = false;

  std::uint64_t resolved_seed() const {
    if (seed) return *seed;
    if (const char* env = std::getenv("GARSIDE_SEED")) {
      try {
        std::size_t used = 0;
        std::uint64_t v = std::stoull(env, &used);
        if (used == std::string(env).size()) return v;
      } catch (const std::exception&) {
      }
      throw InputError(std::string("GARSIDE_SEED is not an unsigned integer: ") + env);
    }
    return 0;
  }

  Budget budget() const {
    if (!budget_ms) return {};
    return Budget(std::chrono::milliseconds(*budget_ms), std::nullopt);
  }
};

inline std::optional<SummitKind> parse_kind(const std::string& s) {
  if (s == "super") return SummitKind::super;
  if (s == "ultra") return SummitKind::ultra;
  if (s == "star") return SummitKind::star;
  return std::nullopt;
}

inline void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Garside normal forms, cycling and summit sets for braid groups"};
  app.fallthrough();
  app.require_subcommand(1);
  GlobalOptions opt;
  app.add_option("--n", opt.n, "number of strands")->capture_default_str();
  app.add_option("--seed", opt.seed, "random seed (falls back to GARSIDE_SEED, then 0)");
  app.add_option("--budget-ms", opt.budget_ms, "wall-clock budget for summit computations");
  app.add_flag("--json", opt.json, "machine-readable output");

  std::string word, word2;
  auto* nf = app.add_subcommand("nf", "left normal form of a word");
  nf->add_option("word", word, "braid word")->required();

  auto* cyc = app.add_subcommand("cyc", "cycling of a given order");
  cyc->add_option("word", word, "braid word")->required();
  std::optional<std::int64_t> order;
  std::vector<std::int64_t> dbl;
  auto* order_opt = cyc->add_option("--order", order, "order q of cyc_q");
  auto* double_opt = cyc->add_option("--double", dbl, "orders p q of cyc_{p,q}")->expected(2);
  order_opt->excludes(double_opt);
  double_opt->excludes(order_opt);

  auto* summit = app.add_subcommand("summit", "summit set of a word");
  summit->add_option("word", word, "braid word")->required();
  std::string kind_name = "star";
  summit->add_option("--kind", kind_name, "super, ultra or star")->check(CLI::IsMember({"super", "ultra", "star"}));

  auto* conj = app.add_subcommand("conj", "decide conjugacy of two words");
  conj->add_option("x", word, "first braid word")->required();
  conj->add_option("y", word2, "second braid word")->required();

  auto* rigid = app.add_subcommand("rigid", "rigidity test, with the rigid conjugates when rigid");
  rigid->add_option("word", word, "braid word")->required();

  auto* rigid_pow = app.add_subcommand("rigid-power", "search for a rigid conjugate of a power");
  rigid_pow->add_option("word", word, "braid word")->required();

  int test = 1, length = 3, count = 1;
  auto* gen = app.add_subcommand("gen", "random braids from a benchmark family");
  gen->add_option("--test", test, "family 1, 2 or 3")->check(CLI::Range(1, 3));
  gen->add_option("--l", length, "length parameter")->check(CLI::PositiveNumber);
  gen->add_option("--count", count, "number of braids")->check(CLI::PositiveNumber);

  std::size_t samples = 200;
  std::optional<std::size_t> size_cap;
  auto* bench = app.add_subcommand("bench", "summit-set statistics as CSV");
  bench->add_option("--test", test, "family 1, 2 or 3")->check(CLI::Range(1, 3));
  bench->add_option("--l", length, "length parameter")->check(CLI::PositiveNumber);
  bench->add_option("--samples", samples, "number of samples")->check(CLI::PositiveNumber);
  bench->add_option("--size-cap", size_cap, "abort a summit set beyond this many members");
  std::vector<std::string> bench_kinds{"ultra", "star"};
  bench->add_option("--kinds", bench_kinds, "summit kinds to compute")
      ->check(CLI::IsMember({"super", "ultra", "star"}))
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    BraidStructure g(opt.n);
    if (opt.budget_ms && *opt.budget_ms <= 0) throw InputError("--budget-ms must be positive");

    if (nf->parsed()) {
      Braid x = parse_word(g, word);
      if (opt.json) emit(out, to_json(g, x));
      else out << to_text(g, x);
      return kOk;
    }

    if (cyc->parsed()) {
      Braid x = parse_word(g, word);
      CyclingStep<BraidStructure> step;
      if (order) step = cyc_q(g, x, *order);
      else if (dbl.size() == 2) step = cyc_pq(g, x, dbl[0], dbl[1]);
      else throw InputError("cyc needs --order q or --double p q");
      if (opt.json) {
        emit(out, Json{{"result", to_json(g, step.result)}, {"conjugator", format_word(g, step.conjugator)}});
      } else {
        out << to_text(g, step.result) << "conjugator " << display_word(g, step.conjugator) << "\n";
      }
      return kOk;
    }

    if (summit->parsed()) {
      Braid x = parse_word(g, word);
      auto s = summit_set(g, x, *parse_kind(kind_name), opt.budget());
      if (opt.json) emit(out, to_json(g, s));
      else out << to_text(g, s);
      return kOk;
    }

    if (conj->parsed()) {
      Braid x = parse_word(g, word), y = parse_word(g, word2);
      auto ans = decide_conjugacy(g, x, y, opt.budget());
      if (opt.json) {
        Json j{{"conjugate", ans.conjugate}};
        if (ans.witness) j["witness"] = format_word(g, *ans.witness);
        emit(out, j);
      } else {
        out << "conjugate " << (ans.conjugate ? "true" : "false") << "\n";
        if (ans.witness) out << "witness   " << display_word(g, *ans.witness) << "\n";
      }
      return ans.conjugate ? kOk : kNotConjugate;
    }

    if (rigid->parsed()) {
      Braid x = parse_word(g, word);
      const bool r = is_rigid(g, x);
      std::optional<SummitSet<BraidStructure>> rigid_set;
      if (r) rigid_set = c_star_star_rigid(g, x, opt.budget());
      if (opt.json) {
        Json j{{"is_rigid", r}};
        if (rigid_set) j["rigid_conjugates"] = to_json(g, *rigid_set);
        emit(out, j);
      } else {
        out << "rigid    " << (r ? "true" : "false") << "\n";
        if (rigid_set) out << to_text(g, *rigid_set);
      }
      return kOk;
    }

    if (rigid_pow->parsed()) {
      if (opt.n > kRigidPowerMaxStrands)
        throw InputError("rigid-power is limited to n <= " + std::to_string(kRigidPowerMaxStrands) +
                         " (it computes summit bounds of |Δ| powers)");
      Braid x = parse_word(g, word);
      auto r = rigid_power(g, x);
      if (opt.json) {
        emit(out, to_json(g, r));
      } else {
        out << "rigid    " << (r.is_rigid ? "true" : "false") << "\n"
            << "n1 n2    " << r.n1 << " " << r.n2 << "\n";
        if (r.power) {
          out << "power    " << *r.power << "\n"
              << "conjugate " << display_word(g, *r.rigid_conjugate) << "\n"
              << "witness  " << display_word(g, *r.witness) << "\n";
        }
      }
      return kOk;
    }

    if (gen->parsed()) {
      const std::uint64_t seed = opt.resolved_seed();
      Json list = Json::array();
      if (!opt.json) out << "# seed=" << seed << "\n";
      for (int i = 0; i < count; ++i) {
        Braid x = gen_test(test, opt.n, length, mix_seed(seed, static_cast<std::uint64_t>(i)));
        if (opt.json) list.push_back(to_json(g, x));
        else out << format_word(g, x) << "\n";
      }
      if (opt.json) emit(out, Json{{"seed", seed}, {"test", test}, {"n", opt.n}, {"l", length}, {"braids", list}});
      return kOk;
    }

    if (bench->parsed()) {
      BenchConfig cfg;
      cfg.test = test;
      cfg.n = opt.n;
      cfg.l = length;
      cfg.samples = samples;
      cfg.seed = opt.resolved_seed();
      if (opt.budget_ms) cfg.budget = std::chrono::milliseconds(*opt.budget_ms);
      cfg.size_cap = size_cap;
      cfg.kinds.clear();
      for (const auto& k : bench_kinds) cfg.kinds.push_back(*parse_kind(k));
      gen_test(test, opt.n, length, std::uint64_t{0});  // validates parameters before any output
      auto rows = run_bench(cfg);
      write_csv_header(out, cfg.seed);
      for (const auto& r : rows) write_csv_row(out, r);
      return kOk;
    }
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace garside::cli
