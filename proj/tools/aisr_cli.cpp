// Command-line workbench: statement checking, oracles, term families,
// freeness, bounded derivation, census, catalog, and the named suites.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "aisr/census.hpp"
#include "aisr/checker.hpp"
#include "aisr/derivation.hpp"
#include "aisr/families.hpp"
#include "aisr/freeness.hpp"
#include "aisr/semiring.hpp"
#include "aisr/suites.hpp"
#include "aisr/term.hpp"

using nlohmann::json;

namespace {

// exit codes: 0 = holds/agrees/found, 1 = fails (witness printed), 2 = usage,
// parse, or cap errors
constexpr int kOk = 0, kFail = 1, kUsage = 2;

aisr::FiniteAiSemiring load_semiring(const std::string& spec) {
  auto names = aisr::catalog_names();
  if (std::find(names.begin(), names.end(), spec) != names.end())
    return aisr::catalog(spec);
  std::ifstream in(spec);
  if (!in) throw std::runtime_error("no catalog entry or readable file: " + spec);
  std::stringstream ss;
  ss << in.rdbuf();
  auto r = aisr::from_json(ss.str());
  if (!r.semiring)
    throw std::runtime_error("tables in " + spec + " violate the axioms:\n" +
                             r.report.to_string({}));
  return *r.semiring;
}

void emit(const std::string& path, const json& j) {
  if (path.empty()) return;
  std::ofstream out(path);
  out << j.dump(2) << "\n";
}

json suite_to_json(const aisr::SuiteReport& rep) {
  json cases = json::array();
  for (const auto& c : rep.cases)
    cases.push_back({{"id", c.id}, {"ok", c.ok}, {"detail", c.detail}});
  return {{"suite", rep.suite},
          {"passed", rep.passed()},
          {"failed", rep.failed()},
          {"cases", cases}};
}

aisr::BasisSpec load_basis(const std::string& spec) {
  if (spec == "basis545") return aisr::basis_545(4);
  if (spec == "basis634") return aisr::basis_634(3, 3);
  std::ifstream in(spec);
  if (!in) throw std::runtime_error("no builtin basis or readable file: " + spec);
  aisr::BasisSpec b;
  std::string line;
  int idx = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    b.add(aisr::parse_statement(line), "line" + std::to_string(++idx));
  }
  return b;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for finite additively idempotent semirings"};
  app.require_subcommand(1);

  std::string json_path;
  int threads = 1;
  std::uint64_t seed = 1;
  long long budget = 10'000'000;
  app.add_option("--json", json_path, "write a machine-readable report here");
  app.add_option("--threads", threads, "worker count (reserved)");
  app.add_option("--seed", seed, "seed for randomized samples");
  app.add_option("--budget", budget, "node budget for searches");

  int exit_code = kOk;

  // check
  auto* check = app.add_subcommand("check", "statement satisfaction by scan");
  std::string check_semiring, check_statement;
  check->add_option("--semiring", check_semiring)->required();
  check->add_option("--statement", check_statement)->required();
  check->callback([&] {
    auto s = load_semiring(check_semiring);
    auto st = aisr::parse_statement(check_statement);
    auto r = aisr::holds(s, st);
    json rep{{"command", "check"}, {"holds", r.holds}};
    if (r.holds) {
      std::cout << "holds\n";
    } else {
      std::string cm;
      for (const auto& [v, e] : *r.countermodel)
        cm += v.name() + "=" + s.elements()[e] + " ";
      std::cout << "fails at " << cm << "\n";
      rep["countermodel"] = cm;
      exit_code = kFail;
    }
    emit(json_path, rep);
  });

  // oracle
  auto* oracle = app.add_subcommand("oracle", "satisfaction oracles");
  std::string oracle_which, oracle_statement;
  oracle->add_option("--which", oracle_which, "d2|s53|s7|zero:<semiring>")
      ->required();
  oracle->add_option("--statement", oracle_statement)->required();
  oracle->callback([&] {
    auto st = aisr::parse_statement(oracle_statement);
    bool yes;
    if (oracle_which == "d2") {
      yes = aisr::oracle_d2(st);
    } else if (oracle_which == "s53") {
      yes = aisr::oracle_s53(st);
    } else if (oracle_which == "s7") {
      yes = aisr::oracle_s7(st);
    } else if (oracle_which.rfind("zero:", 0) == 0) {
      auto base = load_semiring(oracle_which.substr(5));
      yes = aisr::oracle_adjoin_zero(base, st);
    } else {
      throw CLI::ValidationError("--which", "unknown oracle " + oracle_which);
    }
    std::cout << (yes ? "holds\n" : "fails\n");
    if (!yes) exit_code = kFail;
    emit(json_path, {{"command", "oracle"}, {"which", oracle_which}, {"holds", yes}});
  });

  // crossvalidate
  auto* cross = app.add_subcommand("crossvalidate", "oracle vs brute force");
  std::string cross_which;
  aisr::SampleSpec spec;
  cross->add_option("--which", cross_which)->required();
  cross->add_option("--max-vars", spec.max_vars);
  cross->add_option("--max-len", spec.max_len);
  cross->add_option("--max-words", spec.max_words);
  cross->add_option("--samples", spec.random_samples);
  cross->callback([&] {
    spec.seed = seed;
    aisr::OracleKind kind;
    std::optional<aisr::FiniteAiSemiring> base;
    if (cross_which == "d2") {
      kind = aisr::OracleKind::D2;
    } else if (cross_which == "s53") {
      kind = aisr::OracleKind::S53;
    } else if (cross_which == "s7") {
      kind = aisr::OracleKind::S7;
    } else if (cross_which.rfind("zero:", 0) == 0) {
      kind = aisr::OracleKind::AdjoinZero;
      base = load_semiring(cross_which.substr(5));
    } else {
      throw CLI::ValidationError("--which", "unknown oracle " + cross_which);
    }
    auto rep = aisr::crossvalidate(kind, spec, base ? &*base : nullptr);
    std::cout << rep.checked << " statements, " << rep.disagreements
              << " disagreements\n";
    for (const auto& w : rep.witnesses)
      std::cout << "  " << aisr::print_statement(w) << "\n";
    if (!rep.ok()) exit_code = kFail;
    emit(json_path, {{"command", "crossvalidate"},
                     {"checked", rep.checked},
                     {"disagreements", rep.disagreements}});
  });

  // free
  auto* free_cmd = app.add_subcommand("free", "freeness of a target term");
  std::string free_target, free_pattern;
  bool word_multipliers = false;
  free_cmd->add_option("--target", free_target)->required();
  free_cmd->add_option("--pattern", free_pattern)->required();
  free_cmd->add_flag("--word-multipliers", word_multipliers,
                     "word multipliers only (answers are unchanged)");
  free_cmd->callback([&] {
    aisr::FreenessOptions opts;
    opts.budget = budget;
    opts.strict_word_multiplier = word_multipliers || opts.strict_word_multiplier;
    auto r = aisr::is_free(aisr::parse_term(free_pattern),
                           aisr::parse_term(free_target), opts);
    json rep{{"command", "free"}, {"nodes", r.nodes}};
    switch (r.status) {
      case aisr::FreenessStatus::Free:
        std::cout << "free\n";
        rep["status"] = "free";
        break;
      case aisr::FreenessStatus::Embedded: {
        rep["status"] = "embedded";
        std::string mult = r.witness->multiplier
                               ? aisr::print_word(*r.witness->multiplier)
                               : "1";
        std::cout << "embedded: multiplier " << mult << ", images";
        json images = json::object();
        for (const auto& [v, t] : r.witness->images.images()) {
          std::cout << " " << v.name() << "->" << aisr::print_term(t);
          images[v.name()] = aisr::print_term(t);
        }
        std::cout << "\n";
        rep["multiplier"] = mult;
        rep["images"] = images;
        exit_code = kFail;
        break;
      }
      case aisr::FreenessStatus::Inconclusive:
        std::cout << "inconclusive (budget exhausted)\n";
        rep["status"] = "inconclusive";
        exit_code = kUsage;
        break;
    }
    emit(json_path, rep);
  });

  // verify
  auto* verify = app.add_subcommand("verify", "named verification suites");
  std::string suite_name;
  verify->add_option("--suite", suite_name)->required();
  verify->callback([&] {
    aisr::SuiteOptions opts;
    opts.seed = seed;
    opts.budget = budget;
    auto rep = aisr::run_suite(suite_name, opts);
    std::cout << rep.suite << ": " << rep.passed() << " passed, "
              << rep.failed() << " failed\n";
    for (const auto& c : rep.cases)
      if (!c.ok) std::cout << "  FAIL " << c.id << ": " << c.detail << "\n";
    if (!rep.ok()) exit_code = kFail;
    emit(json_path, suite_to_json(rep));
  });

  // derive
  auto* derive_cmd = app.add_subcommand("derive", "bounded derivation search");
  std::string derive_basis, derive_goal;
  int derive_depth = 4;
  derive_cmd->add_option("--basis", derive_basis,
                         "basis545|basis634|file of statements")
      ->required();
  derive_cmd->add_option("--goal", derive_goal)->required();
  derive_cmd->add_option("--depth", derive_depth);
  derive_cmd->callback([&] {
    auto basis = load_basis(derive_basis);
    auto goal = aisr::parse_statement(derive_goal);
    aisr::DeriveOptions opts;
    opts.max_depth = derive_depth;
    opts.budget = budget;
    auto trace = aisr::derive(basis, goal, opts);
    json rep{{"command", "derive"},
             {"found", trace.found},
             {"truncated", trace.truncated},
             {"nodes", trace.nodes}};
    if (trace.found) {
      std::string err;
      bool checked = aisr::check_trace(basis, trace, &err);
      std::cout << "derived in " << trace.steps.size() << " steps"
                << (checked ? "" : " (TRACE CHECK FAILED: " + err + ")")
                << "\n";
      json steps = json::array();
      for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& s = trace.steps[i];
        std::cout << "  " << i + 1 << ". " << aisr::print_term(s.before)
                  << "  ==[" << s.label << (s.reversed ? " reversed" : "")
                  << "]==>  " << aisr::print_term(s.after) << "\n";
        json subst = json::object();
        for (const auto& [v, t] : s.subst.images())
          subst[v.name()] = aisr::print_term(t);
        steps.push_back(
            {{"label", s.label},
             {"reversed", s.reversed},
             {"multiplier", s.multiplier ? aisr::print_word(*s.multiplier) : "1"},
             {"subst", subst},
             {"before", aisr::print_term(s.before)},
             {"after", aisr::print_term(s.after)}});
      }
      rep["steps"] = steps;
      rep["trace_checked"] = checked;
      if (!checked) exit_code = kFail;
    } else {
      std::cout << (trace.truncated ? "not found (search truncated)\n"
                                    : "not found within depth\n");
      exit_code = kFail;
    }
    emit(json_path, rep);
  });

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "census of small algebras");
  int enum_order = 3;
  std::string additive_filter, out_path;
  bool force = false;
  enumerate->add_option("--order", enum_order)->required();
  enumerate->add_option("--additive", additive_filter, "chain");
  enumerate->add_option("--out", out_path, "JSON-lines output");
  enumerate->add_flag("--force", force);
  enumerate->callback([&] {
    auto all = aisr::enumerate_ai_semirings(enum_order);
    std::vector<aisr::CensusEntry> kept;
    for (auto& e : all) {
      if (additive_filter == "chain" && !e.add_chain) continue;
      kept.push_back(std::move(e));
    }
    std::cout << kept.size() << " isomorphism classes of order " << enum_order;
    if (!additive_filter.empty()) std::cout << " (additive " << additive_filter << ")";
    std::cout << "\n";
    if (!out_path.empty()) aisr::write_census(out_path, kept, force);
    emit(json_path, {{"command", "enumerate"},
                     {"order", enum_order},
                     {"count", kept.size()}});
  });

  // catalog
  auto* cat = app.add_subcommand("catalog", "built-in algebras");
  bool cat_list = false;
  std::string cat_name;
  cat->add_flag("--list", cat_list);
  cat->add_option("--name", cat_name, "print this algebra as JSON");
  cat->callback([&] {
    if (cat_list) {
      for (const auto& n : aisr::catalog_names()) {
        auto s = aisr::catalog(n);
        std::cout << n << " (order " << s.size() << ")\n";
      }
    } else if (!cat_name.empty()) {
      std::cout << aisr::to_json(aisr::catalog(cat_name)) << "\n";
    } else {
      throw CLI::ValidationError("catalog", "pass --list or --name");
    }
  });

  // family
  auto* family = app.add_subcommand("family", "named term families");
  std::string fam_name;
  int fam_n = 1, fam_k = 0;
  family->add_option("--name", fam_name, "u|q|sigma|theta|basis545|basis634")
      ->required();
  family->add_option("--n", fam_n);
  family->add_option("--k", fam_k);
  family->callback([&] {
    if (fam_name == "u") {
      std::cout << aisr::print_term(aisr::make_u(fam_n, fam_k)) << "\n";
    } else if (fam_name == "q") {
      std::cout << aisr::print_term(aisr::make_q(fam_n)) << "\n";
    } else if (fam_name == "sigma") {
      std::cout << aisr::print_statement(aisr::make_sigma(fam_n, fam_k)) << "\n";
    } else if (fam_name == "theta") {
      for (const auto& v : aisr::enumerate_theta(fam_n))
        std::cout << aisr::print_term(v) << "\n";
    } else if (fam_name == "basis545" || fam_name == "basis634") {
      auto b = fam_name == "basis545" ? aisr::basis_545(fam_n)
                                      : aisr::basis_634(fam_n, 3);
      for (std::size_t i = 0; i < b.size(); ++i)
        std::cout << b.labels[i] << ": "
                  << aisr::print_statement(b.statements[i]) << "\n";
    } else {
      throw CLI::ValidationError("--name", "unknown family " + fam_name);
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  } catch (const aisr::ParseError& e) {
    std::cerr << "parse error at position " << e.position() << ": " << e.what()
              << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return exit_code;
}
