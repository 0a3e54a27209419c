#include "aisr/freeness.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "aisr/families.hpp"

namespace aisr {

namespace {

struct Search {
  const std::vector<Word>& targets;  // words of u
  long long budget;
  long long nodes = 0;
  bool exhausted = false;

  std::vector<Word> twords;                       // words of t, longest first
  const std::optional<Word>* p = nullptr;         // current multiplier
  std::map<Variable, Word> images;

  bool tick() {
    if (++nodes > budget) {
      exhausted = true;
      return false;
    }
    return true;
  }

  bool match_word(std::size_t wi);

  // Exact factorization of `rem` into the unassigned variables of the word.
  bool factor(std::size_t wi, const std::vector<std::pair<Variable, int>>& vars,
              std::size_t vi, const Word& rem) {
    if (!tick()) return false;
    if (vi == vars.size()) {
      if (!rem.empty()) return false;
      return match_word(wi + 1);
    }
    const auto& [v, e] = vars[vi];
    if (vi + 1 == vars.size()) {
      // last slot must absorb the residual exactly
      auto d = rem.root(e);
      if (!d || d->empty()) return false;
      images.emplace(v, *d);
      if (factor(wi, vars, vi + 1, Word{})) return true;
      images.erase(v);
      return false;
    }
    for (const auto& d : rem.divisors()) {
      Word de = d.pow(e);
      if (!de.divides(rem)) continue;
      images.emplace(v, d);
      if (factor(wi, vars, vi + 1, rem.divide(de))) return true;
      images.erase(v);
      if (exhausted) return false;
    }
    return false;
  }
};

bool Search::match_word(std::size_t wi) {
  if (!tick()) return false;
  if (wi == twords.size()) return true;
  const Word& w = twords[wi];
  for (const Word& target : targets) {
    Word rem = target;
    if (*p) {
      if (!(*p)->divides(rem)) continue;
      rem = rem.divide(**p);
    }
    std::vector<std::pair<Variable, int>> unassigned;
    bool feasible = true;
    for (const auto& [v, e] : w.exponents()) {
      auto it = images.find(v);
      if (it == images.end()) {
        unassigned.emplace_back(v, e);
        continue;
      }
      Word de = it->second.pow(e);
      if (!de.divides(rem)) {
        feasible = false;
        break;
      }
      rem = rem.divide(de);
    }
    if (!feasible) continue;
    if (factor(wi, unassigned, 0, rem)) return true;
    if (exhausted) return false;
  }
  return false;
}

}  // namespace

FreenessResult find_embedding(const Term& t, const Term& u,
                              const FreenessOptions& opts) {
  Search search{u.words(), opts.budget};
  search.twords = t.words();
  std::sort(search.twords.begin(), search.twords.end(),
            [](const Word& a, const Word& b) {
              if (a.length() != b.length()) return a.length() > b.length();
              return a < b;
            });

  std::vector<std::optional<Word>> multipliers{std::nullopt};
  {
    std::set<Word> divisors;
    for (const auto& w : u.words())
      for (const auto& d : w.divisors()) divisors.insert(d);
    for (const auto& d : divisors) multipliers.emplace_back(d);
  }

  for (const auto& p : multipliers) {
    search.p = &p;
    search.images.clear();
    if (search.match_word(0)) {
      Substitution subst;
      for (auto& [v, w] : search.images) subst.set(v, Term::word(w));
      Term image = subst.apply(t);
      if (p) image = image.times(*p);
      std::vector<Word> remainder;
      for (const auto& w : u.words())
        if (!image.contains(w)) remainder.push_back(w);
      return {FreenessStatus::Embedded,
              EmbeddingWitness{p, std::move(subst), std::move(remainder)},
              search.nodes};
    }
    if (search.exhausted)
      return {FreenessStatus::Inconclusive, std::nullopt, search.nodes};
  }
  return {FreenessStatus::Free, std::nullopt, search.nodes};
}

FreenessResult is_free(const Term& t, const Term& u,
                       const FreenessOptions& opts) {
  return find_embedding(t, u, opts);
}

// ---------------------------------------------------------------------------
// Suites

bool FreenessSuiteReport::all_pass() const {
  for (const auto& c : cases)
    if (!c.ok()) return false;
  return complete;
}

namespace {

Term random_term(std::mt19937_64& rng) {
  std::vector<Variable> vars = {Variable("x1"), Variable("x2"), Variable("x3"),
                                Variable("y1")};
  std::uniform_int_distribution<int> nwords(1, 3), wlen(1, 3),
      vpick(0, static_cast<int>(vars.size()) - 1);
  std::vector<Word> ws;
  int count = nwords(rng);
  for (int i = 0; i < count; ++i) {
    std::vector<std::pair<Variable, int>> exps;
    int len = wlen(rng);
    for (int j = 0; j < len; ++j) exps.emplace_back(vars[vpick(rng)], 1);
    ws.push_back(Word(std::move(exps)));
  }
  return Term(std::move(ws));
}

}  // namespace

FreenessSuiteReport verify_freeness_suite(const std::string& which,
                                          const FreenessSuiteBounds& bounds) {
  FreenessSuiteReport rep;
  rep.suite = which;
  FreenessOptions opts;
  opts.budget = bounds.budget;

  auto add_case = [&](std::string id, const Term& pattern, const Term& target) {
    FreenessResult r = is_free(pattern, target, opts);
    if (r.status == FreenessStatus::Inconclusive) rep.complete = false;
    rep.cases.push_back({std::move(id), r.status, true});
  };

  if (which == "prop32") {
    for (int m : bounds.prop32_m)
      for (int n = 1; n <= bounds.prop32_n_max; ++n)
        for (int k = 0; k <= n; ++k) {
          if (n == m && k == 0) continue;
          add_case("m=" + std::to_string(m) + ",n=" + std::to_string(n) +
                       ",k=" + std::to_string(k),
                   make_u(n, k), make_u(m, 0));
        }
  } else if (which == "prop41") {
    // Degenerate members of Theta_n are excluded: the total collapse (a
    // single word, namely q_n) embeds wherever a long word factors, and any
    // variable renaming of the target embeds via the renaming itself.
    for (int m : bounds.prop41_m) {
      Term target = make_u(m, m);
      for (int n : bounds.prop41_n) {
        auto theta = enumerate_theta(n);
        for (std::size_t i = 0; i < theta.size(); ++i) {
          if (theta[i].words().size() == 1) continue;
          if (is_variable_renaming(theta[i], target)) continue;
          add_case("m=" + std::to_string(m) + ",n=" + std::to_string(n) +
                       ",v#" + std::to_string(i),
                   theta[i], target);
        }
      }
    }
  } else if (which == "prop52") {
    for (int m : bounds.prop52_m) {
      Term target = make_u(m, 0);
      for (int n : bounds.prop52_n) {
        auto theta = enumerate_theta(n);
        for (std::size_t i = 0; i < theta.size(); ++i) {
          if (theta[i].words().size() == 1) continue;  // total collapse q_n
          add_case("m=" + std::to_string(m) + ",n=" + std::to_string(n) +
                       ",v#" + std::to_string(i),
                   theta[i], target);
        }
      }
    }
  } else if (which == "lemma21_chain") {
    // Antitone property: pattern-free targets stay free for larger patterns.
    std::mt19937_64 rng(bounds.seed);
    int found = 0, attempts = 0;
    while (found < bounds.lemma21_samples && attempts < bounds.lemma21_samples * 40) {
      ++attempts;
      Term pattern = random_term(rng);
      Term target = random_term(rng);
      Term bigger = random_term(rng).plus(pattern);  // pattern <= bigger
      if (is_free(pattern, target, opts).status != FreenessStatus::Free)
        continue;
      ++found;
      FreenessResult r = is_free(bigger, target, opts);
      if (r.status == FreenessStatus::Inconclusive) rep.complete = false;
      rep.cases.push_back(
          {"sample#" + std::to_string(found), r.status, true});
    }
  } else {
    throw std::invalid_argument("unknown freeness suite: " + which);
  }
  return rep;
}

}  // namespace aisr
