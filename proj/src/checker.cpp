#include "aisr/checker.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace aisr {

int evaluate(const FiniteAiSemiring& s, const Term& u, const Assignment& a) {
  int acc = -1;
  for (const auto& w : u.words()) {
    int prod = -1;
    for (const auto& [v, e] : w.exponents()) {
      auto it = a.find(v);
      if (it == a.end()) throw std::out_of_range("unassigned variable " + v.name());
      for (int i = 0; i < e; ++i)
        prod = (prod < 0) ? it->second : s.mul(prod, it->second);
    }
    acc = (acc < 0) ? prod : s.add(acc, prod);
  }
  return acc;
}

namespace {

// Precompiled form: words as (variable slot, exponent) lists over the
// statement's sorted variable list.
struct CompiledTerm {
  std::vector<std::vector<std::pair<int, int>>> words;

  CompiledTerm(const Term& t, const std::vector<Variable>& vars) {
    for (const auto& w : t.words()) {
      std::vector<std::pair<int, int>> cw;
      for (const auto& [v, e] : w.exponents()) {
        auto it = std::lower_bound(vars.begin(), vars.end(), v);
        cw.emplace_back(static_cast<int>(it - vars.begin()), e);
      }
      words.push_back(std::move(cw));
    }
  }

  int eval(const FiniteAiSemiring& s, const std::vector<int>& a) const {
    int acc = -1;
    for (const auto& w : words) {
      int prod = -1;
      for (const auto& [slot, e] : w) {
        for (int i = 0; i < e; ++i)
          prod = (prod < 0) ? a[slot] : s.mul(prod, a[slot]);
      }
      acc = (acc < 0) ? prod : s.add(acc, prod);
    }
    return acc;
  }
};

}  // namespace

HoldsResult holds(const FiniteAiSemiring& s, const Statement& st,
                  int max_vars) {
  auto [l, r] = st.as_identity();
  std::vector<Variable> vars;
  {
    std::set<Variable> vs;
    for (const auto& v : l.content()) vs.insert(v);
    for (const auto& v : r.content()) vs.insert(v);
    vars.assign(vs.begin(), vs.end());
  }
  if (static_cast<int>(vars.size()) > max_vars)
    throw VariableCapExceeded(vars.size());

  CompiledTerm cl(l, vars), cr(r, vars);
  int n = s.size();
  std::vector<int> a(vars.size(), 0);
  while (true) {
    if (cl.eval(s, a) != cr.eval(s, a)) {
      Assignment cm;
      for (std::size_t i = 0; i < vars.size(); ++i) cm[vars[i]] = a[i];
      return {false, std::move(cm)};
    }
    // row-major odometer over the canonically sorted variable list
    std::size_t i = a.size();
    while (i > 0) {
      --i;
      if (++a[i] < n) break;
      a[i] = 0;
      if (i == 0) return {true, std::nullopt};
    }
    if (a.empty()) return {true, std::nullopt};
  }
}

WordInequality word_inequality(const Statement& st) {
  if (st.kind != StatementKind::Inequality)
    throw std::invalid_argument("oracle requires an inequality");
  if (st.lhs.words().size() != 1)
    throw std::invalid_argument("oracle requires a single-word lower side");
  return {st.lhs.words()[0], st.rhs};
}

bool oracle_d2(const Statement& st) {
  WordInequality wi = word_inequality(st);
  if (wi.trivial()) return true;
  return !wi.u.content_within(wi.q).empty();
}

bool oracle_s53(const Statement& st) {
  WordInequality wi = word_inequality(st);
  if (wi.trivial()) return true;
  if (wi.u.length_at_least(2).empty()) return false;
  auto cu = wi.u.content();
  for (const auto& v : wi.q.content())
    if (!std::binary_search(cu.begin(), cu.end(), v)) return false;
  auto s2u = wi.u.s2();
  for (const auto& w : wi.q.subwords_len2()) {
    auto cw = w.content();
    bool found = false;
    for (const auto& w2 : s2u) {
      bool inside = true;
      for (const auto& v : w2.content())
        if (std::find(cw.begin(), cw.end(), v) == cw.end()) {
          inside = false;
          break;
        }
      if (inside) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool oracle_s7(const Statement& st) {
  WordInequality wi = word_inequality(st);
  if (wi.trivial()) return true;
  auto cu = wi.u.content();
  for (const auto& v : wi.q.content())
    if (!std::binary_search(cu.begin(), cu.end(), v)) return false;
  auto du = wi.u.delta_sets();
  auto duq = wi.u.plus(Term::word(wi.q)).delta_sets();
  for (const auto& z : du)
    if (!std::binary_search(duq.begin(), duq.end(), z)) return false;
  return true;
}

bool oracle_adjoin_zero(const FiniteAiSemiring& s, const Statement& st) {
  WordInequality wi = word_inequality(st);
  if (wi.trivial()) return true;
  auto dq = wi.u.content_within(wi.q);
  if (dq.empty()) return false;
  Statement reduced =
      Statement::inequality(Term::word(wi.q), Term(std::move(dq)));
  return holds(s, reduced).holds;
}

// ---------------------------------------------------------------------------
// Statement sampling

std::vector<Word> enumerate_words(int max_vars, int max_len) {
  std::vector<Variable> vars;
  for (int i = 1; i <= max_vars; ++i)
    vars.push_back(Variable("x" + std::to_string(i)));
  std::vector<Word> out;
  // multisets of size 1..max_len over vars, via nondecreasing index tuples
  std::vector<int> pick;
  auto emit = [&] {
    std::vector<std::pair<Variable, int>> exps;
    for (int idx : pick) {
      if (!exps.empty() && exps.back().first == vars[idx])
        exps.back().second++;
      else
        exps.emplace_back(vars[idx], 1);
    }
    out.push_back(Word(std::move(exps)));
  };
  std::function<void(int)> rec = [&](int lo) {
    if (!pick.empty()) emit();
    if (static_cast<int>(pick.size()) == max_len) return;
    for (int i = lo; i < max_vars; ++i) {
      pick.push_back(i);
      rec(i);
      pick.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Statement> enumerate_statements(const SampleSpec& spec) {
  auto words = enumerate_words(spec.max_vars, spec.max_len);
  int nw = static_cast<int>(words.size());
  std::vector<Statement> out;
  // upper sides: nonempty subsets of size <= max_words, lexicographic
  std::vector<int> pick;
  std::function<void(int)> rec = [&](int lo) {
    if (!pick.empty()) {
      std::vector<Word> ws;
      for (int i : pick) ws.push_back(words[i]);
      Term u(std::move(ws));
      for (const auto& q : words)
        out.push_back(Statement::inequality(Term::word(q), u));
    }
    if (static_cast<int>(pick.size()) == spec.max_words) return;
    for (int i = lo; i < nw; ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<Statement> random_statements(const SampleSpec& spec) {
  auto words = enumerate_words(spec.max_vars, spec.max_len);
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<std::size_t> wdist(0, words.size() - 1);
  std::uniform_int_distribution<int> cdist(1, spec.max_words);
  std::vector<Statement> out;
  out.reserve(spec.random_samples);
  for (long long i = 0; i < spec.random_samples; ++i) {
    std::vector<Word> ws;
    int count = cdist(rng);
    for (int j = 0; j < count; ++j) ws.push_back(words[wdist(rng)]);
    Term u(std::move(ws));
    out.push_back(Statement::inequality(Term::word(words[wdist(rng)]), u));
  }
  return out;
}

CrossvalidateReport crossvalidate(OracleKind which, const SampleSpec& spec,
                                  const FiniteAiSemiring* base) {
  FiniteAiSemiring target = [&] {
    switch (which) {
      case OracleKind::D2:
        return catalog("D2");
      case OracleKind::S53:
        return catalog("S53");
      case OracleKind::S7:
        return catalog("S7");
      case OracleKind::AdjoinZero:
        if (!base)
          throw std::invalid_argument("zero-adjunction oracle needs a base algebra");
        return adjoin_zero(*base);
    }
    throw std::logic_error("unreachable");
  }();

  auto oracle = [&](const Statement& st) {
    switch (which) {
      case OracleKind::D2:
        return oracle_d2(st);
      case OracleKind::S53:
        return oracle_s53(st);
      case OracleKind::S7:
        return oracle_s7(st);
      case OracleKind::AdjoinZero:
        return oracle_adjoin_zero(*base, st);
    }
    throw std::logic_error("unreachable");
  };

  CrossvalidateReport rep;
  auto run = [&](const std::vector<Statement>& sts) {
    for (const auto& st : sts) {
      bool a = oracle(st);
      bool b = holds(target, st).holds;
      ++rep.checked;
      if (a != b) {
        ++rep.disagreements;
        if (rep.witnesses.size() < 10) rep.witnesses.push_back(st);
      }
    }
  };
  run(enumerate_statements(spec));
  if (spec.random_samples > 0) run(random_statements(spec));
  return rep;
}

}  // namespace aisr
