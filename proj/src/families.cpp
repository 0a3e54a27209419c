#include "aisr/families.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "aisr/freeness.hpp"

namespace aisr {

namespace {

Variable xvar(int i) { return Variable("x" + std::to_string(i)); }
Variable yvar(int i) { return Variable("y" + std::to_string(i)); }

Word linear_word(const std::vector<Variable>& vars) {
  std::vector<std::pair<Variable, int>> exps;
  for (const auto& v : vars) exps.emplace_back(v, 1);
  return Word(std::move(exps));
}

}  // namespace

Term make_u(int n, int k) {
  if (n < 1 || k < 0 || k > n)
    throw std::invalid_argument("make_u requires n >= 1 and 0 <= k <= n");
  std::vector<Word> words;
  std::vector<Variable> prod;
  for (int i = 1; i <= n; ++i) prod.push_back(xvar(i));
  words.push_back(linear_word(prod));
  for (int i = 1; i <= k; ++i)
    words.push_back(linear_word({xvar(i), xvar(n + 1)}));
  for (int i = k + 1; i <= n; ++i)
    words.push_back(linear_word({xvar(i), xvar(n + 1), yvar(i)}));
  return Term(std::move(words));
}

Term make_q(int n) {
  if (n < 1) throw std::invalid_argument("make_q requires n >= 1");
  std::vector<Variable> vars;
  for (int i = 1; i <= n + 1; ++i) vars.push_back(xvar(i));
  return Term::word(linear_word(vars));
}

Statement make_sigma(int n, int k) {
  return Statement::inequality(make_q(n), make_u(n, k));
}

Statement make_delta(int n, const Term& v) {
  return Statement::inequality(make_q(n), v);
}

std::vector<Term> enumerate_theta(int n, int cap) {
  if (n < 2) throw std::invalid_argument("enumerate_theta requires n >= 2");
  if (n > cap)
    throw std::invalid_argument("enumerate_theta: n exceeds the configured cap");

  // Slots: pairs (i,j), 1 <= i < j <= n+1; per slot, w_ij is either absent or
  // the linear word on a nonempty subset of the remaining variables.
  struct Slot {
    int i, j;
    std::vector<std::optional<Word>> choices;
  };
  std::vector<Slot> slots;
  for (int i = 1; i <= n + 1; ++i)
    for (int j = i + 1; j <= n + 1; ++j) {
      Slot s{i, j, {}};
      std::vector<Variable> rest;
      for (int r = 1; r <= n + 1; ++r)
        if (r != i && r != j) rest.push_back(xvar(r));
      int m = static_cast<int>(rest.size());
      s.choices.emplace_back(std::nullopt);
      for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<Variable> subset;
        for (int b = 0; b < m; ++b)
          if (mask >> b & 1) subset.push_back(rest[b]);
        s.choices.emplace_back(linear_word(subset));
      }
      slots.push_back(std::move(s));
    }

  std::set<Term> out;
  std::vector<Word> words(slots.size());
  std::function<void(std::size_t)> rec = [&](std::size_t si) {
    if (si == slots.size()) {
      out.insert(Term(words));
      return;
    }
    Word base = linear_word({xvar(slots[si].i), xvar(slots[si].j)});
    for (const auto& c : slots[si].choices) {
      words[si] = c ? base.times(*c) : base;
      rec(si + 1);
    }
  };
  rec(0);
  return {out.begin(), out.end()};
}

bool is_variable_renaming(const Term& a, const Term& b) {
  auto va = a.content(), vb = b.content();
  if (va.size() != vb.size() || a.words().size() != b.words().size())
    return false;
  std::sort(vb.begin(), vb.end());
  do {
    Substitution subst;
    for (std::size_t i = 0; i < va.size(); ++i)
      subst.set(va[i], Term::word(Word::variable(vb[i])));
    if (subst.apply(a) == b) return true;
  } while (std::next_permutation(vb.begin(), vb.end()));
  return false;
}

// ---------------------------------------------------------------------------
// Bases

BasisSpec basis_545(int n_max) {
  BasisSpec b;
  b.add(parse_statement("x^3 = x^2"), "(1) x^3 = x^2");
  b.add(parse_statement("x <= x^2"), "(2) x <= x^2");
  b.add(parse_statement("x*y <= x + y^2*z"), "(3) xy <= x + y^2 z");
  for (int n = 1; n <= n_max; ++n)
    for (int k = 0; k <= n; ++k)
      b.add(make_sigma(n, k),
            "sigma(" + std::to_string(n) + "," + std::to_string(k) + ")");
  return b;
}

namespace {

// A valid upper side must mention every variable of q_n: the content of the
// two sides must agree for the inequality to hold in the target algebra, and
// the square-only instances with all w_i empty would otherwise drop x_{n+1}.
bool covers_variables(const Term& u, int n) {
  auto c = u.content();
  for (int i = 1; i <= n + 1; ++i)
    if (!std::binary_search(c.begin(), c.end(), xvar(i))) return false;
  return true;
}

// All linear-or-absent choices over a variable pool.
std::vector<std::optional<Word>> linear_or_empty(const std::vector<Variable>& pool) {
  std::vector<std::optional<Word>> out;
  out.emplace_back(std::nullopt);
  int m = static_cast<int>(pool.size());
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<Variable> subset;
    for (int b = 0; b < m; ++b)
      if (mask >> b & 1) subset.push_back(pool[b]);
    out.emplace_back(linear_word(subset));
  }
  return out;
}

void add_schema8(BasisSpec& b, int n) {
  // q_n <= sum_i x_i^2 w_i + x_{n+1} w_{n+1}
  std::vector<std::vector<std::optional<Word>>> choices;
  std::vector<Word> heads;
  for (int i = 1; i <= n + 1; ++i) {
    std::vector<Variable> pool;
    for (int r = 1; r <= n + 1; ++r)
      if (r != i) pool.push_back(xvar(r));
    choices.push_back(linear_or_empty(pool));
    heads.push_back(i <= n ? Word({{xvar(i), 2}}) : Word::variable(xvar(n + 1)));
  }
  Term q = make_q(n);
  std::set<Term> uppers;
  std::vector<Word> words(n + 1);
  std::function<void(int)> rec = [&](int i) {
    if (i == n + 1) {
      uppers.insert(Term(words));
      return;
    }
    for (const auto& c : choices[i]) {
      words[i] = c ? heads[i].times(*c) : heads[i];
      rec(i + 1);
    }
  };
  rec(0);
  int idx = 0;
  for (const auto& u : uppers) {
    if (!covers_variables(u, n)) continue;
    b.add(Statement::inequality(q, u),
          "(8) n=" + std::to_string(n) + " #" + std::to_string(idx++));
  }
}

void add_schema9(BasisSpec& b, int n) {
  // q_n <= sum_{i<=k} x_i^2 w_i + sum_{k<i<j<=n+1} x_i x_j w_ij
  Term q = make_q(n);
  for (int k = 1; k <= n; ++k) {
    struct Slot {
      Word head;
      std::vector<std::optional<Word>> choices;
    };
    std::vector<Slot> slots;
    for (int i = 1; i <= k; ++i) {
      std::vector<Variable> pool;
      for (int r = 1; r <= n + 1; ++r)
        if (r != i) pool.push_back(xvar(r));
      slots.push_back({Word({{xvar(i), 2}}), linear_or_empty(pool)});
    }
    for (int i = k + 1; i <= n + 1; ++i)
      for (int j = i + 1; j <= n + 1; ++j) {
        std::vector<Variable> pool;
        for (int r = 1; r <= n + 1; ++r)
          if (r != i && r != j) pool.push_back(xvar(r));
        slots.push_back({linear_word({xvar(i), xvar(j)}), linear_or_empty(pool)});
      }
    std::set<Term> uppers;
    std::vector<Word> words(slots.size());
    std::function<void(std::size_t)> rec = [&](std::size_t si) {
      if (si == slots.size()) {
        uppers.insert(Term(words));
        return;
      }
      for (const auto& c : slots[si].choices) {
        words[si] = c ? slots[si].head.times(*c) : slots[si].head;
        rec(si + 1);
      }
    };
    rec(0);
    int idx = 0;
    for (const auto& u : uppers) {
      if (!covers_variables(u, n)) continue;
      b.add(Statement::inequality(q, u), "(9) n=" + std::to_string(n) +
                                             ",k=" + std::to_string(k) + " #" +
                                             std::to_string(idx++));
    }
  }
}

}  // namespace

BasisSpec basis_634(int n_max, int theta_cap) {
  BasisSpec b;
  b.add(parse_statement("x^3 = x^2"), "(1) x^3 = x^2");
  b.add(parse_statement("x <= x^2"), "(2) x <= x^2");
  b.add(parse_statement("x*y <= x^2 + y"), "(6) xy <= x^2 + y");
  for (int n = 2; n <= theta_cap; ++n) {
    auto theta = enumerate_theta(n, theta_cap);
    int idx = 0;
    for (const auto& v : theta)
      b.add(make_delta(n, v),
            "(7) delta(" + std::to_string(n) + ",#" + std::to_string(idx++) + ")");
  }
  for (int n = 2; n <= n_max; ++n) {
    add_schema8(b, n);
    add_schema9(b, n);
  }
  return b;
}

BasisSpec basis_VM(const std::set<int>& m_set, int n_max, int theta_cap) {
  BasisSpec b = basis_634(n_max, theta_cap);
  for (int m : m_set)
    b.add(make_sigma(m, 0), "sigma(" + std::to_string(m) + ",0)");
  return b;
}

// ---------------------------------------------------------------------------
// structural properties (a)-(j) of u_{n,k}

bool Lemma41Report::all_applicable_pass() const {
  for (const auto& p : properties)
    if (p.status == PropertyStatus::Fail) return false;
  return true;
}

Lemma41Report verify_lemma41(int n, int k) {
  Term u = make_u(n, k);
  const auto& ws = u.words();
  Lemma41Report rep{n, k, {}};
  auto push = [&](char id, PropertyStatus st, std::string detail = "") {
    rep.properties.push_back({id, st, std::move(detail)});
  };
  auto skip = [&](char id, const std::string& why) {
    push(id, PropertyStatus::Skipped, why);
  };

  // (a) every word linear
  {
    PropertyResult r{'a', PropertyStatus::Pass, ""};
    for (const auto& w : ws)
      if (!w.linear()) r = {'a', PropertyStatus::Fail, print_word(w)};
    rep.properties.push_back(r);
  }
  // (b) pairwise content intersections are singletons
  {
    PropertyResult r{'b', PropertyStatus::Pass, ""};
    for (std::size_t i = 0; i < ws.size(); ++i)
      for (std::size_t j = i + 1; j < ws.size(); ++j) {
        auto ci = ws[i].content(), cj = ws[j].content();
        std::vector<Variable> inter;
        std::set_intersection(ci.begin(), ci.end(), cj.begin(), cj.end(),
                              std::back_inserter(inter));
        if (inter.size() != 1)
          r = {'b', PropertyStatus::Fail,
               print_word(ws[i]) + " vs " + print_word(ws[j])};
      }
    rep.properties.push_back(r);
  }
  // (c) no two distinct words share a length-2 subword
  {
    PropertyResult r{'c', PropertyStatus::Pass, ""};
    for (std::size_t i = 0; i < ws.size(); ++i)
      for (std::size_t j = i + 1; j < ws.size(); ++j) {
        auto si = ws[i].subwords_len2(), sj = ws[j].subwords_len2();
        std::vector<Word> inter;
        std::set_intersection(si.begin(), si.end(), sj.begin(), sj.end(),
                              std::back_inserter(inter));
        if (!inter.empty())
          r = {'c', PropertyStatus::Fail,
               print_word(ws[i]) + " vs " + print_word(ws[j])};
      }
    rep.properties.push_back(r);
  }
  // (d) no subterm that is the square of a term
  {
    auto r = find_embedding(parse_term("x^2"), u);
    push('d',
         r.status == FreenessStatus::Free ? PropertyStatus::Pass
                                          : PropertyStatus::Fail);
  }
  // (e) words are pairwise incomparable under the subword order (n >= 2)
  if (n < 2) {
    skip('e', "requires n >= 2");
  } else {
    PropertyResult r{'e', PropertyStatus::Pass, ""};
    for (std::size_t i = 0; i < ws.size(); ++i)
      for (std::size_t j = 0; j < ws.size(); ++j)
        if (i != j && ws[i].divides(ws[j]))
          r = {'e', PropertyStatus::Fail,
               print_word(ws[i]) + " divides " + print_word(ws[j])};
    rep.properties.push_back(r);
  }
  // (f) x1..xn is the unique additive subterm with content in {x1..xn}
  {
    std::vector<Variable> xs;
    for (int i = 1; i <= n; ++i) xs.push_back(Variable("x" + std::to_string(i)));
    std::sort(xs.begin(), xs.end());
    std::vector<std::size_t> inside;
    for (std::size_t i = 0; i < ws.size(); ++i) {
      bool ok = true;
      for (const auto& v : ws[i].content())
        if (!std::binary_search(xs.begin(), xs.end(), v)) ok = false;
      if (ok) inside.push_back(i);
    }
    // Additive subterms with content in {x1..xn} are exactly the nonempty
    // subsets of `inside`; uniqueness means a single qualifying word.
    bool ok = inside.size() == 1 && ws[inside[0]].length() == n &&
              ws[inside[0]].linear();
    push('f', ok ? PropertyStatus::Pass : PropertyStatus::Fail);
  }
  // (g) unique word of length >= 4 (n >= 4)
  if (n < 4) {
    skip('g', "requires n >= 4");
  } else {
    auto longw = u.length_at_least(4);
    bool ok = longw.size() == 1 && longw[0].length() == n;
    push('g', ok ? PropertyStatus::Pass : PropertyStatus::Fail,
         ok ? print_word(longw[0]) : "");
  }
  // (h) exactly one word of length >= 3 (the k = n form, n >= 3)
  if (k != n || n < 3) {
    skip('h', "requires k = n and n >= 3");
  } else {
    auto longw = u.length_at_least(3);
    push('h', longw.size() == 1 ? PropertyStatus::Pass : PropertyStatus::Fail);
  }
  // (i)/(j) no subterm of the triangle form t1 t2 + t2 t3 + t3 t1
  Term triangle = parse_term("x*y + y*z + z*x");
  if (k != n || n < 3) {
    skip('i', "requires k = n and n >= 3");
  } else {
    auto r = find_embedding(triangle, u);
    push('i', r.status == FreenessStatus::Free ? PropertyStatus::Pass
                                               : PropertyStatus::Fail);
  }
  if (k != 0) {
    skip('j', "requires k = 0");
  } else {
    auto r = find_embedding(triangle, u);
    push('j', r.status == FreenessStatus::Free ? PropertyStatus::Pass
                                               : PropertyStatus::Fail);
  }
  return rep;
}

}  // namespace aisr
