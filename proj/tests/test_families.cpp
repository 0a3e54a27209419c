#include <doctest.h>

#include <algorithm>
#include <set>

#include "aisr/checker.hpp"
#include "aisr/families.hpp"

using namespace aisr;

TEST_CASE("u_{n,k} matches its defining display") {
  CHECK(print_term(make_u(2, 0)) == "x1*x2 + x1*x3*y1 + x2*x3*y2");
  CHECK(print_term(make_u(2, 1)) == "x1*x2 + x1*x3 + x2*x3*y2");
  CHECK(print_term(make_u(2, 2)) == "x1*x2 + x1*x3 + x2*x3");
  CHECK(print_term(make_u(1, 0)) == "x1 + x1*x2*y1");
  CHECK(make_u(3, 3) ==
        parse_term("x1*x2*x3 + x1*x4 + x2*x4 + x3*x4"));
  CHECK_THROWS_AS(make_u(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_u(2, 3), std::invalid_argument);
}

TEST_CASE("q_n and sigma_{n,k}") {
  CHECK(print_term(make_q(2)) == "x1*x2*x3");
  CHECK(print_statement(make_sigma(2, 2)) ==
        "x1*x2*x3 <= x1*x2 + x1*x3 + x2*x3");
  CHECK(make_sigma(1, 0).kind == StatementKind::Inequality);
}

TEST_CASE("theta enumeration") {
  auto t2 = enumerate_theta(2);
  // raw tuples 2^3 per... each of the 3 pairs has 2 choices (absent or the
  // one remaining variable): 8 tuples, all distinct as terms except the
  // full collapse is reached only once
  CHECK(t2.size() == 8);
  CHECK(std::find(t2.begin(), t2.end(), make_u(2, 2)) != t2.end());
  CHECK(std::find(t2.begin(), t2.end(), make_q(2)) != t2.end());
  for (const auto& v : t2) {
    for (const auto& w : v.words()) {
      CHECK(w.linear());
      CHECK(w.length() >= 2);
    }
    // every pair x_i x_j is a subterm
    for (int i = 1; i <= 3; ++i)
      for (int j = i + 1; j <= 3; ++j)
        CHECK(is_subterm(Term::word(Word({{Variable("x" + std::to_string(i)), 1},
                                          {Variable("x" + std::to_string(j)), 1}})),
                         v)
                  .has_value());
  }

  auto t3 = enumerate_theta(3);
  CHECK(std::find(t3.begin(), t3.end(), make_u(3, 3)) != t3.end());
  CHECK(std::find(t3.begin(), t3.end(), make_q(3)) != t3.end());
  // set semantics: strictly fewer terms than raw choice tuples (4^6)
  CHECK(t3.size() < 4096);
  CHECK(std::set<Term>(t3.begin(), t3.end()).size() == t3.size());

  CHECK_THROWS_AS(enumerate_theta(1), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_theta(4), std::invalid_argument);  // above cap
}

TEST_CASE("variable renaming detection") {
  CHECK(is_variable_renaming(parse_term("x*y + y*z"), parse_term("a*b + b*c")));
  CHECK(!is_variable_renaming(parse_term("x*y + y*z"), parse_term("a*b + c*d")));
  CHECK(is_variable_renaming(make_u(3, 3),
                             parse_term("x1*x2 + x2*x3 + x2*x4 + x1*x3*x4")));
  CHECK(!is_variable_renaming(parse_term("x"), parse_term("x*y")));
}

TEST_CASE("basis 545 contents") {
  auto b = basis_545(4);
  auto has = [&](const std::string& st) {
    return std::find(b.statements.begin(), b.statements.end(),
                     parse_statement(st)) != b.statements.end();
  };
  CHECK(has("x^3 = x^2"));
  CHECK(has("x <= x^2"));
  CHECK(has("x*y <= x + y^2*z"));
  // sigma_{n,k} for n <= 4: 2+3+4+5 of them
  CHECK(b.size() == 3 + 14);
  CHECK(b.statements.size() == b.labels.size());
}

TEST_CASE("basis 634 contents") {
  auto b = basis_634(3, 3);
  auto has = [&](const std::string& st) {
    return std::find(b.statements.begin(), b.statements.end(),
                     parse_statement(st)) != b.statements.end();
  };
  CHECK(has("x^3 = x^2"));
  CHECK(has("x <= x^2"));
  CHECK(has("x*y <= x^2 + y"));
  // delta_{n,v} present for v in Theta_2
  bool found_delta = false;
  for (const auto& v : enumerate_theta(2))
    if (std::find(b.statements.begin(), b.statements.end(),
                  make_delta(2, v)) != b.statements.end())
      found_delta = true;
  CHECK(found_delta);
  // every upper side mentions every variable of its lower side
  for (const auto& st : b.statements) {
    if (st.kind != StatementKind::Inequality) continue;
    auto cl = st.lhs.content();
    auto cr = st.rhs.content();
    for (const auto& v : cl)
      CHECK(std::binary_search(cr.begin(), cr.end(), v));
  }
}

TEST_CASE("basis VM adds the requested sigma instances") {
  auto base = basis_634(2, 2);
  auto b = basis_VM({2}, 2, 2);
  CHECK(b.size() == base.size() + 1);
  CHECK(std::find(b.statements.begin(), b.statements.end(), make_sigma(2, 0)) !=
        b.statements.end());
  CHECK(std::find(b.statements.begin(), b.statements.end(), make_sigma(3, 0)) ==
        b.statements.end());
}

TEST_CASE("structural property report for u_{n,k}") {
  auto r = verify_lemma41(1, 0);
  CHECK(r.all_applicable_pass());
  std::set<char> skipped;
  for (const auto& p : r.properties)
    if (p.status == PropertyStatus::Skipped) skipped.insert(p.id);
  CHECK(skipped == std::set<char>{'e', 'g', 'h', 'i'});

  auto r44 = verify_lemma41(4, 4);
  CHECK(r44.all_applicable_pass());
  for (const auto& p : r44.properties)
    if (p.id == 'j')
      CHECK(p.status == PropertyStatus::Skipped);
    else
      CHECK(p.status == PropertyStatus::Pass);
}

TEST_CASE("sigma statements hold in the catalog algebras they should") {
  auto s545 = catalog("S4_545");
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= n; ++k) CHECK(holds(s545, make_sigma(n, k)).holds);
}
