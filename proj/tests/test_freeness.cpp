#include <doctest.h>

#include <algorithm>
#include <set>

#include "aisr/families.hpp"
#include "aisr/freeness.hpp"

using namespace aisr;

namespace {
Term T(const std::string& s) { return parse_term(s); }

// Independent brute force: multipliers and images enumerated directly from
// the divisor pool of u, images of up to two words, checked by expanding
// p*phi(t) and testing word-set inclusion.  (One word per image already
// decides existence; pairs are included to exercise that reduction.)
bool naive_embeds(const Term& t, const Term& u) {
  std::set<Word> pool_set;
  for (const auto& w : u.words())
    for (const auto& d : w.divisors()) pool_set.insert(d);
  std::vector<Word> pool(pool_set.begin(), pool_set.end());
  std::vector<Term> images;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    images.push_back(Term::word(pool[i]));
    for (std::size_t j = i + 1; j < pool.size(); ++j)
      images.push_back(Term({pool[i], pool[j]}));
  }
  auto vars = t.content();
  std::vector<std::size_t> idx(vars.size(), 0);
  auto contained = [&](const Term& a) {
    return std::includes(u.words().begin(), u.words().end(), a.words().begin(),
                         a.words().end());
  };
  while (true) {
    Substitution phi;
    for (std::size_t i = 0; i < vars.size(); ++i) phi.set(vars[i], images[idx[i]]);
    Term img = phi.apply(t);
    if (contained(img)) return true;
    for (const auto& p : pool)
      if (contained(img.times(p))) return true;
    std::size_t i = vars.size();
    while (i > 0) {
      --i;
      if (++idx[i] < images.size()) break;
      idx[i] = 0;
      if (i == 0) return false;
    }
    if (vars.empty()) return false;
  }
}
}  // namespace

TEST_CASE("embedding basics") {
  auto r = find_embedding(T("x"), T("y + z"));
  CHECK(r.status == FreenessStatus::Embedded);  // x -> y, remainder z

  CHECK(find_embedding(T("x^2"), T("x*y + y*z")).status ==
        FreenessStatus::Free);
  CHECK(find_embedding(T("x^2"), T("x^2*y + z")).status ==
        FreenessStatus::Embedded);

  // identity embedding: nothing is free relative to itself
  for (const auto& u : {T("x"), make_u(2, 1), make_q(3)})
    CHECK(find_embedding(u, u).status == FreenessStatus::Embedded);
}

TEST_CASE("embedding witnesses reconstruct a subterm") {
  auto r = find_embedding(T("x*y + y*z"), T("a^2*b + a*b*c + d"));
  REQUIRE(r.status == FreenessStatus::Embedded);
  const auto& w = *r.witness;
  Term img = w.images.apply(T("x*y + y*z"));
  if (w.multiplier) img = img.times(*w.multiplier);
  std::vector<Word> all = img.words();
  for (const auto& rw : w.remainder) all.push_back(rw);
  CHECK(Term(all) == T("a^2*b + a*b*c + d"));
}

TEST_CASE("budget exhaustion is reported, never silent") {
  FreenessOptions opts;
  opts.budget = 3;
  auto r = find_embedding(make_u(4, 0), make_u(5, 0), opts);
  CHECK(r.status == FreenessStatus::Inconclusive);
  CHECK(r.nodes > 0);
}

TEST_CASE("search agrees with the naive oracle on small pairs") {
  std::vector<Term> terms;
  for (const char* s :
       {"x", "x^2", "x*y", "x + y", "x^2 + y", "x*y + y*z", "x*y + y*z + z*x",
        "x^2*y", "x + y + z", "x^2 + x*y", "x^3", "x*y*z"})
    terms.push_back(T(s));
  for (const auto& t : terms)
    for (const auto& u : terms) {
      bool fast = find_embedding(t, u).status == FreenessStatus::Embedded;
      CHECK(fast == naive_embeds(t, u));
    }
}

TEST_CASE("family freeness spot checks") {
  // the propositions' smallest instances
  CHECK(is_free(make_u(2, 1), make_u(4, 0)).status == FreenessStatus::Free);
  CHECK(is_free(make_u(4, 0), make_u(4, 4)).status == FreenessStatus::Free);
  // q_2 embeds wherever a word factors into three nonempty parts
  CHECK(is_free(make_q(2), make_u(1, 0)).status == FreenessStatus::Embedded);
  // a renaming of u_{3,3} embeds into u_{3,3}
  Term renamed = parse_term("x1*x2 + x2*x3 + x2*x4 + x1*x3*x4");
  CHECK(is_free(renamed, make_u(3, 3)).status == FreenessStatus::Embedded);
}

TEST_CASE("suite reports") {
  FreenessSuiteBounds bounds;
  bounds.prop32_m = {2};
  bounds.prop32_n_max = 2;
  auto rep = verify_freeness_suite("prop32", bounds);
  CHECK(rep.complete);
  CHECK(rep.all_pass());
  // grid: n in {1,2}, k <= n, minus the excluded (n,k) = (2,0)
  CHECK(rep.cases.size() == 4);

  bounds.lemma21_samples = 10;
  auto chain = verify_freeness_suite("lemma21_chain", bounds);
  CHECK(chain.all_pass());
  CHECK(chain.cases.size() == 10);

  CHECK_THROWS_AS(verify_freeness_suite("nope", bounds), std::invalid_argument);
}
