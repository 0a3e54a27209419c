#include <doctest.h>

#include "aisr/checker.hpp"
#include "aisr/derivation.hpp"

using namespace aisr;

namespace {
BasisSpec make_basis(std::vector<std::string> texts) {
  BasisSpec b;
  int i = 0;
  for (auto& t : texts) b.add(parse_statement(t), "ax" + std::to_string(++i));
  return b;
}
}  // namespace

TEST_CASE("rewrite matches find axiom instances inside a term") {
  DeriveOptions opts;
  long long nodes = 0;
  bool truncated = false;
  auto [l, r] = parse_statement("x^3 = x^2").as_identity();
  auto ms = rewrite_matches(parse_term("y^3 + z"), l, r, opts, nodes, truncated);
  REQUIRE(!ms.empty());
  bool found = false;
  for (const auto& m : ms)
    if (m.image_lhs == parse_term("y^3") && m.image_rhs == parse_term("y^2"))
      found = true;
  CHECK(found);
}

TEST_CASE("goal reached in zero steps when the sides already agree") {
  auto b = make_basis({"x^3 = x^2"});
  auto trace = derive(b, parse_statement("x <= x + y"));
  CHECK(trace.found);
  CHECK(trace.steps.empty());
  CHECK(check_trace(b, trace));
}

TEST_CASE("single-step derivation from a matching axiom") {
  auto b = make_basis({"x1*x2*x3 <= x1*x2 + x1*x3 + x2*x3"});
  auto trace =
      derive(b, parse_statement("x1*x2*x3 <= x1*x2 + x1*x3 + x2*x3"),
             DeriveOptions{.max_depth = 1});
  REQUIRE(trace.found);
  CHECK(trace.steps.size() == 1);
  CHECK(check_trace(b, trace));
}

TEST_CASE("multi-step derivations") {
  auto b1 = make_basis({"x^3 = x^2", "x <= x^2"});
  auto t1 = derive(b1, parse_statement("x <= x^3"));
  REQUIRE(t1.found);
  CHECK(t1.steps.size() <= 4);
  CHECK(check_trace(b1, t1));

  auto b2 = make_basis({"x*y <= x^2 + y", "x <= x^2"});
  auto t2 = derive(b2, parse_statement("x*y <= x^2 + y^2"));
  REQUIRE(t2.found);
  CHECK(t2.steps.size() <= 4);
  CHECK(check_trace(b2, t2));
}

TEST_CASE("derived goals hold in every model of the axioms") {
  // soundness spot check on a catalog algebra satisfying the axioms
  auto alg = catalog("S4_634");
  for (const char* ax : {"x^3 = x^2", "x <= x^2", "x*y <= x^2 + y"})
    REQUIRE(holds(alg, parse_statement(ax)).holds);
  CHECK(holds(alg, parse_statement("x <= x^3")).holds);
  CHECK(holds(alg, parse_statement("x*y <= x^2 + y^2")).holds);
}

TEST_CASE("underivable goals are reported not found") {
  auto b = make_basis({"x^3 = x^2"});
  auto trace = derive(b, parse_statement("x <= x^2"),
                      DeriveOptions{.max_depth = 3, .budget = 100000});
  CHECK(!trace.found);
}

TEST_CASE("check_trace rejects tampered traces") {
  auto b = make_basis({"x^3 = x^2", "x <= x^2"});
  auto trace = derive(b, parse_statement("x <= x^3"));
  REQUIRE(trace.found);
  REQUIRE(!trace.steps.empty());

  auto broken = trace;
  broken.steps.back().after = parse_term("y");
  std::string err;
  CHECK(!check_trace(b, broken, &err));
  CHECK(!err.empty());

  auto relabeled = trace;
  relabeled.steps.front().label = "no-such-axiom";
  CHECK(!check_trace(b, relabeled));

  auto wrong_subst = trace;
  wrong_subst.steps.front().subst = Substitution{};
  CHECK(!check_trace(b, wrong_subst));
}

TEST_CASE("budget exhaustion flags truncation") {
  auto b = make_basis({"x*y <= x^2 + y", "x <= x^2", "x^3 = x^2"});
  auto trace = derive(b, parse_statement("x*y*z <= x^2 + y^2 + z^2"),
                      DeriveOptions{.max_depth = 2, .budget = 50});
  CHECK(!trace.found);
  CHECK(trace.truncated);
}
