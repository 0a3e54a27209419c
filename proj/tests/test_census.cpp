#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <set>

#include "aisr/census.hpp"

using namespace aisr;

TEST_CASE("canonical pair is permutation invariant") {
  Table add{{0, 1}, {1, 1}};
  Table mul{{0, 0}, {0, 1}};
  // swap the two elements by hand
  Table add2{{0, 0}, {0, 1}};
  Table mul2{{0, 1}, {1, 1}};
  CHECK(canonical_pair(add, mul) == canonical_pair(add2, mul2));
}

TEST_CASE("semilattice counts for small orders") {
  CHECK(enumerate_semilattices(1).size() == 1);
  CHECK(enumerate_semilattices(2).size() == 1);
  CHECK(enumerate_semilattices(3).size() == 2);
  CHECK(enumerate_semilattices(4).size() == 5);
  CHECK_THROWS_AS(enumerate_semilattices(6), std::invalid_argument);

  // order-3 count against an independent 3^9 full-table scan
  std::set<Table> classes;
  Table t(3, std::vector<int>(3));
  for (int c = 0; c < 19683; ++c) {
    int x = c;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        t[i][j] = x % 3;
        x /= 3;
      }
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i) ok = t[i][i] == i;
    for (int i = 0; i < 3 && ok; ++i)
      for (int j = 0; j < 3 && ok; ++j) {
        if (t[i][j] != t[j][i]) ok = false;
        for (int k = 0; k < 3 && ok; ++k)
          if (t[t[i][j]][k] != t[i][t[j][k]]) ok = false;
      }
    if (ok) {
      Table zero(3, std::vector<int>(3, 0));
      classes.insert(canonical_pair(t, zero).first);
    }
  }
  CHECK(classes.size() == enumerate_semilattices(3).size());
}

TEST_CASE("order-2 census against the exhaustive 16-table oracle") {
  std::set<std::pair<Table, Table>> classes;
  for (int addv : {0, 1}) {
    Table add{{0, addv}, {addv, 1}};
    for (int m = 0; m < 16; ++m) {
      Table mul{{m & 1, (m >> 1) & 1}, {(m >> 2) & 1, (m >> 3) & 1}};
      if (validate_tables(add, mul).ok()) classes.insert(canonical_pair(add, mul));
    }
  }
  CHECK(classes.size() == 6);
  CHECK(enumerate_ai_semirings(2).size() == 6);
}

TEST_CASE("census counts match the published tallies") {
  CHECK(enumerate_ai_semirings(3).size() == 61);
  auto c4 = enumerate_ai_semirings(4);
  CHECK(c4.size() == 866);
  long long chains = 0;
  for (const auto& e : c4) chains += e.add_chain;
  CHECK(chains == 386);
}

TEST_CASE("every census entry validates and is in canonical form") {
  for (const auto& e : enumerate_ai_semirings(3)) {
    CHECK(validate_tables(e.add, e.mul).ok());
    auto c = canonical_pair(e.add, e.mul);
    CHECK(c.first == e.add);
    CHECK(c.second == e.mul);
    CHECK(!e.additive_class.empty());
  }
}

TEST_CASE("locate finds catalog algebras in the census") {
  auto c3 = enumerate_ai_semirings(3);
  std::set<std::size_t> found;
  for (const char* n : {"S7", "S53", "S43"}) {
    auto idx = locate(catalog(n), c3);
    REQUIRE(idx.has_value());
    found.insert(*idx);
  }
  CHECK(found.size() == 3);  // pairwise nonisomorphic

  auto c4 = enumerate_ai_semirings(4);
  CHECK(locate(catalog("S4_545"), c4).has_value());
  CHECK(locate(catalog("S4_634"), c4).has_value());
  CHECK(!locate(catalog("S7"), c4).has_value());
}

TEST_CASE("json lines round trip and overwrite protection") {
  auto entries = enumerate_ai_semirings(2);
  auto path = std::filesystem::temp_directory_path() / "census_test.jsonl";
  std::filesystem::remove(path);
  write_census(path.string(), entries);
  CHECK_THROWS_AS(write_census(path.string(), entries), std::runtime_error);
  write_census(path.string(), entries, /*force=*/true);

  auto back = read_census(path.string());
  REQUIRE(back.size() == entries.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].add == entries[i].add);
    CHECK(back[i].mul == entries[i].mul);
    CHECK(back[i].additive_class == entries[i].additive_class);
    CHECK(back[i].add_chain == entries[i].add_chain);
    CHECK(back[i].mul_commutative == entries[i].mul_commutative);
  }
  std::filesystem::remove(path);
}
