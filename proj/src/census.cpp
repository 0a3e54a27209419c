#include "aisr/census.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace aisr {

namespace {

Table relabel(const Table& t, const std::vector<int>& p) {
  int n = static_cast<int>(t.size());
  Table out(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[p[i]][p[j]] = p[t[i][j]];
  return out;
}

bool is_chain_table(const Table& add) {
  int n = static_cast<int>(add.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (add[i][j] != i && add[i][j] != j) return false;
  return true;
}

bool is_commutative(const Table& t) {
  int n = static_cast<int>(t.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (t[i][j] != t[j][i]) return false;
  return true;
}

}  // namespace

std::pair<Table, Table> canonical_pair(const Table& add, const Table& mul) {
  int n = static_cast<int>(add.size());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::optional<std::pair<Table, Table>> best;
  do {
    std::pair<Table, Table> cand{relabel(add, p), relabel(mul, p)};
    if (!best || cand < *best) best = std::move(cand);
  } while (std::next_permutation(p.begin(), p.end()));
  return *best;
}

std::vector<Table> enumerate_semilattices(int order) {
  if (order < 1 || order > 5)
    throw std::invalid_argument("semilattice enumeration supports order 1..5");
  int n = order;
  std::vector<std::pair<int, int>> cells;  // strict upper triangle
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) cells.emplace_back(i, j);

  Table add(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) add[i][i] = i;

  std::set<Table> canon;
  std::vector<int> choice(cells.size(), 0);
  auto associative = [&] {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (add[add[a][b]][c] != add[a][add[b][c]]) return false;
    return true;
  };
  std::size_t ci = 0;
  while (true) {
    if (ci == cells.size()) {
      if (associative()) {
        // canonicalize the bare addition table
        Table zero(n, std::vector<int>(n, 0));
        canon.insert(canonical_pair(add, zero).first);
      }
      // odometer
      while (ci > 0) {
        --ci;
        if (++choice[ci] < n) break;
        choice[ci] = 0;
        if (ci == 0) return {canon.begin(), canon.end()};
      }
      if (cells.empty()) return {canon.begin(), canon.end()};
    }
    auto [i, j] = cells[ci];
    add[i][j] = add[j][i] = choice[ci];
    ++ci;
  }
}

namespace {

struct MulSearch {
  int n;
  const Table& add;
  Table mul;
  std::set<std::pair<Table, Table>>& found;

  MulSearch(int n, const Table& add, std::set<std::pair<Table, Table>>& found)
      : n(n), add(add), mul(n, std::vector<int>(n, -1)), found(found) {}

  // Checks every law instance whose cells are all determined.
  bool consistent() const {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int ab = mul[a][b];
        if (ab < 0) continue;
        for (int c = 0; c < n; ++c) {
          int bc = mul[b][c];
          if (bc >= 0 && mul[ab][c] >= 0 && mul[a][bc] >= 0 &&
              mul[ab][c] != mul[a][bc])
            return false;
          // a(b+c) = ab + ac, with ab already determined
          int ac = mul[a][c];
          if (ac >= 0 && mul[a][add[b][c]] >= 0 &&
              mul[a][add[b][c]] != add[ab][ac])
            return false;
          // (b+c)a = ba + ca
          int ba = mul[b][a], ca = mul[c][a];
          if (ba >= 0 && ca >= 0 && mul[add[b][c]][a] >= 0 &&
              mul[add[b][c]][a] != add[ba][ca])
            return false;
        }
      }
    return true;
  }

  void run(int cell) {
    if (cell == n * n) {
      found.insert(canonical_pair(add, mul));
      return;
    }
    int i = cell / n, j = cell % n;
    for (int v = 0; v < n; ++v) {
      mul[i][j] = v;
      if (consistent()) run(cell + 1);
    }
    mul[i][j] = -1;
  }
};

}  // namespace

std::vector<CensusEntry> enumerate_ai_semirings(int order) {
  auto semilattices = enumerate_semilattices(order);
  std::set<std::pair<Table, Table>> found;
  for (const auto& add : semilattices) {
    MulSearch s(order, add, found);
    s.run(0);
  }
  Table zero(order, std::vector<int>(order, 0));
  std::vector<CensusEntry> out;
  for (const auto& [add, mul] : found) {
    Table addc = canonical_pair(add, zero).first;
    auto it = std::find(semilattices.begin(), semilattices.end(), addc);
    std::string cls = "L" + std::to_string(order) + "." +
                      std::to_string(it - semilattices.begin());
    out.push_back(
        {add, mul, std::move(cls), is_chain_table(add), is_commutative(mul)});
  }
  return out;
}

std::optional<std::size_t> locate(const FiniteAiSemiring& s,
                                  const std::vector<CensusEntry>& census) {
  auto key = canonical_pair(s.add_table(), s.mul_table());
  for (std::size_t i = 0; i < census.size(); ++i)
    if (census[i].add == key.first && census[i].mul == key.second) return i;
  return std::nullopt;
}

void write_census(const std::string& path,
                  const std::vector<CensusEntry>& entries, bool force) {
  if (!force && std::filesystem::exists(path))
    throw std::runtime_error(path + " exists; pass force to overwrite");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    nlohmann::json j;
    j["index"] = i;
    j["order"] = entries[i].add.size();
    j["add"] = entries[i].add;
    j["mul"] = entries[i].mul;
    j["additive_class"] = entries[i].additive_class;
    j["add_chain"] = entries[i].add_chain;
    j["mul_commutative"] = entries[i].mul_commutative;
    out << j.dump() << "\n";
  }
}

std::vector<CensusEntry> read_census(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<CensusEntry> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto j = nlohmann::json::parse(line);
    CensusEntry e;
    e.add = j.at("add").get<Table>();
    e.mul = j.at("mul").get<Table>();
    e.additive_class = j.at("additive_class").get<std::string>();
    e.add_chain = j.at("add_chain").get<bool>();
    e.mul_commutative = j.at("mul_commutative").get<bool>();
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace aisr
