#include "aisr/semiring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace aisr {

std::string ValidationReport::to_string(
    const std::vector<std::string>& labels) const {
  std::ostringstream os;
  for (const auto& v : violations) {
    os << v.law << " fails at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      if (i) os << ", ";
      int e = v.witness[i];
      if (e >= 0 && e < static_cast<int>(labels.size()))
        os << labels[e];
      else
        os << e;
    }
    os << ")\n";
  }
  return os.str();
}

FiniteAiSemiring::FiniteAiSemiring(std::string name,
                                   std::vector<std::string> elements,
                                   Table add, Table mul)
    : name_(std::move(name)),
      elements_(std::move(elements)),
      add_(std::move(add)),
      mul_(std::move(mul)) {}

int FiniteAiSemiring::element_index(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (elements_[i] == label) return i;
  return -1;
}

static void check_shape(const Table& t, std::size_t n, const char* which) {
  if (t.size() != n)
    throw std::invalid_argument(std::string(which) + " table has wrong row count");
  for (const auto& row : t) {
    if (row.size() != n)
      throw std::invalid_argument(std::string(which) + " table is not square");
    for (int e : row)
      if (e < 0 || e >= static_cast<int>(n))
        throw std::invalid_argument(std::string(which) +
                                    " table entry out of range");
  }
}

ValidationReport validate_tables(const Table& add, const Table& mul) {
  std::size_t n = add.size();
  if (n == 0) throw std::invalid_argument("empty carrier");
  check_shape(add, n, "add");
  check_shape(mul, n, "mul");

  ValidationReport rep;
  int ni = static_cast<int>(n);
  for (int a = 0; a < ni; ++a) {
    if (add[a][a] != a) rep.violations.push_back({"add-idempotent", {a}});
    for (int b = 0; b < ni; ++b) {
      if (add[a][b] != add[b][a])
        if (a < b) rep.violations.push_back({"add-commutative", {a, b}});
      for (int c = 0; c < ni; ++c) {
        if (add[add[a][b]][c] != add[a][add[b][c]])
          rep.violations.push_back({"add-associative", {a, b, c}});
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
          rep.violations.push_back({"mul-associative", {a, b, c}});
        if (mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]])
          rep.violations.push_back({"left-distributive", {a, b, c}});
        if (mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]])
          rep.violations.push_back({"right-distributive", {a, b, c}});
      }
    }
  }
  return rep;
}

ValidateResult validate(std::string name, std::vector<std::string> elements,
                        Table add, Table mul) {
  if (elements.size() != add.size())
    throw std::invalid_argument("element list size does not match tables");
  ValidationReport rep = validate_tables(add, mul);
  if (!rep.ok()) return {std::nullopt, std::move(rep)};
  return {FiniteAiSemiring(std::move(name), std::move(elements),
                           std::move(add), std::move(mul)),
          std::move(rep)};
}

// ---------------------------------------------------------------------------

ElementOrder::ElementOrder(const FiniteAiSemiring& s) {
  int n = s.size();
  leq_.assign(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) leq_[a][b] = (s.add(a, b) == b);
}

std::vector<std::pair<int, int>> ElementOrder::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (leq_[a][b]) out.emplace_back(a, b);
  return out;
}

bool ElementOrder::is_chain() const {
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (!leq_[a][b] && !leq_[b][a]) return false;
  return true;
}

// ---------------------------------------------------------------------------

FiniteAiSemiring adjoin_zero(const FiniteAiSemiring& s) {
  int n = s.size();
  Table add(n + 1, std::vector<int>(n + 1));
  Table mul(n + 1, std::vector<int>(n + 1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      add[a][b] = s.add(a, b);
      mul[a][b] = s.mul(a, b);
    }
  for (int a = 0; a <= n; ++a) {
    add[a][n] = add[n][a] = (a == n) ? n : a;  // 0 is additive identity
    mul[a][n] = mul[n][a] = n;                 // 0 is multiplicative zero
  }
  auto elements = s.elements();
  elements.push_back("0");
  return FiniteAiSemiring(s.name().empty() ? "" : s.name() + "^0",
                          std::move(elements), std::move(add), std::move(mul));
}

std::optional<FiniteAiSemiring> idempotent_extension(
    const FiniteAiSemiring& s, IdempotentExtensionError* error) {
  int n = s.size();
  int top = -1;
  for (int t = 0; t < n; ++t) {
    bool is_top = true;
    for (int a = 0; a < n; ++a)
      if (s.add(a, t) != t) {
        is_top = false;
        break;
      }
    if (is_top) {
      top = t;
      break;
    }
  }
  if (top < 0) {
    if (error) *error = {"no additive top element", -1};
    return std::nullopt;
  }
  for (int a = 0; a < n; ++a)
    if (s.mul(top, a) != top || s.mul(a, top) != top) {
      if (error) *error = {"additive top is not a multiplicative zero", a};
      return std::nullopt;
    }

  Table add(n + 1, std::vector<int>(n + 1));
  Table mul(n + 1, std::vector<int>(n + 1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      add[a][b] = s.add(a, b);
      mul[a][b] = s.mul(a, b);
    }
  for (int a = 0; a <= n; ++a) {
    add[a][n] = add[n][a] = n;                  // e is the new top
    mul[a][n] = mul[n][a] = (a == n) ? n : top; // ee=e, ea=ae=top
  }
  auto elements = s.elements();
  elements.push_back("e");
  return FiniteAiSemiring(s.name().empty() ? "" : s.name() + "^e",
                          std::move(elements), std::move(add), std::move(mul));
}

FiniteAiSemiring direct_product(const FiniteAiSemiring& s,
                                const FiniteAiSemiring& t) {
  int ns = s.size(), nt = t.size(), n = ns * nt;
  auto idx = [&](int a, int b) { return a * nt + b; };
  Table add(n, std::vector<int>(n)), mul(n, std::vector<int>(n));
  std::vector<std::string> elements;
  elements.reserve(n);
  for (int a = 0; a < ns; ++a)
    for (int b = 0; b < nt; ++b)
      elements.push_back("(" + s.elements()[a] + "," + t.elements()[b] + ")");
  for (int a = 0; a < ns; ++a)
    for (int b = 0; b < nt; ++b)
      for (int c = 0; c < ns; ++c)
        for (int d = 0; d < nt; ++d) {
          add[idx(a, b)][idx(c, d)] = idx(s.add(a, c), t.add(b, d));
          mul[idx(a, b)][idx(c, d)] = idx(s.mul(a, c), t.mul(b, d));
        }
  return FiniteAiSemiring(s.name() + "x" + t.name(), std::move(elements),
                          std::move(add), std::move(mul));
}

std::vector<std::vector<int>> subalgebras(const FiniteAiSemiring& s) {
  int n = s.size();
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    bool closed = true;
    for (int a = 0; a < n && closed; ++a) {
      if (!(mask >> a & 1)) continue;
      for (int b = 0; b < n && closed; ++b) {
        if (!(mask >> b & 1)) continue;
        if (!(mask >> s.add(a, b) & 1) || !(mask >> s.mul(a, b) & 1))
          closed = false;
      }
    }
    if (!closed) continue;
    std::vector<int> sub;
    for (int a = 0; a < n; ++a)
      if (mask >> a & 1) sub.push_back(a);
    out.push_back(std::move(sub));
  }
  return out;
}

std::vector<std::vector<int>> homomorphisms(const FiniteAiSemiring& s,
                                            const FiniteAiSemiring& t) {
  int ns = s.size(), nt = t.size();
  std::vector<std::vector<int>> out;
  std::vector<int> map(ns, 0);
  // Backtracking over the map with incremental compatibility checks.
  std::vector<int> stack{0};
  while (true) {
    int depth = static_cast<int>(stack.size()) - 1;
    if (depth == ns) {
      out.push_back(std::vector<int>(map.begin(), map.end()));
      stack.pop_back();
      if (stack.empty()) break;
      ++stack.back();
      continue;
    }
    if (stack.back() >= nt) {
      stack.pop_back();
      if (stack.empty()) break;
      ++stack.back();
      continue;
    }
    map[depth] = stack.back();
    bool ok = true;
    for (int b = 0; b <= depth && ok; ++b) {
      if (s.add(depth, b) <= depth &&
          map[s.add(depth, b)] != t.add(map[depth], map[b]))
        ok = false;
      if (ok && s.add(b, depth) <= depth &&
          map[s.add(b, depth)] != t.add(map[b], map[depth]))
        ok = false;
      if (ok && s.mul(depth, b) <= depth &&
          map[s.mul(depth, b)] != t.mul(map[depth], map[b]))
        ok = false;
      if (ok && s.mul(b, depth) <= depth &&
          map[s.mul(b, depth)] != t.mul(map[b], map[depth]))
        ok = false;
    }
    if (ok)
      stack.push_back(0);
    else
      ++stack.back();
  }
  // Filter: the incremental check above only covers results landing at or
  // below the current depth; do a full pass to be safe.
  std::vector<std::vector<int>> checked;
  for (const auto& m : out) {
    bool ok = true;
    for (int a = 0; a < ns && ok; ++a)
      for (int b = 0; b < ns && ok; ++b)
        if (m[s.add(a, b)] != t.add(m[a], m[b]) ||
            m[s.mul(a, b)] != t.mul(m[a], m[b]))
          ok = false;
    if (ok) checked.push_back(m);
  }
  return checked;
}

std::optional<std::vector<int>> isomorphic(const FiniteAiSemiring& s,
                                           const FiniteAiSemiring& t) {
  if (s.size() != t.size()) return std::nullopt;
  int n = s.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        if (perm[s.add(a, b)] != t.add(perm[a], perm[b]) ||
            perm[s.mul(a, b)] != t.mul(perm[a], perm[b]))
          ok = false;
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

// ---------------------------------------------------------------------------

SubdirectCheckResult subdirect_decomposition_check(
    const FiniteAiSemiring& s,
    const std::vector<FiniteAiSemiring>& factors,
    const std::vector<std::vector<std::vector<int>>>& blocks_per_factor) {
  int n = s.size();
  if (factors.size() != blocks_per_factor.size())
    return {false, "factor/block count mismatch"};

  std::vector<std::vector<int>> block_of(factors.size(),
                                         std::vector<int>(n, -1));
  for (std::size_t f = 0; f < factors.size(); ++f) {
    const auto& blocks = blocks_per_factor[f];
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (int e : blocks[b]) {
        if (e < 0 || e >= n || block_of[f][e] != -1)
          return {false, "blocks do not partition the carrier (factor " +
                             std::to_string(f) + ")"};
        block_of[f][e] = static_cast<int>(b);
      }
    for (int e = 0; e < n; ++e)
      if (block_of[f][e] == -1)
        return {false, "blocks do not partition the carrier (factor " +
                           std::to_string(f) + ")"};

    // Congruence: operation results must be well-defined on blocks.
    int nb = static_cast<int>(blocks.size());
    Table qadd(nb, std::vector<int>(nb, -1));
    Table qmul(nb, std::vector<int>(nb, -1));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int& ra = qadd[block_of[f][a]][block_of[f][b]];
        int va = block_of[f][s.add(a, b)];
        if (ra == -1)
          ra = va;
        else if (ra != va)
          return {false, "not a congruence (factor " + std::to_string(f) +
                             "): witness pair (" + s.elements()[a] + "," +
                             s.elements()[b] + ") under +"};
        int& rm = qmul[block_of[f][a]][block_of[f][b]];
        int vm = block_of[f][s.mul(a, b)];
        if (rm == -1)
          rm = vm;
        else if (rm != vm)
          return {false, "not a congruence (factor " + std::to_string(f) +
                             "): witness pair (" + s.elements()[a] + "," +
                             s.elements()[b] + ") under *"};
      }
    std::vector<std::string> qlabels(nb);
    for (int b = 0; b < nb; ++b) qlabels[b] = "B" + std::to_string(b);
    FiniteAiSemiring quotient("quotient", qlabels, qadd, qmul);
    if (!isomorphic(quotient, factors[f]))
      return {false, "quotient " + std::to_string(f) +
                         " not isomorphic to stated factor"};
  }

  // Injectivity of the induced map (subdirectness onto factors is the
  // surjectivity of each block map, already implied by the partition).
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      bool same = true;
      for (std::size_t f = 0; f < factors.size(); ++f)
        if (block_of[f][a] != block_of[f][b]) same = false;
      if (same)
        return {false, "induced map not injective: " + s.elements()[a] +
                           " and " + s.elements()[b]};
    }
  return {true, ""};
}

// ---------------------------------------------------------------------------
// Catalog.  Tables verbatim from the source element order (inf, a, 1[, 0]).

FiniteAiSemiring catalog(const std::string& name) {
  auto make = [](std::string nm, std::vector<std::string> el, Table add,
                 Table mul) {
    auto r = validate(nm, std::move(el), std::move(add), std::move(mul));
    if (!r.semiring)
      throw std::logic_error("catalog algebra " + nm + " fails validation");
    return *std::move(r.semiring);
  };
  if (name == "S7")
    return make("S7", {"inf", "a", "1"},
                {{0, 0, 0}, {0, 1, 0}, {0, 0, 2}},
                {{0, 0, 0}, {0, 0, 1}, {0, 1, 2}});
  if (name == "S53")
    return make("S53", {"inf", "a", "1"},
                {{0, 0, 0}, {0, 1, 1}, {0, 1, 2}},
                {{0, 0, 0}, {0, 0, 1}, {0, 1, 2}});
  if (name == "S43")
    return make("S43", {"inf", "a", "1"},
                {{0, 0, 0}, {0, 1, 1}, {0, 1, 2}},
                {{0, 0, 0}, {0, 1, 2}, {0, 2, 2}});
  if (name == "M2")
    return make("M2", {"0", "1"}, {{0, 1}, {1, 1}}, {{0, 1}, {1, 1}});
  if (name == "D2")
    return make("D2", {"0", "1"}, {{0, 1}, {1, 1}}, {{0, 0}, {0, 1}});
  if (name == "S4_545")
    return make("S4_545", {"inf", "a", "1", "0"},
                {{0, 0, 0, 0}, {0, 1, 1, 1}, {0, 1, 2, 2}, {0, 1, 2, 3}},
                {{0, 0, 0, 0}, {0, 0, 1, 1}, {0, 1, 2, 3}, {0, 1, 3, 3}});
  if (name == "S4_634")
    return make("S4_634", {"inf", "a", "1", "0"},
                {{0, 0, 0, 0}, {0, 1, 1, 1}, {0, 1, 2, 2}, {0, 1, 2, 3}},
                {{0, 0, 0, 3}, {0, 0, 1, 3}, {0, 1, 2, 3}, {3, 3, 3, 3}});
  if (name == "trivial")
    return make("trivial", {"inf"}, {{0}}, {{0}});
  throw std::invalid_argument("unknown catalog name: " + name);
}

std::vector<std::string> catalog_names() {
  return {"S7", "S53", "S43", "M2", "D2", "S4_545", "S4_634", "trivial"};
}

// ---------------------------------------------------------------------------
// JSON

std::string to_json(const FiniteAiSemiring& s) {
  nlohmann::json j;
  if (!s.name().empty()) j["name"] = s.name();
  j["elements"] = s.elements();
  j["add"] = s.add_table();
  j["mul"] = s.mul_table();
  return j.dump();
}

ValidateResult from_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  std::string name = j.value("name", "");
  std::vector<std::string> elements =
      j.at("elements").get<std::vector<std::string>>();
  Table add = j.at("add").get<Table>();
  Table mul = j.at("mul").get<Table>();
  return validate(std::move(name), std::move(elements), std::move(add),
                  std::move(mul));
}

}  // namespace aisr
