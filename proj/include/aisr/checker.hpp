#pragma once

// Statement satisfaction in a finite ai-semiring by exhaustive assignment
// scan, plus the four satisfaction oracles (D2, S53, S7, zero-adjunction
// reduction) and oracle-vs-brute-force cross-validation.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aisr/semiring.hpp"
#include "aisr/term.hpp"

namespace aisr {

using Assignment = std::map<Variable, int>;

/// Evaluates u in S under a total assignment; throws std::out_of_range on a
/// missing variable.
int evaluate(const FiniteAiSemiring& s, const Term& u, const Assignment& a);

struct HoldsResult {
  bool holds;
  std::optional<Assignment> countermodel;  // first in canonical scan order
};

class VariableCapExceeded : public std::runtime_error {
 public:
  explicit VariableCapExceeded(std::size_t n)
      : std::runtime_error("statement has " + std::to_string(n) +
                           " variables, above the assignment-scan cap") {}
};

HoldsResult holds(const FiniteAiSemiring& s, const Statement& st,
                  int max_vars = 12);

/// An inequality whose lower side is a single word; the oracles' common
/// normal form.  Throws std::invalid_argument otherwise.
struct WordInequality {
  Word q;
  Term u;
  bool trivial() const { return u.contains(q); }
};
WordInequality word_inequality(const Statement& st);

// Satisfaction oracles.  Trivial inequalities (q already a summand of u)
// short-circuit to yes.
bool oracle_d2(const Statement& st);
bool oracle_s53(const Statement& st);
bool oracle_s7(const Statement& st);
bool oracle_adjoin_zero(const FiniteAiSemiring& s, const Statement& st);

struct CrossvalidateReport {
  long long checked = 0;
  long long disagreements = 0;
  std::vector<Statement> witnesses;  // first few disagreeing statements
  bool ok() const { return disagreements == 0; }
};

struct SampleSpec {
  int max_vars = 3;
  int max_len = 3;
  int max_words = 3;
  long long random_samples = 0;  // 0 = exhaustive only
  std::uint64_t seed = 1;
};

/// All words over x1..xv of length 1..l, canonical order.
std::vector<Word> enumerate_words(int max_vars, int max_len);
/// All word-lhs inequalities q <= u over the sample space, exhaustively.
std::vector<Statement> enumerate_statements(const SampleSpec& spec);
std::vector<Statement> random_statements(const SampleSpec& spec);

enum class OracleKind { D2, S53, S7, AdjoinZero };

/// Compares the oracle against brute force on its target algebra; for
/// AdjoinZero the target is adjoin_zero(base) and the oracle reduces to base.
CrossvalidateReport crossvalidate(OracleKind which, const SampleSpec& spec,
                                  const FiniteAiSemiring* base = nullptr);

}  // namespace aisr
