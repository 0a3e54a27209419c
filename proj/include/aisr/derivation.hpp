#pragma once

// Bounded equational derivation: breadth-first rewriting with the basis
// statements applied in both directions at subterm positions.  An inequality
// goal q <= u is normalized to the identity q + u ~ u before the search.

#include <optional>
#include <string>
#include <vector>

#include "aisr/families.hpp"
#include "aisr/term.hpp"

namespace aisr {

struct DerivationStep {
  std::string label;   // basis label of the applied statement
  bool reversed;       // true if the statement was applied right-to-left
  std::optional<Word> multiplier;  // p, absent = empty word
  Substitution subst;
  Term before;
  Term after;
};

struct DerivationTrace {
  Statement goal;
  Term start, target;  // normalized identity sides
  std::vector<DerivationStep> steps;
  bool found = false;
  bool truncated = false;  // some neighbor set was cut off by the caps
  long long nodes = 0;
};

struct DeriveOptions {
  int max_depth = 4;
  long long budget = 2'000'000;  // matcher nodes across the whole search
  // Caps for substitutions whose images are proper sums.  Singleton-image
  // matches are enumerated exhaustively; merged multi-image matches are
  // bounded by these caps and overruns set `truncated`.
  int max_image_words = 3;
  int max_multi_matches = 64;
  int max_overlap_subsets = 64;  // remainder choices kept per match
};

struct RewriteMatch {
  std::optional<Word> multiplier;
  Substitution subst;
  Term image_lhs, image_rhs;  // p * subst(side), both expanded
};

/// All ways statement `st` (in the given direction) applies inside `w`:
/// w = p * phi(lhs) + r.  Exhaustive over single-word images; multi-word
/// images are found by merging compatible singleton matches up to the caps.
std::vector<RewriteMatch> rewrite_matches(const Term& w, const Term& lhs,
                                          const Term& rhs,
                                          const DeriveOptions& opts,
                                          long long& nodes, bool& truncated);

DerivationTrace derive(const BasisSpec& basis, const Statement& goal,
                       const DeriveOptions& opts = {});

/// Re-validates a trace against the basis without reusing the matcher:
/// recomputes each step's images homomorphically and checks the four subset
/// conditions that make the step an instance of the cited statement.
bool check_trace(const BasisSpec& basis, const DerivationTrace& trace,
                 std::string* error = nullptr);

}  // namespace aisr
