#pragma once

// Deciding whether a term u is t-free: no substitution image of t occurs as
// a subterm of u.  The search is complete for arbitrary terms; a node budget
// turns overruns into an explicit Inconclusive, never a silent answer.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aisr/term.hpp"

namespace aisr {

struct EmbeddingWitness {
  std::optional<Word> multiplier;  // p, absent = empty word
  Substitution images;
  std::vector<Word> remainder;  // r, possibly empty
};

enum class FreenessStatus { Free, Embedded, Inconclusive };

struct FreenessResult {
  FreenessStatus status;
  std::optional<EmbeddingWitness> witness;
  long long nodes = 0;
};

struct FreenessOptions {
  long long budget = 10'000'000;  // search nodes per query
  // Restricts the multiplier to a word, as in the source decompositions.
  // The general search also only needs word multipliers: if a multi-word
  // multiplier p embeds phi(t) into u then so does each single word of p,
  // so this flag does not change answers.
  bool strict_word_multiplier = true;
};

/// Complete search for p (word or empty) and phi with p*phi(t) + r = u.
/// If any substitution embeds t, one with single-word images does (choosing
/// one word from each image keeps every product inside u), so the search
/// ranges over single-word images drawn from divisors of the words of u.
FreenessResult find_embedding(const Term& t, const Term& u,
                              const FreenessOptions& opts = {});

/// Negation wrapper; Inconclusive propagates.
FreenessResult is_free(const Term& t, const Term& u,
                       const FreenessOptions& opts = {});

struct SuiteCase {
  std::string id;
  FreenessStatus status;
  bool expected_free;
  bool ok() const { return status == FreenessStatus::Free && expected_free; }
};

struct FreenessSuiteReport {
  std::string suite;
  std::vector<SuiteCase> cases;
  bool complete = true;  // false if any case was inconclusive
  bool all_pass() const;
};

struct FreenessSuiteBounds {
  std::vector<int> prop32_m = {4, 5};
  int prop32_n_max = 5;
  std::vector<int> prop41_m = {3, 4};
  std::vector<int> prop41_n = {2, 3};
  std::vector<int> prop52_m = {1, 2, 3, 4};
  std::vector<int> prop52_n = {2, 3};
  int lemma21_samples = 50;
  std::uint64_t seed = 1;
  long long budget = 10'000'000;
};

/// Suites: prop32 (u_{m,0} is u_{n,k}-free), prop41 (u_{m,m} is v-free for
/// v in Theta_n \ {u_{m,m}}), prop52 (u_{m,0} is v-free for v in Theta_n),
/// lemma21_chain (freeness is antitone along the subterm order, sampled).
FreenessSuiteReport verify_freeness_suite(const std::string& which,
                                          const FreenessSuiteBounds& bounds = {});

}  // namespace aisr
