#pragma once

// Exhaustive census of the small additively idempotent semirings: semilattice
// addition tables up to isomorphism, multiplication tables by backtracking
// with lazy associativity and distributivity checks, global deduplication by
// canonical form.

#include <optional>
#include <string>
#include <vector>

#include "aisr/semiring.hpp"

namespace aisr {

struct CensusEntry {
  Table add, mul;  // stored in canonical (lexicographically least) labeling
  std::string additive_class;  // "L<order>.<i>": i-th canonical semilattice
  bool add_chain;
  bool mul_commutative;
};

/// Joint canonical form: the lexicographically least flattened (add, mul)
/// pair over all relabelings.
std::pair<Table, Table> canonical_pair(const Table& add, const Table& mul);

/// Commutative idempotent associative tables up to isomorphism, order <= 5.
std::vector<Table> enumerate_semilattices(int order);

/// All ai-semirings of the given order up to isomorphism, in canonical-form
/// order.
std::vector<CensusEntry> enumerate_ai_semirings(int order);

/// Index of the census entry isomorphic to s, if any.
std::optional<std::size_t> locate(const FiniteAiSemiring& s,
                                  const std::vector<CensusEntry>& census);

/// JSON-lines persistence; refuses to overwrite unless force is set.
void write_census(const std::string& path,
                  const std::vector<CensusEntry>& entries, bool force = false);
std::vector<CensusEntry> read_census(const std::string& path);

}  // namespace aisr
