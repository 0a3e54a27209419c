#pragma once

// Finite additively idempotent semirings given by Cayley tables, the axioms
// validator, and the structural constructions used throughout: natural order,
// zero adjunction, idempotent extension, products, subalgebras, homomorphisms,
// isomorphism, and subdirect decomposition checks.

#include <optional>
#include <string>
#include <vector>

namespace aisr {

using Table = std::vector<std::vector<int>>;  // n x n, entries in 0..n-1

struct AxiomViolation {
  std::string law;       // e.g. "add-commutative", "left-distributive"
  std::vector<int> witness;  // the offending element tuple
};

struct ValidationReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string(const std::vector<std::string>& labels) const;
};

class FiniteAiSemiring {
 public:
  FiniteAiSemiring(std::string name, std::vector<std::string> elements,
                   Table add, Table mul);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }
  int add(int a, int b) const { return add_[a][b]; }
  int mul(int a, int b) const { return mul_[a][b]; }
  const Table& add_table() const { return add_; }
  const Table& mul_table() const { return mul_; }

  int element_index(const std::string& label) const;  // -1 if absent

 private:
  std::string name_;
  std::vector<std::string> elements_;
  Table add_, mul_;
};

/// Structural (shape / range) problems are reported by throwing
/// std::invalid_argument; axiom violations come back in the report.
ValidationReport validate_tables(const Table& add, const Table& mul);

/// Validates and wraps; returns the report instead of an algebra on failure.
struct ValidateResult {
  std::optional<FiniteAiSemiring> semiring;
  ValidationReport report;
};
ValidateResult validate(std::string name, std::vector<std::string> elements,
                        Table add, Table mul);

/// The pairs (a,b) with a+b=b, i.e. a <= b in the natural order.
class ElementOrder {
 public:
  explicit ElementOrder(const FiniteAiSemiring& s);
  bool leq(int a, int b) const { return leq_[a][b]; }
  int size() const { return static_cast<int>(leq_.size()); }
  std::vector<std::pair<int, int>> pairs() const;
  bool is_chain() const;

 private:
  std::vector<std::vector<bool>> leq_;
};

/// S0: a new additive-least multiplicative-zero element appended at the end.
FiniteAiSemiring adjoin_zero(const FiniteAiSemiring& s);

/// S^e: requires an additive top that is also a multiplicative zero; appends
/// a new idempotent top e with e*a = a*e = top for a != e.
struct IdempotentExtensionError {
  std::string reason;
  int witness;  // offending element, or -1
};
std::optional<FiniteAiSemiring> idempotent_extension(
    const FiniteAiSemiring& s, IdempotentExtensionError* error = nullptr);

FiniteAiSemiring direct_product(const FiniteAiSemiring& s,
                                const FiniteAiSemiring& t);

/// All carrier subsets closed under both operations, sorted.
std::vector<std::vector<int>> subalgebras(const FiniteAiSemiring& s);

/// All homomorphisms S -> T as element maps, in lexicographic order.
std::vector<std::vector<int>> homomorphisms(const FiniteAiSemiring& s,
                                            const FiniteAiSemiring& t);

/// A bijective homomorphism witness, or nullopt after exhausting all
/// bijections.
std::optional<std::vector<int>> isomorphic(const FiniteAiSemiring& s,
                                           const FiniteAiSemiring& t);

struct SubdirectCheckResult {
  bool ok;
  std::string detail;  // first failure, or empty
};

/// Checks that each block partition is a congruence, each quotient is
/// isomorphic to the stated factor, and the induced map into the product is
/// injective (hence a subdirect embedding).
SubdirectCheckResult subdirect_decomposition_check(
    const FiniteAiSemiring& s,
    const std::vector<FiniteAiSemiring>& factors,
    const std::vector<std::vector<std::vector<int>>>& blocks_per_factor);

/// Built-in algebras with fixed tables.  Names: S7, S53, S43, M2,
/// D2, S4_545, S4_634, trivial.
FiniteAiSemiring catalog(const std::string& name);
std::vector<std::string> catalog_names();

// JSON (de)serialization of the semiring file format.
std::string to_json(const FiniteAiSemiring& s);
/// Parses and validates; a file failing validation yields a report only.
ValidateResult from_json(const std::string& json_text);

}  // namespace aisr
