#pragma once

// The free commutative ai-semiring P_f(X_c+): words are finite multisets of
// variables, terms are finite nonempty sets of words.  All values are
// immutable after construction and safe to share across threads.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace aisr {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A named variable.  Ordering is by (letter prefix, numeric subscript, raw
/// name), so x1 < x2 < x10 < y1; this order is fixed and used everywhere for
/// canonical printing and deduplication.
class Variable {
 public:
  explicit Variable(std::string name);

  const std::string& name() const { return name_; }

  bool operator==(const Variable& o) const { return name_ == o.name_; }
  bool operator!=(const Variable& o) const { return name_ != o.name_; }
  bool operator<(const Variable& o) const;

 private:
  std::string name_;
  std::string prefix_;
  long long subscript_;  // -1 when the name has no trailing digits
};

/// An element of X_c+ represented as an exponent map.  The empty word (the
/// multiplicative identity) is representable; Term rejects it, and public
/// interfaces that allow an absent multiplier use std::optional<Word>.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<std::pair<Variable, int>> exponents);

  static Word variable(const Variable& v) { return Word({{v, 1}}); }

  const std::vector<std::pair<Variable, int>>& exponents() const {
    return exps_;
  }
  bool empty() const { return exps_.empty(); }

  int length() const;
  std::vector<Variable> content() const;
  int occ(const Variable& v) const;
  bool linear() const;

  Word times(const Word& o) const;
  Word pow(int e) const;
  bool divides(const Word& o) const;
  /// Quotient o.divide(*this is a divisor); precondition: divides holds.
  Word divide(const Word& divisor) const;
  /// All divisors, shortest first; excludes the empty word, includes *this.
  std::vector<Word> divisors() const;
  /// Divisors of length exactly 2.
  std::vector<Word> subwords_len2() const;
  /// Exact e-th root if every exponent is divisible by e.
  std::optional<Word> root(int e) const;

  bool operator==(const Word& o) const { return exps_ == o.exps_; }
  bool operator!=(const Word& o) const { return !(*this == o); }
  /// Canonical order: by length, then lexicographic on the exponent list.
  bool operator<(const Word& o) const;

 private:
  std::vector<std::pair<Variable, int>> exps_;  // sorted by variable
};

/// A nonempty finite set of nonempty words; equality is set equality.
class Term {
 public:
  explicit Term(std::vector<Word> words);
  static Term word(Word w) { return Term({std::move(w)}); }

  const std::vector<Word>& words() const { return words_; }
  bool contains(const Word& w) const;

  Term plus(const Term& o) const;
  Term times(const Term& o) const;
  Term times(const Word& w) const;

  std::vector<Variable> content() const;
  std::vector<Word> s2() const;
  std::vector<Word> length_at_least(int k) const;
  /// D_q: the words whose content is contained in c(q).
  std::vector<Word> content_within(const Word& q) const;
  /// delta(u): all nonempty variable sets Z meeting each word in exactly one
  /// variable of multiplicity one.  Backtracks over per-word choices.
  std::vector<std::vector<Variable>> delta_sets() const;

  bool operator==(const Term& o) const { return words_ == o.words_; }
  bool operator!=(const Term& o) const { return !(*this == o); }
  bool operator<(const Term& o) const { return words_ < o.words_; }

 private:
  std::vector<Word> words_;  // sorted, unique
};

struct SubtermWitness {
  std::optional<Word> multiplier;  // the merged context p1*p2
  std::vector<Word> remainder;     // p3, possibly empty
};

/// u <= v iff v = p*u + r for some word-or-empty p and word set r.
/// The multiplier search ranges over divisors of the words of v.
std::optional<SubtermWitness> is_subterm(const Term& u, const Term& v);

/// A total mapping from a finite variable set to terms.
class Substitution {
 public:
  Substitution() = default;
  explicit Substitution(std::map<Variable, Term> images)
      : images_(std::move(images)) {}

  void set(const Variable& v, Term t);
  const Term* image(const Variable& v) const;
  const std::map<Variable, Term>& images() const { return images_; }

  /// Homomorphic application; throws std::out_of_range if a variable of u is
  /// outside the domain.
  Term apply(const Term& u) const;
  Term apply(const Word& w) const;

 private:
  std::map<Variable, Term> images_;
};

enum class StatementKind { Identity, Inequality };

/// An identity u ~ v or inequality q <= u (shorthand for q+u ~ u).
struct Statement {
  StatementKind kind;
  Term lhs;
  Term rhs;

  static Statement identity(Term l, Term r) {
    return {StatementKind::Identity, std::move(l), std::move(r)};
  }
  static Statement inequality(Term l, Term r) {
    return {StatementKind::Inequality, std::move(l), std::move(r)};
  }
  /// The identity this statement denotes (inequalities become l+r ~ r).
  std::pair<Term, Term> as_identity() const;

  bool operator==(const Statement& o) const;
};

Term parse_term(const std::string& text);
Statement parse_statement(const std::string& text);

std::string print_word(const Word& w);
std::string print_term(const Term& u);
std::string print_statement(const Statement& st);

}  // namespace aisr
