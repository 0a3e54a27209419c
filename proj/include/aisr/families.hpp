#pragma once

// The named term families and bases: u_{n,k}, q_n, sigma_{n,k}, the Theta_n
// enumeration, and the finite truncations of the infinite bases.

#include <set>
#include <string>
#include <vector>

#include "aisr/term.hpp"

namespace aisr {

/// prod(x_1..x_n) + sum_{i<=k} x_i x_{n+1} + sum_{i>k} x_i x_{n+1} y_i.
Term make_u(int n, int k);
/// x_1 x_2 ... x_{n+1}.
Term make_q(int n);
/// q_n <= u_{n,k}.
Statement make_sigma(int n, int k);
/// q_n <= v for v in Theta_n.
Statement make_delta(int n, const Term& v);

/// All terms sum_{i<j<=n+1} x_i x_j w_ij with each w_ij a linear word over
/// the remaining variables or absent, deduplicated under set semantics.
/// The raw choice space is (2^{n-1})^C(n+1,2); the default cap keeps the
/// enumeration at 8^6 = 262144 tuples (n = 3) and refuses larger n.
std::vector<Term> enumerate_theta(int n, int cap = 3);

/// True if some bijective variable renaming maps a onto b.
bool is_variable_renaming(const Term& a, const Term& b);

struct BasisSpec {
  std::vector<Statement> statements;
  std::vector<std::string> labels;  // parallel to statements

  void add(Statement st, std::string label) {
    statements.push_back(std::move(st));
    labels.push_back(std::move(label));
  }
  std::size_t size() const { return statements.size(); }
};

/// x^3 ~ x^2; x <= x^2; xy <= x + y^2 z; sigma_{n,k} for n <= n_max.
BasisSpec basis_545(int n_max);
/// x^3 ~ x^2; x <= x^2; xy <= x^2 + y; delta_{n,v} for v in Theta_n,
/// n <= theta cap; plus the two square-slot schemas enumerated at n <= n_max.
BasisSpec basis_634(int n_max, int theta_cap);
/// basis_634 plus sigma_{m,0} for m in M.
BasisSpec basis_VM(const std::set<int>& m_set, int n_max, int theta_cap);

enum class PropertyStatus { Pass, Fail, Skipped };

struct PropertyResult {
  char id;  // 'a'..'j'
  PropertyStatus status;
  std::string detail;  // witness on failure, note on skip
};

struct Lemma41Report {
  int n, k;
  std::vector<PropertyResult> properties;
  bool all_applicable_pass() const;
};

/// Checks the structural properties (a)-(j) of u_{n,k} by exhaustive search;
/// properties whose hypotheses (n bounds, k = n or k = 0) are unmet are
/// skipped.
Lemma41Report verify_lemma41(int n, int k);

}  // namespace aisr
