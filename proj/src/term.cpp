#include "aisr/term.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace aisr {

// ---------------------------------------------------------------------------
// Variable

Variable::Variable(std::string name) : name_(std::move(name)), subscript_(-1) {
  if (name_.empty()) throw std::invalid_argument("empty variable name");
  std::size_t digits = 0;
  while (digits < name_.size() &&
         std::isdigit(static_cast<unsigned char>(name_[name_.size() - 1 - digits])))
    ++digits;
  if (digits > 0 && digits < name_.size()) {
    prefix_ = name_.substr(0, name_.size() - digits);
    subscript_ = std::stoll(name_.substr(name_.size() - digits));
  } else {
    prefix_ = name_;
  }
}

bool Variable::operator<(const Variable& o) const {
  if (prefix_ != o.prefix_) return prefix_ < o.prefix_;
  if (subscript_ != o.subscript_) return subscript_ < o.subscript_;
  return name_ < o.name_;
}

// ---------------------------------------------------------------------------
// Word

Word::Word(std::vector<std::pair<Variable, int>> exponents)
    : exps_(std::move(exponents)) {
  std::sort(exps_.begin(), exps_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  // merge duplicates
  std::vector<std::pair<Variable, int>> merged;
  for (auto& [v, e] : exps_) {
    if (e <= 0) throw std::invalid_argument("word exponent must be positive");
    if (!merged.empty() && merged.back().first == v)
      merged.back().second += e;
    else
      merged.emplace_back(v, e);
  }
  exps_ = std::move(merged);
}

int Word::length() const {
  int n = 0;
  for (const auto& [v, e] : exps_) n += e;
  return n;
}

std::vector<Variable> Word::content() const {
  std::vector<Variable> out;
  out.reserve(exps_.size());
  for (const auto& [v, e] : exps_) out.push_back(v);
  return out;
}

int Word::occ(const Variable& v) const {
  for (const auto& [x, e] : exps_)
    if (x == v) return e;
  return 0;
}

bool Word::linear() const {
  for (const auto& [v, e] : exps_)
    if (e != 1) return false;
  return true;
}

Word Word::times(const Word& o) const {
  Word r;
  auto a = exps_.begin(), b = o.exps_.begin();
  while (a != exps_.end() && b != o.exps_.end()) {
    if (a->first < b->first)
      r.exps_.push_back(*a++);
    else if (b->first < a->first)
      r.exps_.push_back(*b++);
    else {
      r.exps_.emplace_back(a->first, a->second + b->second);
      ++a, ++b;
    }
  }
  r.exps_.insert(r.exps_.end(), a, exps_.end());
  r.exps_.insert(r.exps_.end(), b, o.exps_.end());
  return r;
}

Word Word::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power");
  Word r;
  if (e == 0) return r;
  r.exps_ = exps_;
  for (auto& [v, k] : r.exps_) k *= e;
  return r;
}

bool Word::divides(const Word& o) const {
  auto b = o.exps_.begin();
  for (const auto& [v, e] : exps_) {
    while (b != o.exps_.end() && b->first < v) ++b;
    if (b == o.exps_.end() || !(b->first == v) || b->second < e) return false;
  }
  return true;
}

Word Word::divide(const Word& divisor) const {
  Word r;
  auto b = divisor.exps_.begin();
  for (const auto& [v, e] : exps_) {
    int d = 0;
    while (b != divisor.exps_.end() && b->first < v) ++b;
    if (b != divisor.exps_.end() && b->first == v) d = b->second;
    if (d > e) throw std::invalid_argument("not a divisor");
    if (e - d > 0) r.exps_.emplace_back(v, e - d);
  }
  if (divisor.length() + r.length() != length())
    throw std::invalid_argument("not a divisor");
  return r;
}

std::vector<Word> Word::divisors() const {
  std::vector<Word> out;
  // odometer over exponent choices 0..e per variable
  std::vector<int> pick(exps_.size(), 0);
  while (true) {
    std::vector<std::pair<Variable, int>> es;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (pick[i] > 0) es.emplace_back(exps_[i].first, pick[i]);
    if (!es.empty()) out.push_back(Word(std::move(es)));
    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (pick[i] < exps_[i].second) {
        ++pick[i];
        break;
      }
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> Word::subwords_len2() const {
  std::vector<Word> out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i].second >= 2) out.push_back(Word({{exps_[i].first, 2}}));
    for (std::size_t j = i + 1; j < exps_.size(); ++j)
      out.push_back(Word({{exps_[i].first, 1}, {exps_[j].first, 1}}));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Word> Word::root(int e) const {
  Word r;
  for (const auto& [v, k] : exps_) {
    if (k % e != 0) return std::nullopt;
    r.exps_.emplace_back(v, k / e);
  }
  return r;
}

bool Word::operator<(const Word& o) const {
  int la = length(), lb = o.length();
  if (la != lb) return la < lb;
  return std::lexicographical_compare(
      exps_.begin(), exps_.end(), o.exps_.begin(), o.exps_.end(),
      [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second > b.second;  // higher exponent on equal variable first
      });
}

// ---------------------------------------------------------------------------
// Term

Term::Term(std::vector<Word> words) : words_(std::move(words)) {
  if (words_.empty()) throw std::invalid_argument("term must be nonempty");
  for (const auto& w : words_)
    if (w.empty())
      throw std::invalid_argument("term may not contain the empty word");
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool Term::contains(const Word& w) const {
  return std::binary_search(words_.begin(), words_.end(), w);
}

Term Term::plus(const Term& o) const {
  std::vector<Word> ws = words_;
  ws.insert(ws.end(), o.words_.begin(), o.words_.end());
  return Term(std::move(ws));
}

Term Term::times(const Term& o) const {
  std::vector<Word> ws;
  ws.reserve(words_.size() * o.words_.size());
  for (const auto& a : words_)
    for (const auto& b : o.words_) ws.push_back(a.times(b));
  return Term(std::move(ws));
}

Term Term::times(const Word& w) const {
  std::vector<Word> ws;
  ws.reserve(words_.size());
  for (const auto& a : words_) ws.push_back(a.times(w));
  return Term(std::move(ws));
}

std::vector<Variable> Term::content() const {
  std::set<Variable> s;
  for (const auto& w : words_)
    for (const auto& v : w.content()) s.insert(v);
  return {s.begin(), s.end()};
}

std::vector<Word> Term::s2() const {
  std::set<Word> s;
  for (const auto& w : words_)
    for (const auto& d : w.subwords_len2()) s.insert(d);
  return {s.begin(), s.end()};
}

std::vector<Word> Term::length_at_least(int k) const {
  std::vector<Word> out;
  for (const auto& w : words_)
    if (w.length() >= k) out.push_back(w);
  return out;
}

std::vector<Word> Term::content_within(const Word& q) const {
  auto cq = q.content();
  std::vector<Word> out;
  for (const auto& w : words_) {
    bool ok = true;
    for (const auto& v : w.content())
      if (!std::binary_search(cq.begin(), cq.end(), v)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(w);
  }
  return out;
}

namespace {

// Backtracks over a representative choice per word; Z is the union of the
// choices and must meet every word's content in exactly that one variable.
void delta_rec(const std::vector<Word>& words, std::size_t i,
               std::set<Variable>& z,
               std::set<std::vector<Variable>>& out) {
  if (i == words.size()) {
    out.insert(std::vector<Variable>(z.begin(), z.end()));
    return;
  }
  const Word& w = words[i];
  // Variables of w already selected in Z.
  std::vector<Variable> in_z;
  for (const auto& v : w.content())
    if (z.count(v)) in_z.push_back(v);
  if (in_z.size() > 1) return;
  if (in_z.size() == 1) {
    if (w.occ(in_z[0]) == 1) delta_rec(words, i + 1, z, out);
    return;
  }
  for (const auto& [v, e] : w.exponents()) {
    if (e != 1) continue;
    // Adding v must not give an earlier word a second representative.
    bool clash = false;
    for (std::size_t j = 0; j < i; ++j)
      if (words[j].occ(v) > 0) {
        clash = true;
        break;
      }
    if (clash) continue;
    z.insert(v);
    delta_rec(words, i + 1, z, out);
    z.erase(v);
  }
}

}  // namespace

std::vector<std::vector<Variable>> Term::delta_sets() const {
  std::set<std::vector<Variable>> out;
  std::set<Variable> z;
  delta_rec(words_, 0, z, out);
  return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------
// Subterm

std::optional<SubtermWitness> is_subterm(const Term& u, const Term& v) {
  auto try_multiplier = [&](const std::optional<Word>& p)
      -> std::optional<SubtermWitness> {
    std::vector<Word> image;
    for (const auto& w : u.words()) {
      Word pw = p ? w.times(*p) : w;
      if (!v.contains(pw)) return std::nullopt;
      image.push_back(pw);
    }
    std::sort(image.begin(), image.end());
    std::vector<Word> rem;
    for (const auto& w : v.words())
      if (!std::binary_search(image.begin(), image.end(), w))
        rem.push_back(w);
    return SubtermWitness{p, std::move(rem)};
  };

  if (auto w = try_multiplier(std::nullopt)) return w;
  std::set<Word> cands;
  for (const auto& w : v.words())
    for (const auto& d : w.divisors()) cands.insert(d);
  for (const auto& p : cands)
    if (auto w = try_multiplier(p)) return w;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Substitution

void Substitution::set(const Variable& v, Term t) {
  images_.insert_or_assign(v, std::move(t));
}

const Term* Substitution::image(const Variable& v) const {
  auto it = images_.find(v);
  return it == images_.end() ? nullptr : &it->second;
}

Term Substitution::apply(const Word& w) const {
  std::optional<Term> acc;
  for (const auto& [v, e] : w.exponents()) {
    auto it = images_.find(v);
    if (it == images_.end())
      throw std::out_of_range("substitution undefined on " + v.name());
    Term factor = it->second;
    for (int i = 1; i < e; ++i) factor = factor.times(it->second);
    acc = acc ? acc->times(factor) : factor;
  }
  if (!acc) throw std::invalid_argument("cannot apply substitution to empty word");
  return *acc;
}

Term Substitution::apply(const Term& u) const {
  std::optional<Term> acc;
  for (const auto& w : u.words()) {
    Term img = apply(w);
    acc = acc ? acc->plus(img) : img;
  }
  return *acc;
}

// ---------------------------------------------------------------------------
// Statement

std::pair<Term, Term> Statement::as_identity() const {
  if (kind == StatementKind::Identity) return {lhs, rhs};
  return {lhs.plus(rhs), rhs};
}

bool Statement::operator==(const Statement& o) const {
  return kind == o.kind && lhs == o.lhs && rhs == o.rhs;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " at position " + std::to_string(pos), pos);
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos])))
      fail("expected identifier");
    ++pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return text.substr(start, pos - start);
  }

  int posint() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (start == pos) fail("expected positive integer");
    int v = std::stoi(text.substr(start, pos - start));
    if (v <= 0) fail("exponent must be positive");
    return v;
  }

  Word word() {
    std::vector<std::pair<Variable, int>> exps;
    while (true) {
      Variable v{ident()};
      int e = eat('^') ? posint() : 1;
      exps.emplace_back(std::move(v), e);
      if (!eat('*')) break;
    }
    return Word(std::move(exps));
  }

  Term term() {
    std::vector<Word> ws{word()};
    while (eat('+')) ws.push_back(word());
    return Term(std::move(ws));
  }
};

}  // namespace

Term parse_term(const std::string& text) {
  Parser p{text};
  Term t = p.term();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("unexpected trailing input");
  return t;
}

Statement parse_statement(const std::string& text) {
  Parser p{text};
  Term l = p.term();
  p.skip_ws();
  StatementKind kind;
  if (p.eat('=')) {
    kind = StatementKind::Identity;
  } else if (p.eat('<')) {
    if (!p.eat('=')) p.fail("expected '<='");
    kind = StatementKind::Inequality;
  } else {
    p.fail("expected '=' or '<='");
  }
  Term r = p.term();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("unexpected trailing input");
  return {kind, std::move(l), std::move(r)};
}

// ---------------------------------------------------------------------------
// Printing

std::string print_word(const Word& w) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, e] : w.exponents()) {
    if (!first) os << "*";
    first = false;
    os << v.name();
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

std::string print_term(const Term& u) {
  std::ostringstream os;
  bool first = true;
  for (const auto& w : u.words()) {
    if (!first) os << " + ";
    first = false;
    os << print_word(w);
  }
  return os.str();
}

std::string print_statement(const Statement& st) {
  return print_term(st.lhs) +
         (st.kind == StatementKind::Identity ? " = " : " <= ") +
         print_term(st.rhs);
}

}  // namespace aisr
