#include "aisr/derivation.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace aisr {

namespace {

bool word_subset(const std::vector<Word>& a, const std::vector<Word>& b) {
  // both sorted (Term invariant)
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Word> word_difference(const std::vector<Word>& a,
                                  const std::vector<Word>& b) {
  std::vector<Word> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

// Collects every singleton-image match of `pattern` into the word set
// `targets` under the fixed multiplier.
struct SingletonMatcher {
  const std::vector<Word>& targets;
  std::vector<Word> pwords;  // pattern words, longest first
  const std::optional<Word>* p = nullptr;
  std::map<Variable, Word> images;
  long long& nodes;
  long long budget;
  bool& truncated;
  std::vector<std::map<Variable, Word>> out;

  bool tick() {
    if (++nodes > budget) {
      truncated = true;
      return false;
    }
    return true;
  }

  void match_word(std::size_t wi) {
    if (!tick()) return;
    if (wi == pwords.size()) {
      out.push_back(images);
      return;
    }
    const Word& w = pwords[wi];
    for (const Word& target : targets) {
      Word rem = target;
      if (*p) {
        if (!(*p)->divides(rem)) continue;
        rem = rem.divide(**p);
      }
      std::vector<std::pair<Variable, int>> unassigned;
      bool feasible = true;
      for (const auto& [v, e] : w.exponents()) {
        auto it = images.find(v);
        if (it == images.end()) {
          unassigned.emplace_back(v, e);
          continue;
        }
        Word de = it->second.pow(e);
        if (!de.divides(rem)) {
          feasible = false;
          break;
        }
        rem = rem.divide(de);
      }
      if (feasible) factor(wi, unassigned, 0, rem);
      if (truncated) return;
    }
  }

  void factor(std::size_t wi, const std::vector<std::pair<Variable, int>>& vars,
              std::size_t vi, const Word& rem) {
    if (!tick()) return;
    if (vi == vars.size()) {
      if (rem.empty()) match_word(wi + 1);
      return;
    }
    const auto& [v, e] = vars[vi];
    if (vi + 1 == vars.size()) {
      auto d = rem.root(e);
      if (!d || d->empty()) return;
      images.emplace(v, *d);
      factor(wi, vars, vi + 1, Word{});
      images.erase(v);
      return;
    }
    for (const auto& d : rem.divisors()) {
      Word de = d.pow(e);
      if (!de.divides(rem)) continue;
      images.emplace(v, d);
      factor(wi, vars, vi + 1, rem.divide(de));
      images.erase(v);
      if (truncated) return;
    }
  }
};

using ImageSet = std::map<Variable, std::set<Word>>;

bool selections_all_match(const ImageSet& merged,
                          const std::set<std::map<Variable, Word>>& have) {
  long long combos = 1;
  for (const auto& [v, ws] : merged) {
    combos *= static_cast<long long>(ws.size());
    if (combos > 256) return false;  // treated as "do not merge"
  }
  std::vector<std::pair<Variable, std::vector<Word>>> axes;
  for (const auto& [v, ws] : merged) axes.emplace_back(v, std::vector<Word>(ws.begin(), ws.end()));
  std::vector<std::size_t> idx(axes.size(), 0);
  while (true) {
    std::map<Variable, Word> sel;
    for (std::size_t i = 0; i < axes.size(); ++i)
      sel.emplace(axes[i].first, axes[i].second[idx[i]]);
    if (!have.count(sel)) return false;
    std::size_t i = axes.size();
    while (i > 0) {
      --i;
      if (++idx[i] < axes[i].second.size()) break;
      idx[i] = 0;
      if (i == 0) return true;
    }
    if (axes.empty()) return true;
  }
}

}  // namespace

std::vector<RewriteMatch> rewrite_matches(const Term& w, const Term& lhs,
                                          const Term& rhs,
                                          const DeriveOptions& opts,
                                          long long& nodes, bool& truncated) {
  std::vector<RewriteMatch> out;

  std::vector<std::optional<Word>> multipliers{std::nullopt};
  {
    std::set<Word> divisors;
    for (const auto& ww : w.words())
      for (const auto& d : ww.divisors()) divisors.insert(d);
    for (const auto& d : divisors) multipliers.emplace_back(d);
  }

  // Variables of rhs not bound by matching lhs get single-variable images
  // drawn from w; this keeps the neighbor set finite and is flagged as a cap.
  std::vector<Variable> free_vars;
  {
    auto cl = lhs.content();
    for (const auto& v : rhs.content())
      if (!std::binary_search(cl.begin(), cl.end(), v)) free_vars.push_back(v);
  }
  std::vector<Word> free_pool;
  for (const auto& v : w.content()) free_pool.push_back(Word::variable(v));

  auto emit = [&](const std::optional<Word>& p,
                  const std::map<Variable, std::set<Word>>& images) {
    // extend over the free variables of rhs
    std::vector<std::map<Variable, std::set<Word>>> assignments{images};
    for (const auto& fv : free_vars) {
      truncated = true;  // single-variable images only
      std::vector<std::map<Variable, std::set<Word>>> next;
      for (const auto& a : assignments)
        for (const auto& fw : free_pool) {
          auto b = a;
          b[fv] = {fw};
          next.push_back(std::move(b));
        }
      assignments = std::move(next);
    }
    for (const auto& a : assignments) {
      Substitution subst;
      for (const auto& [v, ws] : a)
        subst.set(v, Term(std::vector<Word>(ws.begin(), ws.end())));
      Term il = subst.apply(lhs);
      Term ir = subst.apply(rhs);
      if (p) {
        il = il.times(*p);
        ir = ir.times(*p);
      }
      if (!word_subset(il.words(), w.words())) continue;
      out.push_back({p, std::move(subst), std::move(il), std::move(ir)});
    }
  };

  for (const auto& p : multipliers) {
    bool trunc = false;
    SingletonMatcher m{w.words(), lhs.words(), &p, {}, nodes, opts.budget,
                       trunc, {}};
    std::sort(m.pwords.begin(), m.pwords.end(),
              [](const Word& a, const Word& b) {
                if (a.length() != b.length()) return a.length() > b.length();
                return a < b;
              });
    m.match_word(0);
    if (trunc) truncated = true;

    std::set<std::map<Variable, Word>> have(m.out.begin(), m.out.end());
    std::set<ImageSet> emitted;
    std::deque<ImageSet> frontier;
    for (const auto& single : have) {
      ImageSet is;
      for (const auto& [v, wd] : single) is[v].insert(wd);
      if (emitted.insert(is).second) {
        emit(p, is);
        frontier.push_back(std::move(is));
      }
    }
    // merge compatible matches into multi-word images, breadth first
    while (!frontier.empty() &&
           static_cast<int>(emitted.size()) < opts.max_multi_matches) {
      ImageSet cur = std::move(frontier.front());
      frontier.pop_front();
      for (const auto& single : have) {
        ImageSet merged = cur;
        bool within = true;
        for (const auto& [v, wd] : single) {
          merged[v].insert(wd);
          if (static_cast<int>(merged[v].size()) > opts.max_image_words)
            within = false;
        }
        if (!within || emitted.count(merged)) continue;
        if (!selections_all_match(merged, have)) continue;
        if (static_cast<int>(emitted.size()) >= opts.max_multi_matches) {
          truncated = true;
          break;
        }
        emitted.insert(merged);
        emit(p, merged);
        frontier.push_back(std::move(merged));
      }
    }
    if (nodes > opts.budget) {
      truncated = true;
      break;
    }
  }
  return out;
}

namespace {

struct Edge {
  Term parent;
  DerivationStep step;
};

}  // namespace

DerivationTrace derive(const BasisSpec& basis, const Statement& goal,
                       const DeriveOptions& opts) {
  auto [start, target] = goal.as_identity();
  DerivationTrace trace{goal, start, target, {}, false, false, 0};
  if (start == target) {
    trace.found = true;
    return trace;
  }

  std::map<Term, Edge> parents;
  std::deque<std::pair<Term, int>> queue;
  queue.emplace_back(start, 0);
  std::set<Term> seen{start};

  auto reconstruct = [&](Term t) {
    std::vector<DerivationStep> steps;
    while (t != start) {
      auto it = parents.find(t);
      steps.push_back(it->second.step);
      t = it->second.parent;
    }
    std::reverse(steps.begin(), steps.end());
    trace.steps = std::move(steps);
    trace.found = true;
  };

  while (!queue.empty()) {
    auto [cur, depth] = queue.front();
    queue.pop_front();
    if (depth >= opts.max_depth) continue;
    for (std::size_t si = 0; si < basis.size(); ++si) {
      auto [l, r] = basis.statements[si].as_identity();
      for (int dir = 0; dir < 2; ++dir) {
        const Term& from = dir == 0 ? l : r;
        const Term& to = dir == 0 ? r : l;
        auto matches =
            rewrite_matches(cur, from, to, opts, trace.nodes, trace.truncated);
        for (const auto& m : matches) {
          // remainder = (cur \ image) + any kept subset of the image words
          std::vector<Word> base = word_difference(cur.words(), m.image_lhs.words());
          const auto& overlap = m.image_lhs.words();
          std::size_t nsub = overlap.size() <= 6 ? (1u << overlap.size()) : 1u;
          if (static_cast<int>(nsub) > opts.max_overlap_subsets) {
            nsub = 1;
            trace.truncated = true;
          }
          for (std::size_t mask = 0; mask < nsub; ++mask) {
            std::vector<Word> ws = base;
            for (std::size_t b = 0; b < overlap.size(); ++b)
              if (mask >> b & 1) ws.push_back(overlap[b]);
            for (const auto& iw : m.image_rhs.words()) ws.push_back(iw);
            Term neighbor{ws};
            if (seen.count(neighbor)) continue;
            seen.insert(neighbor);
            DerivationStep step{basis.labels[si], dir == 1, m.multiplier,
                                m.subst, cur, neighbor};
            parents.emplace(neighbor, Edge{cur, step});
            if (neighbor == target) {
              reconstruct(neighbor);
              return trace;
            }
            queue.emplace_back(std::move(neighbor), depth + 1);
          }
        }
        if (trace.nodes > opts.budget) {
          trace.truncated = true;
          return trace;
        }
      }
    }
  }
  return trace;
}

bool check_trace(const BasisSpec& basis, const DerivationTrace& trace,
                 std::string* error) {
  auto fail = [&](const std::string& msg) {
    if (error) *error = msg;
    return false;
  };
  auto [start, target] = trace.goal.as_identity();
  if (start != trace.start || target != trace.target)
    return fail("normalized sides do not match the goal");
  if (!trace.found) return fail("trace not marked found");
  if (trace.steps.empty()) return start == target || fail("empty trace with distinct sides");

  if (trace.steps.front().before != start) return fail("first step does not start at the goal side");
  if (trace.steps.back().after != target) return fail("last step does not reach the target side");
  for (std::size_t i = 0; i + 1 < trace.steps.size(); ++i)
    if (trace.steps[i].after != trace.steps[i + 1].before)
      return fail("step " + std::to_string(i + 1) + " does not chain");

  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& step = trace.steps[i];
    auto it = std::find(basis.labels.begin(), basis.labels.end(), step.label);
    if (it == basis.labels.end())
      return fail("unknown statement label: " + step.label);
    auto [l, r] = basis.statements[it - basis.labels.begin()].as_identity();
    if (step.reversed) std::swap(l, r);
    Term il = l, ir = r;
    try {
      il = step.subst.apply(l);
      ir = step.subst.apply(r);
    } catch (const std::out_of_range&) {
      return fail("step " + std::to_string(i) +
                  ": substitution does not cover the statement");
    }
    if (step.multiplier) {
      il = il.times(*step.multiplier);
      ir = ir.times(*step.multiplier);
    }
    // before = il + rem and after = ir + rem for some word set rem
    const auto& bw = step.before.words();
    const auto& aw = step.after.words();
    if (!word_subset(il.words(), bw)) return fail("step " + std::to_string(i) + ": lhs image not inside source");
    if (!word_subset(ir.words(), aw)) return fail("step " + std::to_string(i) + ": rhs image not inside result");
    if (!word_subset(word_difference(bw, il.words()), aw))
      return fail("step " + std::to_string(i) + ": dropped remainder words");
    if (!word_subset(word_difference(aw, ir.words()), bw))
      return fail("step " + std::to_string(i) + ": invented remainder words");
  }
  return true;
}

}  // namespace aisr
