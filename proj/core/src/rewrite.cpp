#include "qg/rewrite.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <unordered_map>

#include "qg/error.hpp"

namespace qg {

struct RewriteSystem::Cache {
  std::mutex mutex;
  std::unordered_map<Word, int, WordHash> lhs_index;
  std::unordered_map<Word, NCPoly, WordHash> strings;
  std::unordered_map<Word, NCPoly, WordHash> full;
};

namespace {

std::vector<int> letter_counts(const Word& w, std::size_t n) {
  std::vector<int> c(n, 0);
  for (Letter x : w) ++c[x];
  return c;
}

bool contains_counts(const std::vector<int>& big, const std::vector<int>& small) {
  for (std::size_t i = 0; i < big.size(); ++i)
    if (big[i] < small[i]) return false;
  return true;
}

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

}  // namespace

RewriteSystem::RewriteSystem(std::size_t generator_count, MonomialOrder order, std::vector<Rule> rules,
                             std::vector<CentralRule> central)
    : generator_count_(generator_count),
      order_(std::move(order)),
      rules_(std::move(rules)),
      central_(std::move(central)),
      cache_(std::make_shared<Cache>()) {
  if (order_.generator_count() != generator_count_) throw DimensionError("monomial order has the wrong generator count");
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    max_lhs_ = std::max(max_lhs_, rules_[i].lhs.size());
    cache_->lhs_index.try_emplace(rules_[i].lhs, static_cast<int>(i));
  }
  for (const auto& c : central_) central_counts_.push_back(letter_counts(c.lead, generator_count_));
  validate();
}

void RewriteSystem::validate() const {
  for (const auto& r : rules_) {
    if (r.lhs.empty()) throw InvariantViolation("rewrite rule with empty left-hand side");
    check_alphabet(NCPoly::monomial(r.lhs), generator_count_);
    check_alphabet(r.rhs, generator_count_);
    for (const auto& [w, c] : r.rhs.terms())
      if (!order_.less(w, r.lhs)) throw InvariantViolation("rewrite rule right-hand side is not below its left-hand side");
  }
  for (const auto& c : central_)
    for (const auto& [w, x] : c.tail.terms())
      if (!order_.less(w, c.lead)) throw InvariantViolation("central rule tail is not below its lead");
}

int RewriteSystem::suffix_rule(const Word& w) const {
  const std::size_t top = std::min(max_lhs_, w.size());
  for (std::size_t len = top; len >= 1; --len) {
    Word suffix(w.end() - static_cast<std::ptrdiff_t>(len), w.end());
    auto it = cache_->lhs_index.find(suffix);
    if (it != cache_->lhs_index.end()) return it->second;
  }
  return -1;
}

const NCPoly& RewriteSystem::string_nf(const Word& w) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->strings.find(w);
    if (it != cache_->strings.end()) return it->second;
  }
  NCPoly result;
  if (w.empty()) {
    result = NCPoly(1);
  } else {
    Word prefix(w.begin(), w.end() - 1);
    const NCPoly& p = string_nf(prefix);
    const bool prefix_normal = p.size() == 1 && p.terms().begin()->first == prefix && p.terms().begin()->second.is_one();
    if (prefix_normal) {
      const int k = suffix_rule(w);
      if (k < 0) {
        result = NCPoly::monomial(w);
      } else {
        const Rule& rule = rules_[static_cast<std::size_t>(k)];
        Word head(w.begin(), w.end() - static_cast<std::ptrdiff_t>(rule.lhs.size()));
        for (const auto& [u, c] : rule.rhs.terms()) result.add_scaled(string_nf(concat(head, u)), c);
      }
    } else {
      const NCPoly snapshot = p;
      Word mx;
      for (const auto& [m, c] : snapshot.terms()) {
        mx = m;
        mx.push_back(w.back());
        result.add_scaled(string_nf(mx), c);
      }
    }
  }
  std::lock_guard<std::mutex> lock(cache_->mutex);
  return cache_->strings.try_emplace(w, std::move(result)).first->second;
}

NCPoly RewriteSystem::central_reduce(NCPoly x) const {
  while (true) {
    const Word* target = nullptr;
    std::size_t rule = 0;
    for (const auto& [w, c] : x.terms()) {
      if (target && !order_.less(*target, w)) continue;
      auto counts = letter_counts(w, generator_count_);
      for (std::size_t k = 0; k < central_.size(); ++k)
        if (contains_counts(counts, central_counts_[k])) {
          target = &w;
          rule = k;
          break;
        }
    }
    if (!target) return x;
    const Word m = *target;
    const QScalar coef = x.coefficient(m);
    auto counts = letter_counts(m, generator_count_);
    for (std::size_t i = 0; i < generator_count_; ++i) counts[i] -= central_counts_[rule][i];
    Word cofactor;
    for (Letter l : order_.precedence())
      for (int i = 0; i < counts[l]; ++i) cofactor.push_back(l);
    NCPoly z = NCPoly::monomial(central_[rule].lead) - central_[rule].tail;
    NCPoly t = reduce_strings(NCPoly::monomial(cofactor) * z);
    if (t.is_zero() || order_.leading_word(t) != m)
      throw InvariantViolation("central rule reduction lost its leading word");
    x.add_scaled(t, -coef / t.coefficient(m));
  }
}

NCPoly RewriteSystem::reduce_strings(const NCPoly& x) const {
  NCPoly r;
  for (const auto& [w, c] : x.terms()) r.add_scaled(string_nf(w), c);
  return r;
}

NCPoly RewriteSystem::reduce_word(const Word& w) const {
  if (central_.empty()) return string_nf(w);
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->full.find(w);
    if (it != cache_->full.end()) return it->second;
  }
  NCPoly r = central_reduce(string_nf(w));
  std::lock_guard<std::mutex> lock(cache_->mutex);
  return cache_->full.try_emplace(w, std::move(r)).first->second;
}

NCPoly RewriteSystem::reduce(const NCPoly& x) const {
  NCPoly r;
  for (const auto& [w, c] : x.terms()) r.add_scaled(reduce_word(w), c);
  return r;
}

bool RewriteSystem::is_normal(const Word& w) const {
  for (std::size_t end = 1; end <= w.size(); ++end)
    if (suffix_rule(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(end))) >= 0) return false;
  if (!central_.empty()) {
    auto counts = letter_counts(w, generator_count_);
    for (const auto& cc : central_counts_)
      if (contains_counts(counts, cc)) return false;
  }
  return true;
}

NCPoly RewriteSystem::apply_rule_at(const Word& w, std::size_t rule, std::size_t pos) const {
  const Rule& r = rules_.at(rule);
  if (pos + r.lhs.size() > w.size() || !std::equal(r.lhs.begin(), r.lhs.end(), w.begin() + static_cast<std::ptrdiff_t>(pos)))
    throw InvariantViolation("rule does not match at the given position");
  Word head(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
  Word tail(w.begin() + static_cast<std::ptrdiff_t>(pos + r.lhs.size()), w.end());
  return NCPoly::monomial(head) * r.rhs * NCPoly::monomial(tail);
}

// ---------------------------------------------------------------- building from relations

namespace {

/// Reduced echelon form with pivots at leading words; every row is monic.
std::vector<NCPoly> order_rref(const std::vector<NCPoly>& rows, const MonomialOrder& order) {
  auto cmp = [&order](const Word& a, const Word& b) { return order.less(b, a); };
  std::map<Word, NCPoly, decltype(cmp)> basis(cmp);
  for (NCPoly r : rows) {
    for (const auto& [key, b] : basis) {
      QScalar c = r.coefficient(key);
      if (!c.is_zero()) r.add_scaled(b, -c);
    }
    if (r.is_zero()) continue;
    Word lw = order.leading_word(r);
    r *= r.coefficient(lw).inverse();
    for (auto& [key, b] : basis) {
      QScalar c = b.coefficient(lw);
      if (!c.is_zero()) b.add_scaled(r, -c);
    }
    basis.emplace(lw, std::move(r));
  }
  std::vector<NCPoly> out;
  for (auto& [k, b] : basis) out.push_back(std::move(b));
  return out;
}

Rule rule_from(const NCPoly& monic, const MonomialOrder& order) {
  Rule r;
  r.lhs = order.leading_word(monic);
  r.rhs = NCPoly::monomial(r.lhs) - monic;
  return r;
}

bool sorted_normal_words(const std::vector<Rule>& rules, const MonomialOrder& order, std::size_t n) {
  std::set<Word> lhs;
  for (const auto& r : rules) {
    if (r.lhs.size() != 2) return false;
    lhs.insert(r.lhs);
  }
  for (Letter x = 0; x < n; ++x)
    for (Letter y = 0; y < n; ++y) {
      const bool descending = order.rank(x) > order.rank(y);
      if (descending != (lhs.count(Word{x, y}) > 0)) return false;
    }
  return true;
}

}  // namespace

RewriteSystem RewriteSystem::from_relations(std::size_t generator_count, const MonomialOrder& order,
                                            const std::vector<NCPoly>& relations) {
  for (const auto& r : relations) check_alphabet(r, generator_count);
  std::vector<Rule> rules;
  std::vector<CentralRule> central;
  std::vector<NCPoly> pending = relations;
  for (int round = 0; round < 1000; ++round) {
    RewriteSystem current(generator_count, order, rules, central);
    std::vector<NCPoly> reduced;
    for (const auto& r : pending) {
      NCPoly x = current.reduce(r);
      if (!x.is_zero()) reduced.push_back(std::move(x));
    }
    if (reduced.empty()) return current;
    auto rows = order_rref(reduced, order);
    std::vector<NCPoly> rest;
    bool added = false;
    for (const auto& row : rows) {
      const Word& lw = order.leading_word(row);
      if (lw.empty()) throw UnsupportedRegime("relations imply 1 = 0");
      if (lw.size() == 1)
        throw UnsupportedRegime("relations imply a linear relation among generators; the algebra collapses");
      if (lw.size() == 2) {
        rules.push_back(rule_from(row, order));
        added = true;
      } else {
        rest.push_back(row);
      }
    }
    if (!added) {
      // Only higher-degree relations remain; take the smallest one.
      const NCPoly& row = rest.front();
      const Word lw = order.leading_word(row);
      bool is_central = sorted_normal_words(rules, order, generator_count);
      if (is_central)
        for (Letter g = 0; g < generator_count && is_central; ++g) {
          NCPoly gen = NCPoly::generator(g);
          is_central = current.reduce(gen * row - row * gen).is_zero();
        }
      if (is_central) {
        central.push_back(CentralRule{lw, NCPoly::monomial(lw) - row});
      } else {
        rules.push_back(rule_from(row, order));
      }
      rest.erase(rest.begin());
    }
    // Interreduce right-hand sides; rules whose lhs became reducible go back to pending.
    for (bool changed = true; changed;) {
      changed = false;
      RewriteSystem sys(generator_count, order, rules, central);
      for (std::size_t i = 0; i < rules.size(); ++i) {
        bool lhs_reducible = false;
        for (std::size_t j = 0; j < rules.size() && !lhs_reducible; ++j) {
          if (i == j || rules[j].lhs.size() > rules[i].lhs.size()) continue;
          lhs_reducible = std::search(rules[i].lhs.begin(), rules[i].lhs.end(), rules[j].lhs.begin(), rules[j].lhs.end()) !=
                          rules[i].lhs.end();
        }
        if (lhs_reducible) {
          rest.push_back(NCPoly::monomial(rules[i].lhs) - rules[i].rhs);
          rules.erase(rules.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
        NCPoly nr = sys.reduce(rules[i].rhs);
        if (nr != rules[i].rhs) {
          rules[i].rhs = std::move(nr);
          changed = true;
        }
      }
    }
    pending = std::move(rest);
  }
  throw InvariantViolation("rewrite system construction did not stabilize");
}

// ---------------------------------------------------------------- critical pairs / basis

std::vector<CriticalPair> critical_pairs(const RewriteSystem& r) {
  std::vector<CriticalPair> out;
  const auto& rules = r.rules();
  auto add = [&](const Word& overlap, std::size_t a, std::size_t pa, std::size_t b, std::size_t pb) {
    NCPoly d = r.reduce(r.apply_rule_at(overlap, a, pa)) - r.reduce(r.apply_rule_at(overlap, b, pb));
    out.push_back(CriticalPair{overlap, a, b, std::move(d)});
  };
  for (std::size_t a = 0; a < rules.size(); ++a)
    for (std::size_t b = 0; b < rules.size(); ++b) {
      const Word& u = rules[a].lhs;
      const Word& v = rules[b].lhs;
      // Proper overlaps: suffix of u equals prefix of v.
      for (std::size_t k = 1; k < std::min(u.size(), v.size()); ++k) {
        if (!std::equal(u.end() - static_cast<std::ptrdiff_t>(k), u.end(), v.begin())) continue;
        Word w = u;
        w.insert(w.end(), v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
        add(w, a, 0, b, u.size() - k);
      }
      // Inclusions: v occurs inside u.
      if (a != b && v.size() <= u.size() && !(v.size() == u.size() && b < a)) {
        for (std::size_t p = 0; p + v.size() <= u.size(); ++p)
          if (std::equal(v.begin(), v.end(), u.begin() + static_cast<std::ptrdiff_t>(p))) add(u, a, 0, b, p);
      }
    }
  return out;
}

bool is_locally_confluent(const RewriteSystem& r) {
  for (const auto& cp : critical_pairs(r))
    if (!cp.difference.is_zero()) return false;
  return true;
}

std::vector<Word> basis_words(const RewriteSystem& r, int max_degree) {
  std::vector<Word> all{Word{}};
  std::vector<Word> level{Word{}};
  for (int d = 1; d <= max_degree; ++d) {
    std::vector<Word> next;
    for (const auto& w : level)
      for (Letter x = 0; x < r.generator_count(); ++x) {
        Word e = w;
        e.push_back(x);
        if (r.reduce_word(e) == NCPoly::monomial(e)) next.push_back(std::move(e));
      }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::sort(all.begin(), all.end(), [&r](const Word& a, const Word& b) { return r.order().less(a, b); });
  return all;
}

}  // namespace qg
