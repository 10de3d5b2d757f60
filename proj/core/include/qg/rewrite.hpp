#pragma once

#include <memory>
#include <vector>

#include "qg/ncpoly.hpp"

namespace qg {

/// Oriented relation lhs -> rhs with rhs strictly below lhs in the monomial order.
struct Rule {
  Word lhs;
  NCPoly rhs;
};

/// Relation lead = tail where lead - tail is central modulo the string rules.
///
/// Used when the string rules make normal words exactly the sorted words, as for
/// the quantum determinant of SL_q(N), N >= 3: any sorted word whose letter
/// multiset contains the lead's multiset is reducible.
struct CentralRule {
  Word lead;
  NCPoly tail;
};

class RewriteSystem {
 public:
  RewriteSystem() = default;
  /// Validates that every rhs is below its lhs. Throws InvariantViolation otherwise.
  RewriteSystem(std::size_t generator_count, MonomialOrder order, std::vector<Rule> rules,
                std::vector<CentralRule> central = {});

  /// Orients and interreduces a relation list (each element means "= 0").
  ///
  /// Quadratic leading words become string rules; higher-degree leftovers become
  /// central rules after a centrality check. Linear or constant leading words mean
  /// the presented algebra collapses and raise UnsupportedRegime.
  static RewriteSystem from_relations(std::size_t generator_count, const MonomialOrder& order,
                                      const std::vector<NCPoly>& relations);

  std::size_t generator_count() const { return generator_count_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const std::vector<CentralRule>& central_rules() const { return central_; }

  NCPoly reduce(const NCPoly& x) const;
  NCPoly reduce_word(const Word& w) const;
  /// Reduction by the string rules only.
  NCPoly reduce_strings(const NCPoly& x) const;
  bool is_normal(const Word& w) const;
  /// Applies the given rule once at position `pos` of `w`.
  NCPoly apply_rule_at(const Word& w, std::size_t rule, std::size_t pos) const;

 private:
  struct Cache;
  const NCPoly& string_nf(const Word& w) const;
  NCPoly central_reduce(NCPoly x) const;
  /// Index of the rule whose lhs is the longest suffix of w, or -1.
  int suffix_rule(const Word& w) const;
  void validate() const;

  std::size_t generator_count_ = 0;
  MonomialOrder order_;
  std::vector<Rule> rules_;
  std::vector<CentralRule> central_;
  std::vector<std::vector<int>> central_counts_;
  std::size_t max_lhs_ = 0;
  std::shared_ptr<Cache> cache_;
};

struct CriticalPair {
  Word overlap;
  std::size_t rule_a = 0;
  std::size_t rule_b = 0;
  /// reduce(one step by rule_a) - reduce(one step by rule_b).
  NCPoly difference;
};

/// All overlaps and inclusions between string-rule leading words.
std::vector<CriticalPair> critical_pairs(const RewriteSystem& r);
bool is_locally_confluent(const RewriteSystem& r);

/// Normal words of degree <= max_degree sorted by the monomial order.
std::vector<Word> basis_words(const RewriteSystem& r, int max_degree);

}  // namespace qg
