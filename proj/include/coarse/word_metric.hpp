#pragma once

#include "coarse/group.hpp"
#include "coarse/metric.hpp"

#include <optional>
#include <vector>

namespace coarse {

struct GeneratingSet {
  std::vector<Element> elements;
  bool symmetric = false;  // set when elements already equal their symmetric closure

  static GeneratingSet make(const FiniteGroup& group, std::vector<Element> elements);
};

/// ρ_B(x, y) = |x⁻¹y|_B over B^± = B ∪ B⁻¹, by breadth-first search.
class WordMetric {
 public:
  WordMetric(const FiniteGroup& group, const GeneratingSet& generators);

  /// |g|_B, or nullopt when g lies outside the generated subgroup.
  std::optional<std::size_t> length(Element g) const { return lengths_[g]; }
  /// nullopt is the "infinite" token: x and y lie in different cosets of ⟨B⟩.
  std::optional<std::size_t> distance(Element x, Element y) const;
  bool generates() const { return members_.size() == group_->order(); }
  /// Elements of ⟨B⟩ in breadth-first order.
  const std::vector<Element>& members() const { return members_; }
  const std::vector<Element>& alphabet() const { return alphabet_; }

  /// The metric on ⟨B⟩ (points in increasing element order).
  NatMetricSpace to_space() const;

 private:
  const FiniteGroup* group_;
  std::vector<Element> alphabet_;
  std::vector<std::optional<std::size_t>> lengths_;
  std::vector<Element> members_;
};

/// Cumulative ball sizes |B^{±n}| (n = 0 … n_max), counting the identity in every ball.
std::vector<std::size_t> growth(const FiniteGroup& group, const GeneratingSet& generators, std::size_t n_max);

/// Word metric of Z^k restricted to the box [-radius, radius]^k, computed by breadth-first
/// search inside the box with steps from `steps` and their negatives.
/// Points are listed in lexicographic coordinate order with ids "(x,y,...)".
NatMetricSpace box_word_metric(std::size_t dimension, int radius, const std::vector<std::vector<int>>& steps);

}  // namespace coarse
