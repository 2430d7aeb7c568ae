#include "coarse/word_metric.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace coarse {

GeneratingSet GeneratingSet::make(const FiniteGroup& group, std::vector<Element> elements) {
  if (elements.empty()) throw InputError("generating set must be nonempty");
  for (Element e : elements) {
    if (e >= group.order()) throw InputError("generator not in group");
  }
  GeneratingSet set;
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  set.symmetric = symmetric_closure(group, elements) == elements;
  set.elements = std::move(elements);
  return set;
}

WordMetric::WordMetric(const FiniteGroup& group, const GeneratingSet& generators)
    : group_(&group), lengths_(group.order()) {
  if (generators.elements.empty()) throw InputError("word_metric: empty generating set");
  alphabet_ = symmetric_closure(group, generators.elements);
  std::queue<Element> queue;
  lengths_[group.identity()] = 0;
  queue.push(group.identity());
  while (!queue.empty()) {
    Element u = queue.front();
    queue.pop();
    members_.push_back(u);
    for (Element s : alphabet_) {
      Element v = group.mul(u, s);
      if (!lengths_[v]) {
        lengths_[v] = *lengths_[u] + 1;
        queue.push(v);
      }
    }
  }
}

std::optional<std::size_t> WordMetric::distance(Element x, Element y) const {
  return lengths_[group_->mul(group_->inv(x), y)];
}

NatMetricSpace WordMetric::to_space() const {
  std::vector<Element> sorted = members_;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::string> ids;
  std::vector<std::vector<std::int64_t>> d(sorted.size(), std::vector<std::int64_t>(sorted.size()));
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    ids.push_back(group_->id(sorted[i]));
    for (std::size_t j = 0; j < sorted.size(); ++j) {
      d[i][j] = static_cast<std::int64_t>(*distance(sorted[i], sorted[j]));
    }
  }
  return NatMetricSpace(std::move(ids), std::move(d));
}

std::vector<std::size_t> growth(const FiniteGroup& group, const GeneratingSet& generators, std::size_t n_max) {
  WordMetric metric(group, generators);
  std::vector<std::size_t> counts(n_max + 1, 0);
  for (Element g : metric.members()) {
    for (std::size_t n = *metric.length(g); n <= n_max; ++n) ++counts[n];
  }
  return counts;
}

NatMetricSpace box_word_metric(std::size_t dimension, int radius, const std::vector<std::vector<int>>& steps) {
  if (dimension == 0 || radius < 0) throw InputError("box_word_metric: bad box");
  if (steps.empty()) throw InputError("box_word_metric: empty generating set");
  std::vector<std::vector<int>> alphabet;
  for (const auto& s : steps) {
    if (s.size() != dimension) throw InputError("box_word_metric: step has wrong dimension");
    alphabet.push_back(s);
    std::vector<int> neg(s);
    for (int& c : neg) c = -c;
    alphabet.push_back(std::move(neg));
  }

  const std::size_t side = static_cast<std::size_t>(2 * radius + 1);
  std::size_t count = 1;
  for (std::size_t i = 0; i < dimension; ++i) count *= side;
  auto decode = [&](std::size_t index) {
    std::vector<int> coords(dimension);
    for (std::size_t i = dimension; i-- > 0;) {
      coords[i] = static_cast<int>(index % side) - radius;
      index /= side;
    }
    return coords;
  };
  auto encode = [&](const std::vector<int>& coords) -> std::optional<std::size_t> {
    std::size_t index = 0;
    for (int c : coords) {
      if (c < -radius || c > radius) return std::nullopt;
      index = index * side + static_cast<std::size_t>(c + radius);
    }
    return index;
  };

  std::vector<std::string> ids;
  for (std::size_t p = 0; p < count; ++p) {
    auto c = decode(p);
    std::string id = "(";
    for (std::size_t i = 0; i < c.size(); ++i) id += (i ? "," : "") + std::to_string(c[i]);
    ids.push_back(id + ")");
  }
  std::vector<std::vector<std::int64_t>> d(count, std::vector<std::int64_t>(count, -1));
  for (std::size_t source = 0; source < count; ++source) {
    std::queue<std::size_t> queue;
    d[source][source] = 0;
    queue.push(source);
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop();
      auto cu = decode(u);
      for (const auto& s : alphabet) {
        std::vector<int> cv(cu);
        for (std::size_t i = 0; i < dimension; ++i) cv[i] += s[i];
        auto v = encode(cv);
        if (v && d[source][*v] < 0) {
          d[source][*v] = d[source][u] + 1;
          queue.push(*v);
        }
      }
    }
    for (std::size_t t = 0; t < count; ++t) {
      if (d[source][t] < 0) throw InputError("box_word_metric: steps do not connect the box");
    }
  }
  return NatMetricSpace(std::move(ids), std::move(d));
}

}  // namespace coarse
