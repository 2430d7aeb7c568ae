#include "coarse/group.hpp"

#include <algorithm>

namespace coarse {

FiniteGroup::FiniteGroup(std::vector<std::string> ids, std::vector<Element> table)
    : ids_(std::move(ids)), table_(std::move(table)) {
  const std::size_t n = ids_.size();
  if (n == 0) throw InputError("group must be nonempty");
  if (table_.size() != n * n) throw InputError("multiplication table has wrong size");
  for (Element e : table_) {
    if (e >= n) throw InputError("multiplication table entry out of range");
  }
  std::optional<Element> identity;
  for (Element e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Element g = 0; g < n && ok; ++g) ok = mul(e, g) == g && mul(g, e) == g;
    if (ok) identity = e;
  }
  if (!identity) throw InputError("multiplication table has no identity");
  identity_ = *identity;
  inverse_.assign(n, 0);
  for (Element g = 0; g < n; ++g) {
    bool found = false;
    for (Element h = 0; h < n && !found; ++h) {
      if (mul(g, h) == identity_ && mul(h, g) == identity_) {
        inverse_[g] = h;
        found = true;
      }
    }
    if (!found) throw InputError("element " + ids_[g] + " has no inverse");
  }
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw InputError("cyclic group of order 0");
  std::vector<std::string> ids;
  std::vector<Element> mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    ids.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = static_cast<Element>((a + b) % n);
  }
  return FiniteGroup(std::move(ids), std::move(mul));
}

FiniteGroup FiniteGroup::dihedral(std::size_t n) {
  if (n == 0) throw InputError("dihedral group of a 0-gon");
  // Element (f, i) = s^f r^i stored at index f*n + i; r s = s r^{-1}.
  const std::size_t order = 2 * n;
  std::vector<std::string> ids;
  for (std::size_t f = 0; f < 2; ++f) {
    for (std::size_t i = 0; i < n; ++i) ids.push_back((f ? "s" : "r") + std::to_string(i));
  }
  std::vector<Element> mul(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      std::size_t fa = a / n, ia = a % n, fb = b / n, ib = b % n;
      // s^fa r^ia s^fb r^ib = s^(fa+fb) r^(±ia + ib)
      std::size_t i = fb ? (n - ia + ib) % n : (ia + ib) % n;
      mul[a * order + b] = static_cast<Element>(((fa + fb) % 2) * n + i);
    }
  }
  return FiniteGroup(std::move(ids), std::move(mul));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) ids.push_back("(" + a.id(i) + "," + b.id(j) + ")");
  }
  std::vector<Element> mul(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      Element i = a.mul(x / nb, y / nb);
      Element j = b.mul(x % nb, y % nb);
      mul[x * n + y] = static_cast<Element>(i * nb + j);
    }
  }
  return FiniteGroup(std::move(ids), std::move(mul));
}

std::optional<Element> FiniteGroup::find(const std::string& id) const {
  auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) return std::nullopt;
  return static_cast<Element>(it - ids_.begin());
}

Element FiniteGroup::at(const std::string& id) const {
  auto e = find(id);
  if (!e) throw InputError("unknown group element '" + id + "'");
  return *e;
}

Element FiniteGroup::power(Element g, std::size_t n) const {
  Element result = identity_;
  for (std::size_t i = 0; i < n; ++i) result = mul(result, g);
  return result;
}

std::size_t FiniteGroup::element_order(Element g) const {
  std::size_t k = 1;
  for (Element x = g; x != identity_; x = mul(x, g)) ++k;
  return k;
}

ValidationReport FiniteGroup::validate(std::size_t assoc_cap) const {
  ValidationReport report;
  const std::size_t n = order();
  const std::size_t m = std::min(n, assoc_cap);
  for (Element a = 0; a < m; ++a) {
    for (Element b = 0; b < m; ++b) {
      for (Element c = 0; c < m; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) report.violations.push_back({"associativity", {a, b, c}});
      }
    }
  }
  for (Element g = 0; g < n; ++g) {
    if (mul(identity_, g) != g || mul(g, identity_) != g) report.violations.push_back({"identity", {g}});
    if (mul(inv(g), g) != identity_) report.violations.push_back({"inverse", {g}});
  }
  return report;
}

std::vector<Element> symmetric_closure(const FiniteGroup& g, std::vector<Element> subset) {
  const std::size_t n = subset.size();
  for (std::size_t i = 0; i < n; ++i) subset.push_back(g.inv(subset[i]));
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  return subset;
}

}  // namespace coarse
