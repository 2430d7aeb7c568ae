#include "coarse/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_set>

namespace coarse {

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) throw InputError("permutation image array is not a bijection");
    seen[x] = 1;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  Perm p;
  p.images_ = std::move(images);
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  Perm p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) p.images_[images_[i]] = static_cast<Point>(i);
  return p;
}

Tuple Perm::apply(const Tuple& t) const {
  Tuple out;
  out.reserve(t.size());
  for (Point x : t) out.push_back(images_.at(x));
  return out;
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw InputError("composing permutations of different degree");
  Perm r;
  r.images_.resize(q.images_.size());
  for (std::size_t i = 0; i < q.images_.size(); ++i) r.images_[i] = p.images_[q.images_[i]];
  return r;
}

namespace {

std::size_t hash_points(const std::vector<Point>& v) {
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : v) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace

std::size_t PermHash::operator()(const Perm& p) const noexcept { return hash_points(p.images()); }
std::size_t TupleHash::operator()(const Tuple& t) const noexcept { return hash_points(t); }

PermGroup::PermGroup(std::size_t degree_, std::vector<Perm> generators_)
    : degree(degree_), generators(std::move(generators_)) {
  for (const auto& g : generators) {
    if (g.degree() != degree) throw InputError("generator degree does not match group degree");
  }
}

std::optional<std::size_t> GroupElements::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t GroupElements::at(const Perm& p) const {
  auto i = index_of(p);
  if (!i) throw InputError("permutation is not an element of the group");
  return *i;
}

GroupElements enumerate(const PermGroup& group, std::size_t cap) {
  if (cap < 1) throw InputError("enumerate: cap must be at least 1");
  GroupElements out;
  Perm id = Perm::identity(group.degree);
  out.index_.emplace(id, 0);
  out.elements_.push_back(std::move(id));
  for (std::size_t i = 0; i < out.elements_.size(); ++i) {
    for (const auto& s : group.generators) {
      Perm p = out.elements_[i] * s;
      if (out.index_.contains(p)) continue;
      if (out.elements_.size() >= cap) throw CapExceeded("enumerate", out.elements_.size());
      out.index_.emplace(p, out.elements_.size());
      out.elements_.push_back(std::move(p));
    }
  }
  return out;
}

FiniteGroup to_finite_group(const GroupElements& elements) {
  const std::size_t n = elements.order();
  constexpr std::size_t kTableCap = 4096;
  if (n > kTableCap) throw CapExceeded("to_finite_group: multiplication table", n);
  std::vector<std::string> ids;
  std::vector<Element> mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    std::string id = "[";
    const auto& images = elements[a].images();
    for (std::size_t i = 0; i < images.size(); ++i) id += (i ? "," : "") + std::to_string(images[i]);
    ids.push_back(id + "]");
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = static_cast<Element>(elements.at(elements[a] * elements[b]));
  }
  return FiniteGroup(std::move(ids), std::move(mul));
}

std::vector<Tuple> tuple_orbit(const std::vector<Perm>& generators, const Tuple& t) {
  std::unordered_set<Tuple, TupleHash> seen{t};
  std::deque<Tuple> queue{t};
  while (!queue.empty()) {
    Tuple u = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      Tuple v = g.apply(u);
      if (seen.insert(v).second) queue.push_back(std::move(v));
    }
  }
  std::vector<Tuple> orbit(seen.begin(), seen.end());
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

OrbitalType orbital_type(const std::vector<Perm>& generators, const Tuple& t) {
  auto orbit = tuple_orbit(generators, t);
  return {orbit.front(), orbit.size()};
}

std::vector<std::size_t> stabilizer_elements(const GroupElements& elements, const Tuple& abar) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < elements.order(); ++i) {
    if (elements[i].apply(abar) == abar) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> subgroup_elements(const GroupElements& elements, const std::vector<Perm>& gens) {
  std::vector<std::size_t> members{0};
  std::vector<char> seen(elements.order(), 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (const auto& s : gens) {
      std::size_t p = elements.at(elements[members[i]] * s);
      if (!seen[p]) {
        seen[p] = 1;
        members.push_back(p);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<std::size_t> product_set(const GroupElements& elements, const std::vector<std::size_t>& x,
                                     const std::vector<std::size_t>& y) {
  std::vector<char> hit(elements.order(), 0);
  for (std::size_t a : x) {
    for (std::size_t b : y) hit[elements.at(elements[a] * elements[b])] = 1;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < hit.size(); ++i) {
    if (hit[i]) out.push_back(i);
  }
  return out;
}

namespace {

void check_tuple(const PermGroup& group, const Tuple& t) {
  for (Point x : t) {
    if (x >= group.degree) throw InputError("tuple point outside the group's degree");
  }
}

}  // namespace

PermGroup pointwise_stabilizer(const PermGroup& group, const Tuple& abar, std::size_t cap,
                               const StabilizerCallback& structural) {
  check_tuple(group, abar);
  if (abar.empty()) return group;
  std::optional<GroupElements> elements;
  try {
    elements = enumerate(group, cap);
  } catch (const CapExceeded&) {
    if (!structural) throw;
    std::vector<Perm> gens = structural(abar);
    for (const auto& g : gens) {
      if (g.degree() != group.degree || g.apply(abar) != abar) {
        throw InputError("structural stabiliser generator does not fix the tuple");
      }
    }
    return PermGroup(group.degree, std::move(gens));
  }

  std::vector<Perm> gens;
  std::vector<char> in_closure(elements->order(), 0);
  in_closure[0] = 1;
  for (std::size_t i : stabilizer_elements(*elements, abar)) {
    if (in_closure[i]) continue;
    gens.push_back((*elements)[i]);
    for (std::size_t j : subgroup_elements(*elements, gens)) in_closure[j] = 1;
  }
  return PermGroup(group.degree, std::move(gens));
}

bool double_coset_eq(const PermGroup& group, const Perm& g, const Perm& f, const Tuple& abar, const Tuple& bbar,
                     std::size_t cap) {
  check_tuple(group, abar);
  check_tuple(group, bbar);
  const PermGroup wa = pointwise_stabilizer(group, abar, cap);
  const auto orbit = tuple_orbit(wa, g.apply(bbar));
  return std::binary_search(orbit.begin(), orbit.end(), f.apply(bbar));
}

DoubleCosetReport double_coset_conditions(const PermGroup& group, const Perm& g, const Perm& f,
                                          const Tuple& abar, const Tuple& bbar, std::size_t cap) {
  DoubleCosetReport report;
  report.relative_types_equal = double_coset_eq(group, g, f, abar, bbar, cap);

  auto joint = [&](const Perm& p) {
    Tuple t = p.apply(bbar);
    t.insert(t.end(), abar.begin(), abar.end());
    return orbital_type(group.generators, t).representative;
  };
  report.joint_types_equal = joint(g) == joint(f);

  const GroupElements elements = enumerate(group, cap);
  const auto wa = stabilizer_elements(elements, abar);
  const auto wb = stabilizer_elements(elements, bbar);
  auto coset = [&](const Perm& p) {
    return product_set(elements, product_set(elements, wa, {elements.at(p)}), wb);
  };
  report.double_cosets_equal = coset(g) == coset(f);
  return report;
}

ContainmentReport boundedness_containment(const PermGroup& group, const Tuple& abar, const Tuple& bbar,
                                          const std::vector<Perm>& f, std::size_t cap) {
  check_tuple(group, abar);
  check_tuple(group, bbar);
  const GroupElements elements = enumerate(group, cap);
  const auto wa = stabilizer_elements(elements, abar);
  const auto wb = stabilizer_elements(elements, bbar);
  std::vector<std::size_t> fwd, inv;
  for (const auto& p : f) {
    fwd.push_back(elements.at(p));
    inv.push_back(elements.at(p.inverse()));
  }
  auto product = product_set(elements, wb, inv);
  product = product_set(elements, product, wb);
  product = product_set(elements, product, fwd);
  product = product_set(elements, product, wb);

  ContainmentReport report;
  report.subgroup_order = wa.size();
  report.product_size = product.size();
  for (std::size_t w : wa) {
    if (!std::binary_search(product.begin(), product.end(), w)) report.missing.push_back(elements[w]);
  }
  report.holds = report.missing.empty();
  return report;
}

std::vector<Perm> stationarity_connectors(const PermGroup& group, const Tuple& abar, const Tuple& bbar,
                                          const IndependenceRelation& independent, std::size_t cap) {
  const PermGroup wa = pointwise_stabilizer(group, abar, cap);
  const PermGroup wb = pointwise_stabilizer(group, bbar, cap);
  std::map<Tuple, Tuple> by_type;  // O(c̄/b̄) representative -> first c̄ found
  for (const auto& c : tuple_orbit(wa, bbar)) {
    if (!independent(c, bbar)) continue;
    by_type.try_emplace(orbital_type(wb.generators, c).representative, c);
  }
  const GroupElements wa_elements = enumerate(wa, cap);
  std::vector<Perm> connectors;
  for (const auto& [type, c] : by_type) {
    for (const auto& p : wa_elements.elements()) {
      if (p.apply(bbar) == c) {
        connectors.push_back(p);
        break;
      }
    }
  }
  return connectors;
}

}  // namespace coarse
