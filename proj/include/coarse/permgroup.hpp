#pragma once

// Finite permutation groups given by generators: enumeration, tuple orbits,
// orbital types, pointwise stabilisers and double cosets.

#include "coarse/common.hpp"
#include "coarse/group.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

namespace coarse {

using Point = std::uint32_t;
using Tuple = std::vector<Point>;

/// Permutation of {0, …, n−1} stored as its image array. Products apply the right
/// factor first: (p * q)(x) = p(q(x)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<Point> images);  // throws InputError unless a bijection
  static Perm identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }
  bool is_identity() const;

  Perm inverse() const;
  Tuple apply(const Tuple& t) const;

  friend Perm operator*(const Perm& p, const Perm& q);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

struct TupleHash {
  std::size_t operator()(const Tuple& t) const noexcept;
};

struct PermGroup {
  std::size_t degree = 0;
  std::vector<Perm> generators;

  PermGroup() = default;
  PermGroup(std::size_t degree, std::vector<Perm> generators);  // checks degrees
};

inline constexpr std::size_t kDefaultEnumerationCap = 200000;

/// Enumerated elements of a permutation group, in breadth-first order from the identity
/// (element 0).
class GroupElements {
 public:
  const std::vector<Perm>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  const Perm& operator[](std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> index_of(const Perm& p) const;
  std::size_t at(const Perm& p) const;  // throws InputError

  friend GroupElements enumerate(const PermGroup& group, std::size_t cap);

 private:
  std::vector<Perm> elements_;
  std::unordered_map<Perm, std::size_t, PermHash> index_;
};

/// Breadth-first closure of the generators; throws CapExceeded past `cap` elements.
GroupElements enumerate(const PermGroup& group, std::size_t cap = kDefaultEnumerationCap);

/// The enumerated group as a multiplication table (ids are image arrays).
FiniteGroup to_finite_group(const GroupElements& elements);

/// Orbit of t under the group generated by `generators`, sorted. Works without
/// enumerating the group.
std::vector<Tuple> tuple_orbit(const std::vector<Perm>& generators, const Tuple& t);
inline std::vector<Tuple> tuple_orbit(const PermGroup& group, const Tuple& t) {
  return tuple_orbit(group.generators, t);
}

struct OrbitalType {
  Tuple representative;  // lexicographically least tuple of the orbit
  std::size_t orbit_size = 0;
  friend bool operator==(const OrbitalType&, const OrbitalType&) = default;
};

OrbitalType orbital_type(const std::vector<Perm>& generators, const Tuple& t);

/// Caller-supplied structural generators for W_ā, used when the group is too large to filter.
using StabilizerCallback = std::function<std::vector<Perm>(const Tuple&)>;

/// Generators for the pointwise stabiliser W_ā. Enumerates and filters when the group fits
/// within `cap` (greedy generator selection); otherwise uses `structural`, whose output is
/// verified to fix ā.
PermGroup pointwise_stabilizer(const PermGroup& group, const Tuple& abar,
                               std::size_t cap = kDefaultEnumerationCap,
                               const StabilizerCallback& structural = {});

/// Elements (indices into `elements`) fixing ā pointwise.
std::vector<std::size_t> stabilizer_elements(const GroupElements& elements, const Tuple& abar);

/// Element indices of the subgroup generated by `gens` inside an enumerated group.
std::vector<std::size_t> subgroup_elements(const GroupElements& elements, const std::vector<Perm>& gens);

/// Product set X·Y of element index sets, sorted.
std::vector<std::size_t> product_set(const GroupElements& elements, const std::vector<std::size_t>& x,
                                     const std::vector<std::size_t>& y);

/// f·b̄ ∈ W_ā·(g·b̄), i.e. O(g b̄ / ā) = O(f b̄ / ā), by orbit search alone.
bool double_coset_eq(const PermGroup& group, const Perm& g, const Perm& f, const Tuple& abar, const Tuple& bbar,
                     std::size_t cap = kDefaultEnumerationCap);

/// The three equivalent conditions, each computed by its own route.
struct DoubleCosetReport {
  bool relative_types_equal = false;  // O(g b̄/ā) = O(f b̄/ā)
  bool joint_types_equal = false;     // O(g b̄, ā) = O(f b̄, ā)
  bool double_cosets_equal = false;   // W_ā g W_b̄ = W_ā f W_b̄
  bool consistent() const {
    return relative_types_equal == joint_types_equal && joint_types_equal == double_cosets_equal;
  }
};

DoubleCosetReport double_coset_conditions(const PermGroup& group, const Perm& g, const Perm& f,
                                          const Tuple& abar, const Tuple& bbar,
                                          std::size_t cap = kDefaultEnumerationCap);

struct ContainmentReport {
  bool holds = false;
  std::size_t subgroup_order = 0;  // |W_ā|
  std::size_t product_size = 0;    // |W_b̄ F⁻¹ W_b̄ F W_b̄|
  std::vector<Perm> missing;       // elements of W_ā outside the product
};

/// Tests W_ā ⊆ W_b̄·F⁻¹·W_b̄·F·W_b̄ by exact set computation.
ContainmentReport boundedness_containment(const PermGroup& group, const Tuple& abar, const Tuple& bbar,
                                          const std::vector<Perm>& f, std::size_t cap = kDefaultEnumerationCap);

/// Binary relation on tuples, c̄ ⫝ b̄.
using IndependenceRelation = std::function<bool(const Tuple& c, const Tuple& b)>;

/// The connector set F of the boundedness argument: one f_i ∈ W_ā with f_i b̄ = c̄_i for each
/// relative type O(c̄/b̄) among tuples c̄ ∈ O(b̄/ā) with c̄ ⫝ b̄.
std::vector<Perm> stationarity_connectors(const PermGroup& group, const Tuple& abar, const Tuple& bbar,
                                          const IndependenceRelation& independent,
                                          std::size_t cap = kDefaultEnumerationCap);

}  // namespace coarse
