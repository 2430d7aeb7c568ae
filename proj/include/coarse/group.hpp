#pragma once

#include "coarse/common.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace coarse {

using Element = std::uint32_t;

/// A finite group given by its multiplication table. Elements are indices
/// 0..order-1 with printable ids.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  /// `table` is row-major: table[a * order + b] = a*b. Identity and inverses are derived.
  FiniteGroup(std::vector<std::string> ids, std::vector<Element> mul);

  static FiniteGroup cyclic(std::size_t n);
  /// Symmetries of the regular n-gon, order 2n. Ids "r<i>" and "s<i>" (= s r^i).
  static FiniteGroup dihedral(std::size_t n);
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

  std::size_t order() const { return ids_.size(); }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return table_[static_cast<std::size_t>(a) * order() + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  const std::string& id(Element a) const { return ids_[a]; }
  const std::vector<std::string>& ids() const { return ids_; }
  std::optional<Element> find(const std::string& id) const;
  Element at(const std::string& id) const;  // throws InputError

  Element power(Element g, std::size_t n) const;
  std::size_t element_order(Element g) const;

  /// Group axioms; associativity is checked on all triples when order <= assoc_cap,
  /// otherwise on triples drawn from the first assoc_cap elements.
  ValidationReport validate(std::size_t assoc_cap = 128) const;

 private:
  std::vector<std::string> ids_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  Element identity_ = 0;
};

/// Symmetric closure of a subset: S ∪ S⁻¹, sorted.
std::vector<Element> symmetric_closure(const FiniteGroup& g, std::vector<Element> subset);

}  // namespace coarse
