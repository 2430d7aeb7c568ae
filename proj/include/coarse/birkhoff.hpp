#pragma once

// Neighbourhood chains V_n in finite groups, the Birkhoff length function built
// from them, and the minimality / large-scale-geodesic checkers.

#include "coarse/group.hpp"
#include "coarse/metric.hpp"
#include "coarse/rational.hpp"

#include <optional>
#include <vector>

namespace coarse {

/// Levels V_{n_min} ⊆ ... ⊆ V_{n_max} of a finite group. Levels below n_min are {1}.
/// The group must outlive the chain.
class NeighborhoodChain {
 public:
  NeighborhoodChain(const FiniteGroup& group, int n_min, std::vector<std::vector<Element>> levels);

  const FiniteGroup& group() const { return *group_; }
  int n_min() const { return n_min_; }
  int n_max() const { return n_min_ + static_cast<int>(levels_.size()) - 1; }
  std::size_t level_count() const { return levels_.size(); }
  bool contains(int n, Element g) const;
  std::vector<Element> level(int n) const;

  /// Least n with g ∈ V_n (nullopt for elements outside every level).
  std::optional<int> first_level(Element g) const;

  /// Refinements. A new level below n_min, or V_n enlarged by `members`; both lower L
  /// pointwise. The result is not validated.
  NeighborhoodChain with_bottom_level(std::vector<Element> members) const;
  NeighborhoodChain with_level_enlarged(int n, const std::vector<Element>& members) const;

 private:
  const FiniteGroup* group_;
  int n_min_;
  std::vector<std::vector<char>> levels_;
};

/// Axioms: "identity" (n), "symmetry" (n, g), "monotone" (n, g), "exhaustion" (g),
/// "cube" (n, g, h, k) meaning g,h,k ∈ V_n but ghk ∉ V_{n+1}. One cube witness is
/// listed per missing product.
ValidationReport validate_chain(const NeighborhoodChain& chain);

/// 0 for the identity, otherwise 2^n for the least n with g ∈ V_n.
Rational capital_L(const NeighborhoodChain& chain, Element g);

struct LengthFunction {
  std::vector<Rational> values;  // indexed by element
  /// true when every non-identity element has positive length (a length function,
  /// not only a pseudolength).
  bool separates_points = false;

  const Rational& operator()(Element g) const { return values[g]; }
};

inline constexpr std::size_t kBirkhoffOrderCap = 20000;

/// ℓ(g) = inf Σ L(h_i) over factorisations g = h_1⋯h_k, computed exactly as a
/// shortest path from the identity along edges g → gh of weight L(h).
LengthFunction birkhoff_length(const NeighborhoodChain& chain);

/// Axioms: "zero" (identity has nonzero length), "symmetry" (g), "subadditivity" (g, h).
ValidationReport validate_length(const FiniteGroup& group, const LengthFunction& length);

/// Word length |g|_S as a length function (unreached elements throw).
LengthFunction word_length_function(const FiniteGroup& group, const std::vector<Element>& generators);

struct MinimalityWitness {
  Element g;
  std::size_t n;
  Rational ratio;  // ℓ(g^n) / (n ℓ(g)), or 0 when ℓ(g) = 0
};

struct MinimalityReport {
  bool holds = true;
  bool upper_holds = true;
  bool lower_holds = true;
  /// Largest ε passing the lower bound; nullopt encodes the "unbounded" sentinel of an
  /// empty scan.
  std::optional<Rational> max_eps;
  std::size_t pairs_scanned = 0;
  std::vector<MinimalityWitness> upper_violations;
  std::vector<MinimalityWitness> lower_violations;
};

/// Scans every g and every n with g, g², …, gⁿ ∈ U and checks
/// ε·n·ℓ(g) ≤ ℓ(gⁿ) ≤ n·ℓ(g).
MinimalityReport check_minimality(const FiniteGroup& group, const LengthFunction& length,
                                  const std::vector<Element>& u, const Rational& eps);

struct GeodesicFailure {
  std::size_t x, y;
  std::optional<Rational> chain_length;  // nullopt: no K-step chain at all
};

struct GeodesicReport {
  bool holds = true;
  std::vector<GeodesicFailure> failures;
};

/// For every pair, is there a chain with steps ≤ K whose total length is ≤ K·d(x,y)?
GeodesicReport check_large_scale_geodesic(const RatMetricSpace& space, const Rational& k);
GeodesicReport check_large_scale_geodesic(const NatMetricSpace& space, const Rational& k);

}  // namespace coarse
