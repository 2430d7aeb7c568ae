#pragma once

// Functorial amalgamation of ℕ-valued finite metric spaces, embedding search, the
// associated independence relation, and Fraïssé-axiom checks on finite catalogs.

#include "coarse/metric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coarse {

/// Injective distance-preserving map, by point index.
struct Embedding {
  std::vector<std::size_t> images;

  std::size_t operator()(std::size_t x) const { return images[x]; }
  friend bool operator==(const Embedding&, const Embedding&) = default;
};

bool is_embedding(const Embedding& e, const NatMetricSpace& domain, const NatMetricSpace& codomain);
/// Throws InputError naming `what` unless `e` is an embedding.
void require_embedding(const Embedding& e, const NatMetricSpace& domain, const NatMetricSpace& codomain,
                       const std::string& what);
Embedding compose(const Embedding& outer, const Embedding& inner);

/// Lexicographically least embedding source → target extending the forced assignments
/// (forced[i] pins the image of source point i).
std::optional<Embedding> find_embedding(const NatMetricSpace& source, const NatMetricSpace& target,
                                        const std::vector<std::optional<std::size_t>>& forced = {});
/// Every embedding source → target, in lexicographic order.
std::vector<Embedding> all_embeddings(const NatMetricSpace& source, const NatMetricSpace& target);

struct AmalgamResult {
  NatMetricSpace c;
  Embedding zeta1;
  Embedding zeta2;
};

/// B₁ ⊕_A B₂: the disjoint union with cross distances min_{z∈A} d(x, η₁z) + d(η₂z, y),
/// followed by the metric quotient. Point ids are "1.<id>" and "2.<id>"; glued base
/// points keep their "1." id.
AmalgamResult amalgamate(const NatMetricSpace& a, const NatMetricSpace& b1, const NatMetricSpace& b2,
                         const Embedding& eta1, const Embedding& eta2);

struct FunctorialityResult {
  AmalgamResult first;   // Θ(η₁, η₂)
  AmalgamResult second;  // Θ(η₁′, η₂)
  std::optional<Embedding> sigma;  // C → C′ with σζ₁ = ζ₁′ι and σζ₂ = ζ₂′
};

/// Requires ι∘η₁ = η₁′ (InputError otherwise).
FunctorialityResult functoriality_witness(const NatMetricSpace& a, const NatMetricSpace& b1,
                                          const NatMetricSpace& b1p, const NatMetricSpace& b2,
                                          const Embedding& eta1, const Embedding& eta1p,
                                          const Embedding& eta2, const Embedding& iota);

/// b̄₁ ⫝ b̄₂ over ā: every x ∈ ⟨ā,b̄₁⟩, y ∈ ⟨ā,b̄₂⟩ has d(x,y) = min_{z∈ā} d(x,z) + d(z,y).
bool independence_check(const NatMetricSpace& d, const std::vector<std::size_t>& abar,
                        const std::vector<std::size_t>& b1bar, const std::vector<std::size_t>& b2bar);

/// Lexicographically least upper-triangle distance list over all point orderings.
std::vector<std::int64_t> canonical_form(const NatMetricSpace& space);
bool isometric(const NatMetricSpace& x, const NatMetricSpace& y);

/// One representative per isometry type of ℕ-metric spaces with 1..max_size points and
/// distances in [1, max_dist]. Representatives are in canonical form, ids "p0", "p1", ….
std::vector<NatMetricSpace> enumerate_isometry_types(std::size_t max_size, std::int64_t max_dist);

struct FraisseCounterexample {
  std::string axiom;  // "hereditary", "joint_embedding", "amalgamation"
  std::string detail;
};

struct FraisseReport {
  bool hereditary = true;
  bool joint_embedding = true;
  bool amalgamation = true;
  std::size_t subspaces_checked = 0;
  std::size_t joint_embeddings_checked = 0;
  std::size_t amalgamations_checked = 0;
  /// Amalgams larger than the caps: verified to be ℕ-metric spaces with isometric
  /// embeddings, but necessarily absent from a capped catalog.
  std::size_t beyond_caps = 0;
  std::vector<FraisseCounterexample> counterexamples;

  bool ok() const { return hereditary && joint_embedding && amalgamation; }
};

inline constexpr std::size_t kDefaultSizeCap = 8;
inline constexpr std::int64_t kDefaultDistCap = 16;

FraisseReport check_fraisse_axioms(const std::vector<NatMetricSpace>& catalog,
                                   std::size_t size_cap = kDefaultSizeCap,
                                   std::int64_t dist_cap = kDefaultDistCap);

}  // namespace coarse
