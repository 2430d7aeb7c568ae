#include "coarse/amalgam.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace coarse {

bool is_embedding(const Embedding& e, const NatMetricSpace& domain, const NatMetricSpace& codomain) {
  if (e.images.size() != domain.size()) return false;
  for (std::size_t x = 0; x < domain.size(); ++x) {
    if (e(x) >= codomain.size()) return false;
    for (std::size_t y = x + 1; y < domain.size(); ++y) {
      if (e(x) == e(y) || codomain.dist(e(x), e(y)) != domain.dist(x, y)) return false;
    }
  }
  return true;
}

void require_embedding(const Embedding& e, const NatMetricSpace& domain, const NatMetricSpace& codomain,
                       const std::string& what) {
  if (!is_embedding(e, domain, codomain)) throw InputError(what + " is not an isometric embedding");
}

Embedding compose(const Embedding& outer, const Embedding& inner) {
  Embedding out;
  for (std::size_t v : inner.images) out.images.push_back(outer(v));
  return out;
}

namespace {

// Depth-first assignment in source order; candidates in increasing target order.
class EmbeddingSearch {
 public:
  EmbeddingSearch(const NatMetricSpace& source, const NatMetricSpace& target,
                  const std::vector<std::optional<std::size_t>>& forced)
      : source_(source), target_(target), forced_(forced), used_(target.size(), 0) {
    forced_.resize(source.size());
  }

  template <class Visit>
  void run(Visit&& visit) {
    assignment_.clear();
    recurse(visit);
  }

 private:
  template <class Visit>
  bool recurse(Visit& visit) {
    const std::size_t i = assignment_.size();
    if (i == source_.size()) return visit(Embedding{assignment_});
    auto try_candidate = [&](std::size_t t) {
      if (t >= target_.size() || used_[t]) return false;
      for (std::size_t j = 0; j < i; ++j) {
        if (target_.dist(assignment_[j], t) != source_.dist(j, i)) return false;
      }
      used_[t] = 1;
      assignment_.push_back(t);
      bool stop = recurse(visit);
      assignment_.pop_back();
      used_[t] = 0;
      return stop;
    };
    if (forced_[i]) return try_candidate(*forced_[i]);
    for (std::size_t t = 0; t < target_.size(); ++t) {
      if (try_candidate(t)) return true;
    }
    return false;
  }

  const NatMetricSpace& source_;
  const NatMetricSpace& target_;
  std::vector<std::optional<std::size_t>> forced_;
  std::vector<char> used_;
  std::vector<std::size_t> assignment_;
};

}  // namespace

std::optional<Embedding> find_embedding(const NatMetricSpace& source, const NatMetricSpace& target,
                                        const std::vector<std::optional<std::size_t>>& forced) {
  std::optional<Embedding> found;
  EmbeddingSearch search(source, target, forced);
  search.run([&](Embedding e) {
    found = std::move(e);
    return true;
  });
  return found;
}

std::vector<Embedding> all_embeddings(const NatMetricSpace& source, const NatMetricSpace& target) {
  std::vector<Embedding> out;
  EmbeddingSearch search(source, target, {});
  search.run([&](Embedding e) {
    out.push_back(std::move(e));
    return false;
  });
  return out;
}

AmalgamResult amalgamate(const NatMetricSpace& a, const NatMetricSpace& b1, const NatMetricSpace& b2,
                         const Embedding& eta1, const Embedding& eta2) {
  if (a.empty()) throw InputError("amalgamate: base space must be nonempty");
  require_embedding(eta1, a, b1, "eta1");
  require_embedding(eta2, a, b2, "eta2");

  const std::size_t n1 = b1.size(), n2 = b2.size(), n = n1 + n2;
  std::vector<std::string> ids;
  for (const auto& p : b1.points()) ids.push_back("1." + p);
  for (const auto& p : b2.points()) ids.push_back("2." + p);
  std::vector<std::vector<std::int64_t>> d(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t x = 0; x < n1; ++x) {
    for (std::size_t y = 0; y < n1; ++y) d[x][y] = b1.dist(x, y);
  }
  for (std::size_t x = 0; x < n2; ++x) {
    for (std::size_t y = 0; y < n2; ++y) d[n1 + x][n1 + y] = b2.dist(x, y);
  }
  for (std::size_t x = 0; x < n1; ++x) {
    for (std::size_t y = 0; y < n2; ++y) {
      std::int64_t best = -1;
      for (std::size_t z = 0; z < a.size(); ++z) {
        std::int64_t via = b1.dist(x, eta1(z)) + b2.dist(eta2(z), y);
        if (best < 0 || via < best) best = via;
      }
      d[x][n1 + y] = d[n1 + y][x] = best;
    }
  }
  NatMetricSpace disjoint(std::move(ids), std::move(d), /*pseudometric=*/true);
  auto [c, projection] = metric_quotient(disjoint);

  AmalgamResult result{std::move(c), {}, {}};
  for (std::size_t x = 0; x < n1; ++x) result.zeta1.images.push_back(projection(x));
  for (std::size_t y = 0; y < n2; ++y) result.zeta2.images.push_back(projection(n1 + y));
  return result;
}

FunctorialityResult functoriality_witness(const NatMetricSpace& a, const NatMetricSpace& b1,
                                          const NatMetricSpace& b1p, const NatMetricSpace& b2,
                                          const Embedding& eta1, const Embedding& eta1p,
                                          const Embedding& eta2, const Embedding& iota) {
  require_embedding(eta1, a, b1, "eta1");
  require_embedding(eta1p, a, b1p, "eta1'");
  require_embedding(eta2, a, b2, "eta2");
  require_embedding(iota, b1, b1p, "iota");
  if (compose(iota, eta1) != eta1p) throw InputError("functoriality: iota o eta1 differs from eta1'");

  FunctorialityResult result{amalgamate(a, b1, b2, eta1, eta2), amalgamate(a, b1p, b2, eta1p, eta2), {}};
  const AmalgamResult& c = result.first;
  const AmalgamResult& cp = result.second;

  std::vector<std::optional<std::size_t>> forced(c.c.size());
  auto pin = [&](std::size_t point, std::size_t image) {
    if (forced[point] && *forced[point] != image) return false;
    forced[point] = image;
    return true;
  };
  bool consistent = true;
  for (std::size_t x = 0; x < b1.size(); ++x) consistent &= pin(c.zeta1(x), cp.zeta1(iota(x)));
  for (std::size_t y = 0; y < b2.size(); ++y) consistent &= pin(c.zeta2(y), cp.zeta2(y));
  if (consistent) result.sigma = find_embedding(c.c, cp.c, forced);
  return result;
}

bool independence_check(const NatMetricSpace& d, const std::vector<std::size_t>& abar,
                        const std::vector<std::size_t>& b1bar, const std::vector<std::size_t>& b2bar) {
  if (abar.empty()) throw InputError("independence_check: base tuple must be nonempty");
  for (const auto* tuple : {&abar, &b1bar, &b2bar}) {
    for (std::size_t p : *tuple) {
      if (p >= d.size()) throw InputError("independence_check: tuple point out of range");
    }
  }
  std::vector<std::size_t> left(abar), right(abar);
  left.insert(left.end(), b1bar.begin(), b1bar.end());
  right.insert(right.end(), b2bar.begin(), b2bar.end());
  for (std::size_t x : left) {
    for (std::size_t y : right) {
      std::int64_t best = -1;
      for (std::size_t z : abar) {
        std::int64_t via = d.dist(x, z) + d.dist(z, y);
        if (best < 0 || via < best) best = via;
      }
      if (d.dist(x, y) != best) return false;
    }
  }
  return true;
}

std::vector<std::int64_t> canonical_form(const NatMetricSpace& space) {
  const std::size_t n = space.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<std::int64_t> best, current;
  do {
    current.clear();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) current.push_back(space.dist(order[i], order[j]));
    }
    if (best.empty() || current < best) best = current;
  } while (std::next_permutation(order.begin(), order.end()));
  best.insert(best.begin(), static_cast<std::int64_t>(n));
  return best;
}

bool isometric(const NatMetricSpace& x, const NatMetricSpace& y) {
  return x.size() == y.size() && find_embedding(x, y).has_value();
}

namespace {

NatMetricSpace from_upper_triangle(std::size_t n, const std::vector<std::int64_t>& upper) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("p" + std::to_string(i));
  std::vector<std::vector<std::int64_t>> d(n, std::vector<std::int64_t>(n, 0));
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) d[i][j] = d[j][i] = upper[k++];
  }
  return NatMetricSpace(std::move(ids), std::move(d));
}

}  // namespace

std::vector<NatMetricSpace> enumerate_isometry_types(std::size_t max_size, std::int64_t max_dist) {
  std::vector<NatMetricSpace> out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    std::set<std::vector<std::int64_t>> seen;
    std::vector<std::int64_t> upper(pairs, 1);
    while (true) {
      NatMetricSpace space = from_upper_triangle(n, upper);
      if (validate_metric(space).ok()) {
        auto form = canonical_form(space);
        if (seen.insert(form).second) {
          out.push_back(from_upper_triangle(n, std::vector<std::int64_t>(form.begin() + 1, form.end())));
        }
      }
      std::size_t k = 0;
      while (k < pairs && upper[k] == max_dist) upper[k++] = 1;
      if (k == pairs) break;
      ++upper[k];
    }
  }
  return out;
}

namespace {

std::string describe(const NatMetricSpace& space) {
  std::string s = "[";
  for (std::size_t i = 0; i < space.size(); ++i) {
    s += (i ? ";" : "");
    for (std::size_t j = 0; j < space.size(); ++j) s += (j ? "," : "") + std::to_string(space.dist(i, j));
  }
  return s + "]";
}

bool within_caps(const NatMetricSpace& space, std::size_t size_cap, std::int64_t dist_cap) {
  return space.size() <= size_cap && space.diameter() <= dist_cap;
}

NatMetricSpace single_point() { return NatMetricSpace({"*"}, {{0}}); }

}  // namespace

FraisseReport check_fraisse_axioms(const std::vector<NatMetricSpace>& catalog, std::size_t size_cap,
                                   std::int64_t dist_cap) {
  std::set<std::vector<std::int64_t>> types;
  for (const auto& member : catalog) {
    if (member.empty()) throw InputError("catalog contains an empty space");
    if (!within_caps(member, size_cap, dist_cap)) throw InputError("catalog member exceeds the caps");
    if (!validate_metric(member).ok()) throw InputError("catalog member is not a metric space");
    types.insert(canonical_form(member));
  }

  FraisseReport report;
  auto fail = [&](const std::string& axiom, std::string detail) {
    if (axiom == "hereditary") report.hereditary = false;
    if (axiom == "joint_embedding") report.joint_embedding = false;
    if (axiom == "amalgamation") report.amalgamation = false;
    report.counterexamples.push_back({axiom, std::move(detail)});
  };
  // An amalgam must be an ℕ-metric space with isometric legs; inside the caps it must
  // also belong to the catalog.
  auto check_amalgam = [&](const std::string& axiom, const AmalgamResult& r, const NatMetricSpace& b1,
                           const NatMetricSpace& b2, const std::string& context) {
    if (!validate_metric(r.c).ok() || !is_embedding(r.zeta1, b1, r.c) || !is_embedding(r.zeta2, b2, r.c)) {
      fail(axiom, context + ": amalgam is not a valid metric amalgam " + describe(r.c));
    } else if (!within_caps(r.c, size_cap, dist_cap)) {
      ++report.beyond_caps;
    } else if (!types.contains(canonical_form(r.c))) {
      fail(axiom, context + ": amalgam " + describe(r.c) + " missing from catalog");
    }
  };

  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const std::size_t n = catalog[i].size();
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
      std::vector<std::size_t> subset;
      for (std::size_t p = 0; p < n; ++p) {
        if (mask & (std::size_t{1} << p)) subset.push_back(p);
      }
      ++report.subspaces_checked;
      NatMetricSpace sub = catalog[i].subspace(subset);
      if (!types.contains(canonical_form(sub))) {
        fail("hereditary", "member " + std::to_string(i) + " has subspace " + describe(sub) + " missing");
      }
    }
  }

  const NatMetricSpace point = single_point();
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    for (std::size_t j = 0; j < catalog.size(); ++j) {
      ++report.joint_embeddings_checked;
      auto r = amalgamate(point, catalog[i], catalog[j], Embedding{{0}}, Embedding{{0}});
      check_amalgam("joint_embedding", r, catalog[i], catalog[j],
                    "members " + std::to_string(i) + "," + std::to_string(j));
    }
  }

  for (std::size_t a = 0; a < catalog.size(); ++a) {
    for (std::size_t i = 0; i < catalog.size(); ++i) {
      auto first = all_embeddings(catalog[a], catalog[i]);
      if (first.empty()) continue;
      for (std::size_t j = 0; j < catalog.size(); ++j) {
        auto second = all_embeddings(catalog[a], catalog[j]);
        for (const auto& eta1 : first) {
          for (const auto& eta2 : second) {
            ++report.amalgamations_checked;
            auto r = amalgamate(catalog[a], catalog[i], catalog[j], eta1, eta2);
            check_amalgam("amalgamation", r, catalog[i], catalog[j],
                          "base " + std::to_string(a) + " into " + std::to_string(i) + "," + std::to_string(j));
            if (compose(r.zeta1, eta1) != compose(r.zeta2, eta2)) {
              fail("amalgamation", "square does not commute for base " + std::to_string(a));
            }
          }
        }
      }
    }
  }
  return report;
}

}  // namespace coarse
