#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qmod/errors.hpp"
#include "qmod/hilbert.hpp"
#include "qmod/poly.hpp"
#include "qmod/quiver.hpp"

namespace qmod {

/// Path in Q starting at the root of its tree, stored as arrow ranks so that
/// the lexicographic order of the vector is the word order (a proper prefix
/// is smaller).
using PathWord = std::vector<std::size_t>;

/// Vertex (q, i, w) of the covering forest F_n(Q).  The defaulted comparison
/// is the total order: root vertex, then copy, then word.
struct ForestVertex {
  std::size_t root = 0;
  int copy = 1;
  PathWord word;

  friend bool operator==(const ForestVertex&, const ForestVertex&) = default;
  friend auto operator<=>(const ForestVertex&, const ForestVertex&) = default;
};

inline std::strong_ordering vertex_compare(const ForestVertex& a, const ForestVertex& b) { return a <=> b; }

/// t(w): target of the last arrow, or the root for the empty word.
inline std::size_t vertex_type(const Quiver& q, const ForestVertex& v) {
  if (v.word.empty()) return v.root;
  return q.arrow(q.arrow_at_rank(v.word.back())).target;
}

/// Prefix-closed finite subsets S_{q,i} of the trees T_q, one per copy.
class Subforest {
 public:
  Subforest() = default;
  explicit Subforest(const DimensionVector& n) {
    for (std::size_t v = 0; v < n.size(); ++v) {
      offset_.push_back(roots_.size());
      for (int c = 1; c <= n[v]; ++c) {
        roots_.push_back(v);
        copies_.push_back(c);
      }
    }
    trees_.resize(roots_.size());
  }

  std::size_t tree_count() const noexcept { return trees_.size(); }
  std::size_t tree_root(std::size_t t) const { return roots_.at(t); }
  int tree_copy(std::size_t t) const { return copies_.at(t); }
  const std::set<PathWord>& tree(std::size_t t) const { return trees_.at(t); }
  std::size_t tree_index(std::size_t root, int copy) const {
    if (root >= offset_.size()) throw InputError("forest vertex outside the framing");
    const std::size_t t = offset_[root] + static_cast<std::size_t>(copy - 1);
    if (copy < 1 || t >= roots_.size() || roots_[t] != root) throw InputError("forest vertex outside the framing");
    return t;
  }

  bool contains(const ForestVertex& v) const { return tree(tree_index(v.root, v.copy)).count(v.word) > 0; }
  /// Adds v; its parent must already be present.
  void insert(const ForestVertex& v) {
    auto& t = trees_[tree_index(v.root, v.copy)];
    if (!v.word.empty() && t.count(PathWord(v.word.begin(), v.word.end() - 1)) == 0)
      throw InputError("subforest must stay closed under prefixes");
    t.insert(v.word);
  }
  ForestVertex vertex(std::size_t t, const PathWord& w) const { return {roots_[t], copies_[t], w}; }

  /// All vertices in increasing order.
  std::vector<ForestVertex> vertices() const {
    std::vector<ForestVertex> out;
    for (std::size_t t = 0; t < trees_.size(); ++t)
      for (const auto& w : trees_[t]) out.push_back(vertex(t, w));
    return out;
  }
  std::size_t size() const {
    std::size_t s = 0;
    for (const auto& t : trees_) s += t.size();
    return s;
  }

  /// Number of vertices of each type.
  DimensionVector type_counts(const Quiver& q) const {
    std::vector<int> c(q.vertex_count(), 0);
    for (const auto& v : vertices()) ++c[vertex_type(q, v)];
    return DimensionVector(std::move(c));
  }

  friend bool operator==(const Subforest& a, const Subforest& b) { return a.trees_ == b.trees_; }
  friend bool operator<(const Subforest& a, const Subforest& b) { return a.trees_ < b.trees_; }

 private:
  std::vector<std::size_t> offset_;
  std::vector<std::size_t> roots_;
  std::vector<int> copies_;
  std::vector<std::set<PathWord>> trees_;
};

/// Order on forests used for listings: trees compared in (q, i) order, a tree
/// with more vertices first, equal sizes by the first differing word.
inline bool forest_less(const Subforest& a, const Subforest& b) {
  for (std::size_t t = 0; t < std::min(a.tree_count(), b.tree_count()); ++t) {
    const auto& x = a.tree(t);
    const auto& y = b.tree(t);
    if (x.size() != y.size()) return x.size() > y.size();
    if (x != y) return x < y;
  }
  return a.tree_count() < b.tree_count();
}

/// Children w.a outside S of every w in S, plus the roots of empty trees.
/// Sorted increasingly.
inline std::vector<ForestVertex> corona(const Quiver& q, const Subforest& s) {
  std::vector<ForestVertex> out;
  for (std::size_t t = 0; t < s.tree_count(); ++t) {
    const auto& tree = s.tree(t);
    if (tree.empty()) {
      out.push_back(s.vertex(t, {}));
      continue;
    }
    for (const auto& w : tree) {
      const ForestVertex v = s.vertex(t, w);
      for (std::size_t id : q.outgoing(vertex_type(q, v))) {
        PathWord child = w;
        child.push_back(q.arrow_rank(id));
        if (!tree.count(child)) out.push_back(s.vertex(t, child));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

/// Forest vertices grouped by type, each group sorted.
inline std::vector<std::vector<ForestVertex>> vertices_by_type(const Quiver& q, const Subforest& s) {
  std::vector<std::vector<ForestVertex>> out(q.vertex_count());
  for (auto& v : s.vertices()) out[vertex_type(q, v)].push_back(std::move(v));
  return out;
}

/// Number of forest vertices of type t(c) smaller than c.
inline std::size_t smaller_count(const std::vector<ForestVertex>& same_type, const ForestVertex& c) {
  return static_cast<std::size_t>(std::lower_bound(same_type.begin(), same_type.end(), c) - same_type.begin());
}

}  // namespace detail

/// lambda^j_m = number of corona j-vertices with at least m larger forest
/// j-vertices, for 1 <= m <= d_j.
inline Multipartition phi(const Quiver& q, const Subforest& s) {
  const auto by_type = detail::vertices_by_type(q, s);
  std::vector<std::vector<int>> parts(q.vertex_count());
  for (std::size_t j = 0; j < q.vertex_count(); ++j) parts[j].assign(by_type[j].size(), 0);
  for (const auto& c : corona(q, s)) {
    const std::size_t j = vertex_type(q, c);
    const std::size_t larger = by_type[j].size() - detail::smaller_count(by_type[j], c);
    for (std::size_t m = 1; m <= larger; ++m) ++parts[j][m - 1];
  }
  return Multipartition(std::move(parts));
}

/// Inverse of phi.  Forest vertices are appended in increasing order; with r
/// vertices of type j placed, the next one must be the corona j-vertex with
/// exactly lambda^j_{d_j - r} corona j-vertices below it, and the smallest
/// such candidate over all types is appended (a type whose candidate does
/// not exist yet waits).  Because later vertices are
/// larger, the corona below the newest vertex never changes again.
inline Subforest psi(const Quiver& q, const DimensionVector& n, const Multipartition& lambda) {
  q.check_vector(n);
  if (lambda.vertex_count() != q.vertex_count()) throw InputError("multipartition does not match the quiver");
  const DimensionVector d = lambda.shape();
  Subforest s(n);
  std::vector<int> placed(q.vertex_count(), 0);
  for (int step = 0; step < d.total(); ++step) {
    const auto c = corona(q, s);
    std::optional<ForestVertex> best;
    for (std::size_t j = 0; j < q.vertex_count(); ++j) {
      if (placed[j] == d[j]) continue;
      const int skip = lambda.part(j, static_cast<std::size_t>(d[j] - placed[j]));
      int seen = 0;
      const ForestVertex* candidate = nullptr;
      for (const auto& v : c) {
        if (vertex_type(q, v) != j) continue;
        if (seen++ == skip) {
          candidate = &v;
          break;
        }
      }
      // a missing candidate may still appear once smaller vertices are added
      if (candidate && (!best || *candidate < *best)) best = *candidate;
    }
    if (!best) throw ConsistencyError("corona exhausted while inverting " + to_string(lambda));
    ++placed[vertex_type(q, *best)];
    s.insert(*best);
  }
  if (phi(q, s) != lambda) throw ConsistencyError("phi(psi(lambda)) differs from lambda = " + to_string(lambda));
  return s;
}

/// Every prefix-closed subforest of F_n(Q) with exactly d_j vertices of type j,
/// by include/exclude branching on the smallest undecided frontier vertex.
inline std::vector<Subforest> type_correct_subforests(const Quiver& q, const DimensionVector& d,
                                                      const DimensionVector& n) {
  q.check_vector(d);
  q.check_vector(n);
  std::vector<Subforest> out;
  Subforest s(n);
  std::vector<int> counts(q.vertex_count(), 0);
  int missing = d.total();
  std::set<ForestVertex> frontier;
  for (std::size_t t = 0; t < s.tree_count(); ++t) frontier.insert(s.vertex(t, {}));

  std::function<void()> rec = [&]() {
    if (missing == 0) {
      out.push_back(s);
      return;
    }
    // candidates of saturated types can only be excluded
    auto it = frontier.begin();
    while (it != frontier.end() && counts[vertex_type(q, *it)] >= d[vertex_type(q, *it)]) ++it;
    if (it == frontier.end()) return;
    const ForestVertex c = *it;
    frontier.erase(it);
    rec();

    const std::size_t j = vertex_type(q, c);
    Subforest saved = s;
    s.insert(c);
    ++counts[j];
    --missing;
    std::vector<ForestVertex> added;
    for (std::size_t id : q.outgoing(j)) {
      ForestVertex child = c;
      child.word.push_back(q.arrow_rank(id));
      added.push_back(child);
      frontier.insert(std::move(child));
    }
    rec();
    for (const auto& a : added) frontier.erase(a);
    ++missing;
    --counts[j];
    s = std::move(saved);
    frontier.insert(c);
  };
  rec();
  return out;
}

/// Phi_{d,n} = psi(S_{d,n}), sorted by forest order.  Cross-checked against
/// the direct enumeration of all type-correct subforests.
inline std::vector<Subforest> enumerate_forests(const Quiver& q, const DimensionVector& d, const DimensionVector& n) {
  std::vector<Subforest> image;
  for (const auto& lambda : multipartitions(q, d, n)) image.push_back(psi(q, n, lambda));
  std::vector<Subforest> direct = type_correct_subforests(q, d, n);
  std::vector<Subforest> a = image;
  std::sort(a.begin(), a.end());
  std::sort(direct.begin(), direct.end());
  if (std::adjacent_find(a.begin(), a.end()) != a.end()) throw ConsistencyError("psi is not injective");
  if (a != direct)
    throw ConsistencyError("psi(S_{d,n}) has " + std::to_string(a.size()) + " forests but " +
                           std::to_string(direct.size()) + " type-correct subforests exist");
  std::sort(image.begin(), image.end(), forest_less);
  return image;
}

/// Corona vertex c with the forest vertices of type t(c) below it.  Vacuous
/// when these are all d_{t(c)} vertices of that type.
struct CellRelation {
  ForestVertex corona_vertex;
  std::vector<ForestVertex> span;
  bool vacuous = false;
};

inline std::vector<CellRelation> cell_relations(const Quiver& q, const Subforest& s) {
  const auto by_type = detail::vertices_by_type(q, s);
  std::vector<CellRelation> out;
  for (const auto& c : corona(q, s)) {
    const auto& same = by_type[vertex_type(q, c)];
    const std::size_t k = detail::smaller_count(same, c);
    out.push_back({c, std::vector<ForestVertex>(same.begin(), same.begin() + static_cast<std::ptrdiff_t>(k)),
                   k == same.size()});
  }
  return out;
}

/// Sum over corona vertices of the number of smaller forest vertices of the
/// same type.
inline long cell_dimension(const Quiver& q, const Subforest& s) {
  long dim = 0;
  for (const auto& r : cell_relations(q, s)) dim += static_cast<long>(r.span.size());
  return dim;
}

struct CellDescriptor {
  Subforest forest;
  std::vector<CellRelation> relations;
  long dimension = 0;
  Multipartition multipartition;
};

inline std::vector<CellDescriptor> describe_cells(const Quiver& q, const DimensionVector& d, const DimensionVector& n) {
  std::vector<CellDescriptor> out;
  for (auto& s : enumerate_forests(q, d, n)) {
    CellDescriptor c;
    c.relations = cell_relations(q, s);
    for (const auto& r : c.relations) c.dimension += static_cast<long>(r.span.size());
    c.multipartition = phi(q, s);
    c.forest = std::move(s);
    out.push_back(std::move(c));
  }
  return out;
}

/// sum over Phi_{d,n} of q^{cell dimension}
inline Poly hilb_poincare_cells(const Quiver& q, const DimensionVector& d, const DimensionVector& n) {
  Poly p;
  for (const auto& s : enumerate_forests(q, d, n))
    p += Poly::q_power(static_cast<std::size_t>(cell_dimension(q, s)));
  return p;
}

inline std::string word_to_string(const Quiver& q, const PathWord& w) {
  if (w.empty()) return "()";
  std::string out;
  for (std::size_t r : w) out += q.arrow(q.arrow_at_rank(r)).name;
  return out;
}

/// "(a,1,αβα)"
inline std::string to_string(const Quiver& q, const ForestVertex& v) {
  return "(" + q.vertex_name(v.root) + "," + std::to_string(v.copy) + "," + word_to_string(q, v.word) + ")";
}

/// Trees in (q, i) order with implicit roots: "∅" for an empty tree, "()"
/// for a lone root, otherwise the non-root words.
inline std::string to_string(const Quiver& q, const Subforest& s) {
  std::string out = "(";
  for (std::size_t t = 0; t < s.tree_count(); ++t) {
    if (t) out += ",";
    const auto& tree = s.tree(t);
    if (tree.empty()) {
      out += "∅";
    } else if (tree.size() == 1) {
      out += "()";
    } else {
      out += "(";
      bool first = true;
      for (const auto& w : tree) {
        if (w.empty()) continue;
        if (!first) out += ",";
        first = false;
        out += word_to_string(q, w);
      }
      out += ")";
    }
  }
  return out + ")";
}

/// "(a,1,αβα) ∈ ⟨(a,1,α)⟩", or "... ∈ ⟨⟩ = 0" for an empty span.
inline std::string to_string(const Quiver& q, const CellRelation& r) {
  std::string out = to_string(q, r.corona_vertex) + " ∈ ⟨";
  for (std::size_t k = 0; k < r.span.size(); ++k) {
    if (k) out += ", ";
    out += to_string(q, r.span[k]);
  }
  out += "⟩";
  if (r.span.empty()) out += " = 0";
  return out;
}

}  // namespace qmod
