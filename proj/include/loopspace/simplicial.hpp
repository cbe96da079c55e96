#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "loopspace/ring.hpp"

namespace loopspace {

/// Monotone map [k] -> [n], stored as the image list of 0..k.
using MonotoneMap = std::vector<int>;

inline MonotoneMap monotone_identity(int n) {
  MonotoneMap f(n + 1);
  for (int i = 0; i <= n; ++i) f[i] = i;
  return f;
}

/// f after g
inline MonotoneMap monotone_compose(const MonotoneMap& f, const MonotoneMap& g) {
  MonotoneMap r(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = f.at(g[i]);
  return r;
}

/// Coface delta_i: [n-1] -> [n], skipping i.
inline MonotoneMap coface_map(int n, int i) {
  MonotoneMap f;
  f.reserve(n);
  for (int v = 0; v <= n; ++v)
    if (v != i) f.push_back(v);
  return f;
}

/// Canonical degeneracy word of a monotone surjection: its plateau set,
/// strictly increasing. The word [j1 < ... < jr] denotes s_{jr} ... s_{j1}.
inline std::vector<int> word_from_surjection(const MonotoneMap& s) {
  std::vector<int> w;
  for (std::size_t d = 0; d + 1 < s.size(); ++d)
    if (s[d] == s[d + 1]) w.push_back(static_cast<int>(d));
  return w;
}

inline MonotoneMap surjection_from_word(int base_dim, const std::vector<int>& word) {
  int total = base_dim + static_cast<int>(word.size());
  std::set<int> plateaus(word.begin(), word.end());
  MonotoneMap s(total + 1);
  s[0] = 0;
  for (int d = 0; d < total; ++d) s[d + 1] = s[d] + (plateaus.count(d) ? 0 : 1);
  return s;
}

/// Reference to a possibly degenerate simplex: canonical Eilenberg-Zilber
/// form, a strictly increasing degeneracy word over a nondegenerate base.
struct SimplexRef {
  std::vector<int> word;
  int base = -1;

  bool degenerate() const { return !word.empty(); }
  bool operator==(const SimplexRef&) const = default;
  bool operator<(const SimplexRef& o) const {
    return std::tie(base, word) < std::tie(o.base, o.word);
  }
};

struct Simplex {
  std::string id;
  int dim = 0;
  std::vector<SimplexRef> faces;  // d_0 .. d_dim; empty for vertices
};

/// Finitely presented simplicial set: nondegenerate simplices with faces in
/// canonical degenerate form. Faces of degenerate simplices are rewritten on
/// demand through the simplicial identities.
class SimplicialSet {
 public:
  explicit SimplicialSet(std::string name = "") : name_(std::move(name)) {}

  int add(const std::string& id, int dim, std::vector<SimplexRef> faces) {
    if (index_.count(id)) throw std::invalid_argument("duplicate simplex id: " + id);
    if (dim < 0) throw std::invalid_argument("negative dimension");
    if (dim == 0 && !faces.empty()) throw std::invalid_argument("vertex with faces: " + id);
    if (dim > 0 && static_cast<int>(faces.size()) != dim + 1)
      throw std::invalid_argument("simplex " + id + " needs " + std::to_string(dim + 1) +
                                  " faces");
    for (const auto& f : faces) {
      if (f.base < 0 || f.base >= static_cast<int>(simplices_.size()))
        throw std::invalid_argument("face of " + id + " references unknown simplex");
      if (!std::is_sorted(f.word.begin(), f.word.end()) ||
          std::adjacent_find(f.word.begin(), f.word.end()) != f.word.end())
        throw std::invalid_argument("face word of " + id + " is not strictly increasing");
      if (ref_dim(f) != dim - 1)
        throw std::invalid_argument("face of " + id + " has wrong dimension");
    }
    int idx = static_cast<int>(simplices_.size());
    simplices_.push_back({id, dim, std::move(faces)});
    if (static_cast<int>(by_dim_.size()) <= dim) by_dim_.resize(dim + 1);
    by_dim_[dim].push_back(idx);
    index_[id] = idx;
    return idx;
  }

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  int size() const { return static_cast<int>(simplices_.size()); }
  const Simplex& simplex(int i) const { return simplices_.at(i); }
  int dim_max() const { return static_cast<int>(by_dim_.size()) - 1; }
  const std::vector<int>& simplices_of_dim(int d) const {
    static const std::vector<int> empty;
    return d >= 0 && d <= dim_max() ? by_dim_[d] : empty;
  }
  std::optional<int> find(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? std::nullopt : std::optional<int>(it->second);
  }
  int require(const std::string& id) const {
    auto i = find(id);
    if (!i) throw std::invalid_argument("unknown simplex id: " + id);
    return *i;
  }

  void set_basepoint(int v) {
    if (simplex(v).dim != 0) throw std::invalid_argument("basepoint must be a vertex");
    basepoint_ = v;
  }
  std::optional<int> basepoint() const { return basepoint_; }

  int ref_dim(const SimplexRef& r) const {
    return simplex(r.base).dim + static_cast<int>(r.word.size());
  }

  /// Apply a simplicial operator (any monotone map f: [k] -> [dim r]) to a
  /// simplex reference. Epi-mono factorization; the injective part walks the
  /// stored face tables.
  SimplexRef apply(const SimplexRef& r, const MonotoneMap& f) const {
    if (static_cast<int>(f.size()) == 0 || f.back() > ref_dim(r))
      throw std::invalid_argument("operator range exceeds simplex dimension");
    MonotoneMap sig = surjection_from_word(simplex(r.base).dim, r.word);
    MonotoneMap g = monotone_compose(sig, f);
    // strictly increasing image values
    std::vector<int> vals;
    for (int v : g)
      if (vals.empty() || v != vals.back()) vals.push_back(v);
    // epi part of g relative to vals
    MonotoneMap epi(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
      epi[i] = static_cast<int>(std::lower_bound(vals.begin(), vals.end(), g[i]) -
                                vals.begin());
    SimplexRef mono = apply_injection(r.base, vals);
    MonotoneMap sig2 = surjection_from_word(simplex(mono.base).dim, mono.word);
    return {word_from_surjection(monotone_compose(sig2, epi)), mono.base};
  }

  SimplexRef face(const SimplexRef& r, int i) const {
    int d = ref_dim(r);
    if (d == 0) throw std::invalid_argument("face of a vertex");
    return apply(r, coface_map(d, i));
  }

  /// Base index of the i-th vertex of a reference.
  int vertex(const SimplexRef& r, int i) const { return apply(r, MonotoneMap{i}).base; }
  int first_vertex(int s) const { return vertex({{}, s}, 0); }
  int last_vertex(int s) const { return vertex({{}, s}, simplex(s).dim); }

  int vertex_count() const { return static_cast<int>(simplices_of_dim(0).size()); }

  /// Check the simplicial identities d_i d_j = d_{j-1} d_i (i < j) on every
  /// stored simplex of dimension at most max_dim.
  void validate(int max_dim) const {
    for (int d = 2; d <= std::min(max_dim, dim_max()); ++d)
      for (int s : simplices_of_dim(d)) {
        SimplexRef r{{}, s};
        for (int j = 1; j <= d; ++j)
          for (int i = 0; i < j; ++i) {
            SimplexRef a = face(face(r, j), i);
            SimplexRef b = face(face(r, i), j - 1);
            if (!(a == b))
              throw std::runtime_error("simplicial identity fails at " + simplex(s).id +
                                       " (i=" + std::to_string(i) +
                                       ", j=" + std::to_string(j) + ")");
          }
      }
  }

 private:
  SimplexRef apply_injection(int base, const std::vector<int>& vals) const {
    const Simplex& b = simplex(base);
    if (static_cast<int>(vals.size()) == b.dim + 1) return {{}, base};
    // drop the largest missing vertex first
    int j = -1;
    {
      std::set<int> have(vals.begin(), vals.end());
      for (int v = b.dim; v >= 0; --v)
        if (!have.count(v)) {
          j = v;
          break;
        }
    }
    const SimplexRef& f = b.faces.at(j);
    std::vector<int> reduced;
    reduced.reserve(vals.size());
    for (int v : vals) reduced.push_back(v < j ? v : v - 1);
    return apply(f, reduced);
  }

  std::string name_;
  std::vector<Simplex> simplices_;
  std::vector<std::vector<int>> by_dim_;
  std::map<std::string, int> index_;
  std::optional<int> basepoint_;
};

/// Standard n-simplex: nondegenerate k-simplices are the (k+1)-subsets of
/// {0..n}; face i deletes the i-th vertex.
inline SimplicialSet standard_simplex(int n) {
  if (n < 0) throw std::invalid_argument("standard_simplex: n >= 0");
  SimplicialSet s("delta" + std::to_string(n));
  auto subset_id = [](const std::vector<int>& v) {
    std::string id;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) id += '.';
      id += std::to_string(v[i]);
    }
    return id;
  };
  // enumerate subsets by size, lexicographically
  for (int k = 0; k <= n; ++k) {
    std::vector<int> sel(k + 1);
    for (int i = 0; i <= k; ++i) sel[i] = i;
    while (true) {
      std::vector<SimplexRef> faces;
      if (k > 0)
        for (int i = 0; i <= k; ++i) {
          std::vector<int> sub = sel;
          sub.erase(sub.begin() + i);
          faces.push_back({{}, s.require(subset_id(sub))});
        }
      s.add(subset_id(sel), k, std::move(faces));
      int pos = k;
      while (pos >= 0 && sel[pos] == n - (k - pos)) --pos;
      if (pos < 0) break;
      ++sel[pos];
      for (int i = pos + 1; i <= k; ++i) sel[i] = sel[i - 1] + 1;
    }
  }
  return s;
}

/// Quotient of S by a face-closed set of nondegenerate simplices. Every
/// simplex of A collapses to a single vertex; faces landing in A become
/// total degeneracies of that vertex.
inline SimplicialSet quotient(const SimplicialSet& s, const std::set<int>& a,
                              const std::string& collapsed_id = "*") {
  for (int i : a) {
    const Simplex& sx = s.simplex(i);
    for (const auto& f : sx.faces)
      if (!a.count(f.base))
        throw std::invalid_argument("quotient: subcomplex not face-closed at " + sx.id);
  }
  SimplicialSet q(s.name() + "/A");
  if (a.empty()) {
    std::map<int, int> remap;
    for (int d = 0; d <= s.dim_max(); ++d)
      for (int i : s.simplices_of_dim(d)) {
        const Simplex& sx = s.simplex(i);
        std::vector<SimplexRef> faces;
        for (const auto& f : sx.faces) faces.push_back({f.word, remap.at(f.base)});
        remap[i] = q.add(sx.id, sx.dim, std::move(faces));
      }
    q.set_basepoint(q.add(collapsed_id, 0, {}));
    return q;
  }
  if (a.size() == 1 && s.simplex(*a.begin()).dim == 0) {
    std::map<int, int> remap;
    for (int d = 0; d <= s.dim_max(); ++d)
      for (int i : s.simplices_of_dim(d)) {
        const Simplex& sx = s.simplex(i);
        std::vector<SimplexRef> faces;
        for (const auto& f : sx.faces) faces.push_back({f.word, remap.at(f.base)});
        remap[i] = q.add(sx.id, sx.dim, std::move(faces));
      }
    q.set_basepoint(remap.at(*a.begin()));
    return q;
  }
  int star = q.add(collapsed_id, 0, {});
  q.set_basepoint(star);
  std::map<int, int> remap;
  for (int d = 0; d <= s.dim_max(); ++d)
    for (int i : s.simplices_of_dim(d)) {
      if (a.count(i)) continue;
      const Simplex& sx = s.simplex(i);
      std::vector<SimplexRef> faces;
      for (const auto& f : sx.faces) {
        if (a.count(f.base)) {
          int m = sx.dim - 1;  // collapsed face dimension
          std::vector<int> word(m);
          for (int t = 0; t < m; ++t) word[t] = t;
          faces.push_back({std::move(word), star});
        } else {
          faces.push_back({f.word, remap.at(f.base)});
        }
      }
      remap[i] = q.add(sx.id, sx.dim, std::move(faces));
    }
  return q;
}

/// The boundary of the standard n-simplex inside it, as a set of indices.
inline std::set<int> boundary_subcomplex(const SimplicialSet& delta_n) {
  std::set<int> a;
  int top = delta_n.simplices_of_dim(delta_n.dim_max()).at(0);
  for (int i = 0; i < delta_n.size(); ++i)
    if (i != top) a.insert(i);
  return a;
}

/// Sphere model Delta^n / boundary: one vertex and one n-cell.
inline SimplicialSet sphere_model(int n) {
  SimplicialSet d = standard_simplex(n);
  SimplicialSet q = quotient(d, boundary_subcomplex(d));
  q.set_name("sphere" + std::to_string(n));
  return q;
}

/// Finite monoid given by a multiplication table; table[i][j] = i * j.
struct MonoidTable {
  std::vector<std::string> names;
  std::vector<std::vector<int>> table;
  int identity = -1;

  int size() const { return static_cast<int>(names.size()); }
  int mul(int i, int j) const { return table.at(i).at(j); }

  void validate() const {
    int n = size();
    if (identity < 0 || identity >= n) throw std::invalid_argument("monoid: missing identity");
    for (int i = 0; i < n; ++i)
      if (mul(identity, i) != i || mul(i, identity) != i)
        throw std::invalid_argument("monoid: identity law fails");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (mul(mul(i, j), k) != mul(i, mul(j, k)))
            throw std::invalid_argument("monoid: associativity fails");
  }
};

inline MonoidTable cyclic_group(int n) {
  MonoidTable m;
  m.identity = 0;
  for (int i = 0; i < n; ++i) {
    m.names.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g" + std::to_string(i)));
    std::vector<int> row(n);
    for (int j = 0; j < n; ++j) row[j] = (i + j) % n;
    m.table.push_back(std::move(row));
  }
  return m;
}

/// Nerve of a finite monoid, truncated above dimension max_dim. Nondegenerate
/// n-simplices are the identity-free n-tuples.
inline SimplicialSet nerve_monoid(const MonoidTable& m, int max_dim) {
  m.validate();
  if (max_dim < 0) throw std::invalid_argument("nerve_monoid: max_dim >= 0");
  SimplicialSet s("nerve");
  auto tuple_id = [&m](const std::vector<int>& t) {
    std::string id = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) id += ',';
      id += m.names[t[i]];
    }
    return id + ")";
  };
  s.add(tuple_id({}), 0, {});
  auto ref_of_tuple = [&](const std::vector<int>& t) -> SimplexRef {
    std::vector<int> word, base;
    for (std::size_t p = 0; p < t.size(); ++p) {
      if (t[p] == m.identity)
        word.push_back(static_cast<int>(p));
      else
        base.push_back(t[p]);
    }
    return {std::move(word), s.require(tuple_id(base))};
  };
  std::vector<std::vector<int>> current = {{}};
  for (int d = 1; d <= max_dim; ++d) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : current)
      for (int g = 0; g < m.size(); ++g) {
        if (g == m.identity) continue;
        auto t = prefix;
        t.push_back(g);
        next.push_back(t);
      }
    for (const auto& t : next) {
      std::vector<SimplexRef> faces;
      for (int i = 0; i <= d; ++i) {
        std::vector<int> u;
        if (i == 0)
          u.assign(t.begin() + 1, t.end());
        else if (i == d)
          u.assign(t.begin(), t.end() - 1);
        else {
          u.assign(t.begin(), t.end());
          u[i - 1] = m.mul(t[i - 1], t[i]);
          u.erase(u.begin() + i);
        }
        faces.push_back(ref_of_tuple(u));
      }
      s.add(tuple_id(t), d, std::move(faces));
    }
    current = std::move(next);
  }
  return s;
}

}  // namespace loopspace
