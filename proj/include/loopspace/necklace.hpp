#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace loopspace {

/// A necklace in preferred form: a wedge of simplices of dimensions >= 1
/// glued end to end. The empty bead list is the point.
struct Necklace {
  std::vector<int> beads;

  Necklace() = default;
  explicit Necklace(std::vector<int> b) : beads(std::move(b)) {
    for (int n : beads)
      if (n < 1) throw std::invalid_argument("necklace bead of dimension < 1");
  }

  int bead_count() const { return static_cast<int>(beads.size()); }
  int num_vertices() const {
    int v = 1;
    for (int n : beads) v += n;
    return v;
  }
  int last_vertex() const { return num_vertices() - 1; }

  /// Joint vertex indices (ends of beads), sorted.
  std::vector<int> joints() const {
    std::vector<int> j = {0};
    int c = 0;
    for (int n : beads) j.push_back(c += n);
    if (beads.empty()) return {0};
    return j;
  }
  bool is_joint(int v) const {
    int c = 0;
    if (v == 0) return true;
    for (int n : beads)
      if ((c += n) == v) return true;
    return false;
  }
  std::vector<int> non_joints() const {
    std::vector<int> r;
    for (int v = 0; v <= last_vertex(); ++v)
      if (!is_joint(v)) r.push_back(v);
    return r;
  }
  /// Vertex span [start, end] of bead b.
  std::pair<int, int> bead_span(int b) const {
    int start = 0;
    for (int i = 0; i < b; ++i) start += beads[i];
    return {start, start + beads[b]};
  }

  bool operator==(const Necklace&) const = default;
  bool operator<(const Necklace& o) const { return beads < o.beads; }

  std::string str() const {
    if (beads.empty()) return "pt";
    std::string s;
    for (std::size_t i = 0; i < beads.size(); ++i) {
      if (i) s += "v";
      s += "D" + std::to_string(beads[i]);
    }
    return s;
  }
};

/// Morphism of necklaces as a monotone vertex map preserving first and last
/// vertices, with each bead landing inside a single target bead.
struct NecklaceMorphism {
  Necklace src, tgt;
  std::vector<int> map;

  NecklaceMorphism(Necklace s, Necklace t, std::vector<int> m)
      : src(std::move(s)), tgt(std::move(t)), map(std::move(m)) {
    if (static_cast<int>(map.size()) != src.num_vertices())
      throw std::invalid_argument("necklace morphism: wrong vertex map size");
    for (std::size_t i = 0; i + 1 < map.size(); ++i)
      if (map[i] > map[i + 1]) throw std::invalid_argument("necklace morphism: not monotone");
    if (map.front() != 0 || map.back() != tgt.last_vertex())
      throw std::invalid_argument("necklace morphism: endpoints not preserved");
    for (int b = 0; b < src.bead_count(); ++b) {
      auto [a, z] = src.bead_span(b);
      bool ok = tgt.bead_count() == 0;
      for (int tb = 0; tb < tgt.bead_count() && !ok; ++tb) {
        auto [ta, tz] = tgt.bead_span(tb);
        ok = ta <= map[a] && map[z] <= tz;
      }
      if (!ok)
        throw std::invalid_argument("necklace morphism: bead image crosses a joint");
    }
  }

  bool is_identity() const {
    if (!(src == tgt)) return false;
    for (std::size_t i = 0; i < map.size(); ++i)
      if (map[i] != static_cast<int>(i)) return false;
    return true;
  }

  bool is_injective() const {
    for (std::size_t i = 0; i + 1 < map.size(); ++i)
      if (map[i] == map[i + 1]) return false;
    return true;
  }

  bool operator==(const NecklaceMorphism&) const = default;
};

inline NecklaceMorphism nec_identity(const Necklace& t) {
  std::vector<int> m(t.num_vertices());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<int>(i);
  return {t, t, std::move(m)};
}

inline NecklaceMorphism nec_compose(const NecklaceMorphism& g, const NecklaceMorphism& f) {
  if (!(f.tgt == g.src)) throw std::invalid_argument("nec_compose: source/target mismatch");
  std::vector<int> m(f.map.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = g.map[f.map[i]];
  return {f.src, g.tgt, std::move(m)};
}

/// g1 v g2 on wedges, gluing the last vertex of the first part to the first
/// vertex of the second.
inline NecklaceMorphism nec_wedge(const NecklaceMorphism& g1, const NecklaceMorphism& g2) {
  std::vector<int> beads_s = g1.src.beads, beads_t = g1.tgt.beads;
  beads_s.insert(beads_s.end(), g2.src.beads.begin(), g2.src.beads.end());
  beads_t.insert(beads_t.end(), g2.tgt.beads.begin(), g2.tgt.beads.end());
  int toff = g1.tgt.last_vertex();
  std::vector<int> m = g1.map;
  for (std::size_t i = 1; i < g2.map.size(); ++i) m.push_back(g2.map[i] + toff);
  return {Necklace(beads_s), Necklace(beads_t), std::move(m)};
}

/// Morphism of the box category as its object table {0,1}^m -> {0,1}^n;
/// coordinate i is bit i-1.
struct BoxMorphism {
  int src_dim = 0, tgt_dim = 0;
  std::vector<std::uint32_t> table;  // size 2^src_dim

  bool operator==(const BoxMorphism&) const = default;

  bool is_monotone() const {
    for (std::uint32_t m = 0; m < table.size(); ++m)
      for (int b = 0; b < src_dim; ++b) {
        std::uint32_t m2 = m | (1u << b);
        if (m2 != m && (table[m] & table[m2]) != table[m]) return false;
      }
    return true;
  }

  static BoxMorphism identity(int n) {
    BoxMorphism f{n, n, std::vector<std::uint32_t>(std::size_t(1) << n)};
    for (std::uint32_t m = 0; m < f.table.size(); ++m) f.table[m] = m;
    return f;
  }

  /// Cubical co-face: insert eps at coordinate j (1 <= j <= n+1).
  static BoxMorphism delta(int j, int eps, int n) {
    if (j < 1 || j > n + 1) throw std::invalid_argument("delta: bad index");
    BoxMorphism f{n, n + 1, std::vector<std::uint32_t>(std::size_t(1) << n)};
    std::uint32_t low_mask = (1u << (j - 1)) - 1;
    for (std::uint32_t m = 0; m < f.table.size(); ++m)
      f.table[m] = (m & low_mask) | (std::uint32_t(eps) << (j - 1)) |
                   ((m & ~low_mask) << 1);
    return f;
  }

  /// Cubical co-degeneracy: delete coordinate j (1 <= j <= n).
  static BoxMorphism epsilon(int j, int n) {
    if (j < 1 || j > n) throw std::invalid_argument("epsilon: bad index");
    BoxMorphism f{n, n - 1, std::vector<std::uint32_t>(std::size_t(1) << n)};
    std::uint32_t low_mask = (1u << (j - 1)) - 1;
    for (std::uint32_t m = 0; m < f.table.size(); ++m)
      f.table[m] = (m & low_mask) | ((m >> 1) & ~low_mask);
    return f;
  }

  /// Cubical co-connection: coordinate j of the target is max(s_j, s_{j+1}).
  static BoxMorphism gamma(int j, int n) {
    if (n < 2 || j < 1 || j > n - 1) throw std::invalid_argument("gamma: bad index");
    BoxMorphism f{n, n - 1, std::vector<std::uint32_t>(std::size_t(1) << n)};
    for (std::uint32_t m = 0; m < f.table.size(); ++m) {
      std::uint32_t out = 0;
      for (int i = 1; i <= n - 1; ++i) {
        std::uint32_t bit;
        if (i < j)
          bit = (m >> (i - 1)) & 1u;
        else if (i == j)
          bit = ((m >> (j - 1)) & 1u) | ((m >> j) & 1u);
        else
          bit = (m >> i) & 1u;
        out |= bit << (i - 1);
      }
      f.table[m] = out;
    }
    return f;
  }
};

inline BoxMorphism box_compose(const BoxMorphism& g, const BoxMorphism& f) {
  if (f.tgt_dim != g.src_dim) throw std::invalid_argument("box_compose: dimension mismatch");
  BoxMorphism r{f.src_dim, g.tgt_dim, std::vector<std::uint32_t>(f.table.size())};
  for (std::size_t m = 0; m < f.table.size(); ++m) r.table[m] = g.table[f.table[m]];
  return r;
}

/// The functor P1 on a morphism: subsets containing the joints, encoded by
/// their indicator over non-joints, pushed forward along the vertex map.
inline BoxMorphism p1_of_morphism(const NecklaceMorphism& f) {
  std::vector<int> snj = f.src.non_joints(), tnj = f.tgt.non_joints();
  int n = static_cast<int>(snj.size()), m = static_cast<int>(tnj.size());
  std::vector<int> sj = f.src.joints();
  BoxMorphism r{n, m, std::vector<std::uint32_t>(std::size_t(1) << n)};
  for (std::uint32_t mask = 0; mask < r.table.size(); ++mask) {
    std::set<int> image;
    for (int v : sj) image.insert(f.map[v]);
    for (int q = 0; q < n; ++q)
      if (mask & (1u << q)) image.insert(f.map[snj[q]]);
    std::uint32_t out = 0;
    for (int r2 = 0; r2 < m; ++r2)
      if (image.count(tnj[r2])) out |= 1u << r2;
    r.table[mask] = out;
  }
  return r;
}

/// All monotone endpoint-preserving bead-compatible vertex maps T -> T',
/// in lexicographic order of the vertex map.
inline std::vector<NecklaceMorphism> enumerate_morphisms(const Necklace& t,
                                                         const Necklace& t2,
                                                         int vertex_bound = 12) {
  if (t.num_vertices() > vertex_bound || t2.num_vertices() > vertex_bound)
    throw std::invalid_argument("enumerate_morphisms: vertex bound exceeded");
  std::vector<NecklaceMorphism> out;
  std::vector<int> map(t.num_vertices());
  int last = t.last_vertex(), last2 = t2.last_vertex();

  // bead containing each source vertex position (for pruning we recheck spans)
  std::function<void(int)> rec = [&](int v) {
    if (v == static_cast<int>(map.size())) {
      if (map[last] != last2) return;
      // bead compatibility
      for (int b = 0; b < t.bead_count(); ++b) {
        auto [a, z] = t.bead_span(b);
        bool ok = t2.bead_count() == 0;
        for (int tb = 0; tb < t2.bead_count() && !ok; ++tb) {
          auto [ta, tz] = t2.bead_span(tb);
          ok = ta <= map[a] && map[z] <= tz;
        }
        if (!ok) return;
      }
      out.emplace_back(t, t2, map);
      return;
    }
    int lo = v == 0 ? 0 : map[v - 1];
    int hi = v == 0 ? 0 : (v == last ? last2 : last2);
    for (int img = lo; img <= hi; ++img) {
      map[v] = img;
      rec(v + 1);
    }
  };
  rec(0);
  return out;
}

enum class GeneratorType { Identity, CoFace, CoDegeneracy, Delta1Collapse, NotGenerator };

/// Classify a morphism against the three generator shapes.
inline GeneratorType classify_generator(const NecklaceMorphism& f) {
  if (f.is_identity()) return GeneratorType::Identity;
  auto nj = [](const Necklace& n) { return static_cast<int>(n.non_joints().size()); };
  if (f.is_injective() && nj(f.tgt) - nj(f.src) == 1) return GeneratorType::CoFace;

  // type (ii): beadwise, exactly one bead is an elementary codegeneracy
  if (f.src.bead_count() == f.tgt.bead_count()) {
    int p = -1;
    bool shape = true;
    for (int b = 0; b < f.src.bead_count() && shape; ++b) {
      if (f.src.beads[b] == f.tgt.beads[b]) continue;
      if (f.src.beads[b] == f.tgt.beads[b] + 1 && p < 0)
        p = b;
      else
        shape = false;
    }
    if (shape && p >= 0) {
      // map must be the identity off bead p and collapse exactly one pair in it
      int collapses = 0;
      bool ok = true;
      for (std::size_t i = 0; i + 1 < f.map.size(); ++i) {
        if (f.map[i] == f.map[i + 1]) {
          auto [a, z] = f.src.bead_span(p);
          if (static_cast<int>(i) < a || static_cast<int>(i + 1) > z) ok = false;
          ++collapses;
        } else if (f.map[i + 1] != f.map[i] + 1) {
          ok = false;
        }
      }
      if (ok && collapses == 1) return GeneratorType::CoDegeneracy;
    }
  }

  // type (iii): one Delta^1 bead removed, everything else rigid
  if (f.src.bead_count() == f.tgt.bead_count() + 1) {
    for (int p = 0; p < f.src.bead_count(); ++p) {
      if (f.src.beads[p] != 1) continue;
      std::vector<int> rest = f.src.beads;
      rest.erase(rest.begin() + p);
      if (rest != f.tgt.beads) continue;
      auto [a, z] = f.src.bead_span(p);
      bool ok = true;
      for (std::size_t i = 0; i + 1 < f.map.size(); ++i) {
        int expect = (static_cast<int>(i) == a) ? 0 : 1;  // the Delta^1 bead collapses
        if (f.map[i + 1] - f.map[i] != expect) ok = false;
      }
      if (ok && f.map[0] == 0) return GeneratorType::Delta1Collapse;
    }
  }
  return GeneratorType::NotGenerator;
}

namespace detail {

/// Subnecklace of tgt given by a vertex subset and designated joints.
struct Span {
  std::vector<int> verts;   // sorted target vertex indices
  std::vector<int> joints;  // subset of verts, includes ends

  Necklace necklace() const {
    std::vector<int> beads;
    for (std::size_t k = 0; k + 1 < joints.size(); ++k) {
      int lo = joints[k], hi = joints[k + 1];
      int count = 0;
      for (int v : verts)
        if (lo <= v && v <= hi) ++count;
      beads.push_back(count - 1);
    }
    return Necklace(beads);
  }
  /// Inclusion into the ambient necklace.
  NecklaceMorphism inclusion(const Necklace& ambient) const {
    return {necklace(), ambient, verts};
  }
  int local_index(int target_vertex) const {
    auto it = std::lower_bound(verts.begin(), verts.end(), target_vertex);
    return static_cast<int>(it - verts.begin());
  }
};

/// Full span of tgt between vertices a and b: all vertices, joints of tgt
/// strictly inside plus the two ends.
inline Span full_span(const Necklace& tgt, int a, int b) {
  Span s;
  for (int v = a; v <= b; ++v) s.verts.push_back(v);
  s.joints.push_back(a);
  for (int j : tgt.joints())
    if (a < j && j < b) s.joints.push_back(j);
  if (b != a) s.joints.push_back(b);
  return s;
}

inline void factorize_single_bead(const NecklaceMorphism& f,
                                  std::vector<NecklaceMorphism>& out) {
  // f: Delta^n -> Delta^m (or the point); surjection part then injections
  std::vector<int> cur = f.map;
  Necklace cur_src = f.src;
  std::vector<NecklaceMorphism> surj;
  while (true) {
    std::size_t i = 0;
    while (i + 1 < cur.size() && cur[i] != cur[i + 1]) ++i;
    if (i + 1 >= cur.size()) break;
    int n = static_cast<int>(cur.size()) - 1;
    Necklace next_src = n - 1 >= 1 ? Necklace({n - 1}) : Necklace();
    std::vector<int> step(n + 1);
    for (int v = 0; v <= n; ++v) step[v] = v <= static_cast<int>(i) ? v : v - 1;
    surj.emplace_back(cur_src, next_src, step);
    cur.erase(cur.begin() + i);
    cur_src = next_src;
  }
  // cur is now injective: insert missing target values smallest-first
  std::vector<int> vals = cur;
  std::vector<NecklaceMorphism> inj;
  while (static_cast<int>(vals.size()) != f.tgt.num_vertices()) {
    int missing = -1;
    {
      std::set<int> have(vals.begin(), vals.end());
      for (int v = 0; v <= f.tgt.last_vertex(); ++v)
        if (!have.count(v)) {
          missing = v;
          break;
        }
    }
    std::vector<int> next_vals = vals;
    next_vals.insert(std::lower_bound(next_vals.begin(), next_vals.end(), missing), missing);
    int sdim = static_cast<int>(vals.size()) - 1;
    Necklace a = sdim >= 1 ? Necklace({sdim}) : Necklace();
    Necklace b = Necklace({sdim + 1});
    std::vector<int> step;
    for (int v : vals)
      step.push_back(static_cast<int>(
          std::lower_bound(next_vals.begin(), next_vals.end(), v) - next_vals.begin()));
    inj.emplace_back(a, b, step);
    vals = next_vals;
  }
  // f = inj_k ... inj_1 surj_l ... surj_1; emit leftmost factor first
  for (auto it = inj.rbegin(); it != inj.rend(); ++it) out.push_back(*it);
  for (auto it = surj.rbegin(); it != surj.rend(); ++it) out.push_back(*it);
}

/// Injective inclusion of a full-range span: drop extra designated joints
/// one at a time, then insert missing vertices smallest-first. Every step is
/// a type (i) generator.
inline void factorize_inclusion(const Span& span, const Necklace& tgt,
                                std::vector<NecklaceMorphism>& out) {
  std::vector<int> tj = tgt.joints();
  std::set<int> real(tj.begin(), tj.end());
  Span cur = span;
  std::vector<NecklaceMorphism> steps;
  while (true) {
    int extra = -1;
    for (int j : cur.joints)
      if (!real.count(j)) {
        extra = j;
        break;
      }
    if (extra < 0) break;
    Span next = cur;
    next.joints.erase(std::find(next.joints.begin(), next.joints.end(), extra));
    std::vector<int> vmap;
    for (std::size_t i = 0; i < cur.verts.size(); ++i) vmap.push_back(static_cast<int>(i));
    steps.emplace_back(cur.necklace(), next.necklace(), vmap);
    cur = next;
  }
  while (static_cast<int>(cur.verts.size()) != tgt.num_vertices()) {
    int missing = -1;
    {
      std::set<int> have(cur.verts.begin(), cur.verts.end());
      for (int v = 0; v <= tgt.last_vertex(); ++v)
        if (!have.count(v)) {
          missing = v;
          break;
        }
    }
    Span next = cur;
    next.verts.insert(std::lower_bound(next.verts.begin(), next.verts.end(), missing),
                      missing);
    std::vector<int> vmap;
    for (int v : cur.verts) vmap.push_back(next.local_index(v));
    steps.emplace_back(cur.necklace(), next.necklace(), vmap);
    cur = next;
  }
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) out.push_back(*it);
}

inline void factorize_rec(const NecklaceMorphism& f, std::vector<NecklaceMorphism>& out) {
  if (f.is_identity()) return;
  if (f.src.bead_count() <= 1) {
    factorize_single_bead(f, out);
    return;
  }
  auto [a0, z0] = f.src.bead_span(0);
  int split = z0;  // last vertex of the first bead
  int fa = f.map[0], fb = f.map[split], fc = f.map[f.src.last_vertex()];
  Span s1 = full_span(f.tgt, fa, fb), s2 = full_span(f.tgt, fb, fc);

  // t: s1 v s2 -> tgt (designates fb as a joint)
  Span glued;
  glued.verts = s1.verts;
  glued.verts.insert(glued.verts.end(), s2.verts.begin() + 1, s2.verts.end());
  glued.joints = s1.joints;
  for (int j : s2.joints)
    if (glued.joints.empty() || glued.joints.back() != j) glued.joints.push_back(j);
  NecklaceMorphism t = glued.inclusion(f.tgt);

  // g: first bead -> s1 (single bead span), h: tail -> s2
  Necklace bead1({f.src.beads[0]});
  std::vector<int> gm;
  for (int v = a0; v <= z0; ++v) gm.push_back(s1.local_index(f.map[v]));
  NecklaceMorphism g(bead1, s1.necklace(), gm);

  std::vector<int> tail_beads(f.src.beads.begin() + 1, f.src.beads.end());
  Necklace tail(tail_beads);
  std::vector<int> hm;
  for (int v = split; v <= f.src.last_vertex(); ++v) hm.push_back(s2.local_index(f.map[v]));
  NecklaceMorphism h(tail, s2.necklace(), hm);

  // f = t o (id_s1 v h) o (g v id_tail)
  factorize_inclusion(glued, f.tgt, out);
  std::vector<NecklaceMorphism> hf;
  factorize_rec(h, hf);
  for (const auto& step : hf) out.push_back(nec_wedge(nec_identity(s1.necklace()), step));
  std::vector<NecklaceMorphism> gf;
  factorize_rec(g, gf);
  for (const auto& step : gf) out.push_back(nec_wedge(step, nec_identity(tail)));
}

}  // namespace detail

/// Prop 3.1 decomposition: a list L with f = L[0] o L[1] o ... o L[k-1],
/// every factor one of the three generator shapes. Identity gives [].
inline std::vector<NecklaceMorphism> factorize(const NecklaceMorphism& f) {
  std::vector<NecklaceMorphism> out;
  detail::factorize_rec(f, out);
  return out;
}

inline NecklaceMorphism compose_all(const std::vector<NecklaceMorphism>& fs,
                                    const NecklaceMorphism& fallback_identity) {
  if (fs.empty()) return fallback_identity;
  NecklaceMorphism acc = fs.back();
  for (auto it = std::next(fs.rbegin()); it != fs.rend(); ++it)
    acc = nec_compose(*it, acc);
  return acc;
}

}  // namespace loopspace
