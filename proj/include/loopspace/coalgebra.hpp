#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "loopspace/chain_complex.hpp"
#include "loopspace/simplicial.hpp"

namespace loopspace {

/// Connected (or not) dg coalgebra with a finite ordered basis per degree.
/// The counit projects onto degree 0; coproduct terms are basis pairs.
struct DGCoalgebra {
  struct CoTerm {
    int p, i;  // left factor: degree p, index i
    int q, j;  // right factor
    Int c;
  };

  std::vector<std::vector<std::string>> labels;
  std::vector<Matrix> boundary;
  std::vector<std::vector<std::vector<CoTerm>>> coproduct;  // [deg][idx]
  bool connected = false;
  int cutoff = 0;

  std::size_t dim(int deg) const {
    return deg >= 0 && deg < static_cast<int>(labels.size()) ? labels[deg].size() : 0;
  }

  ChainComplex complex(Ring ring = Ring::integers()) const {
    return ChainComplex(ring, labels, boundary);
  }
};

/// Normalized chains with the Alexander-Whitney coproduct, truncated at
/// degree n_cutoff. Degenerate faces vanish; coproduct terms with a
/// degenerate factor of positive degree vanish.
inline DGCoalgebra aw_coalgebra(const SimplicialSet& s, int n_cutoff) {
  DGCoalgebra c;
  c.cutoff = n_cutoff;
  c.connected = s.vertex_count() == 1;
  int top = std::min(n_cutoff, s.dim_max());
  std::map<int, std::pair<int, int>> pos;  // simplex index -> (deg, idx)
  for (int d = 0; d <= top; ++d) {
    c.labels.emplace_back();
    for (int i : s.simplices_of_dim(d)) {
      pos[i] = {d, static_cast<int>(c.labels[d].size())};
      c.labels[d].push_back(s.simplex(i).id);
    }
  }
  c.boundary.push_back(Matrix(0, c.labels[0].size()));
  for (int d = 1; d <= top; ++d) {
    Matrix m(c.labels[d - 1].size(), c.labels[d].size());
    int col = 0;
    for (int i : s.simplices_of_dim(d)) {
      const Simplex& sx = s.simplex(i);
      for (int f = 0; f <= d; ++f) {
        const SimplexRef& r = sx.faces[f];
        if (r.degenerate()) continue;
        m.at(pos.at(r.base).second, col) += (f % 2 == 0 ? 1 : -1);
      }
      ++col;
    }
    c.boundary.push_back(std::move(m));
  }
  c.coproduct.resize(top + 1);
  for (int d = 0; d <= top; ++d) {
    for (int i : s.simplices_of_dim(d)) {
      std::vector<DGCoalgebra::CoTerm> terms;
      SimplexRef r{{}, i};
      for (int p = 0; p <= d; ++p) {
        MonotoneMap front(p + 1), last(d - p + 1);
        for (int t = 0; t <= p; ++t) front[t] = t;
        for (int t = 0; t <= d - p; ++t) last[t] = p + t;
        SimplexRef fp = s.apply(r, front);
        SimplexRef lq = s.apply(r, last);
        if (fp.degenerate() || lq.degenerate()) continue;
        auto [pl, il] = pos.at(fp.base);
        auto [pr, ir] = pos.at(lq.base);
        terms.push_back({pl, il, pr, ir, Int(1)});
      }
      c.coproduct[d].push_back(std::move(terms));
    }
  }
  return c;
}

// --- verification helpers (used by tests and the verify suites) ---

using Tensor2 = std::map<std::array<int, 4>, Int>;
using Tensor3 = std::map<std::array<int, 6>, Int>;

inline void tensor2_add(Tensor2& t, std::array<int, 4> k, const Int& c) {
  auto it = t.emplace(k, 0).first;
  it->second += c;
  if (it->second == 0) t.erase(it);
}
inline void tensor3_add(Tensor3& t, std::array<int, 6> k, const Int& c) {
  auto it = t.emplace(k, 0).first;
  it->second += c;
  if (it->second == 0) t.erase(it);
}

inline Tensor2 coproduct_of(const DGCoalgebra& c, int deg, int idx) {
  Tensor2 t;
  for (const auto& term : c.coproduct[deg][idx])
    tensor2_add(t, {term.p, term.i, term.q, term.j}, term.c);
  return t;
}

/// (Delta x id) Delta == (id x Delta) Delta, degreewise on the whole basis.
inline std::optional<std::string> check_coassociative(const DGCoalgebra& c) {
  for (int d = 0; d < static_cast<int>(c.labels.size()); ++d)
    for (std::size_t i = 0; i < c.labels[d].size(); ++i) {
      Tensor3 lhs, rhs;
      for (const auto& t : c.coproduct[d][i]) {
        for (const auto& u : c.coproduct[t.p][t.i])
          tensor3_add(lhs, {u.p, u.i, u.q, u.j, t.q, t.j}, t.c * u.c);
        for (const auto& u : c.coproduct[t.q][t.j])
          tensor3_add(rhs, {t.p, t.i, u.p, u.i, u.q, u.j}, t.c * u.c);
      }
      if (lhs != rhs)
        return "coassociativity fails on " + c.labels[d][i];
    }
  return std::nullopt;
}

/// Both counit laws; the counit maps each degree-0 basis element to 1.
inline std::optional<std::string> check_counit(const DGCoalgebra& c) {
  for (int d = 0; d < static_cast<int>(c.labels.size()); ++d)
    for (std::size_t i = 0; i < c.labels[d].size(); ++i) {
      std::map<std::pair<int, int>, Int> left, right;
      for (const auto& t : c.coproduct[d][i]) {
        if (t.p == 0) left[{t.q, t.j}] += t.c;
        if (t.q == 0) right[{t.p, t.i}] += t.c;
      }
      std::map<std::pair<int, int>, Int> expect;
      expect[{d, static_cast<int>(i)}] = 1;
      auto prune = [](std::map<std::pair<int, int>, Int>& m) {
        for (auto it = m.begin(); it != m.end();)
          it = it->second == 0 ? m.erase(it) : std::next(it);
      };
      prune(left);
      prune(right);
      if (left != expect || right != expect)
        return "counit law fails on " + c.labels[d][i];
    }
  return std::nullopt;
}

/// Delta is a chain map: Delta d = (d x id + id x d) Delta with Koszul signs.
inline std::optional<std::string> check_coproduct_chain_map(const DGCoalgebra& c) {
  for (int d = 1; d < static_cast<int>(c.labels.size()); ++d)
    for (std::size_t i = 0; i < c.labels[d].size(); ++i) {
      Tensor2 lhs;
      for (std::size_t k = 0; k < c.labels[d - 1].size(); ++k) {
        const Int& coeff = c.boundary[d].at(k, i);
        if (coeff == 0) continue;
        for (const auto& t : c.coproduct[d - 1][k])
          tensor2_add(lhs, {t.p, t.i, t.q, t.j}, coeff * t.c);
      }
      Tensor2 rhs;
      for (const auto& t : c.coproduct[d][i]) {
        if (t.p > 0)
          for (std::size_t k = 0; k < c.labels[t.p - 1].size(); ++k) {
            const Int& b = c.boundary[t.p].at(k, t.i);
            if (b != 0) tensor2_add(rhs, {t.p - 1, static_cast<int>(k), t.q, t.j}, t.c * b);
          }
        if (t.q > 0) {
          Int sign = t.p % 2 == 0 ? 1 : -1;
          for (std::size_t k = 0; k < c.labels[t.q - 1].size(); ++k) {
            const Int& b = c.boundary[t.q].at(k, t.j);
            if (b != 0)
              tensor2_add(rhs, {t.p, t.i, t.q - 1, static_cast<int>(k)}, sign * t.c * b);
          }
        }
      }
      if (lhs != rhs)
        return "coproduct chain-map law fails on " + c.labels[d][i];
    }
  return std::nullopt;
}

}  // namespace loopspace
