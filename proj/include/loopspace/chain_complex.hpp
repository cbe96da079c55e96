#pragma once

#include <string>
#include <vector>

#include "loopspace/matrix.hpp"
#include "loopspace/ring.hpp"
#include "loopspace/smith.hpp"

namespace loopspace {

/// Free non-negatively graded chain complex with labeled basis and integer
/// boundary matrices. boundary(n) maps degree n to degree n-1; the square
/// of the boundary is checked at construction.
class ChainComplex {
 public:
  ChainComplex(Ring ring, std::vector<std::vector<std::string>> basis,
               std::vector<Matrix> boundary)
      : ring_(ring), basis_(std::move(basis)), boundary_(std::move(boundary)) {
    if (boundary_.size() != basis_.size())
      throw std::invalid_argument("ChainComplex: one boundary matrix per degree");
    for (std::size_t n = 0; n < basis_.size(); ++n) {
      const std::size_t lower = n == 0 ? 0 : basis_[n - 1].size();
      if (boundary_[n].rows() != lower || boundary_[n].cols() != basis_[n].size())
        throw std::invalid_argument("ChainComplex: boundary shape mismatch in degree " +
                                    std::to_string(n));
    }
    for (std::size_t n = 1; n + 1 < basis_.size(); ++n)
      if (!(boundary_[n] * boundary_[n + 1]).is_zero())
        throw std::invalid_argument("ChainComplex: boundary squared is nonzero in degree " +
                                    std::to_string(n + 1));
  }

  const Ring& ring() const { return ring_; }
  /// Top represented degree.
  std::size_t top_degree() const { return basis_.empty() ? 0 : basis_.size() - 1; }
  std::size_t dim(std::size_t n) const { return n < basis_.size() ? basis_[n].size() : 0; }
  const std::vector<std::string>& labels(std::size_t n) const { return basis_[n]; }
  const Matrix& boundary(std::size_t n) const { return boundary_[n]; }
  std::size_t degrees() const { return basis_.size(); }

 private:
  Ring ring_;
  std::vector<std::vector<std::string>> basis_;
  std::vector<Matrix> boundary_;
};

struct HomologyReport {
  Ring ring;
  std::vector<std::size_t> betti;            // per degree
  std::vector<std::vector<Int>> torsion;     // invariant factors > 1, Z only
};

/// Betti numbers and torsion of a free chain complex. Over Z both come from
/// Smith normal forms; over a field only Gaussian ranks are needed.
inline HomologyReport homology(const ChainComplex& c) {
  HomologyReport rep;
  rep.ring = c.ring();
  const std::size_t degs = c.degrees();
  rep.betti.resize(degs);
  rep.torsion.resize(degs);

  std::vector<std::size_t> rank(degs + 1, 0);
  std::vector<std::vector<Int>> factors(degs + 1);
  for (std::size_t n = 1; n < degs; ++n) {
    switch (c.ring().kind) {
      case Ring::Kind::Integers: {
        auto s = smith_normal_form(c.boundary(n));
        rank[n] = s.rank;
        for (std::size_t i = 0; i < s.rank; ++i) factors[n].push_back(s.d.at(i, i));
        break;
      }
      case Ring::Kind::Rationals:
        rank[n] = rank_rational(c.boundary(n));
        break;
      case Ring::Kind::PrimeField:
        rank[n] = rank_mod_p(c.boundary(n), c.ring().p);
        break;
    }
  }
  for (std::size_t n = 0; n < degs; ++n) {
    std::size_t out = rank[n];                       // rank of boundary leaving degree n
    std::size_t in = n + 1 < degs ? rank[n + 1] : 0; // rank of boundary entering
    rep.betti[n] = c.dim(n) - out - in;
    if (c.ring().kind == Ring::Kind::Integers && n + 1 < degs)
      for (const Int& d : factors[n + 1])
        if (d > 1) rep.torsion[n].push_back(d);
  }
  return rep;
}

}  // namespace loopspace
