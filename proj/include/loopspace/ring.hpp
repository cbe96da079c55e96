#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace loopspace {

using Int = mpz_class;

/// Coefficient ring for homology computations. All boundary matrices are
/// integral; the ring tag selects how ranks/torsion are computed.
struct Ring {
  enum class Kind { Integers, Rationals, PrimeField };
  Kind kind = Kind::Integers;
  long p = 0;  // modulus, PrimeField only

  static Ring integers() { return {Kind::Integers, 0}; }
  static Ring rationals() { return {Kind::Rationals, 0}; }
  static Ring prime_field(long p) {
    if (p < 2) throw std::invalid_argument("prime_field: p must be prime");
    for (long d = 2; d * d <= p; ++d)
      if (p % d == 0) throw std::invalid_argument("prime_field: p must be prime");
    return {Kind::PrimeField, p};
  }

  bool is_field() const { return kind != Kind::Integers; }
  bool operator==(const Ring&) const = default;

  std::string name() const {
    switch (kind) {
      case Kind::Integers: return "Z";
      case Kind::Rationals: return "Q";
      case Kind::PrimeField: return "F" + std::to_string(p);
    }
    return "?";
  }
};

}  // namespace loopspace
