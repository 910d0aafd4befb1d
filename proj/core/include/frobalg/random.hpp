#pragma once

#include <cstdint>
#include <random>

#include "frobalg/scalar.hpp"

namespace frobalg {

/// Seeded generator shared by every randomized search.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n); n > 0.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  bool coin() { return (engine_() & 1U) != 0; }

  /// Small integer in [-radius, radius] for the rationals, uniform residue
  /// for prime fields.
  Scalar scalar(FieldSpec field, long radius = 3) {
    if (field.is_rational()) {
      long span = 2 * radius + 1;
      return field(static_cast<long>(engine_() % static_cast<std::uint64_t>(span)) - radius);
    }
    mpz_class r = 0;
    const mpz_class p = field.characteristic();
    std::size_t words = mpz_sizeinbase(p.get_mpz_t(), 2) / 64 + 2;
    for (std::size_t k = 0; k < words; ++k) {
      r <<= 64;
      r += mpz_class(std::to_string(engine_()), 10);
    }
    return field(mpq_class(r));
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace frobalg
