#pragma once

#include <random>
#include <vector>

#include "twining/characters.hpp"

namespace twining::proptest {

class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  Coord integer(Coord lo, Coord hi) { return std::uniform_int_distribution<Coord>(lo, hi)(rng_); }

  Weight weight(Index n, Coord lo, Coord hi) {
    Weight w = Weight::zero(n);
    for (Index i = 0; i < n; ++i) w[i] = integer(lo, hi);
    return w;
  }

  WeylWord word(Index n, Index max_len) {
    WeylWord w;
    const Index len = static_cast<Index>(integer(0, static_cast<Coord>(max_len)));
    for (Index k = 0; k < len; ++k) w.letters.push_back(static_cast<Index>(integer(0, static_cast<Coord>(n) - 1)));
    return w;
  }

  CharacterPolynomial sparse_polynomial(Index n, Index max_terms, Coord box) {
    CharacterPolynomial p(n);
    const Index terms = static_cast<Index>(integer(0, static_cast<Coord>(max_terms)));
    for (Index k = 0; k < terms; ++k) p.add(weight(n, -box, box), Integer(integer(-5, 5)));
    return p;
  }

 private:
  std::mt19937 rng_;
};

}  // namespace twining::proptest
