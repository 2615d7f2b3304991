#pragma once

#include "twining/characters.hpp"
#include "twining/folding.hpp"

namespace twining {

/// P*_omega applied to every exponent; coefficients are unchanged and the map
/// is injective on supports.
inline CharacterPolynomial map_character(const FoldingData& f, const CharacterPolynomial& p) {
  require(p.gcm_size() == f.folded.size(), ErrorKind::SizeMismatch,
          "character has rank " + std::to_string(p.gcm_size()) + " but the folded matrix has rank " +
              std::to_string(f.folded.size()));
  CharacterPolynomial out(f.source.size());
  for (const auto& [mu, c] : p.terms()) out.add(pstar(f, mu), c);
  return out;
}

}  // namespace twining
