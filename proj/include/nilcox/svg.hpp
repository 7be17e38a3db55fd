#pragma once

#include <string>

namespace nilcox {

/// Triangular alcove diagram of the affine Weyl group (n = 3) out to length
/// 3m. Alcoves whose Demazure operator vanishes by the roundabout relation
/// (cyclic subword of length >= 2m+2, i.e. a or b >= 2m+1) are shaded;
/// length-3m alcoves with nonzero operator carry the quantum-binomial label
/// from the closed Xi formula. Output is deterministic for fixed inputs.
std::string alcove_svg(int m);

}  // namespace nilcox
