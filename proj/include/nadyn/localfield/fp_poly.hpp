#pragma once

#include <vector>

namespace nadyn::localfield {

// Rabin's test over F_p; `coeffs` low to high, monic, degree >= 1.
bool irreducible_mod_p(const std::vector<long>& coeffs, long p);

}  // namespace nadyn::localfield
