#pragma once

#include <vector>

#include "nilcox/cyclotomic.hpp"

namespace nilcox {

using CycloRow = std::vector<Cyclotomic>;
using CycloMatrix = std::vector<CycloRow>;

/// Scale the row by a rational so entries are integral with coprime content.
void normalize_row(CycloRow& row);

/// Rank by fraction-free elimination (cross multiplication, no inverses),
/// with column pivot chosen as the first row holding a nonzero entry.
long rank_fraction_free(CycloMatrix rows);

/// Basis of the left kernel {c : sum_r c_r * rows[r] = 0}.
CycloMatrix left_kernel(const CycloMatrix& rows);

/// Reduced row-echelon form in place; returns pivot column indices. Rows of
/// zeros are dropped. Pivots are normalized to 1 and cleared above.
std::vector<int> rref_in_place(CycloMatrix& rows);

Cyclotomic determinant(CycloMatrix rows);

/// Whether v lies in the row span.
bool in_row_span(const CycloMatrix& rows, const CycloRow& v);

}  // namespace nilcox
