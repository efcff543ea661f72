// Exact linear algebra over Q: fraction-free (Bareiss) forward elimination
// for ranks, with a reduced-echelon view for reducing vectors modulo the
// row space. No floating point anywhere.
#pragma once

#include "beadcalc/rational.hpp"

#include <vector>

namespace beadcalc {

class EchelonBasis {
public:
    /// Builds an echelon basis of the row space of `rows` (vectors of length
    /// ncols). Pivot columns are chosen left to right.
    EchelonBasis(std::vector<std::vector<Rational>> rows, int ncols);

    int rank() const { return static_cast<int>(pivots_.size()); }
    int ncols() const { return ncols_; }
    const std::vector<int>& pivots() const { return pivots_; }

    /// Eliminates every pivot coordinate of v against the basis; the result
    /// is the canonical representative of v modulo the row space (zero iff v
    /// lies in the row space).
    std::vector<Rational> reduce(std::vector<Rational> v) const;

private:
    int ncols_;
    // reduced rows: rows_[r] has a 1 in column pivots_[r], zeros in all other
    // pivot columns
    std::vector<std::vector<Rational>> rows_;
    std::vector<int> pivots_;
};

}  // namespace beadcalc
