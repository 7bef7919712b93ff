#pragma once

#include <vector>

#include "sparsepave/subsets.hpp"

// Fix a pivot r-subset X.  Every r-subset Y falls into exactly one layer
// h = |Y intersect X|, and the layer-h subsets arrange into a matrix whose
// rows are indexed by the (r-h)-subsets Z of the complement of X and whose
// columns are indexed by the h-subsets A of X; the entry at (Z, A) is
// A union Z.  Reading each matrix along wrap-around diagonals and gluing the
// j-th diagonals of all odd (resp. even) layers together yields a partition
// of all r-subsets into classes that are valid circuit families: two entries
// of one class either come from one layer (then they differ in both row and
// column, so they share at most r-2 elements) or from layers at distance
// >= 2 (then the pivot and complement parts together overlap in at most
// min(h,h') + min(r-h, r-h') <= r-2 elements).

namespace sparsepave {

struct ShMatrix {
    int r = 0;
    int h = 0;             // overlap with the pivot
    RSubset pivot;
    std::vector<RSubset> rows;  // (r-h)-subsets of the pivot complement, canonical order
    std::vector<RSubset> cols;  // h-subsets of the pivot, canonical order

    bool empty() const { return rows.empty() || cols.empty(); }
    RSubset entry(int i, int t) const { return cols[static_cast<std::size_t>(t)].unite(rows[static_cast<std::size_t>(i)]); }
    // Number of wrap-around diagonals.
    int diagonal_count() const { return static_cast<int>(std::max(rows.size(), cols.size())); }
};

// Requires |pivot| = r and 0 <= h <= r.  The matrix is empty exactly when
// r - h > n - r.
ShMatrix build_matrix(GroundSet g, int r, RSubset pivot, int h);

// The j-th wrap-around diagonal (1-based, 1 <= j <= diagonal_count()), as a
// canonical family.  Walks the shorter axis; position t pairs with index
// ((j + t) mod longer-axis) on the longer axis.
SubsetFamily diagonal_class(const ShMatrix& m, int j);

struct StarPartition {
    RSubset pivot;
    int alpha = 0;  // number of odd-layer classes
    int beta = 0;   // number of even-layer classes
    std::vector<SubsetFamily> odd_classes;   // size alpha, possibly empty members
    std::vector<SubsetFamily> even_classes;  // size beta

    int gamma() const { return alpha + beta; }
};

// Glues the j-th diagonals across layers of equal parity.  Class counts are
// alpha = max over odd h of max(rows_h, cols_h) and beta likewise over even
// h, where rows_h = binom(n-r, r-h) and cols_h = binom(r, h).  Classes with
// an index beyond every nonempty layer's diagonal count stay empty but are
// kept, since downstream constructions index classes 1..alpha+beta.
StarPartition build_partition(GroundSet g, int r, RSubset pivot);

// alpha + beta computed straight from the binomials, no matrices built.
long long gamma_count(int n, int r);

}  // namespace sparsepave
