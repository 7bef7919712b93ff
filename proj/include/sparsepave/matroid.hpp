#pragma once

#include <stdexcept>
#include <string>

#include "sparsepave/subsets.hpp"

namespace sparsepave {

// Basis exchange failed; carries the first witnessing triple found when
// scanning bases in canonical order and exchange elements in ascending order.
struct ExchangeFailure : std::domain_error {
    RSubset b1, b2;
    int x;

    ExchangeFailure(RSubset b1_, RSubset b2_, int x_);
};

// A matroid given by its bases.  Equality is (n, rank, basis list).
class Matroid {
public:
    // Runs the full exchange check over every (B1, B2, x) triple and throws
    // ExchangeFailure on the first violation.
    static Matroid from_bases(GroundSet g, int rank, SubsetFamily bases);

    // Skips validation.  Reserved for enumeration loops that have already
    // certified the family themselves.
    static Matroid trusted(GroundSet g, int rank, SubsetFamily bases);

    static Matroid uniform(GroundSet g, int rank);

    int n() const { return ground_.n; }
    GroundSet ground() const { return ground_; }
    int rank() const { return rank_; }
    const SubsetFamily& bases() const { return bases_; }

    bool is_basis(RSubset x) const { return bases_.contains(x); }
    bool independent(RSubset x) const;
    int rank_of(RSubset x) const;
    RSubset closure_of(RSubset x) const;

    Matroid dual() const;

    friend bool operator==(const Matroid& a, const Matroid& b) {
        return a.ground_.n == b.ground_.n && a.rank_ == b.rank_ && a.bases_ == b.bases_;
    }

private:
    Matroid(GroundSet g, int rank, SubsetFamily bases);

    GroundSet ground_;
    int rank_;
    SubsetFamily bases_;
};

// Splits the rank-sized subsets three ways: bases, circuits (dependent with
// every proper subset independent) and dependent non-circuits.
struct RankRDecomposition {
    SubsetFamily bases;
    SubsetFamily circuits;
    SubsetFamily dependent_noncircuits;
};

RankRDecomposition decompose_rank_r(const Matroid& m);

// No dependent set smaller than the rank, i.e. every (rank-1)-subset is
// independent.
bool is_paving(const Matroid& m);

// Paving with paving dual.  Internally cross-checked against the circuit
// characterization (all rank-sized non-bases are circuits and pairwise share
// at most rank-2 elements); a disagreement would be a bug, not an input error.
bool is_sparse_paving(const Matroid& m);

// Builds the sparse paving matroid whose bases are all r-subsets except the
// given circuits.  Requires n >= 3, 2 <= r <= n-1, circuits of cardinality r
// pairwise sharing at most r-2 elements.  The result is re-validated through
// the exchange check.
Matroid sparse_from_circuits(GroundSet g, int r, const SubsetFamily& circuits);

// The raw exchange check used by Matroid::from_bases, exposed for tests.
void validate_exchange(GroundSet g, int r, const SubsetFamily& bases);

}  // namespace sparsepave
