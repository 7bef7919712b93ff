#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <optional>
#include <utility>

#include "sparsepave/subsets.hpp"

// The family property at the core of the whole library: a family of
// r-subsets is admissible as the circuit set of a sparse paving matroid
// exactly when any two distinct members share at most r-2 elements.  We
// call that property "star-star" throughout.  Equivalently the family is an
// independent set of the conflict graph whose vertices are the r-subsets
// and whose edges join pairs sharing exactly r-1 elements.

namespace sparsepave {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::rational<BigInt>;

struct StarStarViolation : std::domain_error {
    RSubset a, b;

    StarStarViolation(RSubset a_, RSubset b_);
};

struct StarStarReport {
    bool holds = true;
    std::optional<std::pair<RSubset, RSubset>> witness;  // first offending pair
};

// Checks the property for a family of r-subsets.  Throws std::domain_error
// when members do not all have cardinality r.
StarStarReport satisfies_star_star(const SubsetFamily& family, int r);

// Walks the r-subsets in canonical order, keeping each one compatible with
// everything kept so far.  The result is maximal, hence at least
// binom(n,r) / (r(n-r)+1) large.
SubsetFamily greedy_star_star(GroundSet g, int r);

// Exact upper bound binom(n, r+1) / (n - r) on the size of any star-star
// family: each member owns n-r of the (r+1)-supersets and no superset is
// shared.
BigRational star_star_upper_bound(int n, int r);

// 2^floor(binom(n,r) / (r(n-r)+1)), a lower bound on the number of sparse
// paving matroids of rank r on n elements (every subfamily of a star-star
// family is one).
BigInt sparse_count_lower_bound(int n, int r);

// Exact maximum star-star family via branch and bound seeded with the greedy
// incumbent.  Deterministic: returns the lexicographically least maximum
// family.  Refuses n > 10.
SubsetFamily max_star_star_exact(GroundSet g, int r);

}  // namespace sparsepave
