#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sparsepave/matroid.hpp"
#include "sparsepave/starstar.hpp"

namespace sparsepave {

// Enumeration ceilings, measured in number of r-subsets of the ground set.
// Full matroid enumeration scans all 2^binom(n,r) basis families and is
// capped lower than the sparse enumeration, which only walks independent
// sets of the conflict graph.
struct CensusLimits {
    int max_matroid_subsets = 20;
    int max_sparse_subsets = 24;

    std::string version() const {
        return "m" + std::to_string(max_matroid_subsets) + "-s" +
               std::to_string(max_sparse_subsets);
    }
};

// Every sparse paving matroid of rank r on n elements, one per star-star
// family (including the empty family, i.e. the uniform matroid).  Ranks 0,
// 1 and n are honored too: rank 1 sparse paving means at most one loop.
std::vector<Matroid> enumerate_sparse(GroundSet g, int r, CensusLimits limits = {});

// Independent-set count of the conflict graph by memoized divide and
// conquer; structurally unrelated to the backtracking walk above and used
// to cross-check it.
BigInt count_sparse_families(GroundSet g, int r, CensusLimits limits = {});

// Every matroid of rank r on n elements, by scanning all nonempty basis
// families and keeping the ones passing the exchange check.  The returned
// order follows the family bitmask encoding (bit k = k-th r-subset in
// canonical order) ascending.  threads = 0 means hardware parallelism; the
// output does not depend on the thread count.
std::vector<Matroid> enumerate_matroids(GroundSet g, int r, CensusLimits limits = {},
                                        int threads = 0);

// Same scan with the subset indexing reversed, counting only.  A cheap
// independent path to the same cardinality.
BigInt count_matroids_reversed(GroundSet g, int r, CensusLimits limits = {},
                               int threads = 0);

struct CensusRow {
    int n = 0;
    int r = 0;
    BigInt sparse_count;
    long long gamma = 0;
    BigInt lower_bound;                       // 2^floor(binom(n,r)/(r(n-r)+1))
    bool lower_ok = false;                    // lower_bound <= sparse_count
    bool sandwich_ok = false;                 // sparse(n-1,r) <= sparse(n,r)
                                              //   <= sparse(n-1,r) + sparse(n-1,r-1)
    std::optional<BigInt> matroid_count;      // absent above the matroid ceiling
    std::optional<bool> upper_factor_ok;      // matroid <= gamma * sparse
    std::optional<bool> cor44b_ok;            // matroid <= 2^(gamma*floor(binom(n,r+1)/(n-r)))
    std::optional<double> log_ratio;          // log2(matroid) / log2(sparse)

    bool all_flags_ok() const {
        return lower_ok && sandwich_ok && upper_factor_ok.value_or(true) &&
               cor44b_ok.value_or(true);
    }
};

// Rows for all ranks 2 <= r <= n-1.  Throws when a rank exceeds the sparse
// ceiling; matroid-dependent fields are simply left empty above the matroid
// ceiling.
std::vector<CensusRow> verify_bounds(int n, CensusLimits limits = {}, int threads = 0);

enum class CensusFormat { csv, json };

std::string census_to_csv(const std::vector<CensusRow>& rows);
std::string census_to_json(const std::vector<CensusRow>& rows, const CensusLimits& limits);

void census_export(const std::vector<CensusRow>& rows, const std::string& path,
                   CensusFormat format, const CensusLimits& limits = {});
// Returns the rows plus, for JSON files, the recorded ceiling version.
std::pair<std::vector<CensusRow>, std::string> census_import(const std::string& path,
                                                             CensusFormat format);

bool operator==(const CensusRow& a, const CensusRow& b);

}  // namespace sparsepave
