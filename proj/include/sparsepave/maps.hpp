#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sparsepave/matroid.hpp"
#include "sparsepave/partition.hpp"

// Structure-preserving moves between matroid families:
//
//   iota  : sparse paving on n elements  ->  sparse paving on n+1 elements,
//           same circuits, element n+1 added to the basis pool.
//   zeta  : sparse paving on n+1 elements  ->  a pair over n elements; the
//           circuits avoiding n+1 keep their rank, the ones through n+1 drop
//           it and lose the element.  iota and zeta are both injective and
//           zeta . iota recovers the input as the pair's first component.
//   psi   : any rank-r matroid  ->  one sparse paving matroid per partition
//           class, with circuit set (dependent r-sets) intersect class.
//           Injective: the classes cover all r-subsets, so the images
//           reassemble the basis list.
//   psi_bar : same, but circuits and dependent non-circuits are kept apart,
//           giving two tagged entries per class.
//   gamma_map : psi plus a per-entry certificate that the entry's circuits
//           really live inside the entry's class.

namespace sparsepave {

struct Tag {
    enum class Kind { plain, circuit_part, dependent_part };

    Kind kind = Kind::plain;
    int j = 0;  // 1-based class index; odd classes come first (1..alpha),
                // then even classes (alpha+1..alpha+beta)

    std::string to_string() const;

    friend bool operator==(const Tag& a, const Tag& b) { return a.kind == b.kind && a.j == b.j; }
};

struct TaggedEntry {
    Matroid matroid;
    Tag tag;
    std::optional<bool> certified;  // set by gamma_map only
};

struct TaggedImage {
    std::vector<TaggedEntry> entries;
};

// Requires a sparse paving input with n + 1 <= 64.
Matroid iota(const Matroid& m);

// Requires a sparse paving input of rank 2 <= r <= n.  Returns (rank-r piece,
// rank-(r-1) piece), both on one element less.  The single genuinely
// undefined input is rank r = n with the full old ground set as a circuit:
// the rank-r piece would have no bases, and that raises a domain error.
std::pair<Matroid, Matroid> zeta(const Matroid& m);

// Circuits of the matroid zeta was applied to, reassembled from the pair.
SubsetFamily zeta_reconstruct_circuits(const Matroid& rank_r_piece,
                                       const Matroid& dropped_rank_piece);

// The three partition-based maps.  All require 3 <= n and 2 <= r <= n-1;
// the pivot defaults to {1, ..., r}.
TaggedImage psi(const Matroid& m, std::optional<RSubset> pivot = std::nullopt);
TaggedImage psi_bar(const Matroid& m, std::optional<RSubset> pivot = std::nullopt);
TaggedImage gamma_map(const Matroid& m, std::optional<RSubset> pivot = std::nullopt);

}  // namespace sparsepave
