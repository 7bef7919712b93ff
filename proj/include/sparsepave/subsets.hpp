#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

// Ground sets are {1, 2, ..., n} with n <= 64.  A subset is a 64-bit mask;
// bit (e-1) stands for element e.  Families of equal-size subsets are kept
// in lexicographic order of their sorted element lists, e.g. for n = 4,
// r = 2:  {1,2} < {1,3} < {1,4} < {2,3} < {2,4} < {3,4}.

namespace sparsepave {

struct GroundSet {
    int n = 0;

    explicit GroundSet(int n_);
    std::uint64_t full_mask() const { return n == 64 ? ~0ull : (1ull << n) - 1; }
};

struct RSubset {
    std::uint64_t bits = 0;

    static RSubset of(std::initializer_list<int> elems);
    static RSubset from_elements(const std::vector<int>& elems);

    int card() const;
    bool contains(int e) const;          // e is 1-based
    RSubset with(int e) const;
    RSubset without(int e) const;
    std::vector<int> elements() const;   // ascending, 1-based

    bool subset_of(RSubset other) const { return (bits & ~other.bits) == 0; }
    RSubset unite(RSubset other) const { return RSubset{bits | other.bits}; }
    RSubset intersect(RSubset other) const { return RSubset{bits & other.bits}; }

    friend bool operator==(RSubset a, RSubset b) { return a.bits == b.bits; }
    friend bool operator!=(RSubset a, RSubset b) { return a.bits != b.bits; }
};

// Strict order matching lexicographic comparison of sorted element lists.
// For equal cardinalities this is just "who owns the smallest element where
// they differ"; across cardinalities a proper prefix sorts first.
bool lex_less(RSubset a, RSubset b);

int intersection_size(RSubset a, RSubset b);

// A duplicate-free list of subsets of one common cardinality, in canonical
// (lex) order.  Families model basis sets, circuit sets and partition classes.
class SubsetFamily {
public:
    SubsetFamily() = default;

    // Sorts and checks: throws std::invalid_argument on duplicates or on
    // members of mixed cardinality.
    static SubsetFamily from_members(std::vector<RSubset> members);

    // Fast path for callers that produced a sorted, duplicate-free,
    // uniform-cardinality list themselves.
    static SubsetFamily from_sorted_unchecked(std::vector<RSubset> members);

    const std::vector<RSubset>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const RSubset& operator[](std::size_t i) const { return members_[i]; }

    bool contains(RSubset x) const;              // binary search
    int index_of(RSubset x) const;               // -1 when absent
    int member_cardinality() const;              // -1 for the empty family

    SubsetFamily unite(const SubsetFamily& other) const;

    friend bool operator==(const SubsetFamily& a, const SubsetFamily& b) {
        return a.members_ == b.members_;
    }

private:
    std::vector<RSubset> members_;
};

// All r-subsets of the ground set in canonical order.  0 <= r <= n.
SubsetFamily enumerate_rsubsets(GroundSet g, int r);

// All k-subsets of an arbitrary universe mask, canonical order on labels.
SubsetFamily enumerate_rsubsets_within(std::uint64_t universe, int k);

// Exact binomial coefficient for n <= 64 (0 when k is out of range).
std::uint64_t binom64(int n, int k);

}  // namespace sparsepave
