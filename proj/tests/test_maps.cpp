#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "sparsepave/census.hpp"
#include "sparsepave/maps.hpp"
#include "sparsepave/matroid.hpp"
#include "sparsepave/subsets.hpp"

using namespace sparsepave;

namespace {

Matroid one_circuit_42() {
    return sparse_from_circuits(GroundSet(4), 2,
                                SubsetFamily::from_members({RSubset::of({1, 2})}));
}

Matroid loop_plus_three_points() {
    return Matroid::from_bases(
        GroundSet(4), 2,
        SubsetFamily::from_members({RSubset::of({2, 3}), RSubset::of({2, 4}),
                                    RSubset::of({3, 4})}));
}

// Fingerprint an image so injectivity can be checked as set distinctness.
std::string image_key(const TaggedImage& img) {
    std::string key;
    for (const TaggedEntry& e : img.entries) {
        key += e.tag.to_string();
        key += ':';
        for (const RSubset& b : e.matroid.bases().members())
            key += std::to_string(b.bits) + ',';
        key += ';';
    }
    return key;
}

}  // namespace

TEST_CASE("tag rendering") {
    CHECK(Tag{Tag::Kind::plain, 3}.to_string() == "3");
    CHECK(Tag{Tag::Kind::circuit_part, 2}.to_string() == "c2");
    CHECK(Tag{Tag::Kind::dependent_part, 5}.to_string() == "d5");
}

TEST_CASE("iota adds a fresh element and keeps the circuit list") {
    CHECK(iota(Matroid::uniform(GroundSet(4), 2)) == Matroid::uniform(GroundSet(5), 2));

    Matroid grown = iota(one_circuit_42());
    CHECK(grown == sparse_from_circuits(GroundSet(5), 2,
                                        SubsetFamily::from_members({RSubset::of({1, 2})})));

    SubsetFamily circuits63 = SubsetFamily::from_members(
        {RSubset::of({4, 5, 6}), RSubset::of({1, 2, 4}), RSubset::of({1, 3, 5}),
         RSubset::of({2, 3, 6})});
    Matroid m63 = sparse_from_circuits(GroundSet(6), 3, circuits63);
    Matroid m73 = iota(m63);
    CHECK(m73.n() == 7);
    CHECK(m73.rank() == 3);
    CHECK(decompose_rank_r(m73).circuits == circuits63);
    CHECK(m73.bases().size() == binom64(7, 3) - 4);

    CHECK_THROWS_AS(iota(loop_plus_three_points()), std::domain_error);
}

TEST_CASE("zeta splits circuits by the dropped element") {
    Matroid m = sparse_from_circuits(
        GroundSet(5), 3,
        SubsetFamily::from_members({RSubset::of({1, 2, 3}), RSubset::of({1, 4, 5})}));
    auto [kept, dropped] = zeta(m);

    CHECK(kept == sparse_from_circuits(GroundSet(4), 3,
                                       SubsetFamily::from_members({RSubset::of({1, 2, 3})})));
    CHECK(dropped == sparse_from_circuits(GroundSet(4), 2,
                                          SubsetFamily::from_members({RSubset::of({1, 4})})));
    CHECK(zeta_reconstruct_circuits(kept, dropped) == decompose_rank_r(m).circuits);
}

TEST_CASE("zeta undoes iota") {
    for (const Matroid& m : {one_circuit_42(), Matroid::uniform(GroundSet(5), 3),
                             sparse_from_circuits(GroundSet(6), 3,
                                                  SubsetFamily::from_members(
                                                      {RSubset::of({4, 5, 6}),
                                                       RSubset::of({1, 2, 4})}))}) {
        auto [kept, dropped] = zeta(iota(m));
        CHECK(kept == m);
        CHECK(dropped == Matroid::uniform(m.ground(), m.rank() - 1));
    }
}

TEST_CASE("zeta breaks down only when no basis survives") {
    Matroid bad = sparse_from_circuits(
        GroundSet(5), 4, SubsetFamily::from_members({RSubset::of({1, 2, 3, 4})}));
    CHECK_THROWS_WITH_AS(zeta(bad), "no bases left after removing the circuits",
                         std::domain_error);

    // the same rank with the circuit through the last element is fine
    Matroid good = sparse_from_circuits(
        GroundSet(5), 4, SubsetFamily::from_members({RSubset::of({1, 2, 4, 5})}));
    auto [kept, dropped] = zeta(good);
    CHECK(kept == Matroid::uniform(GroundSet(4), 4));
    CHECK(dropped == sparse_from_circuits(GroundSet(4), 3,
                                          SubsetFamily::from_members({RSubset::of({1, 2, 4})})));

    CHECK_THROWS_AS(zeta(Matroid::uniform(GroundSet(4), 1)), std::domain_error);
    CHECK_THROWS_AS(zeta(Matroid::uniform(GroundSet(4), 4)), std::domain_error);
}

TEST_CASE("zeta is injective and reconstructible across a whole census") {
    for (auto [n, r] : std::vector<std::pair<int, int>>{{5, 2}, {5, 3}, {5, 4}}) {
        std::vector<Matroid> all = enumerate_sparse(GroundSet(n), r);
        std::set<std::string> seen;
        int broke = 0;
        for (const Matroid& m : all) {
            SubsetFamily circuits = decompose_rank_r(m).circuits;
            try {
                auto [kept, dropped] = zeta(m);
                CHECK(zeta_reconstruct_circuits(kept, dropped) == circuits);
                std::string key;
                for (const RSubset& b : kept.bases().members()) key += std::to_string(b.bits) + ',';
                key += '|';
                for (const RSubset& b : dropped.bases().members()) key += std::to_string(b.bits) + ',';
                CHECK(seen.insert(key).second);
            } catch (const std::domain_error&) {
                ++broke;
            }
        }
        // rank n-1 admits exactly one undefined input: the one circuit that
        // avoids the dropped element
        CHECK(broke == (r == n - 1 ? 1 : 0));
    }
}

TEST_CASE("psi splits the dependent r-sets across the partition classes") {
    TaggedImage img = psi(one_circuit_42());
    REQUIRE(img.entries.size() == 3);
    CHECK(img.entries[0].tag == Tag{Tag::Kind::plain, 1});
    CHECK(img.entries[1].tag == Tag{Tag::Kind::plain, 2});
    CHECK(img.entries[2].tag == Tag{Tag::Kind::plain, 3});
    CHECK(img.entries[0].matroid == Matroid::uniform(GroundSet(4), 2));
    CHECK(img.entries[1].matroid == Matroid::uniform(GroundSet(4), 2));
    CHECK(img.entries[2].matroid == one_circuit_42());
    for (const TaggedEntry& e : img.entries) CHECK(!e.certified.has_value());

    // a pivot that moves {1,2} into the first class moves the image with it
    TaggedImage moved = psi(one_circuit_42(), RSubset::of({1, 3}));
    REQUIRE(moved.entries.size() == 3);
    CHECK(moved.entries[0].matroid == one_circuit_42());
    CHECK(moved.entries[1].matroid == Matroid::uniform(GroundSet(4), 2));
    CHECK(moved.entries[2].matroid == Matroid::uniform(GroundSet(4), 2));
}

TEST_CASE("psi images reassemble the dependent set of the input") {
    std::vector<Matroid> samples = enumerate_matroids(GroundSet(4), 2);
    samples.push_back(sparse_from_circuits(
        GroundSet(6), 3,
        SubsetFamily::from_members({RSubset::of({4, 5, 6}), RSubset::of({1, 2, 4})})));
    for (const Matroid& m : samples) {
        RankRDecomposition d = decompose_rank_r(m);
        SubsetFamily dependent = d.circuits.unite(d.dependent_noncircuits);
        TaggedImage img = psi(m);
        CHECK(img.entries.size() ==
              static_cast<std::size_t>(gamma_count(m.n(), m.rank())));
        SubsetFamily gathered;
        for (const TaggedEntry& e : img.entries) {
            RankRDecomposition ed = decompose_rank_r(e.matroid);
            gathered = gathered.unite(ed.circuits);
        }
        CHECK(gathered == dependent);
    }
}

TEST_CASE("psi and psi_bar are injective on a full matroid census") {
    for (auto [n, r] : std::vector<std::pair<int, int>>{{4, 2}, {4, 3}}) {
        std::vector<Matroid> all = enumerate_matroids(GroundSet(n), r);
        std::set<std::string> psi_keys, bar_keys;
        for (const Matroid& m : all) {
            CHECK(psi_keys.insert(image_key(psi(m))).second);
            CHECK(bar_keys.insert(image_key(psi_bar(m))).second);
        }
    }
}

TEST_CASE("psi_bar keeps circuits and other dependents apart") {
    // rank-level circuits only: all the action is in the c-entries
    TaggedImage circ_side = psi_bar(one_circuit_42());
    REQUIRE(circ_side.entries.size() == 6);
    CHECK(circ_side.entries[0].tag == Tag{Tag::Kind::circuit_part, 1});
    CHECK(circ_side.entries[2].tag == Tag{Tag::Kind::circuit_part, 3});
    CHECK(circ_side.entries[3].tag == Tag{Tag::Kind::dependent_part, 1});
    CHECK(circ_side.entries[5].tag == Tag{Tag::Kind::dependent_part, 3});
    CHECK(circ_side.entries[2].matroid == one_circuit_42());
    for (std::size_t i : {0u, 1u, 3u, 4u, 5u})
        CHECK(circ_side.entries[i].matroid == Matroid::uniform(GroundSet(4), 2));

    // dependent non-circuits only: the c-entries stay uniform and the
    // d-entries carve up {1,2}, {1,3}, {1,4}
    TaggedImage dep_side = psi_bar(loop_plus_three_points());
    REQUIRE(dep_side.entries.size() == 6);
    for (std::size_t i : {0u, 1u, 2u})
        CHECK(dep_side.entries[i].matroid == Matroid::uniform(GroundSet(4), 2));
    CHECK(dep_side.entries[3].matroid ==
          sparse_from_circuits(GroundSet(4), 2,
                               SubsetFamily::from_members({RSubset::of({1, 3})})));
    CHECK(dep_side.entries[4].matroid ==
          sparse_from_circuits(GroundSet(4), 2,
                               SubsetFamily::from_members({RSubset::of({1, 4})})));
    CHECK(dep_side.entries[5].matroid ==
          sparse_from_circuits(GroundSet(4), 2,
                               SubsetFamily::from_members({RSubset::of({1, 2})})));

    // psi alone cannot tell these inputs' dependence kinds apart entry by
    // entry; psi_bar can
    CHECK(image_key(psi(loop_plus_three_points())) !=
          image_key(psi_bar(loop_plus_three_points())));
}

TEST_CASE("gamma_map certifies every entry") {
    std::vector<Matroid> samples = enumerate_matroids(GroundSet(4), 2);
    samples.push_back(loop_plus_three_points());
    samples.push_back(sparse_from_circuits(
        GroundSet(6), 3,
        SubsetFamily::from_members({RSubset::of({4, 5, 6}), RSubset::of({1, 2, 4})})));
    for (const Matroid& m : samples) {
        TaggedImage img = gamma_map(m);
        TaggedImage plain = psi(m);
        REQUIRE(img.entries.size() == plain.entries.size());
        for (std::size_t i = 0; i < img.entries.size(); ++i) {
            CHECK(img.entries[i].matroid == plain.entries[i].matroid);
            CHECK(img.entries[i].tag == plain.entries[i].tag);
            REQUIRE(img.entries[i].certified.has_value());
            CHECK(*img.entries[i].certified);
        }
    }
}

TEST_CASE("partition maps reject out-of-range inputs") {
    CHECK_THROWS_AS(psi(Matroid::uniform(GroundSet(4), 1)), std::domain_error);
    CHECK_THROWS_AS(psi(Matroid::uniform(GroundSet(4), 4)), std::domain_error);
    CHECK_THROWS_AS(psi_bar(Matroid::uniform(GroundSet(5), 5)), std::domain_error);
    CHECK_THROWS_AS(gamma_map(Matroid::uniform(GroundSet(4), 4)), std::domain_error);
    // pivot of the wrong cardinality
    CHECK_THROWS_AS(psi(one_circuit_42(), RSubset::of({1, 2, 3})), std::domain_error);
}
