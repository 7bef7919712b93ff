#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "sparsepave/io.hpp"
#include "sparsepave/maps.hpp"
#include "sparsepave/matroid.hpp"
#include "sparsepave/partition.hpp"
#include "sparsepave/starstar.hpp"
#include "sparsepave/subsets.hpp"

using namespace sparsepave;
using nlohmann::json;

TEST_CASE("subsets and families round trip through JSON") {
    RSubset s = RSubset::of({2, 5, 7});
    json js = io::subset_to_json(s);
    CHECK(js.dump() == "[2,5,7]");
    CHECK(io::subset_from_json(js) == s);
    CHECK(io::subset_from_json(json::parse("[7,2,5]")) == s);  // order is forgiven
    CHECK(io::subset_to_json(RSubset::of({})).dump() == "[]");

    SubsetFamily f = SubsetFamily::from_members(
        {RSubset::of({1, 2}), RSubset::of({1, 3}), RSubset::of({2, 3})});
    json jf = io::family_to_json(f);
    CHECK(jf.dump() == "[[1,2],[1,3],[2,3]]");
    CHECK(io::family_from_json(jf) == f);

    CHECK_THROWS_AS(io::subset_from_json(json::parse("{\"a\":1}")), std::runtime_error);
    CHECK_THROWS_AS(io::family_from_json(json::parse("3")), std::runtime_error);
    CHECK_THROWS_AS(io::subset_from_json(json::parse("[1,1]")), std::invalid_argument);
}

TEST_CASE("matroids round trip and accept a circuits key") {
    Matroid m = sparse_from_circuits(
        GroundSet(4), 2, SubsetFamily::from_members({RSubset::of({1, 2})}));
    json jm = io::matroid_to_json(m);
    CHECK(jm.at("n") == 4);
    CHECK(jm.at("rank") == 2);
    CHECK(jm.at("bases").size() == 5);
    CHECK(io::matroid_from_json(jm) == m);

    json by_circuits = json::parse(R"({"n": 4, "rank": 2, "circuits": [[1,2]]})");
    CHECK(io::matroid_from_json(by_circuits) == m);

    json both = by_circuits;
    both["bases"] = jm.at("bases");
    CHECK_THROWS_AS(io::matroid_from_json(both), std::runtime_error);

    json neither = json::parse(R"({"n": 4, "rank": 2})");
    CHECK_THROWS_AS(io::matroid_from_json(neither), std::runtime_error);

    // invalid basis families and circuit families stay invalid through io
    json bad_bases = json::parse(R"({"n": 4, "rank": 2, "bases": [[1,2],[3,4]]})");
    CHECK_THROWS_AS(io::matroid_from_json(bad_bases), ExchangeFailure);
    json bad_circuits = json::parse(R"({"n": 5, "rank": 3, "circuits": [[1,2,3],[1,2,4]]})");
    CHECK_THROWS_AS(io::matroid_from_json(bad_circuits), StarStarViolation);
}

TEST_CASE("partition JSON exposes classes with one-based indices") {
    StarPartition p = build_partition(GroundSet(6), 3, RSubset::of({1, 2, 3}));
    json jp = io::partition_to_json(6, 3, p);
    CHECK(jp.at("n") == 6);
    CHECK(jp.at("r") == 3);
    CHECK(jp.at("pivot").dump() == "[1,2,3]");
    CHECK(jp.at("alpha") == 3);
    CHECK(jp.at("beta") == 3);
    CHECK(jp.at("gamma") == 6);
    REQUIRE(jp.at("classes").size() == 6);
    for (int k = 0; k < 6; ++k) {
        const json& jc = jp.at("classes")[static_cast<std::size_t>(k)];
        CHECK(jc.at("index") == k + 1);
        CHECK(jc.at("parity") == (k < 3 ? "odd" : "even"));
    }
    CHECK(jp.at("classes")[0].at("members").dump() == "[[1,2,3],[1,4,5],[2,4,6],[3,5,6]]");
    CHECK(jp.at("classes")[3].at("members").dump() == "[[1,2,4],[1,3,5],[2,3,6],[4,5,6]]");
}

TEST_CASE("tagged images serialize tag, matroid, and certificate") {
    Matroid m = sparse_from_circuits(
        GroundSet(4), 2, SubsetFamily::from_members({RSubset::of({1, 2})}));

    json plain = io::tagged_image_to_json(psi(m));
    REQUIRE(plain.size() == 3);
    CHECK(plain[0].at("tag") == "1");
    CHECK(plain[2].at("tag") == "3");
    CHECK(plain[0].at("certified").is_null());
    CHECK(io::matroid_from_json(plain[2].at("matroid")) == m);

    json bar = io::tagged_image_to_json(psi_bar(m));
    REQUIRE(bar.size() == 6);
    CHECK(bar[0].at("tag") == "c1");
    CHECK(bar[5].at("tag") == "d3");

    json certified = io::tagged_image_to_json(gamma_map(m));
    REQUIRE(certified.size() == 3);
    for (const json& e : certified) CHECK(e.at("certified") == true);
}

TEST_CASE("load_json reads files and rejects the unreadable") {
    std::string path = "/tmp/sparsepave_test_io.json";
    std::ofstream(path) << R"({"n": 4, "rank": 2, "circuits": [[3,4]]})";
    json j = io::load_json(path);
    CHECK(io::matroid_from_json(j).bases().size() == 5);
    std::remove(path.c_str());

    CHECK_THROWS_AS(io::load_json("/nonexistent/file.json"), std::runtime_error);
}
