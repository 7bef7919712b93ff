#pragma once

// JSON conversions for the core types.  Subsets serialize as sorted arrays
// of 1-based elements, families as arrays of subsets, and matroids as
// {"n", "rank", "bases"}.  matroid_from_json additionally accepts a
// "circuits" key in place of "bases"; the circuits are then interpreted as
// the circuit family of a sparse-paving matroid and validated as such.

#include <string>

#include <json.hpp>

#include "sparsepave/maps.hpp"
#include "sparsepave/matroid.hpp"
#include "sparsepave/partition.hpp"
#include "sparsepave/subsets.hpp"

namespace sparsepave::io {

nlohmann::json subset_to_json(RSubset s);
nlohmann::json family_to_json(const SubsetFamily& f);
nlohmann::json matroid_to_json(const Matroid& m);
nlohmann::json partition_to_json(int n, int r, const StarPartition& p);
nlohmann::json tagged_image_to_json(const TaggedImage& img);

RSubset subset_from_json(const nlohmann::json& j);
SubsetFamily family_from_json(const nlohmann::json& j);
Matroid matroid_from_json(const nlohmann::json& j);

// Reads either a JSON file or, when path is "-", standard input.
nlohmann::json load_json(const std::string& path);

}  // namespace sparsepave::io
