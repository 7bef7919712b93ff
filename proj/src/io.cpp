#include "sparsepave/io.hpp"

#include <fstream>
#include <iostream>

namespace sparsepave::io {

nlohmann::json subset_to_json(RSubset s) {
    nlohmann::json j = nlohmann::json::array();
    for (int e : s.elements()) j.push_back(e);
    return j;
}

nlohmann::json family_to_json(const SubsetFamily& f) {
    nlohmann::json j = nlohmann::json::array();
    for (RSubset s : f.members()) j.push_back(subset_to_json(s));
    return j;
}

nlohmann::json matroid_to_json(const Matroid& m) {
    nlohmann::json j;
    j["n"] = m.n();
    j["rank"] = m.rank();
    j["bases"] = family_to_json(m.bases());
    return j;
}

nlohmann::json partition_to_json(int n, int r, const StarPartition& p) {
    nlohmann::json j;
    j["n"] = n;
    j["r"] = r;
    j["pivot"] = subset_to_json(p.pivot);
    j["alpha"] = p.alpha;
    j["beta"] = p.beta;
    j["gamma"] = p.gamma();
    j["classes"] = nlohmann::json::array();
    auto emit = [&](const std::vector<SubsetFamily>& classes, const char* parity, long long base) {
        for (std::size_t k = 0; k < classes.size(); ++k) {
            nlohmann::json jc;
            jc["index"] = base + static_cast<long long>(k) + 1;
            jc["parity"] = parity;
            jc["members"] = family_to_json(classes[k]);
            j["classes"].push_back(std::move(jc));
        }
    };
    emit(p.odd_classes, "odd", 0);
    emit(p.even_classes, "even", p.alpha);
    return j;
}

nlohmann::json tagged_image_to_json(const TaggedImage& img) {
    nlohmann::json j = nlohmann::json::array();
    for (const TaggedEntry& e : img.entries) {
        nlohmann::json je;
        je["tag"] = e.tag.to_string();
        je["matroid"] = matroid_to_json(e.matroid);
        je["certified"] = e.certified ? nlohmann::json(*e.certified) : nlohmann::json();
        j.push_back(std::move(je));
    }
    return j;
}

RSubset subset_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::runtime_error("subset must be a JSON array");
    std::vector<int> elems;
    for (const auto& v : j) elems.push_back(v.get<int>());
    return RSubset::from_elements(elems);
}

SubsetFamily family_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::runtime_error("family must be a JSON array");
    std::vector<RSubset> members;
    for (const auto& v : j) members.push_back(subset_from_json(v));
    return SubsetFamily::from_members(std::move(members));
}

Matroid matroid_from_json(const nlohmann::json& j) {
    int n = j.at("n").get<int>();
    int r = j.at("rank").get<int>();
    if (j.contains("bases") && j.contains("circuits"))
        throw std::runtime_error("give either \"bases\" or \"circuits\", not both");
    if (j.contains("bases"))
        return Matroid::from_bases(GroundSet(n), r, family_from_json(j.at("bases")));
    if (j.contains("circuits"))
        return sparse_from_circuits(GroundSet(n), r, family_from_json(j.at("circuits")));
    throw std::runtime_error("matroid JSON needs a \"bases\" or \"circuits\" key");
}

nlohmann::json load_json(const std::string& path) {
    if (path == "-") return nlohmann::json::parse(std::cin);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    return nlohmann::json::parse(in);
}

}  // namespace sparsepave::io
