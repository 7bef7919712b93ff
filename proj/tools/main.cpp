// Command line front end.
//
// Subcommands:
//   partition  build the class partition of the r-subsets for one pivot
//   construct  build a sparse paving matroid from a circuit family
//   verify     run the exchange check on a claimed basis family
//   bounds     closed-form counting bounds, no enumeration
//   map        apply one of the structure maps to a matroid
//   census     enumerate and cross-check everything for one ground set size
//   maxstar    exact maximum family of r-subsets pairwise sharing <= r-2
//
// Exit codes: 0 success, 1 internal/io, 2 domain error (input outside the
// supported range), 3 verification failure (a checked property is false,
// with a witness on stderr), 64 usage error.

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sparsepave/census.hpp"
#include "sparsepave/io.hpp"
#include "sparsepave/maps.hpp"
#include "sparsepave/matroid.hpp"
#include "sparsepave/partition.hpp"
#include "sparsepave/starstar.hpp"
#include "sparsepave/subsets.hpp"

namespace {

using namespace sparsepave;

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

RSubset pivot_or_default(const std::vector<int>& pivot_elems, int r) {
    if (pivot_elems.empty()) {
        std::vector<int> first(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) first[static_cast<std::size_t>(i)] = i + 1;
        return RSubset::from_elements(first);
    }
    RSubset p = RSubset::from_elements(pivot_elems);
    if (p.card() != r) throw std::domain_error("pivot must have exactly rank many elements");
    return p;
}

nlohmann::json witness_json(RSubset a, RSubset b) {
    nlohmann::json j;
    j["first"] = io::subset_to_json(a);
    j["second"] = io::subset_to_json(b);
    return j;
}

int cmd_partition(int n, int r, const std::vector<int>& pivot_elems, const std::string& out) {
    GroundSet g(n);
    RSubset pivot = pivot_or_default(pivot_elems, r);
    if (!pivot.subset_of(RSubset{g.full_mask()}))
        throw std::domain_error("pivot is not contained in the ground set");
    StarPartition p = build_partition(g, r, pivot);
    nlohmann::json j = io::partition_to_json(n, r, p);
    j["gamma_closed_form"] = gamma_count(n, r);
    emit(j.dump(2) + "\n", out);
    return 0;
}

int cmd_construct(int n, int r, const std::string& circuits_inline, const std::string& input,
                  const std::string& out) {
    SubsetFamily circuits = SubsetFamily::from_members({});
    if (!circuits_inline.empty() && !input.empty())
        throw std::runtime_error("give --circuits or --input, not both");
    if (!circuits_inline.empty()) {
        circuits = io::family_from_json(nlohmann::json::parse(circuits_inline));
    } else if (!input.empty()) {
        nlohmann::json j = io::load_json(input);
        n = j.at("n").get<int>();
        r = j.at("rank").get<int>();
        circuits = io::family_from_json(j.at("circuits"));
    } else {
        throw std::runtime_error("construct needs --circuits or --input");
    }
    if (n <= 0) throw std::domain_error("construct needs --n");
    if (r < 0) throw std::domain_error("construct needs --r");

    try {
        Matroid m = sparse_from_circuits(GroundSet(n), r, circuits);
        emit(io::matroid_to_json(m).dump(2) + "\n", out);
        return 0;
    } catch (const StarStarViolation& v) {
        nlohmann::json j;
        j["error"] = v.what();
        j["witness"] = witness_json(v.a, v.b);
        std::cerr << j.dump(2) << "\n";
        return 3;
    }
}

int cmd_verify(const std::string& input, bool require_sparse, const std::string& out) {
    nlohmann::json j = io::load_json(input);
    int n = j.at("n").get<int>();
    int r = j.at("rank").get<int>();
    GroundSet g(n);
    SubsetFamily bases = io::family_from_json(j.at("bases"));

    nlohmann::json rep;
    rep["n"] = n;
    rep["rank"] = r;
    try {
        validate_exchange(g, r, bases);
    } catch (const ExchangeFailure& f) {
        rep["valid"] = false;
        rep["witness"] = witness_json(f.b1, f.b2);
        rep["witness"]["x"] = f.x;
        emit(rep.dump(2) + "\n", out);
        return 3;
    }
    Matroid m = Matroid::trusted(g, r, bases);
    RankRDecomposition d = decompose_rank_r(m);
    rep["valid"] = true;
    rep["paving"] = is_paving(m);
    rep["sparse_paving"] = is_sparse_paving(m);
    rep["basis_count"] = d.bases.size();
    rep["circuit_count"] = d.circuits.size();
    rep["dependent_noncircuit_count"] = d.dependent_noncircuits.size();
    emit(rep.dump(2) + "\n", out);
    if (require_sparse && !rep["sparse_paving"].get<bool>()) return 3;
    return 0;
}

int cmd_bounds(int n, int r, const std::string& out) {
    nlohmann::json j;
    j["n"] = n;
    j["r"] = r;
    j["gamma"] = gamma_count(n, r);
    BigRational ub = star_star_upper_bound(n, r);
    j["max_family_upper_bound"] = {
        {"numerator", ub.numerator().str()},
        {"denominator", ub.denominator().str()},
        {"floor", BigInt(ub.numerator() / ub.denominator()).str()},
    };
    long long cells = static_cast<long long>(r) * (n - r) + 1;
    j["lower_bound_exponent"] = static_cast<long long>(binom64(n, r) / static_cast<std::uint64_t>(cells));
    j["lower_bound"] = sparse_count_lower_bound(n, r).str();
    emit(j.dump(2) + "\n", out);
    return 0;
}

int cmd_map(const std::string& kind, const std::string& input,
            const std::vector<int>& pivot_elems, const std::string& out) {
    Matroid m = io::matroid_from_json(io::load_json(input));
    nlohmann::json j;
    j["kind"] = kind;
    if (kind == "iota") {
        j["result"] = io::matroid_to_json(iota(m));
    } else if (kind == "zeta") {
        auto [same_rank, dropped_rank] = zeta(m);
        j["same_rank_piece"] = io::matroid_to_json(same_rank);
        j["dropped_rank_piece"] = io::matroid_to_json(dropped_rank);
    } else if (kind == "psi" || kind == "psibar" || kind == "gamma") {
        std::optional<RSubset> pivot;
        if (!pivot_elems.empty()) pivot = pivot_or_default(pivot_elems, m.rank());
        TaggedImage img = kind == "psi"      ? psi(m, pivot)
                          : kind == "psibar" ? psi_bar(m, pivot)
                                             : gamma_map(m, pivot);
        j["pivot"] = io::subset_to_json(pivot ? *pivot
                                              : pivot_or_default({}, m.rank()));
        j["entries"] = io::tagged_image_to_json(img);
    } else {
        throw std::runtime_error("unknown map kind " + kind);
    }
    emit(j.dump(2) + "\n", out);
    return 0;
}

int cmd_census(int n, int max_n, const std::string& format, int threads, int max_matroid,
               int max_sparse, const std::string& resume, const std::string& out) {
    CensusLimits limits{max_matroid, max_sparse};
    if ((n == 0) == (max_n == 0))
        throw std::runtime_error("census needs exactly one of --n or --max-n");
    int lo = n ? n : 3;
    int hi = n ? n : max_n;

    std::vector<CensusRow> cached;
    if (!resume.empty()) {
        std::ifstream probe(resume);
        if (probe) {
            auto [rows, version] = census_import(resume, CensusFormat::json);
            if (version == limits.version()) cached = std::move(rows);
        }
    }

    std::vector<CensusRow> wanted;
    for (int k = lo; k <= hi; ++k) {
        std::vector<CensusRow> part;
        for (const CensusRow& row : cached)
            if (row.n == k) part.push_back(row);
        if (static_cast<int>(part.size()) != k - 2) part = verify_bounds(k, limits, threads);
        wanted.insert(wanted.end(), part.begin(), part.end());
    }

    if (!resume.empty()) {
        std::vector<CensusRow> merged;
        for (const CensusRow& row : cached)
            if (row.n < lo || row.n > hi) merged.push_back(row);
        merged.insert(merged.end(), wanted.begin(), wanted.end());
        std::sort(merged.begin(), merged.end(), [](const CensusRow& a, const CensusRow& b) {
            return a.n != b.n ? a.n < b.n : a.r < b.r;
        });
        census_export(merged, resume, CensusFormat::json, limits);
    }

    emit(format == "json" ? census_to_json(wanted, limits) : census_to_csv(wanted), out);
    for (const CensusRow& row : wanted)
        if (!row.all_flags_ok()) return 3;
    return 0;
}

int cmd_maxstar(int n, int r, const std::string& out) {
    GroundSet g(n);
    SubsetFamily best = max_star_star_exact(g, r);
    SubsetFamily greedy = greedy_star_star(g, r);
    BigRational ub = star_star_upper_bound(n, r);
    nlohmann::json j;
    j["n"] = n;
    j["r"] = r;
    j["size"] = best.size();
    j["family"] = io::family_to_json(best);
    j["greedy_size"] = greedy.size();
    j["upper_bound_floor"] = BigInt(ub.numerator() / ub.denominator()).str();
    emit(j.dump(2) + "\n", out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sparse paving matroid toolkit"};
    app.require_subcommand(1);

    int n = 0, r = 0, max_n = 0, threads = 0, max_matroid = 20, max_sparse = 24;
    std::vector<int> pivot_elems;
    std::string input, output, circuits_inline, kind, format = "csv", resume;
    bool require_sparse = false;

    auto add_nr = [&](CLI::App* sub, bool need_r = true) {
        sub->add_option("--n", n, "ground set size")->required();
        if (need_r) sub->add_option("--r", r, "rank")->required();
    };
    auto add_out = [&](CLI::App* sub) {
        sub->add_option("--output,-o", output, "output path (default stdout)");
    };

    CLI::App* sc_partition = app.add_subcommand("partition", "class partition of the r-subsets");
    add_nr(sc_partition);
    sc_partition->add_option("--pivot", pivot_elems, "pivot elements (default 1..r)")
        ->delimiter(',');
    add_out(sc_partition);

    CLI::App* sc_construct =
        app.add_subcommand("construct", "sparse paving matroid from circuits");
    sc_construct->add_option("--n", n, "ground set size");
    sc_construct->add_option("--r", r, "rank");
    sc_construct->add_option("--circuits", circuits_inline, "circuit family as JSON, e.g. [[1,2],[3,4]]");
    sc_construct->add_option("--file,--input", input,
                             "JSON file with n, rank, circuits ('-' for stdin)");
    add_out(sc_construct);

    CLI::App* sc_verify = app.add_subcommand("verify", "exchange-check a basis family");
    sc_verify->add_option("--file,--input", input, "JSON file with n, rank, bases ('-' for stdin)")
        ->required();
    sc_verify->add_flag("--sparse", require_sparse, "also require sparse paving (exit 3 if not)");
    add_out(sc_verify);

    CLI::App* sc_bounds = app.add_subcommand("bounds", "closed-form bounds, no enumeration");
    add_nr(sc_bounds);
    add_out(sc_bounds);

    CLI::App* sc_map = app.add_subcommand("map", "apply a structure map");
    sc_map->add_option("--which,--kind", kind, "iota | zeta | psi | psibar | gamma")->required();
    sc_map->add_option("--file,--input", input, "matroid JSON ('-' for stdin)")->required();
    sc_map->add_option("--pivot", pivot_elems, "pivot elements for psi/psibar/gamma")
        ->delimiter(',');
    add_out(sc_map);

    CLI::App* sc_census = app.add_subcommand("census", "enumerate and cross-check censuses");
    sc_census->add_option("--n", n, "single ground set size");
    sc_census->add_option("--max-n", max_n, "sweep ground set sizes 3..max-n");
    sc_census->add_option("--format", format, "csv (default) or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sc_census->add_option("--threads", threads, "worker threads (default: hardware)");
    sc_census->add_option("--max-matroid", max_matroid,
                          "skip full matroid scan above this many r-subsets (default 20)");
    sc_census->add_option("--max-sparse", max_sparse,
                          "refuse sparse enumeration above this many r-subsets (default 24)");
    sc_census->add_option("--resume", resume, "JSON cache; reused when the ceilings match");
    add_out(sc_census);

    CLI::App* sc_maxstar = app.add_subcommand("maxstar", "exact maximum circuit family size");
    add_nr(sc_maxstar);
    add_out(sc_maxstar);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e, std::cout, std::cerr);
        return 64;
    }

    try {
        if (sc_partition->parsed()) return cmd_partition(n, r, pivot_elems, output);
        if (sc_construct->parsed()) return cmd_construct(n, r, circuits_inline, input, output);
        if (sc_verify->parsed()) return cmd_verify(input, require_sparse, output);
        if (sc_bounds->parsed()) return cmd_bounds(n, r, output);
        if (sc_map->parsed()) return cmd_map(kind, input, pivot_elems, output);
        if (sc_census->parsed())
            return cmd_census(n, max_n, format, threads, max_matroid, max_sparse, resume, output);
        if (sc_maxstar->parsed()) return cmd_maxstar(n, r, output);
    } catch (const ExchangeFailure& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 3;
    } catch (const StarStarViolation& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
