#include "sparsepave/census.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>
#include <unordered_map>

#include <json.hpp>

#include "sparsepave/partition.hpp"

namespace sparsepave {

namespace {

struct ConflictGraph {
    SubsetFamily verts;
    std::vector<std::uint32_t> adj;  // bit j of adj[i]: i and j share >= r-1 elements
};

ConflictGraph build_conflict(GroundSet g, int r, int ceiling) {
    std::uint64_t count = binom64(g.n, r);
    if (count > static_cast<std::uint64_t>(ceiling))
        throw std::domain_error("binom(" + std::to_string(g.n) + "," + std::to_string(r) +
                                ") = " + std::to_string(count) + " exceeds the ceiling " +
                                std::to_string(ceiling));
    ConflictGraph cg;
    cg.verts = enumerate_rsubsets(g, r);
    int V = static_cast<int>(cg.verts.size());
    cg.adj.assign(static_cast<std::size_t>(V), 0);
    for (int i = 0; i < V; ++i)
        for (int j = i + 1; j < V; ++j)
            if (intersection_size(cg.verts[static_cast<std::size_t>(i)],
                                  cg.verts[static_cast<std::size_t>(j)]) > r - 2) {
                cg.adj[static_cast<std::size_t>(i)] |= 1u << j;
                cg.adj[static_cast<std::size_t>(j)] |= 1u << i;
            }
    return cg;
}

template <typename Fn>
void walk_independent_sets(const ConflictGraph& cg, std::uint32_t cand, std::uint32_t chosen,
                           Fn&& visit) {
    if (cand == 0) {
        visit(chosen);
        return;
    }
    int v = std::countr_zero(cand);
    std::uint32_t rest = cand & (cand - 1);
    walk_independent_sets(cg, rest & ~cg.adj[static_cast<std::size_t>(v)],
                          chosen | (1u << v), visit);
    walk_independent_sets(cg, rest, chosen, visit);
}

BigInt count_independent_sets_memo(const ConflictGraph& cg, std::uint32_t cand,
                                   std::unordered_map<std::uint32_t, std::uint64_t>& memo) {
    if (cand == 0) return 1;
    auto it = memo.find(cand);
    if (it != memo.end()) return BigInt(it->second);
    int v = std::countr_zero(cand);
    std::uint32_t rest = cand & (cand - 1);
    BigInt total =
        count_independent_sets_memo(cg, rest & ~cg.adj[static_cast<std::size_t>(v)], memo) +
        count_independent_sets_memo(cg, rest, memo);
    memo[cand] = total.convert_to<std::uint64_t>();
    return total;
}

bool trivial_rank(GroundSet g, int r) { return r == 0 || r == g.n; }

// ---- full matroid scan -------------------------------------------------

struct ExchangeTables {
    int V = 0;
    // repl[i*V + j] lists, per element x of subset_i \ subset_j, the mask of
    // families reachable by swapping x for some element of subset_j \ subset_i.
    std::vector<std::vector<std::uint32_t>> repl;
};

ExchangeTables build_exchange_tables(const std::vector<RSubset>& subs) {
    int V = static_cast<int>(subs.size());
    std::unordered_map<std::uint64_t, int> index;
    index.reserve(static_cast<std::size_t>(V) * 2);
    for (int i = 0; i < V; ++i) index[subs[static_cast<std::size_t>(i)].bits] = i;

    ExchangeTables t;
    t.V = V;
    t.repl.assign(static_cast<std::size_t>(V) * static_cast<std::size_t>(V), {});
    for (int i = 0; i < V; ++i) {
        for (int j = 0; j < V; ++j) {
            if (i == j) continue;
            std::uint64_t bi = subs[static_cast<std::size_t>(i)].bits;
            std::uint64_t bj = subs[static_cast<std::size_t>(j)].bits;
            auto& cell = t.repl[static_cast<std::size_t>(i) * static_cast<std::size_t>(V) +
                                static_cast<std::size_t>(j)];
            std::uint64_t xs = bi & ~bj;
            while (xs) {
                std::uint64_t xbit = xs & (0 - xs);
                xs ^= xbit;
                std::uint32_t mask = 0;
                std::uint64_t ys = bj & ~bi;
                while (ys) {
                    std::uint64_t ybit = ys & (0 - ys);
                    ys ^= ybit;
                    mask |= 1u << index.at((bi ^ xbit) | ybit);
                }
                cell.push_back(mask);
            }
        }
    }
    return t;
}

bool family_is_matroid(std::uint32_t fam, const ExchangeTables& t) {
    std::uint32_t is = fam;
    while (is) {
        int i = std::countr_zero(is);
        is &= is - 1;
        std::uint32_t js = fam;
        while (js) {
            int j = std::countr_zero(js);
            js &= js - 1;
            if (i == j) continue;
            for (std::uint32_t need :
                 t.repl[static_cast<std::size_t>(i) * static_cast<std::size_t>(t.V) +
                        static_cast<std::size_t>(j)])
                if ((fam & need) == 0) return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> scan_valid_families(const ExchangeTables& t, int threads) {
    const std::uint64_t total = 1ull << t.V;
    unsigned T = threads > 0 ? static_cast<unsigned>(threads)
                             : std::max(1u, std::thread::hardware_concurrency());
    if (t.V < 16) T = 1;

    std::vector<std::vector<std::uint32_t>> found(T);
    std::vector<std::thread> pool;
    std::uint64_t chunk = (total + T - 1) / T;
    for (unsigned w = 0; w < T; ++w) {
        std::uint64_t lo = std::max<std::uint64_t>(1, w * chunk);
        std::uint64_t hi = std::min(total, (w + 1) * chunk);
        pool.emplace_back([&, w, lo, hi] {
            for (std::uint64_t fam = lo; fam < hi; ++fam)
                if (family_is_matroid(static_cast<std::uint32_t>(fam), t))
                    found[w].push_back(static_cast<std::uint32_t>(fam));
        });
    }
    for (auto& th : pool) th.join();

    std::vector<std::uint32_t> all;
    for (auto& part : found) all.insert(all.end(), part.begin(), part.end());
    return all;  // ascending: chunks are contiguous and in order
}

double round6(double x) { return std::round(x * 1e6) / 1e6; }

std::string big_str(const BigInt& b) { return b.str(); }

}  // namespace

std::vector<Matroid> enumerate_sparse(GroundSet g, int r, CensusLimits limits) {
    if (r < 0 || r > g.n) throw std::domain_error("rank out of range");
    if (trivial_rank(g, r)) return {Matroid::uniform(g, r)};

    ConflictGraph cg = build_conflict(g, r, limits.max_sparse_subsets);
    int V = static_cast<int>(cg.verts.size());
    std::vector<Matroid> out;
    walk_independent_sets(cg, V == 32 ? ~0u : (1u << V) - 1, 0, [&](std::uint32_t chosen) {
        std::vector<RSubset> bases;
        bases.reserve(static_cast<std::size_t>(V) - static_cast<std::size_t>(std::popcount(chosen)));
        for (int k = 0; k < V; ++k)
            if (!((chosen >> k) & 1)) bases.push_back(cg.verts[static_cast<std::size_t>(k)]);
        out.push_back(
            Matroid::trusted(g, r, SubsetFamily::from_sorted_unchecked(std::move(bases))));
    });
    return out;
}

BigInt count_sparse_families(GroundSet g, int r, CensusLimits limits) {
    if (r < 0 || r > g.n) throw std::domain_error("rank out of range");
    if (trivial_rank(g, r)) return 1;
    ConflictGraph cg = build_conflict(g, r, limits.max_sparse_subsets);
    int V = static_cast<int>(cg.verts.size());
    std::unordered_map<std::uint32_t, std::uint64_t> memo;
    return count_independent_sets_memo(cg, V == 32 ? ~0u : (1u << V) - 1, memo);
}

std::vector<Matroid> enumerate_matroids(GroundSet g, int r, CensusLimits limits, int threads) {
    if (r < 0 || r > g.n) throw std::domain_error("rank out of range");
    std::uint64_t count = binom64(g.n, r);
    if (count > static_cast<std::uint64_t>(limits.max_matroid_subsets))
        throw std::domain_error("binom(" + std::to_string(g.n) + "," + std::to_string(r) +
                                ") = " + std::to_string(count) +
                                " exceeds the matroid ceiling " +
                                std::to_string(limits.max_matroid_subsets));

    std::vector<RSubset> subs = enumerate_rsubsets(g, r).members();
    ExchangeTables t = build_exchange_tables(subs);
    std::vector<std::uint32_t> masks = scan_valid_families(t, threads);

    std::vector<Matroid> out;
    out.reserve(masks.size());
    for (std::uint32_t fam : masks) {
        std::vector<RSubset> bases;
        bases.reserve(static_cast<std::size_t>(std::popcount(fam)));
        for (int k = 0; k < t.V; ++k)
            if ((fam >> k) & 1) bases.push_back(subs[static_cast<std::size_t>(k)]);
        out.push_back(
            Matroid::trusted(g, r, SubsetFamily::from_sorted_unchecked(std::move(bases))));
    }
    return out;
}

BigInt count_matroids_reversed(GroundSet g, int r, CensusLimits limits, int threads) {
    if (r < 0 || r > g.n) throw std::domain_error("rank out of range");
    std::uint64_t count = binom64(g.n, r);
    if (count > static_cast<std::uint64_t>(limits.max_matroid_subsets))
        throw std::domain_error("above the matroid ceiling");

    std::vector<RSubset> subs = enumerate_rsubsets(g, r).members();
    std::reverse(subs.begin(), subs.end());
    ExchangeTables t = build_exchange_tables(subs);
    return BigInt(scan_valid_families(t, threads).size());
}

std::vector<CensusRow> verify_bounds(int n, CensusLimits limits, int threads) {
    if (n < 3) throw std::domain_error("census needs n >= 3");
    GroundSet g(n);
    GroundSet g_prev(n - 1);

    // Sparse counts for arbitrary rank, needed by the shrink-by-one check.
    auto sparse_any = [&](GroundSet gs, int rr) -> BigInt {
        return count_sparse_families(gs, rr, limits);
    };

    std::vector<CensusRow> rows;
    for (int r = 2; r <= n - 1; ++r) {
        CensusRow row;
        row.n = n;
        row.r = r;

        // Two takes on the sparse count: memoized division into subproblems
        // versus plain backtracking.  They must agree.
        row.sparse_count = count_sparse_families(g, r, limits);
        {
            ConflictGraph cg = build_conflict(g, r, limits.max_sparse_subsets);
            int V = static_cast<int>(cg.verts.size());
            std::uint64_t walked = 0;
            walk_independent_sets(cg, V == 32 ? ~0u : (1u << V) - 1, 0,
                                  [&](std::uint32_t) { ++walked; });
            if (BigInt(walked) != row.sparse_count)
                throw std::logic_error("sparse enumeration paths disagree");
        }

        row.gamma = gamma_count(n, r);
        row.lower_bound = sparse_count_lower_bound(n, r);
        row.lower_ok = row.lower_bound <= row.sparse_count;

        BigInt prev_same = sparse_any(g_prev, r);
        BigInt prev_below = sparse_any(g_prev, r - 1);
        row.sandwich_ok = prev_same <= row.sparse_count &&
                          row.sparse_count <= prev_same + prev_below;

        if (binom64(n, r) <= static_cast<std::uint64_t>(limits.max_matroid_subsets)) {
            BigInt mc(scan_valid_families(
                          build_exchange_tables(enumerate_rsubsets(g, r).members()), threads)
                          .size());
            if (count_matroids_reversed(g, r, limits, threads) != mc)
                throw std::logic_error("matroid enumeration paths disagree");
            row.matroid_count = mc;
            row.upper_factor_ok = mc <= BigInt(row.gamma) * row.sparse_count;
            std::uint64_t exp44b =
                static_cast<std::uint64_t>(row.gamma) * (binom64(n, r + 1) / (n - r));
            row.cor44b_ok = mc <= (BigInt(1) << static_cast<unsigned>(exp44b));
            row.log_ratio = round6(std::log2(mc.convert_to<double>()) /
                                   std::log2(row.sparse_count.convert_to<double>()));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---- serialization -----------------------------------------------------

namespace {

std::string flags_str(const CensusRow& r) {
    auto ch = [](std::optional<bool> b) {
        return !b.has_value() ? '-' : (*b ? '1' : '0');
    };
    std::string s = "L";
    s += r.lower_ok ? '1' : '0';
    s += 'S';
    s += r.sandwich_ok ? '1' : '0';
    s += 'A';
    s += ch(r.upper_factor_ok);
    s += 'B';
    s += ch(r.cor44b_ok);
    return s;
}

std::optional<bool> flag_from(char c) {
    if (c == '-') return std::nullopt;
    return c == '1';
}

std::string ratio_str(const std::optional<double>& v) {
    if (!v) return "";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", *v);
    return buf;
}

}  // namespace

std::string census_to_csv(const std::vector<CensusRow>& rows) {
    std::ostringstream out;
    out << "n,r,matroid_count,sparse_count,gamma,lower_bound,log_ratio,flags\n";
    for (const CensusRow& r : rows) {
        out << r.n << ',' << r.r << ','
            << (r.matroid_count ? big_str(*r.matroid_count) : std::string{}) << ','
            << big_str(r.sparse_count) << ',' << r.gamma << ',' << big_str(r.lower_bound)
            << ',' << ratio_str(r.log_ratio) << ',' << flags_str(r) << '\n';
    }
    return out.str();
}

std::string census_to_json(const std::vector<CensusRow>& rows, const CensusLimits& limits) {
    nlohmann::json j;
    j["ceiling_version"] = limits.version();
    j["rows"] = nlohmann::json::array();
    for (const CensusRow& r : rows) {
        nlohmann::json jr;
        jr["n"] = r.n;
        jr["r"] = r.r;
        jr["matroid_count"] =
            r.matroid_count ? nlohmann::json(big_str(*r.matroid_count)) : nlohmann::json();
        jr["sparse_count"] = big_str(r.sparse_count);
        jr["gamma"] = r.gamma;
        jr["lower_bound"] = big_str(r.lower_bound);
        jr["log_ratio"] = r.log_ratio ? nlohmann::json(*r.log_ratio) : nlohmann::json();
        jr["lower_ok"] = r.lower_ok;
        jr["sandwich_ok"] = r.sandwich_ok;
        jr["upper_factor_ok"] =
            r.upper_factor_ok ? nlohmann::json(*r.upper_factor_ok) : nlohmann::json();
        jr["cor44b_ok"] = r.cor44b_ok ? nlohmann::json(*r.cor44b_ok) : nlohmann::json();
        j["rows"].push_back(std::move(jr));
    }
    return j.dump(2) + "\n";
}

void census_export(const std::vector<CensusRow>& rows, const std::string& path,
                   CensusFormat format, const CensusLimits& limits) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << (format == CensusFormat::csv ? census_to_csv(rows)
                                        : census_to_json(rows, limits));
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    cells.push_back(cur);
    return cells;
}

CensusRow row_from_cells(const std::vector<std::string>& c) {
    if (c.size() != 8) throw std::runtime_error("malformed census row");
    CensusRow r;
    r.n = std::stoi(c[0]);
    r.r = std::stoi(c[1]);
    if (!c[2].empty()) r.matroid_count = BigInt(c[2]);
    r.sparse_count = BigInt(c[3]);
    r.gamma = std::stoll(c[4]);
    r.lower_bound = BigInt(c[5]);
    if (!c[6].empty()) r.log_ratio = std::stod(c[6]);
    const std::string& f = c[7];
    if (f.size() != 8 || f[0] != 'L' || f[2] != 'S' || f[4] != 'A' || f[6] != 'B')
        throw std::runtime_error("malformed flags " + f);
    r.lower_ok = f[1] == '1';
    r.sandwich_ok = f[3] == '1';
    r.upper_factor_ok = flag_from(f[5]);
    r.cor44b_ok = flag_from(f[7]);
    return r;
}

}  // namespace

std::pair<std::vector<CensusRow>, std::string> census_import(const std::string& path,
                                                             CensusFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::vector<CensusRow> rows;

    if (format == CensusFormat::csv) {
        std::string line;
        if (!std::getline(in, line) ||
            line != "n,r,matroid_count,sparse_count,gamma,lower_bound,log_ratio,flags")
            throw std::runtime_error("missing census header in " + path);
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            rows.push_back(row_from_cells(split_csv_line(line)));
        }
        return {rows, ""};
    }

    nlohmann::json j = nlohmann::json::parse(in);
    for (const auto& jr : j.at("rows")) {
        CensusRow r;
        r.n = jr.at("n").get<int>();
        r.r = jr.at("r").get<int>();
        if (!jr.at("matroid_count").is_null())
            r.matroid_count = BigInt(jr.at("matroid_count").get<std::string>());
        r.sparse_count = BigInt(jr.at("sparse_count").get<std::string>());
        r.gamma = jr.at("gamma").get<long long>();
        r.lower_bound = BigInt(jr.at("lower_bound").get<std::string>());
        if (!jr.at("log_ratio").is_null()) r.log_ratio = jr.at("log_ratio").get<double>();
        r.lower_ok = jr.at("lower_ok").get<bool>();
        r.sandwich_ok = jr.at("sandwich_ok").get<bool>();
        if (!jr.at("upper_factor_ok").is_null())
            r.upper_factor_ok = jr.at("upper_factor_ok").get<bool>();
        if (!jr.at("cor44b_ok").is_null()) r.cor44b_ok = jr.at("cor44b_ok").get<bool>();
        rows.push_back(std::move(r));
    }
    return {rows, j.value("ceiling_version", "")};
}

bool operator==(const CensusRow& a, const CensusRow& b) {
    return a.n == b.n && a.r == b.r && a.sparse_count == b.sparse_count &&
           a.gamma == b.gamma && a.lower_bound == b.lower_bound && a.lower_ok == b.lower_ok &&
           a.sandwich_ok == b.sandwich_ok && a.matroid_count == b.matroid_count &&
           a.upper_factor_ok == b.upper_factor_ok && a.cor44b_ok == b.cor44b_ok &&
           a.log_ratio == b.log_ratio;
}

}  // namespace sparsepave
