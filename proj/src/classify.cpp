#include <msep/classify.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include <json.hpp>

using json = nlohmann::ordered_json;
using std::pair;
using std::string;
using std::vector;

namespace msep {

namespace {

// Descending sequences of even degrees >= 4 with the given sum.
void degree_sequences(int remaining, int slots, int max_part, vector<int>& cur,
                      const std::function<void(const vector<int>&)>& sink) {
    if (slots == 0) {
        if (remaining == 0)
            sink(cur);
        return;
    }
    for (int d = std::min(max_part, remaining - 4 * (slots - 1)); d >= 4; d -= 2) {
        cur.push_back(d);
        degree_sequences(remaining - d, slots - 1, d, cur, sink);
        cur.pop_back();
    }
}

// All symmetric multiplicity matrices with the given degrees (diagonal =
// loop count, contributing 2 each).
void multiplicity_matrices(const vector<int>& degrees, int row, int col, vector<int>& rem,
                           vector<vector<int>>& mat,
                           const std::function<void(const vector<vector<int>>&)>& sink) {
    int n = static_cast<int>(degrees.size());
    if (row == n) {
        sink(mat);
        return;
    }
    if (col == n) {
        if (rem[row] == 0)
            multiplicity_matrices(degrees, row + 1, row + 1, rem, mat, sink);
        return;
    }
    if (col == row) {
        for (int loops = rem[row] / 2; loops >= 0; --loops) {
            mat[row][row] = loops;
            rem[row] -= 2 * loops;
            multiplicity_matrices(degrees, row, col + 1, rem, mat, sink);
            rem[row] += 2 * loops;
            mat[row][row] = 0;
        }
        return;
    }
    for (int m = std::min(rem[row], rem[col]); m >= 0; --m) {
        mat[row][col] = mat[col][row] = m;
        rem[row] -= m;
        rem[col] -= m;
        multiplicity_matrices(degrees, row, col + 1, rem, mat, sink);
        rem[row] += m;
        rem[col] += m;
        mat[row][col] = mat[col][row] = 0;
    }
}

Multigraph graph_from_matrix(const vector<vector<int>>& mat) {
    int n = static_cast<int>(mat.size());
    vector<pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int m = 0; m < mat[i][j]; ++m)
                edges.emplace_back(i, j);
    return Multigraph(n, std::move(edges));
}

long long multichoose(long long n, int k) {
    // C(n + k - 1, k)
    long long num = 1;
    for (int i = 0; i < k; ++i)
        num = num * (n + i) / (i + 1);
    return num;
}

void partitions(int remaining, int max_part, vector<int>& cur,
                const std::function<void(const vector<int>&)>& sink) {
    if (remaining == 0) {
        sink(cur);
        return;
    }
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
        cur.push_back(p);
        partitions(remaining - p, p, cur, sink);
        cur.pop_back();
    }
}

} // namespace

vector<Candidate> connected_even_graphs(int vertices, int edges) {
    if (vertices <= 0 || edges < 0)
        throw InputError("connected_even_graphs: need a positive vertex count");
    std::map<CanonicalCode, Multigraph> bucket;
    vector<int> seq;
    degree_sequences(2 * edges, vertices, 2 * edges, seq, [&](const vector<int>& degs) {
        vector<int> rem = degs;
        vector<vector<int>> mat(vertices, vector<int>(vertices, 0));
        multiplicity_matrices(degs, 0, 0, rem, mat, [&](const vector<vector<int>>& m) {
            Multigraph g = graph_from_matrix(m);
            if (!is_connected(g))
                return;
            CanonicalCode code = canonical_form(g);
            bucket.emplace(std::move(code), std::move(g));
        });
    });
    vector<Candidate> out;
    out.reserve(bucket.size());
    for (auto& [code, g] : bucket)
        out.push_back({code, std::move(g)});
    return out;
}

vector<Candidate> generate_candidates(int genus, int max_genus) {
    if (genus < 0)
        throw InputError("generate_candidates: negative genus");
    if (genus > max_genus)
        throw CapacityError("generate_candidates: genus " + std::to_string(genus) +
                            " above the configured bound " + std::to_string(max_genus));
    vector<Candidate> out;
    {
        Multigraph loop(1, {{0, 0}});
        out.push_back({canonical_form(loop), std::move(loop)});
    }
    for (int nv = 1; nv <= 2 * genus; ++nv) {
        for (int ne = 2 * nv; ne <= 2 * genus + nv; ++ne) {
            for (auto& cand : connected_even_graphs(nv, ne)) {
                vector<char> has_loop(static_cast<size_t>(nv), 0);
                for (const auto& [u, v] : cand.graph.edges())
                    if (u == v)
                        has_loop[static_cast<size_t>(u)] = 1;
                int loop_vertices = static_cast<int>(
                    std::count(has_loop.begin(), has_loop.end(), char(1)));
                if (loop_vertices <= genus)
                    out.push_back(std::move(cand));
            }
        }
    }
    return out;
}

long long count_L(int genus, CountMode mode, const vector<long long>& i_counts) {
    if (genus < 0)
        throw InputError("count_L: negative genus");
    if (static_cast<int>(i_counts.size()) < genus + 1)
        throw InputError("count_L: need |I_i| for every i <= genus");
    long long total = 0;
    vector<int> cur;
    partitions(genus + 1, genus + 1, cur, [&](const vector<int>& parts) {
        long long term = 1;
        if (mode == CountMode::paper) {
            for (int p : parts)
                term *= i_counts[p - 1];
        } else {
            // parts are non-increasing: group equal values
            size_t i = 0;
            while (i < parts.size()) {
                size_t j = i;
                while (j < parts.size() && parts[j] == parts[i])
                    ++j;
                term *= multichoose(i_counts[parts[i] - 1], static_cast<int>(j - i));
                i = j;
            }
        }
        total += term;
    });
    return total;
}

long long count_G(int genus, CountMode mode, const vector<long long>& i_counts) {
    long long total = 0;
    for (int i = 0; i <= genus; ++i)
        total += count_L(i, mode, i_counts);
    return total;
}

ClassificationReport classify(int genus, const ClassifyOptions& opt) {
    if (genus < 0)
        throw InputError("classify: negative genus");
    ClassificationReport rep;
    rep.genus = genus;
    rep.budget = opt.budget;
    rep.quotient_reflection = opt.quotient_reflection;
    rep.i_counts.assign(static_cast<size_t>(genus) + 1, 0);

    ScanOptions sopt;
    sopt.budget = opt.budget;
    sopt.jobs = opt.jobs;
    sopt.quotient_reflection = opt.quotient_reflection;

    bool undecided_anywhere = false;
    for (int level = 0; level <= genus; ++level) {
        auto candidates = generate_candidates(level);
        for (auto& cand : candidates) {
            ScanResult scan = scan_two_sided(cand.graph, sopt);
            rep.classes_scanned += scan.classes_scanned;
            rep.two_sided_count += scan.two_sided_count;
            bool here = scan.status == ScanResult::Status::exact && scan.gamma_minus &&
                        *scan.gamma_minus == level;
            if (here)
                rep.i_counts[level] += 1;
            if (scan.status == ScanResult::Status::bounded && scan.lower <= level &&
                level <= scan.upper)
                undecided_anywhere = true;
            if (level == genus) {
                if (scan.status == ScanResult::Status::bounded)
                    rep.bounded_records += 1;
                GraphRecord record;
                record.code = cand.code;
                record.vertices = cand.graph.vertex_count();
                record.edges = cand.graph.edge_count();
                if (scan.witness) {
                    record.witness_text = format_rotation(cand.graph, *scan.witness);
                    record.splits = scan.witness_cert->achievable_splits;
                }
                record.scan = std::move(scan);
                rep.records.push_back(std::move(record));
            }
        }
    }
    rep.i_count = rep.i_counts[genus];
    rep.authoritative = !undecided_anywhere;
    rep.l_paper = count_L(genus, CountMode::paper, rep.i_counts);
    rep.l_multiset = count_L(genus, CountMode::multiset, rep.i_counts);
    rep.g_paper = count_G(genus, CountMode::paper, rep.i_counts);
    rep.g_multiset = count_G(genus, CountMode::multiset, rep.i_counts);
    return rep;
}

vector<string> classify_direct_L(int genus, const ClassifyOptions& opt) {
    if (genus < 0)
        throw InputError("classify_direct_L: negative genus");
    if (genus > 2)
        throw CapacityError("classify_direct_L: direct enumeration is bounded to genus 2");
    ScanOptions sopt;
    sopt.budget = opt.budget;
    sopt.jobs = opt.jobs;
    sopt.quotient_reflection = opt.quotient_reflection;

    // pool: connected least separating graphs of every genus <= `genus`,
    // each with its certified gamma_minus
    struct PoolEntry {
        int gamma = 0;
        CanonicalCode code;
        Multigraph graph;
    };
    vector<PoolEntry> pool;
    for (int level = 0; level <= genus; ++level) {
        for (auto& cand : generate_candidates(level)) {
            ScanResult scan = scan_two_sided(cand.graph, sopt);
            if (scan.status != ScanResult::Status::exact)
                throw ResourceError("classify_direct_L: budget too small for " + cand.code,
                                    scan.lower, scan.upper, scan.raw_count);
            if (scan.gamma_minus && *scan.gamma_minus == level) {
                bool fresh = std::none_of(pool.begin(), pool.end(), [&](const PoolEntry& p) {
                    return p.code == cand.code;
                });
                if (fresh)
                    pool.push_back({level, cand.code, cand.graph});
            }
        }
    }
    std::sort(pool.begin(), pool.end(), [](const PoolEntry& a, const PoolEntry& b) {
        return a.gamma != b.gamma ? a.gamma < b.gamma : a.code < b.code;
    });

    vector<string> out;
    // k = 1: the connected members themselves
    for (const auto& p : pool)
        if (p.gamma == genus)
            out.push_back(p.code);

    // k >= 2: multisets with gamma sum genus - k + 1, certified on the union
    vector<int> chosen;
    std::function<void(size_t, int, int)> rec = [&](size_t start, int k, int gamma_sum) {
        if (k >= 2 && gamma_sum == genus - k + 1) {
            Multigraph u = pool[chosen[0]].graph;
            for (size_t i = 1; i < chosen.size(); ++i)
                u = disjoint_union(u, pool[chosen[i]].graph);
            auto least = least_separated_genus(u, sopt);
            if (!least || *least != genus)
                throw InputError("classify_direct_L: union certification failed");
            string code = pool[chosen[0]].code;
            for (size_t i = 1; i < chosen.size(); ++i)
                code += "|" + pool[chosen[i]].code;
            out.push_back(code);
        }
        if (gamma_sum > genus - k) // every extension overshoots its target sum
            return;
        for (size_t i = start; i < pool.size(); ++i) {
            chosen.push_back(static_cast<int>(i));
            rec(i, k + 1, gamma_sum + pool[i].gamma);
            chosen.pop_back();
        }
    };
    rec(0, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

string report_to_json(const ClassificationReport& rep, CountMode mode) {
    json j;
    j["genus"] = rep.genus;
    json counts;
    counts["I"] = rep.i_count;
    counts["L_paper"] = rep.l_paper;
    counts["L_multiset"] = rep.l_multiset;
    counts["G"] = mode == CountMode::paper ? rep.g_paper : rep.g_multiset;
    j["counts"] = counts;

    json graphs = json::array();
    for (const auto& record : rep.records) {
        json g;
        g["code"] = record.code;
        g["vertices"] = record.vertices;
        g["edges"] = record.edges;
        switch (record.scan.status) {
        case ScanResult::Status::exact: {
            g["status"] = "exact";
            if (record.scan.gamma_minus) {
                g["gamma_minus"] = *record.scan.gamma_minus;
                g["gamma_plus"] = *record.scan.gamma_plus;
                g["witness_rotation"] = record.witness_text;
                json splits = json::array();
                for (const auto& [n1, n2] : record.splits)
                    splits.push_back(json::array({n1, n2}));
                g["splits"] = std::move(splits);
            } else {
                g["gamma_minus"] = nullptr;
                g["gamma_plus"] = nullptr;
            }
            break;
        }
        case ScanResult::Status::bounded:
            g["status"] = "bounded";
            g["bounds"] = json::array({record.scan.lower, record.scan.upper});
            g["raw_rotations"] = record.scan.raw_count;
            break;
        case ScanResult::Status::infinite:
            g["status"] = "infinite";
            break;
        }
        graphs.push_back(std::move(g));
    }
    j["graphs"] = graphs;

    json stats;
    stats["mode"] = mode == CountMode::paper ? "paper" : "multiset";
    stats["budget"] = rep.budget;
    stats["quotient_reflection"] = rep.quotient_reflection;
    stats["candidates"] = rep.records.size();
    stats["bounded"] = rep.bounded_records;
    stats["authoritative"] = rep.authoritative;
    stats["i_counts"] = rep.i_counts;
    stats["classes_scanned"] = rep.classes_scanned;
    stats["two_sided"] = rep.two_sided_count;
    if (rep.l_paper != rep.l_multiset) {
        json div;
        div["L_paper"] = rep.l_paper;
        div["L_multiset"] = rep.l_multiset;
        div["note"] = "the closed-form count multiplies repeated component choices as ordered "
                      "tuples; the multiset count uses unordered multisets (multichoose)";
        stats["count_divergence"] = div;
    }
    j["stats"] = stats;
    return j.dump(2) + "\n";
}

} // namespace msep
