#include <msep/separation.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <set>
#include <thread>

using std::optional;
using std::pair;
using std::uint64_t;
using std::vector;

namespace msep {

namespace {

// Per-component (side0, side1) walk counts of the bipartite walk-constraint
// graph, components in order of their smallest walk. Empty when not
// two-sided.
struct ConstraintSplit {
    bool ok = false;
    vector<int> color;            // walk -> bfs color within its component
    vector<int> comp_of;          // walk -> component index
    vector<pair<int, int>> sizes; // per component (color0 count, color1 count)
};

ConstraintSplit split_constraints(const Multigraph& g, const FaceDecomposition& faces) {
    int nf = faces.face_count();
    vector<vector<int>> adj(nf);
    for (int e = 0; e < g.edge_count(); ++e) {
        int a = faces.walk_of[2 * e];
        int b = faces.walk_of[2 * e + 1];
        if (a == b)
            return {};
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    ConstraintSplit out;
    out.color.assign(nf, -1);
    out.comp_of.assign(nf, -1);
    vector<int> queue;
    for (int s = 0; s < nf; ++s) {
        if (out.color[s] >= 0)
            continue;
        int id = static_cast<int>(out.sizes.size());
        out.sizes.emplace_back(0, 0);
        out.color[s] = 0;
        out.comp_of[s] = id;
        queue.assign(1, s);
        while (!queue.empty()) {
            int w = queue.back();
            queue.pop_back();
            (out.color[w] == 0 ? out.sizes[id].first : out.sizes[id].second) += 1;
            for (int x : adj[w]) {
                if (out.color[x] < 0) {
                    out.color[x] = 1 - out.color[w];
                    out.comp_of[x] = id;
                    queue.push_back(x);
                } else if (out.color[x] == out.color[w]) {
                    return {}; // odd cycle
                }
            }
        }
    }
    out.ok = true;
    return out;
}

// Which side-0 totals are reachable by flipping components independently.
vector<char> achievable_counts(const vector<pair<int, int>>& sizes, int total) {
    vector<char> dp(total + 1, 0);
    dp[0] = 1;
    vector<char> next(total + 1, 0);
    for (const auto& [z, o] : sizes) {
        std::fill(next.begin(), next.end(), 0);
        for (int n = 0; n <= total; ++n) {
            if (!dp[n])
                continue;
            if (n + z <= total)
                next[n + z] = 1;
            if (n + o <= total)
                next[n + o] = 1;
        }
        dp.swap(next);
    }
    return dp;
}

} // namespace

optional<TwoSidedCertificate> check_two_sided(const Multigraph& g,
                                              const FaceDecomposition& faces) {
    ConstraintSplit split = split_constraints(g, faces);
    if (!split.ok)
        return std::nullopt;
    int nf = faces.face_count();
    int nc = static_cast<int>(split.sizes.size());
    vector<char> reachable = achievable_counts(split.sizes, nf);

    TwoSidedCertificate cert;
    // flipping every component swaps the sides, so reachable is symmetric
    // about nf/2 and the lower half enumerates all unordered splits
    for (int n = 0; 2 * n <= nf; ++n)
        if (reachable[n])
            cert.achievable_splits.emplace_back(n, nf - n);
    int best_n1 = 0;
    while (!reachable[best_n1])
        ++best_n1;

    // canonical coloring: commit components in order of first walk, putting
    // the component's first walk on side 0 whenever a completion to best_n1
    // remains feasible (components are already indexed by first walk)
    vector<int> flip(nc, 0);
    int committed = 0;
    for (int i = 0; i < nc; ++i) {
        vector<pair<int, int>> rest(split.sizes.begin() + i + 1, split.sizes.end());
        vector<char> tail = achievable_counts(rest, nf);
        int want = best_n1 - committed - split.sizes[i].first;
        if (want >= 0 && want <= nf && tail[want]) {
            flip[i] = 0;
            committed += split.sizes[i].first;
        } else {
            flip[i] = 1;
            committed += split.sizes[i].second;
        }
    }

    cert.side_of.resize(nf);
    for (int w = 0; w < nf; ++w)
        cert.side_of[w] = split.color[w] ^ flip[split.comp_of[w]];
    cert.n1 = best_n1;
    cert.n2 = nf - best_n1;
    int numer = g.edge_count() - g.vertex_count() + nf;
    if (numer % 2 != 0)
        throw InputError("two-sided certificate with odd E-V+F");
    cert.genus = numer / 2 - 1;
    return cert;
}

int separating_genus(const Multigraph& g, const TwoSidedCertificate& cert) {
    int nf = cert.n1 + cert.n2;
    int numer = g.edge_count() - g.vertex_count() + nf;
    if (numer % 2 != 0)
        throw InputError("separating_genus: odd E-V+F");
    int genus = numer / 2 - 1;
    if (is_connected(g)) {
        int euler = 2 - g.vertex_count() + g.edge_count() - nf;
        if (euler % 2 != 0)
            throw InputError("separating_genus: non-integral cellular genus");
        int cross = g.edge_count() - g.vertex_count() - euler / 2;
        if (cross != genus)
            throw InputError("separating_genus: cross-check mismatch");
    }
    return genus;
}

namespace {

int normalize_jobs(int jobs) {
    if (jobs > 0)
        return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// gamma_minus bounds that need no scanning; k = component count.
pair<int, int> apriori_bounds(const Multigraph& g, int k) {
    int excess = g.edge_count() - g.vertex_count();
    int lower = (excess + 1) / 2 + (k - 1);
    int upper = excess + (k - 1);
    return {std::max(0, lower), std::max(0, upper)};
}

struct DriverResult {
    uint64_t scanned = 0;
    uint64_t accepted = 0;
    optional<int> min_f;
    optional<int> max_f; // witness tracks this one
    RotationSystem witness_rot;
    bool has_witness = false;
};

// Parallel scan of all rotation classes; when filter_two_sided is set only
// classes with a two-sided certificate are accepted. min_f/max_f range over
// accepted classes; the witness is the first accepted class (enumeration
// order) attaining max_f. Deterministic for any job count.
DriverResult run_scan(const Multigraph& g, const EnumOptions& eopt, int jobs,
                      bool filter_two_sided) {
    RotationEnumerator en(g, eopt);
    jobs = normalize_jobs(jobs);
    auto prefixes = en.make_prefixes(jobs > 1 ? 4096 : 1);
    if (prefixes.empty())
        prefixes.push_back({});

    struct Local {
        uint64_t scanned = 0;
        uint64_t accepted = 0;
        optional<int> min_f;
        optional<int> max_f;
        pair<uint64_t, uint64_t> witness_key{0, 0};
        RotationSystem witness_rot;
        bool has_witness = false;
    };
    vector<Local> locals(static_cast<size_t>(jobs));
    std::atomic<size_t> cursor{0};

    auto work = [&](int w) {
        Local& loc = locals[static_cast<size_t>(w)];
        int nd = g.dart_count();
        vector<int> next(nd);
        vector<int> walk_of(nd);
        vector<int> parent;
        vector<int> parity;
        for (;;) {
            size_t p = cursor.fetch_add(1);
            if (p >= prefixes.size())
                break;
            uint64_t inner = 0;
            en.scan_prefix(prefixes[p], [&](const RotationSystem& rot, const auto&) {
                uint64_t idx = inner++;
                for (const auto& list : rot.at) {
                    int k = static_cast<int>(list.size());
                    for (int i = 0; i < k; ++i)
                        next[list[i]] = list[(i + 1) % k];
                }
                std::fill(walk_of.begin(), walk_of.end(), -1);
                int nf = 0;
                for (int d0 = 0; d0 < nd; ++d0) {
                    if (walk_of[d0] >= 0)
                        continue;
                    int d = d0;
                    do {
                        walk_of[d] = nf;
                        d = next[twin(d)];
                    } while (d != d0);
                    ++nf;
                }
                loc.scanned += 1;
                if (filter_two_sided) {
                    // union-find with parity over walks: an edge's two walks
                    // must take opposite sides
                    parent.assign(nf, -1);
                    parity.assign(nf, 0);
                    auto find = [&](int x, int& par) {
                        par = 0;
                        while (parent[x] >= 0) {
                            par ^= parity[x];
                            x = parent[x];
                        }
                        return x;
                    };
                    bool ok = true;
                    for (int e = 0; e < g.edge_count() && ok; ++e) {
                        int a = walk_of[2 * e];
                        int b = walk_of[2 * e + 1];
                        if (a == b) {
                            ok = false;
                            break;
                        }
                        int pa, pb;
                        int ra = find(a, pa);
                        int rb = find(b, pb);
                        if (ra == rb) {
                            ok = (pa ^ pb) == 1;
                        } else {
                            parent[ra] = rb;
                            parity[ra] = pa ^ pb ^ 1;
                        }
                    }
                    if (!ok)
                        return true;
                }
                loc.accepted += 1;
                if (!loc.max_f || nf > *loc.max_f)
                    loc.max_f = nf;
                // genus grows with the face count, so the gamma_minus witness
                // is the first class reaching a new minimum
                if (!loc.min_f || nf < *loc.min_f) {
                    loc.min_f = nf;
                    loc.witness_key = {p, idx};
                    loc.witness_rot = rot;
                    loc.has_witness = true;
                }
                return true;
            });
        }
    };

    if (jobs == 1) {
        work(0);
    } else {
        vector<std::thread> threads;
        threads.reserve(static_cast<size_t>(jobs));
        for (int w = 0; w < jobs; ++w)
            threads.emplace_back(work, w);
        for (auto& t : threads)
            t.join();
    }

    DriverResult out;
    for (const auto& loc : locals) {
        out.scanned += loc.scanned;
        out.accepted += loc.accepted;
        if (loc.min_f && (!out.min_f || *loc.min_f < *out.min_f))
            out.min_f = loc.min_f;
        if (loc.max_f && (!out.max_f || *loc.max_f > *out.max_f))
            out.max_f = loc.max_f;
    }
    if (out.min_f) {
        // workers record their first strict minimum, so the smallest key
        // among workers that reached the global minimum is the global first
        pair<uint64_t, uint64_t> best_key{0, 0};
        for (const auto& loc : locals) {
            if (!loc.has_witness || *loc.min_f != *out.min_f)
                continue;
            if (!out.has_witness || loc.witness_key < best_key) {
                best_key = loc.witness_key;
                out.witness_rot = loc.witness_rot;
                out.has_witness = true;
            }
        }
    }
    return out;
}

int genus_from_faces(const Multigraph& g, int nf) {
    int numer = g.edge_count() - g.vertex_count() + nf;
    if (numer % 2 != 0)
        throw InputError("scan: odd E-V+F");
    return numer / 2 - 1;
}

bool has_odd_or_zero_degree(const Multigraph& g) {
    if (g.vertex_count() == 0)
        return true;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0 || g.degree(v) % 2 != 0)
            return true;
    return false;
}

Multigraph induced_subgraph(const Multigraph& g, const vector<int>& vertices) {
    vector<int> new_id(g.vertex_count(), -1);
    for (size_t i = 0; i < vertices.size(); ++i)
        new_id[vertices[i]] = static_cast<int>(i);
    vector<pair<int, int>> edges;
    for (const auto& [u, v] : g.edges())
        if (new_id[u] >= 0 && new_id[v] >= 0)
            edges.emplace_back(new_id[u], new_id[v]);
    return Multigraph(static_cast<int>(vertices.size()), std::move(edges));
}

} // namespace

ScanResult scan_two_sided(const Multigraph& g, const ScanOptions& opt) {
    ScanResult r;
    r.raw_count = raw_rotation_count(g);
    if (has_odd_or_zero_degree(g)) {
        r.status = ScanResult::Status::infinite;
        return r;
    }
    int k = static_cast<int>(connected_components(g).size());
    auto [lo, hi] = apriori_bounds(g, k);
    r.lower = lo;
    r.upper = hi;
    if (r.raw_count > opt.budget) {
        r.status = ScanResult::Status::bounded;
        return r;
    }
    EnumOptions eopt;
    eopt.prune_loop_parity = true;
    eopt.quotient_reflection = opt.quotient_reflection;
    DriverResult d = run_scan(g, eopt, opt.jobs, /*filter_two_sided=*/true);
    r.status = ScanResult::Status::exact;
    r.classes_scanned = d.scanned;
    r.two_sided_count = d.accepted;
    if (d.min_f) {
        r.gamma_minus = genus_from_faces(g, *d.min_f);
        r.gamma_plus = genus_from_faces(g, *d.max_f);
        r.witness = d.witness_rot;
        auto faces = trace_faces(g, d.witness_rot);
        auto cert = check_two_sided(g, faces);
        if (!cert || cert->genus != *r.gamma_minus)
            throw InputError("scan: witness certificate mismatch");
        r.witness_cert = std::move(cert);
    }
    return r;
}

namespace {

optional<int> extremal_genus(const Multigraph& g, const ScanOptions& opt, bool minimum) {
    auto comps = connected_components(g);
    if (comps.size() > 1) {
        // each component gets its own separating surface; gluing k surfaces
        // into one costs k-1 extra handles
        int total = static_cast<int>(comps.size()) - 1;
        for (const auto& comp : comps) {
            auto part = extremal_genus(induced_subgraph(g, comp), opt, minimum);
            if (!part)
                return std::nullopt;
            total += *part;
        }
        return total;
    }
    ScanResult r = scan_two_sided(g, opt);
    if (r.status == ScanResult::Status::infinite)
        return std::nullopt;
    if (r.status == ScanResult::Status::bounded)
        throw ResourceError("rotation budget exceeded: " + std::to_string(r.raw_count) +
                                " raw rotations; gamma_minus in [" + std::to_string(r.lower) +
                                ", " + std::to_string(r.upper) + "]",
                            r.lower, r.upper, r.raw_count);
    if (!r.gamma_minus)
        return std::nullopt;
    return minimum ? r.gamma_minus : r.gamma_plus;
}

} // namespace

optional<int> least_separated_genus(const Multigraph& g, const ScanOptions& opt) {
    return extremal_genus(g, opt, true);
}

optional<int> largest_irreducible_genus(const Multigraph& g, const ScanOptions& opt) {
    return extremal_genus(g, opt, false);
}

pair<int, int> cellular_genus_range(const Multigraph& g, const ScanOptions& opt) {
    if (!is_connected(g) || g.edge_count() == 0)
        throw InputError("cellular_genus_range: graph must be connected and non-empty");
    uint64_t raw = raw_rotation_count(g);
    if (raw > opt.budget) {
        int max_cell = (g.edge_count() - g.vertex_count() + 1) / 2;
        throw ResourceError("rotation budget exceeded: " + std::to_string(raw) +
                                " raw rotations; cellular genus in [0, " +
                                std::to_string(max_cell) + "]",
                            0, max_cell, raw);
    }
    // every class counts here: no pruning, no reflection quotient
    EnumOptions eopt;
    eopt.prune_loop_parity = false;
    eopt.quotient_reflection = false;
    DriverResult d = run_scan(g, eopt, opt.jobs, /*filter_two_sided=*/false);
    auto cell = [&](int nf) {
        int euler = 2 - g.vertex_count() + g.edge_count() - nf;
        if (euler % 2 != 0 || euler < 0)
            throw InputError("cellular_genus_range: non-integral genus");
        return euler / 2;
    };
    return {cell(*d.max_f), cell(*d.min_f)};
}

GenusProfile genus_bounds(const Multigraph& g, const ScanOptions& opt) {
    if (has_odd_or_zero_degree(g))
        throw InputError("genus_bounds: degrees must be positive and even");
    if (!is_connected(g))
        throw InputError("genus_bounds: graph must be connected");
    GenusProfile prof;
    ScanResult r = scan_two_sided(g, opt);
    if (r.status == ScanResult::Status::bounded)
        throw ResourceError("rotation budget exceeded: " + std::to_string(r.raw_count) +
                                " raw rotations; gamma_minus in [" + std::to_string(r.lower) +
                                ", " + std::to_string(r.upper) + "]",
                            r.lower, r.upper, r.raw_count);
    prof.gamma_minus = r.gamma_minus;
    prof.gamma_plus = r.gamma_plus;
    prof.cellular = cellular_genus_range(g, opt);
    int excess = g.edge_count() - g.vertex_count();
    prof.lower_bound = excess - prof.cellular.second;
    prof.upper_bound = excess - prof.cellular.first;
    if (prof.gamma_minus && *prof.gamma_minus < prof.lower_bound)
        throw InputError("genus_bounds: lower bound violated");
    if (prof.gamma_plus && *prof.gamma_plus > prof.upper_bound)
        throw InputError("genus_bounds: upper bound violated");
    return prof;
}

optional<pair<RotationSystem, TwoSidedCertificate>> witness(const Multigraph& g, int target,
                                                            const ScanOptions& opt) {
    if (has_odd_or_zero_degree(g))
        return std::nullopt;
    uint64_t raw = raw_rotation_count(g);
    if (raw > opt.budget) {
        int k = static_cast<int>(connected_components(g).size());
        auto [lo, hi] = apriori_bounds(g, k);
        throw ResourceError("rotation budget exceeded: " + std::to_string(raw) +
                                " raw rotations; gamma_minus in [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]",
                            lo, hi, raw);
    }
    EnumOptions eopt;
    eopt.prune_loop_parity = true;
    eopt.quotient_reflection = opt.quotient_reflection;
    RotationEnumerator en(g, eopt);
    optional<pair<RotationSystem, TwoSidedCertificate>> found;
    en.scan([&](const RotationSystem& rot, const vector<vector<int>>&) {
        auto faces = trace_faces(g, rot);
        auto cert = check_two_sided(g, faces);
        if (cert && cert->genus == target) {
            found.emplace(rot, std::move(*cert));
            return false;
        }
        return true;
    });
    return found;
}

} // namespace msep
