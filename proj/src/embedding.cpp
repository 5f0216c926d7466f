#include <msep/embedding.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <limits>
#include <map>
#include <sstream>

using std::pair;
using std::string;
using std::string_view;
using std::uint64_t;
using std::vector;

namespace msep {

namespace {

uint64_t mul_sat(uint64_t a, uint64_t b) {
    if (a == 0 || b == 0)
        return 0;
    if (a > std::numeric_limits<uint64_t>::max() / b)
        return std::numeric_limits<uint64_t>::max();
    return a * b;
}

uint64_t factorial_sat(int n) {
    if (n >= 21)
        return std::numeric_limits<uint64_t>::max();
    uint64_t f = 1;
    for (int i = 2; i <= n; ++i)
        f *= static_cast<uint64_t>(i);
    return f;
}

void validate_rotation(const Multigraph& g, const RotationSystem& rot) {
    if (static_cast<int>(rot.at.size()) != g.vertex_count())
        throw InputError("rotation: wrong vertex count");
    vector<char> seen(g.dart_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (static_cast<int>(rot.at[v].size()) != g.degree(v))
            throw InputError("rotation: wrong list length at vertex " + std::to_string(v));
        for (Dart d : rot.at[v]) {
            if (d < 0 || d >= g.dart_count() || g.dart_home(d) != v || seen[d])
                throw InputError("rotation: bad dart " + std::to_string(d) + " at vertex " +
                                 std::to_string(v));
            seen[d] = 1;
        }
    }
}

} // namespace

FaceDecomposition trace_faces(const Multigraph& g, const RotationSystem& rot) {
    validate_rotation(g, rot);
    vector<Dart> next(g.dart_count(), -1);
    for (const auto& list : rot.at) {
        int k = static_cast<int>(list.size());
        for (int i = 0; i < k; ++i)
            next[list[i]] = list[(i + 1) % k];
    }
    FaceDecomposition out;
    out.walk_of.assign(g.dart_count(), -1);
    for (Dart start = 0; start < g.dart_count(); ++start) {
        if (out.walk_of[start] >= 0)
            continue;
        int id = out.face_count();
        vector<Dart> walk;
        Dart d = start;
        do {
            out.walk_of[d] = id;
            walk.push_back(d);
            d = next[twin(d)];
        } while (d != start);
        out.walks.push_back(std::move(walk));
    }
    return out;
}

int cellular_genus(const Multigraph& g, const FaceDecomposition& faces) {
    if (g.dart_count() == 0)
        throw InputError("cellular_genus: graph has no edges");
    if (!is_connected(g))
        throw InputError("cellular_genus: graph not connected");
    int euler = 2 - g.vertex_count() + g.edge_count() - faces.face_count();
    if (euler % 2 != 0 || euler < 0)
        throw InputError("cellular_genus: non-integral genus");
    return euler / 2;
}

RotationSystem rotation_from_euler(const Multigraph& g, const vector<Dart>& circuit) {
    if (static_cast<int>(circuit.size()) != g.edge_count() || circuit.empty())
        throw InputError("rotation_from_euler: circuit length mismatch");
    vector<char> edge_seen(g.edge_count(), 0);
    int n = static_cast<int>(circuit.size());
    for (int k = 0; k < n; ++k) {
        Dart d = circuit[k];
        if (d < 0 || d >= g.dart_count() || edge_seen[dart_edge(d)])
            throw InputError("rotation_from_euler: not an edge-simple circuit");
        edge_seen[dart_edge(d)] = 1;
        if (g.dart_home(twin(d)) != g.dart_home(circuit[(k + 1) % n]))
            throw InputError("rotation_from_euler: circuit not contiguous");
    }
    // Each visit of a vertex yields the domino (arrival dart -> departure
    // dart); chaining the dominoes in arrival order makes the circuit one
    // boundary walk of the resulting rotation.
    vector<Dart> succ(g.dart_count(), -1);
    for (int k = 0; k < n; ++k)
        succ[twin(circuit[k])] = circuit[(k + 1) % n];
    RotationSystem rot;
    rot.at.assign(g.vertex_count(), {});
    for (int v = 0; v < g.vertex_count(); ++v) {
        vector<Dart> list;
        for (Dart d : g.incident_darts()[v])
            if (succ[d] >= 0) {
                list.push_back(d);
                list.push_back(succ[d]);
            }
        if (list.empty())
            continue;
        auto smallest = std::min_element(list.begin(), list.end());
        std::rotate(list.begin(), smallest, list.end());
        rot.at[v] = std::move(list);
    }
    validate_rotation(g, rot);
    return rot;
}

uint64_t raw_rotation_count(const Multigraph& g) {
    uint64_t total = 1;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 0)
            total = mul_sat(total, factorial_sat(g.degree(v) - 1));
    return total;
}

uint64_t label_class_count(const Multigraph& g) {
    uint64_t total = 1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int deg = g.degree(v);
        if (deg == 0)
            continue;
        if (deg - 1 >= 21)
            return std::numeric_limits<uint64_t>::max();
        // multiplicities of incident labels: loops twice, other edges once
        std::map<int, int> mult;
        for (Dart d : g.incident_darts()[v])
            mult[dart_edge(d)] += 1;
        uint64_t per = factorial_sat(deg - 1);
        bool first = true;
        for (const auto& [label, m] : mult) {
            per /= factorial_sat(first ? m - 1 : m);
            first = false;
        }
        total = mul_sat(total, per);
    }
    return total;
}

// Backtracking state shared by counting, prefix generation and scanning.
struct EnumWalker {
    const Multigraph* g = nullptr;
    EnumOptions opt;
    // per vertex: ascending distinct labels, remaining counts, position of a
    // loop label's first placed copy (-1 when unplaced)
    vector<vector<int>> vals;
    vector<vector<int>> cnt;
    vector<vector<int>> first_pos;
    vector<vector<int>> slots; // the label assignment being built
    vector<int> slot_v;        // free slot -> vertex
    vector<int> slot_j;        // free slot -> position within vertex
    int nfree = 0;

    RotationSystem rot; // reusable emission buffer
    vector<char> loop_seen;

    EnumWalker(const Multigraph& graph, const EnumOptions& options,
               const vector<vector<int>>& labels)
        : g(&graph), opt(options) {
        int nv = graph.vertex_count();
        vals.resize(nv);
        cnt.resize(nv);
        first_pos.resize(nv);
        slots.resize(nv);
        rot.at.resize(nv);
        loop_seen.assign(graph.edge_count(), 0);
        for (int v = 0; v < nv; ++v) {
            const auto& lab = labels[v];
            slots[v].assign(lab.size(), -1);
            rot.at[v].assign(lab.size(), -1);
            for (size_t i = 0; i < lab.size(); ++i) {
                if (i == 0 || lab[i] != lab[i - 1]) {
                    vals[v].push_back(lab[i]);
                    cnt[v].push_back(1);
                } else {
                    cnt[v].back() += 1;
                }
            }
            first_pos[v].assign(vals[v].size(), -1);
            if (!lab.empty()) {
                // fix an occurrence of the smallest label in the first slot
                slots[v][0] = vals[v][0];
                cnt[v][0] -= 1;
                if (g->is_loop(vals[v][0]))
                    first_pos[v][0] = 0;
                for (int j = 1; j < static_cast<int>(lab.size()); ++j) {
                    slot_v.push_back(v);
                    slot_j.push_back(j);
                }
            }
        }
        nfree = static_cast<int>(slot_v.size());
    }

    // Visit all completions from free slot t onward; emit() at the leaves.
    // Returns false when the visitor stopped the scan.
    template <typename Emit>
    bool run(int t, Emit&& emit) {
        if (t == nfree)
            return emit();
        int v = slot_v[t];
        int j = slot_j[t];
        for (size_t i = 0; i < vals[v].size(); ++i) {
            if (cnt[v][i] == 0)
                continue;
            bool loop = g->is_loop(vals[v][i]);
            bool second = loop && first_pos[v][i] >= 0;
            // a loop's copies at even cyclic distance can never be two-sided
            if (second && opt.prune_loop_parity && (j - first_pos[v][i]) % 2 == 0)
                continue;
            cnt[v][i] -= 1;
            if (loop && !second)
                first_pos[v][i] = j;
            slots[v][j] = vals[v][i];
            bool keep_going = run(t + 1, emit);
            slots[v][j] = -1;
            if (loop && !second)
                first_pos[v][i] = -1;
            cnt[v][i] += 1;
            if (!keep_going)
                return false;
        }
        return true;
    }

    // Apply one already-chosen label at free slot t (used to replay a
    // prefix); returns false if the label is not currently placeable.
    bool apply(int t, int label) {
        int v = slot_v[t];
        int j = slot_j[t];
        auto it = std::lower_bound(vals[v].begin(), vals[v].end(), label);
        if (it == vals[v].end() || *it != label)
            return false;
        size_t i = static_cast<size_t>(it - vals[v].begin());
        if (cnt[v][i] == 0)
            return false;
        bool loop = g->is_loop(label);
        bool second = loop && first_pos[v][i] >= 0;
        if (second && opt.prune_loop_parity && (j - first_pos[v][i]) % 2 == 0)
            return false;
        cnt[v][i] -= 1;
        if (loop && !second)
            first_pos[v][i] = j;
        slots[v][j] = label;
        return true;
    }

    // Dart realization of the current complete label assignment.
    const RotationSystem& realize() {
        std::fill(loop_seen.begin(), loop_seen.end(), 0);
        for (int v = 0; v < g->vertex_count(); ++v) {
            for (size_t j = 0; j < slots[v].size(); ++j) {
                int e = slots[v][j];
                Dart d;
                if (g->is_loop(e)) {
                    d = 2 * e + (loop_seen[e] ? 1 : 0);
                    loop_seen[e] = 1;
                } else {
                    d = 2 * e + (g->edges()[e].first == v ? 0 : 1);
                }
                rot.at[v][j] = d;
            }
        }
        return rot;
    }

    // Reflection representative test: keep the class iff its label strings
    // are lexicographically <= the per-vertex canonical rotations of the
    // reversed strings.
    bool reflection_representative() const {
        for (int v = 0; v < g->vertex_count(); ++v) {
            vector<int> rev(slots[v].rbegin(), slots[v].rend());
            vector<int> best = rev;
            int k = static_cast<int>(rev.size());
            for (int r = 1; r < k; ++r) {
                std::rotate(rev.begin(), rev.begin() + 1, rev.end());
                if (rev < best)
                    best = rev;
            }
            if (slots[v] < best)
                return true;
            if (best < slots[v])
                return false;
        }
        return true; // palindromic class: keep
    }
};

RotationEnumerator::RotationEnumerator(const Multigraph& g, EnumOptions opt)
    : g_(&g), opt_(opt) {
    labels_.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (Dart d : g.incident_darts()[v])
            labels_[v].push_back(dart_edge(d));
        std::sort(labels_[v].begin(), labels_[v].end());
        free_slots_ += std::max(0, static_cast<int>(labels_[v].size()) - 1);
    }
}

vector<RotationEnumerator::Prefix> RotationEnumerator::make_prefixes(uint64_t target) const {
    if (target <= 1 || free_slots_ == 0)
        return {Prefix{}};
    for (int depth = 1; depth <= free_slots_; ++depth) {
        EnumWalker counter(*g_, opt_, labels_);
        counter.nfree = depth; // truncate: leaves are depth-long prefixes
        uint64_t count = 0;
        counter.run(0, [&] {
            ++count;
            return true;
        });
        if (count >= target || depth == free_slots_) {
            vector<Prefix> out;
            out.reserve(count);
            EnumWalker collector(*g_, opt_, labels_);
            collector.nfree = depth;
            collector.run(0, [&] {
                Prefix p;
                p.labels.reserve(depth);
                for (int t = 0; t < depth; ++t)
                    p.labels.push_back(collector.slots[collector.slot_v[t]][collector.slot_j[t]]);
                out.push_back(std::move(p));
                return true;
            });
            return out;
        }
    }
    return {Prefix{}};
}

uint64_t RotationEnumerator::scan_prefix(
    const Prefix& prefix,
    const std::function<bool(const RotationSystem&, const vector<vector<int>>&)>& visit) const {
    EnumWalker walker(*g_, opt_, labels_);
    if (static_cast<int>(prefix.labels.size()) > walker.nfree)
        throw InputError("scan_prefix: prefix longer than slot space");
    for (size_t t = 0; t < prefix.labels.size(); ++t)
        if (!walker.apply(static_cast<int>(t), prefix.labels[t]))
            throw InputError("scan_prefix: invalid prefix");
    uint64_t visited = 0;
    walker.run(static_cast<int>(prefix.labels.size()), [&] {
        if (opt_.quotient_reflection && !walker.reflection_representative())
            return true;
        ++visited;
        return visit(walker.realize(), walker.slots);
    });
    return visited;
}

uint64_t RotationEnumerator::scan(
    const std::function<bool(const RotationSystem&, const vector<vector<int>>&)>& visit) const {
    return scan_prefix(Prefix{}, visit);
}

namespace {

int parse_int_tok(string_view tok, int lineno) {
    int value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || p != tok.data() + tok.size() || value < 0)
        throw FormatError("line " + std::to_string(lineno) + ": bad label '" + string(tok) + "'");
    return value;
}

} // namespace

std::pair<Multigraph, RotationSystem> parse_rotation_table(string_view text) {
    vector<pair<int, vector<int>>> rows; // (printed vertex index, labels)
    std::istringstream in{string(text)};
    string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != string::npos)
            line.resize(hash);
        // tokenize around ':' once we know the line is not blank
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == string::npos)
            continue;
        size_t colon = line.find(':', pos);
        if (colon == string::npos)
            throw FormatError("line " + std::to_string(lineno) + ": expected 'v<i>: labels'");
        string head = line.substr(pos, colon - pos);
        while (!head.empty() && (head.back() == ' ' || head.back() == '\t'))
            head.pop_back();
        if (!head.empty() && (head[0] == 'v' || head[0] == 'V'))
            head.erase(head.begin());
        int index = parse_int_tok(head, lineno);
        vector<int> labels;
        string rest = line.substr(colon + 1);
        for (char& c : rest)
            if (c == ',' || c == '\t' || c == '\r')
                c = ' ';
        std::istringstream ls(rest);
        string tok;
        while (ls >> tok)
            labels.push_back(parse_int_tok(tok, lineno));
        if (labels.empty())
            throw FormatError("line " + std::to_string(lineno) + ": empty rotation");
        rows.emplace_back(index, std::move(labels));
    }
    if (rows.empty())
        throw FormatError("empty rotation table");
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t i = 1; i < rows.size(); ++i)
        if (rows[i].first == rows[i - 1].first)
            throw FormatError("duplicate vertex v" + std::to_string(rows[i].first));

    int nv = static_cast<int>(rows.size());
    std::map<int, vector<pair<int, int>>> occurrences; // label -> (vertex, slot)
    for (int v = 0; v < nv; ++v)
        for (size_t j = 0; j < rows[v].second.size(); ++j)
            occurrences[rows[v].second[j]].emplace_back(v, static_cast<int>(j));

    string bad;
    for (const auto& [label, occ] : occurrences)
        if (occ.size() != 2) {
            if (!bad.empty())
                bad += "; ";
            bad += "label " + std::to_string(label) + " occurs " + std::to_string(occ.size()) +
                   " time" + (occ.size() == 1 ? "" : "s");
        }
    if (!bad.empty())
        throw FormatError(bad + " (every label must occur exactly twice)");

    vector<pair<int, int>> edges;
    std::map<int, int> edge_id; // printed label -> dense edge id (sorted order)
    for (const auto& [label, occ] : occurrences) {
        edge_id[label] = static_cast<int>(edges.size());
        edges.emplace_back(occ[0].first, occ[1].first);
    }
    Multigraph g(nv, edges);

    RotationSystem rot;
    rot.at.resize(nv);
    vector<char> loop_seen(g.edge_count(), 0);
    for (int v = 0; v < nv; ++v) {
        rot.at[v].reserve(rows[v].second.size());
        for (int label : rows[v].second) {
            int e = edge_id[label];
            Dart d;
            if (g.is_loop(e)) {
                d = 2 * e + (loop_seen[e] ? 1 : 0);
                loop_seen[e] = 1;
            } else {
                d = 2 * e + (g.edges()[e].first == v ? 0 : 1);
            }
            rot.at[v].push_back(d);
        }
    }
    return {std::move(g), std::move(rot)};
}

RotationSystem parse_rotation_lines(const Multigraph& g, string_view text) {
    auto [parsed, rot] = parse_rotation_table(text);
    if (parsed.vertex_count() != g.vertex_count())
        throw FormatError("rotation lists " + std::to_string(parsed.vertex_count()) +
                          " vertices, graph has " + std::to_string(g.vertex_count()));
    if (parsed.edge_count() != g.edge_count())
        throw FormatError("rotation lists " + std::to_string(parsed.edge_count()) +
                          " edges, graph has " + std::to_string(g.edge_count()));
    // parse_rotation_table renumbers sorted labels densely, so labels must
    // already be 0..E-1 and darts carry over only if the edges agree
    if (parsed.edges() != g.edges())
        throw FormatError("rotation labels do not match the graph's edge list");
    return rot;
}

string format_rotation(const Multigraph& g, const RotationSystem& rot) {
    validate_rotation(g, rot);
    std::ostringstream out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (rot.at[v].empty())
            continue;
        out << 'v' << v << ':';
        for (size_t j = 0; j < rot.at[v].size(); ++j)
            out << (j ? ", " : " ") << dart_edge(rot.at[v][j]);
        out << '\n';
    }
    return out.str();
}

} // namespace msep
