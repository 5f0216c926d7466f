#include <msep/multigraph.hpp>

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

using std::pair;
using std::string;
using std::string_view;
using std::vector;

namespace msep {

Multigraph::Multigraph(int vertex_count, vector<pair<int, int>> edge_list)
    : vertex_count_(vertex_count), edges_(std::move(edge_list)) {
    if (vertex_count_ < 0)
        throw InputError("negative vertex count");
    for (auto& [u, v] : edges_) {
        if (u < 0 || u >= vertex_count_ || v < 0 || v >= vertex_count_)
            throw InputError("edge endpoint out of range");
        if (u > v)
            std::swap(u, v);
    }
    degrees_.assign(vertex_count_, 0);
    incident_.assign(vertex_count_, {});
    for (int e = 0; e < edge_count(); ++e) {
        const auto& [u, v] = edges_[e];
        degrees_[u] += 1;
        degrees_[v] += 1;
        incident_[u].push_back(2 * e);
        incident_[v].push_back(2 * e + 1);
    }
}

vector<vector<int>> connected_components(const Multigraph& g) {
    vector<int> comp(g.vertex_count(), -1);
    vector<vector<int>> out;
    vector<int> stack;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (comp[s] >= 0)
            continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (Dart d : g.incident_darts()[v]) {
                int w = g.dart_home(twin(d));
                if (comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_connected(const Multigraph& g) {
    return connected_components(g).size() == 1;
}

vector<int> isolated_loops(const Multigraph& g) {
    vector<int> out;
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.is_loop(e) && g.degree(g.edges()[e].first) == 2)
            out.push_back(e);
    return out;
}

Multigraph remove_isolated_loops(const Multigraph& g) {
    auto loops = isolated_loops(g);
    vector<char> drop_vertex(g.vertex_count(), 0);
    vector<char> drop_edge(g.edge_count(), 0);
    for (int e : loops) {
        drop_edge[e] = 1;
        drop_vertex[g.edges()[e].first] = 1;
    }
    vector<int> new_id(g.vertex_count(), -1);
    int n = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!drop_vertex[v])
            new_id[v] = n++;
    vector<pair<int, int>> edges;
    for (int e = 0; e < g.edge_count(); ++e)
        if (!drop_edge[e])
            edges.emplace_back(new_id[g.edges()[e].first], new_id[g.edges()[e].second]);
    return Multigraph(n, std::move(edges));
}

bool is_admissible(const Multigraph& g) {
    if (g.vertex_count() == 0)
        return false;
    vector<int> loop_count(g.vertex_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.is_loop(e))
            loop_count[g.edges()[e].first] += 1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int d = g.degree(v);
        if (d <= 0 || d % 2 != 0)
            return false;
        if (d == 2 && loop_count[v] != 1)
            return false;
    }
    return true;
}

CanonicalCode canonical_form(const Multigraph& g, int max_vertices) {
    int n = g.vertex_count();
    if (n > max_vertices)
        throw CapacityError("canonical_form: too many vertices (" + std::to_string(n) +
                            " > " + std::to_string(max_vertices) + ")");
    vector<int> mat(static_cast<size_t>(n) * n, 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& [u, v] = g.edges()[e];
        if (u == v) {
            mat[static_cast<size_t>(u) * n + u] += 1;
        } else {
            mat[static_cast<size_t>(u) * n + v] += 1;
            mat[static_cast<size_t>(v) * n + u] += 1;
        }
    }
    vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    vector<int> best;
    vector<int> cur(mat.size());
    do {
        // perm[i] = original vertex placed at position i
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                cur[static_cast<size_t>(i) * n + j] =
                    mat[static_cast<size_t>(perm[i]) * n + perm[j]];
        if (best.empty() || cur < best)
            best = cur;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (best.empty())
        best = mat; // n == 0

    std::ostringstream code;
    code << n << ':';
    for (int i = 0; i < n; ++i) {
        if (i)
            code << ';';
        for (int j = 0; j < n; ++j) {
            if (j)
                code << ',';
            code << best[static_cast<size_t>(i) * n + j];
        }
    }
    return code.str();
}

vector<Dart> eulerian_circuit(const Multigraph& g) {
    if (g.vertex_count() == 0 || g.edge_count() == 0)
        throw InputError("eulerian_circuit: empty graph");
    if (!is_connected(g))
        throw InputError("eulerian_circuit: graph not connected");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) % 2 != 0)
            throw InputError("eulerian_circuit: odd degree");

    // Hierholzer, always leaving along the smallest unused dart.
    vector<size_t> ptr(g.vertex_count(), 0);
    vector<char> edge_used(g.edge_count(), 0);
    vector<Dart> out;
    vector<Dart> stack; // darts we left along, in order
    int start = g.dart_home(0);
    int at = start;
    while (true) {
        const auto& inc = g.incident_darts()[at];
        bool moved = false;
        while (ptr[at] < inc.size()) {
            Dart d = inc[ptr[at]++];
            if (edge_used[dart_edge(d)])
                continue;
            edge_used[dart_edge(d)] = 1;
            stack.push_back(d);
            at = g.dart_home(twin(d));
            moved = true;
            break;
        }
        if (!moved) {
            if (stack.empty())
                break;
            out.push_back(stack.back());
            at = g.dart_home(stack.back());
            stack.pop_back();
        }
    }
    std::reverse(out.begin(), out.end());
    if (static_cast<int>(out.size()) != g.edge_count())
        throw InputError("eulerian_circuit: traversal incomplete");
    return out;
}

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
    vector<pair<int, int>> edges = a.edges();
    for (const auto& [u, v] : b.edges())
        edges.emplace_back(u + a.vertex_count(), v + a.vertex_count());
    return Multigraph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

namespace {

int parse_int(string_view tok, const char* what) {
    int value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw FormatError(string("bad ") + what + ": '" + string(tok) + "'");
    return value;
}

} // namespace

Multigraph parse_graph_text(string_view text) {
    int n = -1;
    vector<pair<int, int>> edges;
    std::istringstream in{string(text)};
    string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != string::npos)
            line.resize(hash);
        std::istringstream ls(line);
        string kind;
        if (!(ls >> kind))
            continue;
        if (kind == "V") {
            string tok;
            if (!(ls >> tok))
                throw FormatError("line " + std::to_string(lineno) + ": V needs a count");
            n = parse_int(tok, "vertex count");
        } else if (kind == "E") {
            string a, b;
            if (!(ls >> a >> b))
                throw FormatError("line " + std::to_string(lineno) + ": E needs two endpoints");
            edges.emplace_back(parse_int(a, "endpoint"), parse_int(b, "endpoint"));
        } else {
            throw FormatError("line " + std::to_string(lineno) + ": unknown directive '" + kind + "'");
        }
        string extra;
        if (ls >> extra)
            throw FormatError("line " + std::to_string(lineno) + ": trailing '" + extra + "'");
    }
    if (n < 0)
        throw FormatError("missing V line");
    try {
        return Multigraph(n, std::move(edges));
    } catch (const InputError& e) {
        throw FormatError(e.what());
    }
}

string format_graph_text(const Multigraph& g) {
    std::ostringstream out;
    out << "V " << g.vertex_count() << '\n';
    for (const auto& [u, v] : g.edges())
        out << "E " << u << ' ' << v << '\n';
    return out.str();
}

} // namespace msep
