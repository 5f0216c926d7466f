#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace msep {

// A dart is one of the two ends of an edge: dart = 2*edge + end.
// Loops own both darts at the same vertex.
using Dart = int;

constexpr Dart twin(Dart d) { return d ^ 1; }
constexpr int dart_edge(Dart d) { return d >> 1; }
constexpr int dart_end(Dart d) { return d & 1; }

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Thrown when a scan would exceed its rotation budget; carries the best
// bounds known without scanning.
struct ResourceError : std::runtime_error {
    int lower;
    int upper;
    std::uint64_t raw_count;
    ResourceError(const std::string& what, int lo, int hi, std::uint64_t raw)
        : std::runtime_error(what), lower(lo), upper(hi), raw_count(raw) {}
};

// Undirected multigraph with loops and parallel edges. Non-loop edges are
// stored with first <= second; dart 2e lives at edges()[e].first, dart 2e+1
// at edges()[e].second. Immutable after construction.
class Multigraph {
  public:
    Multigraph() = default;
    Multigraph(int vertex_count, std::vector<std::pair<int, int>> edge_list);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int dart_count() const { return 2 * edge_count(); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    bool is_loop(int e) const { return edges_[e].first == edges_[e].second; }
    int dart_home(Dart d) const {
        const auto& [u, v] = edges_[d >> 1];
        return (d & 1) ? v : u;
    }
    // Non-loop incidences once, loops twice.
    int degree(int v) const { return degrees_[v]; }
    const std::vector<int>& degrees() const { return degrees_; }
    // Sorted dart list per vertex; length == degree.
    const std::vector<std::vector<Dart>>& incident_darts() const { return incident_; }

  private:
    int vertex_count_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> degrees_;
    std::vector<std::vector<Dart>> incident_;
};

// Lexicographically minimal adjacency encoding over all vertex relabelings;
// equal codes iff isomorphic. Printable: "V:m00,m01;m10,m11" with loop counts
// on the diagonal.
using CanonicalCode = std::string;

std::vector<std::vector<int>> connected_components(const Multigraph& g);
bool is_connected(const Multigraph& g);

// Edge ids of loops whose vertex has degree exactly 2 (the set B).
std::vector<int> isolated_loops(const Multigraph& g);
// G minus B: each isolated loop removed together with its vertex.
Multigraph remove_isolated_loops(const Multigraph& g);

// Every vertex has positive even degree and every degree-2 vertex carries an
// isolated loop (no smoothable vertices).
bool is_admissible(const Multigraph& g);

// Brute-force minimization over all vertex permutations. Throws CapacityError
// above max_vertices.
CanonicalCode canonical_form(const Multigraph& g, int max_vertices = 8);

// Deterministic Hierholzer circuit as a dart sequence (the dart of each edge
// on the side the traversal leaves from); smallest-dart-first tie-breaking.
// Requires connected with all degrees even and positive.
std::vector<Dart> eulerian_circuit(const Multigraph& g);

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b);

// Text format: "V <n>" then one "E <u> <v>" per edge; '#' comments and blank
// lines ignored.
Multigraph parse_graph_text(std::string_view text);
std::string format_graph_text(const Multigraph& g);

} // namespace msep
