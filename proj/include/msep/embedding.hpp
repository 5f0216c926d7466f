#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <msep/multigraph.hpp>

namespace msep {

// Cyclic dart order around each vertex; rotation[v] lists degree(v) darts.
// Lists are read cyclically, so any rotation of a list names the same system.
struct RotationSystem {
    std::vector<std::vector<Dart>> at;
};

// Boundary walks of the rotation system: orbits of d -> successor of twin(d)
// in the rotation at its vertex. Each walk starts at its smallest dart and
// walks are sorted by that dart.
struct FaceDecomposition {
    std::vector<std::vector<Dart>> walks;
    std::vector<int> walk_of; // dart -> walk index
    int face_count() const { return static_cast<int>(walks.size()); }
};

// Validates that the rotation lists exactly partition the darts at each
// vertex (throws InputError otherwise).
FaceDecomposition trace_faces(const Multigraph& g, const RotationSystem& rot);

// Genus of the closed surface the rotation system embeds g into:
// (2 - V + E - F) / 2. Requires g connected.
int cellular_genus(const Multigraph& g, const FaceDecomposition& faces);

// Rotation system whose boundary walks include the given Eulerian circuit:
// at each vertex the circuit's transition pairs (twin of entering dart,
// next leaving dart) are chained into one cycle. Validates the circuit.
RotationSystem rotation_from_euler(const Multigraph& g, const std::vector<Dart>& circuit);

// Number of dart-level rotation systems, prod (deg(v)-1)!, saturated at
// uint64 max. This is the budget metric for scans.
std::uint64_t raw_rotation_count(const Multigraph& g);
// Number of label-string classes actually enumerated: per vertex
// (deg-1)!/prod(mult!) with one factor of the smallest label's multiplicity
// cancelled by the fixed first slot. Saturated.
std::uint64_t label_class_count(const Multigraph& g);

struct EnumOptions {
    // Skip classes where some loop's two occurrences sit at even cyclic
    // distance; such classes are never two-sided. Exact (not just sound) on
    // single-vertex graphs.
    bool prune_loop_parity = true;
    // Keep one representative of each reflection pair (class vs the class
    // with every local order reversed). Preserves existence of two-sided
    // rotations and min/max genus, not counts; off for table verification.
    bool quotient_reflection = false;
};

// Streaming enumerator over rotation classes: per vertex, the distinct
// arrangements of its incident edge labels (loops twice) with an occurrence
// of the smallest label fixed first. Deterministic order: lexicographic in
// the flattened label string, vertex by vertex. The dart realization puts a
// loop's even dart at the first occurrence and, for non-loop edges, dart ends
// as stored in the Multigraph.
class RotationEnumerator {
  public:
    explicit RotationEnumerator(const Multigraph& g, EnumOptions opt = {});

    // A prefix fixes the first `depth` free slots of the flattened label
    // string; completions of distinct prefixes partition the class space.
    struct Prefix {
        std::vector<int> labels;
    };

    // Prefixes at the smallest depth that yields at least `target` of them
    // (or the whole space as complete prefixes), in enumeration order.
    std::vector<Prefix> make_prefixes(std::uint64_t target) const;

    // Visit every class extending `prefix`, in order. The visitor receives
    // the rotation and the flattened per-vertex label strings; return false
    // to stop. Returns the number of classes visited.
    std::uint64_t scan_prefix(
        const Prefix& prefix,
        const std::function<bool(const RotationSystem&,
                                 const std::vector<std::vector<int>>&)>& visit) const;

    // Full sequential scan (single empty prefix).
    std::uint64_t scan(const std::function<bool(const RotationSystem&,
                                                const std::vector<std::vector<int>>&)>& visit) const;

    const Multigraph& graph() const { return *g_; }

  private:
    const Multigraph* g_ = nullptr;
    EnumOptions opt_;
    // Per vertex: sorted incident labels (loops twice).
    std::vector<std::vector<int>> labels_;
    int free_slots_ = 0;

    friend struct EnumWalker;
};

// Rotation listing, one line per vertex: "v0: 0, 0, 1, 1". Labels are edge
// ids. Lines starting with '#' and blank lines are ignored on parse. Parsing
// reconstructs the graph from the listing (each label must occur exactly
// twice); labels are densely renumbered in sorted order.
std::pair<Multigraph, RotationSystem> parse_rotation_table(std::string_view text);
std::string format_rotation(const Multigraph& g, const RotationSystem& rot);

// Same listing format, but labels are edge ids of an existing graph; every
// edge must appear exactly at its endpoints (loops twice at their vertex).
RotationSystem parse_rotation_lines(const Multigraph& g, std::string_view text);

} // namespace msep
