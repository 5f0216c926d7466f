#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <msep/embedding.hpp>
#include <msep/multigraph.hpp>

namespace msep {

// Witness that the embedded graph is two-sided: a proper 2-coloring of the
// boundary walks in which each edge's two walk incidences get different
// colors. Canonical coloring: minimal n1, ties broken by lexicographically
// smallest side vector.
struct TwoSidedCertificate {
    std::vector<int> side_of;                         // walk -> 0 (B1) or 1 (B2)
    int n1 = 0;                                       // |B1| <= |B2| = n2
    int n2 = 0;
    int genus = 0;                                    // (E - V + n1 + n2)/2 - 1
    std::vector<std::pair<int, int>> achievable_splits; // all unordered (n1,n2)
};

// Empty when some edge has both incidences on one walk or the walk
// constraint graph (one node per walk, one edge per graph edge) is not
// bipartite. Works componentwise, so disconnected graphs are fine.
std::optional<TwoSidedCertificate> check_two_sided(const Multigraph& g,
                                                   const FaceDecomposition& faces);

// (E - V + n1 + n2)/2 - 1; when g is connected this is cross-checked against
// E - V - cellular_genus (they must agree, else InputError).
int separating_genus(const Multigraph& g, const TwoSidedCertificate& cert);

struct ScanOptions {
    std::uint64_t budget = 100'000'000; // raw dart-level rotation limit
    int jobs = 1;
    bool quotient_reflection = false;
};

// Outcome of scanning all rotation classes of one graph.
struct ScanResult {
    enum class Status { exact, bounded, infinite };
    Status status = Status::exact;

    // exact only
    std::optional<int> gamma_minus;
    std::optional<int> gamma_plus;
    std::optional<RotationSystem> witness;            // first class achieving gamma_minus
    std::optional<TwoSidedCertificate> witness_cert;

    // bounded only: gamma_minus range certified without scanning
    int lower = 0;
    int upper = 0;

    std::uint64_t raw_count = 0;       // prod (deg-1)!
    std::uint64_t classes_scanned = 0; // label classes visited
    std::uint64_t two_sided_count = 0; // of which certified
};

// Min/max separating genus over all rotation classes. Status infinite when
// some degree is odd or zero (no two-sided rotation exists at all); bounded
// when raw_count exceeds the budget (lower/upper from Euler-formula bounds);
// exact otherwise, even if no class is two-sided (then gamma_minus is empty).
// Deterministic for any job count: witnesses are minimal in enumeration
// order. Disconnected input is scanned whole (the walk machinery is
// component-agnostic).
ScanResult scan_two_sided(const Multigraph& g, const ScanOptions& opt = {});

// Least separating genus gamma_minus. Empty optional = infinity (some
// component inadmissible for every rotation). Disconnected graphs use the
// component sum plus (k-1) glue handles. Throws ResourceError with bounds
// when the budget is exceeded.
std::optional<int> least_separated_genus(const Multigraph& g, const ScanOptions& opt = {});

// Greatest separating genus gamma_plus, same conventions.
std::optional<int> largest_irreducible_genus(const Multigraph& g, const ScanOptions& opt = {});

// Min and max cellular genus over all rotation classes (no pruning, no
// quotient, every class counts). Requires connected; budget as above.
std::pair<int, int> cellular_genus_range(const Multigraph& g, const ScanOptions& opt = {});

struct GenusProfile {
    std::optional<int> gamma_minus; // empty = infinity
    std::optional<int> gamma_plus;
    std::pair<int, int> cellular;   // min/max cellular genus
    int lower_bound = 0;            // E - V - max cellular genus <= gamma_minus
    int upper_bound = 0;            // gamma_plus <= E - V - min cellular genus
};

// Full profile for one connected graph with positive even degrees; both
// inequalities are re-verified against the exhaustive values.
GenusProfile genus_bounds(const Multigraph& g, const ScanOptions& opt = {});

// First rotation class (enumeration order) whose separating genus is exactly
// `target`, with its certificate; empty if none. Sequential early-exit scan.
std::optional<std::pair<RotationSystem, TwoSidedCertificate>>
witness(const Multigraph& g, int target, const ScanOptions& opt = {});

} // namespace msep
