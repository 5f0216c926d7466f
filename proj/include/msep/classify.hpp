#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <msep/multigraph.hpp>
#include <msep/separation.hpp>

namespace msep {

struct Candidate {
    CanonicalCode code;
    Multigraph graph;
};

// Connected multigraphs with exactly `vertices` vertices and `edges` edges,
// all degrees even and >= 4, one representative per isomorphism class,
// ordered by canonical code.
std::vector<Candidate> connected_even_graphs(int vertices, int edges);

// Connected candidates for genus g, up to isomorphism, ordered by
// (vertices, edges, code): the single loop, plus every connected multigraph
// with minimum degree >= 4, all degrees even, V <= 2g, 2V <= E <= 2g + V and
// at most g loop-carrying vertices. Throws CapacityError for g > max_genus.
std::vector<Candidate> generate_candidates(int genus, int max_genus = 4);

enum class CountMode { paper, multiset };

// Number of least separating graphs with k >= 2 components summed over the
// partitions of genus+1 into k parts, each part p contributing a component
// of least genus p-1, given |I_i| for i <= genus (i_counts[i] = |I_i|).
// paper mode multiplies |I_{p-1}| per part (repeated parts counted as
// ordered tuples); multiset mode counts unordered multisets via multichoose.
// Both include the connected term |I_genus|.
long long count_L(int genus, CountMode mode, const std::vector<long long>& i_counts);

// Graphs of least genus at most `genus`: sum of count_L over 0..genus.
long long count_G(int genus, CountMode mode, const std::vector<long long>& i_counts);

struct GraphRecord {
    CanonicalCode code;
    int vertices = 0;
    int edges = 0;
    ScanResult scan;
    std::string witness_text; // formatted witness rotation, when exact
    std::vector<std::pair<int, int>> splits; // its achievable splits
};

struct ClassificationReport {
    int genus = 0;
    std::uint64_t budget = 0;
    bool quotient_reflection = false;
    std::vector<GraphRecord> records;       // every candidate, catalog order

    long long i_count = 0;                  // certified gamma_minus == genus
    int bounded_records = 0;                // budget-limited candidates
    bool authoritative = false;             // no bounded candidate can still land on genus
    std::vector<long long> i_counts;        // certified |I_i| for i <= genus
    long long l_paper = 0;
    long long l_multiset = 0;
    long long g_paper = 0;
    long long g_multiset = 0;

    std::uint64_t classes_scanned = 0;
    std::uint64_t two_sided_count = 0;
};

struct ClassifyOptions {
    std::uint64_t budget = 100'000'000;
    int jobs = 1;
    bool quotient_reflection = false;
};

// Scan every candidate of every genus up to `genus` and assemble the counts.
// Lower genera contribute only their certified |I_i|; records cover the
// requested genus. Deterministic for any job count.
ClassificationReport classify(int genus, const ClassifyOptions& opt = {});

// Direct enumeration of the least separating graphs of genus <= 2 as
// canonical codes (components joined by '|'): connected members of I_g plus
// every multiset of k >= 2 connected candidates whose gamma_minus sum is
// g - k + 1, each certified through least_separated_genus on the union.
std::vector<std::string> classify_direct_L(int genus, const ClassifyOptions& opt = {});

// Stable JSON rendering: counts{I,L_paper,L_multiset,G}, graphs[], stats{}.
// Byte-identical for identical (genus, budget, mode, quotient) regardless of
// job count; no timing data. When paper and multiset counts differ the stats
// carry a divergence note.
std::string report_to_json(const ClassificationReport& report, CountMode mode);

} // namespace msep
