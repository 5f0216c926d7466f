#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace msep {

// One printed rotation listing from the bundled reference tables.
struct TableEntry {
    std::string table_id;   // "1" or "2.1".."2.6"
    int graph_number = 0;   // number within its table
    int row_index = 0;      // occurrence order for graphs with several rows
    std::string listing;    // raw rotation lines
    std::pair<int, int> expected_split{0, 0};
    // Table 1 only: printed (g1, g2) surplus pairs for the row's split.
    std::vector<std::pair<int, int>> surplus;
};

const std::vector<TableEntry>& table1_entries();
const std::vector<TableEntry>& table2_entries();

// Curated transcription defects; these rows are quarantined, not failed.
struct KnownIssue {
    std::string table_id;
    int graph_number = 0;
    int row_index = 0;
    std::string defect;
};

const std::vector<KnownIssue>& known_issues();

enum class EntryStatus { pass, quarantined, fail };

struct EntryResult {
    const TableEntry* entry = nullptr;
    EntryStatus status = EntryStatus::fail;
    std::string message;            // defect or failure description
    std::string code;               // canonical code when the row parsed
    int genus = -1;                 // separating genus when certified
    std::pair<int, int> traced_split{0, 0}; // canonical certificate split
};

struct VerificationReport {
    std::vector<EntryResult> results;
    int passed = 0;
    int quarantined = 0;
    int failed = 0;
    bool ok() const { return failed == 0; }
};

// Re-derive every selected table row: parse the listing, certify
// two-sidedness, check the printed split is achievable (unordered) and the
// genus matches the table (table 1 rows must also have every printed surplus
// pair summing with the row genus to 2). Rows on the known-issues list that
// fail for the recorded reason come back quarantined; everything else must
// pass. Selection: "" = all, "1", "2", or a subtable like "2.3".
VerificationReport verify_tables(std::string_view selection = "");

void print_verification(const VerificationReport& report, std::ostream& out);

// Entry point used by the msep binary; exposed for tests. Returns the
// process exit status: 0 success, 1 verification failure, 2 usage error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace msep
