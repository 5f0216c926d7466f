#include <msep/tables.hpp>

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include <msep/embedding.hpp>
#include <msep/multigraph.hpp>
#include <msep/separation.hpp>
#include <msep/table_data.hpp>

using std::pair;
using std::string;
using std::string_view;
using std::vector;

namespace msep {

namespace {

std::map<string, string> parse_attrs(const string& line, int lineno) {
    std::map<string, string> attrs;
    std::istringstream in(line);
    string tok;
    in >> tok; // the @entry / @issue marker
    while (in >> tok) {
        auto eq = tok.find('=');
        if (eq == string::npos)
            throw FormatError("table data line " + std::to_string(lineno) +
                              ": attribute without '=': " + tok);
        attrs[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    return attrs;
}

int to_int(const string& s, int lineno) {
    size_t pos = 0;
    int value = std::stoi(s, &pos);
    if (pos != s.size())
        throw FormatError("table data line " + std::to_string(lineno) + ": bad integer " + s);
    return value;
}

pair<int, int> to_pair(const string& s, int lineno) {
    auto comma = s.find(',');
    if (comma == string::npos)
        throw FormatError("table data line " + std::to_string(lineno) + ": bad pair " + s);
    return {to_int(s.substr(0, comma), lineno), to_int(s.substr(comma + 1), lineno)};
}

vector<TableEntry> parse_table_text(const char* text) {
    vector<TableEntry> entries;
    std::map<pair<string, int>, int> row_counter;
    std::istringstream in(text);
    string line;
    int lineno = 0;
    TableEntry* open = nullptr;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '#')
            continue;
        if (line.find("@entry") == 0) {
            auto attrs = parse_attrs(line, lineno);
            TableEntry e;
            e.table_id = attrs.at("table");
            e.graph_number = to_int(attrs.at("graph"), lineno);
            e.row_index = row_counter[{e.table_id, e.graph_number}]++;
            e.expected_split = to_pair(attrs.at("n"), lineno);
            if (auto it = attrs.find("surplus"); it != attrs.end()) {
                std::istringstream ps(it->second);
                string item;
                while (std::getline(ps, item, ';'))
                    e.surplus.push_back(to_pair(item, lineno));
            }
            entries.push_back(std::move(e));
            open = &entries.back();
            continue;
        }
        if (line.find_first_not_of(" \t\r") == string::npos) {
            open = nullptr;
            continue;
        }
        if (!open)
            throw FormatError("table data line " + std::to_string(lineno) +
                              ": rotation line outside an entry");
        open->listing += line;
        open->listing += '\n';
    }
    return entries;
}

vector<KnownIssue> parse_issues_text(const char* text) {
    vector<KnownIssue> issues;
    std::istringstream in(text);
    string line;
    int lineno = 0;
    KnownIssue* open = nullptr;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '#')
            continue;
        if (line.find("@issue") == 0) {
            auto attrs = parse_attrs(line, lineno);
            KnownIssue k;
            k.table_id = attrs.at("table");
            k.graph_number = to_int(attrs.at("graph"), lineno);
            k.row_index = to_int(attrs.at("row"), lineno);
            issues.push_back(std::move(k));
            open = &issues.back();
            continue;
        }
        if (line.find_first_not_of(" \t\r") == string::npos)
            continue;
        if (!open)
            throw FormatError("known issues line " + std::to_string(lineno) +
                              ": text outside an issue");
        if (!open->defect.empty())
            open->defect += ' ';
        open->defect += line;
    }
    return issues;
}

bool selection_matches(string_view id, string_view selection) {
    if (selection.empty() || selection == id)
        return true;
    return id.size() > selection.size() && id.substr(0, selection.size()) == selection &&
           id[selection.size()] == '.';
}

const KnownIssue* find_issue(const TableEntry& e) {
    for (const auto& k : known_issues())
        if (k.table_id == e.table_id && k.graph_number == e.graph_number &&
            k.row_index == e.row_index)
            return &k;
    return nullptr;
}

// Re-derive one row; empty result = row verifies. Fills code/genus/split on
// the result as far as the row parses.
string check_entry(const TableEntry& e, EntryResult& r) {
    Multigraph g;
    RotationSystem rot;
    try {
        auto parsed = parse_rotation_table(e.listing);
        g = std::move(parsed.first);
        rot = std::move(parsed.second);
    } catch (const FormatError& ex) {
        return ex.what();
    }
    r.code = canonical_form(g);
    auto faces = trace_faces(g, rot);
    auto cert = check_two_sided(g, faces);
    if (!cert)
        return "no two-sided certificate";
    r.genus = cert->genus;
    r.traced_split = {cert->n1, cert->n2};
    pair<int, int> want{std::min(e.expected_split.first, e.expected_split.second),
                        std::max(e.expected_split.first, e.expected_split.second)};
    bool achievable = std::find(cert->achievable_splits.begin(), cert->achievable_splits.end(),
                                want) != cert->achievable_splits.end();
    if (!achievable)
        return "printed split (" + std::to_string(e.expected_split.first) + "," +
               std::to_string(e.expected_split.second) + ") not achievable; traced (" +
               std::to_string(cert->n1) + "," + std::to_string(cert->n2) + ")";
    if (e.table_id == "1") {
        for (const auto& [g1, g2] : e.surplus)
            if (cert->genus + g1 + g2 != 2)
                return "surplus pair (" + std::to_string(g1) + "," + std::to_string(g2) +
                       ") does not complement genus " + std::to_string(cert->genus);
    } else if (cert->genus != 3) {
        return "separating genus " + std::to_string(cert->genus) + ", table requires 3";
    }
    return "";
}

} // namespace

const vector<TableEntry>& table1_entries() {
    static const vector<TableEntry> entries = parse_table_text(detail::kTable1Text);
    return entries;
}

const vector<TableEntry>& table2_entries() {
    static const vector<TableEntry> entries = parse_table_text(detail::kTable2Text);
    return entries;
}

const vector<KnownIssue>& known_issues() {
    static const vector<KnownIssue> issues = parse_issues_text(detail::kKnownIssuesText);
    return issues;
}

VerificationReport verify_tables(string_view selection) {
    VerificationReport rep;
    auto run = [&](const vector<TableEntry>& entries) {
        for (const auto& e : entries) {
            if (!selection_matches(e.table_id, selection))
                continue;
            EntryResult r;
            r.entry = &e;
            string defect = check_entry(e, r);
            const KnownIssue* known = find_issue(e);
            if (defect.empty()) {
                if (known) {
                    r.status = EntryStatus::fail;
                    r.message = "row is quarantined but verified cleanly; stale issue entry";
                    rep.failed += 1;
                } else {
                    r.status = EntryStatus::pass;
                    rep.passed += 1;
                }
            } else if (known) {
                r.status = EntryStatus::quarantined;
                r.message = known->defect;
                rep.quarantined += 1;
            } else {
                r.status = EntryStatus::fail;
                r.message = defect;
                rep.failed += 1;
            }
            rep.results.push_back(std::move(r));
        }
    };
    run(table1_entries());
    run(table2_entries());
    return rep;
}

void print_verification(const VerificationReport& rep, std::ostream& out) {
    for (const auto& r : rep.results) {
        const TableEntry& e = *r.entry;
        out << "table " << e.table_id << " graph " << e.graph_number;
        if (e.row_index > 0 || e.table_id == "1")
            out << " row " << e.row_index;
        out << ": ";
        switch (r.status) {
        case EntryStatus::pass:
            out << "PASS (genus " << r.genus << ", traced (" << r.traced_split.first << ","
                << r.traced_split.second << "))";
            break;
        case EntryStatus::quarantined:
            out << "QUARANTINED (" << r.message << ")";
            break;
        case EntryStatus::fail:
            out << "FAIL (" << r.message << ")";
            break;
        }
        out << '\n';
    }
    out << "passed " << rep.passed << ", quarantined " << rep.quarantined << ", failed "
        << rep.failed << '\n';
}

} // namespace msep
