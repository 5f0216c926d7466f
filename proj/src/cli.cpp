#include <msep/tables.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <msep/classify.hpp>
#include <msep/embedding.hpp>
#include <msep/multigraph.hpp>
#include <msep/separation.hpp>

using std::string;
using std::vector;

namespace msep {

namespace {

string read_file(const string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw FormatError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int default_jobs() {
    if (const char* env = std::getenv("MSEP_JOBS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 0 && v <= 1024)
            return static_cast<int>(v);
    }
    return 1;
}

string genus_or_inf(const std::optional<int>& g) {
    return g ? std::to_string(*g) : "inf";
}

} // namespace

int cli_run(const vector<string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"classify minimal separating sets of closed orientable surfaces"};
    app.require_subcommand(1);

    int genus = 0;
    int jobs = default_jobs();
    std::uint64_t budget = 100'000'000;
    string mode = "paper";
    bool quotient = false;
    string output = "-";
    string graph_path;
    string rotation_path;
    string table_selection;

    auto* cmd_classify = app.add_subcommand("classify", "classify graphs of a given genus");
    cmd_classify->add_option("--genus", genus, "target genus")->required();
    cmd_classify->add_option("--jobs", jobs, "worker threads (0 = hardware)");
    cmd_classify->add_option("--budget", budget, "raw rotation budget per graph");
    cmd_classify->add_option("--mode", mode, "count mode")
        ->check(CLI::IsMember({"paper", "multiset"}));
    cmd_classify->add_flag("--quotient", quotient, "halve scans by reflection symmetry");
    cmd_classify->add_option("--output", output, "report file ('-' = stdout)");

    auto* cmd_gamma = app.add_subcommand("gamma", "genus range of one graph");
    cmd_gamma->add_option("--graph", graph_path, "graph file")->required();
    cmd_gamma->add_option("--jobs", jobs, "worker threads (0 = hardware)");
    cmd_gamma->add_option("--budget", budget, "raw rotation budget");

    auto* cmd_faces = app.add_subcommand("faces", "boundary walks of a rotation system");
    cmd_faces->add_option("--graph", graph_path, "graph file")->required();
    cmd_faces->add_option("--rotation", rotation_path, "rotation file (labels = edge ids)")
        ->required();

    auto* cmd_check = app.add_subcommand("check", "certify a printed rotation listing");
    cmd_check->add_option("--rotation", rotation_path, "rotation listing file")->required();

    auto* cmd_candidates = app.add_subcommand("candidates", "candidate graphs for a genus");
    cmd_candidates->add_option("--genus", genus, "target genus")->required();

    auto* cmd_verify = app.add_subcommand("verify-tables", "re-derive the bundled tables");
    cmd_verify->add_option("--table", table_selection, "restrict to one table (1, 2, 2.3, ...)");

    vector<string> argv_storage = args;
    vector<char*> argv;
    argv.push_back(const_cast<char*>("msep"));
    for (auto& a : argv_storage)
        argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (cmd_classify->parsed()) {
            ClassifyOptions opt;
            opt.budget = budget;
            opt.jobs = jobs;
            opt.quotient_reflection = quotient;
            ClassificationReport rep = classify(genus, opt);
            CountMode m = mode == "paper" ? CountMode::paper : CountMode::multiset;
            string text = report_to_json(rep, m);
            if (output == "-") {
                out << text;
            } else {
                std::ofstream f(output, std::ios::binary);
                if (!f)
                    throw FormatError("cannot write " + output);
                f << text;
            }
            err << "I=" << rep.i_count << " L_paper=" << rep.l_paper
                << " L_multiset=" << rep.l_multiset
                << " G=" << (m == CountMode::paper ? rep.g_paper : rep.g_multiset)
                << (rep.authoritative ? "" : " (not authoritative: budget-bounded candidates)")
                << '\n';
            return 0;
        }
        if (cmd_gamma->parsed()) {
            Multigraph g = parse_graph_text(read_file(graph_path));
            ScanOptions sopt;
            sopt.budget = budget;
            sopt.jobs = jobs;
            bool even = g.vertex_count() > 0;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (g.degree(v) == 0 || g.degree(v) % 2 != 0)
                    even = false;
            if (even && is_connected(g)) {
                GenusProfile prof = genus_bounds(g, sopt);
                out << "gamma_minus: " << genus_or_inf(prof.gamma_minus) << '\n';
                out << "gamma_plus: " << genus_or_inf(prof.gamma_plus) << '\n';
                out << "cellular: [" << prof.cellular.first << ", " << prof.cellular.second
                    << "]\n";
                out << "bounds: [" << prof.lower_bound << ", " << prof.upper_bound << "]\n";
            } else {
                out << "gamma_minus: " << genus_or_inf(least_separated_genus(g, sopt)) << '\n';
                out << "gamma_plus: " << genus_or_inf(largest_irreducible_genus(g, sopt)) << '\n';
            }
            return 0;
        }
        if (cmd_faces->parsed()) {
            Multigraph g = parse_graph_text(read_file(graph_path));
            RotationSystem rot = parse_rotation_lines(g, read_file(rotation_path));
            FaceDecomposition faces = trace_faces(g, rot);
            out << "F = " << faces.face_count() << '\n';
            for (int w = 0; w < faces.face_count(); ++w) {
                out << "walk " << w << ":";
                for (Dart d : faces.walks[w])
                    out << ' ' << dart_edge(d);
                out << '\n';
            }
            if (is_connected(g) && g.edge_count() > 0)
                out << "cellular genus: " << cellular_genus(g, faces) << '\n';
            return 0;
        }
        if (cmd_check->parsed()) {
            auto parsed = parse_rotation_table(read_file(rotation_path));
            FaceDecomposition faces = trace_faces(parsed.first, parsed.second);
            auto cert = check_two_sided(parsed.first, faces);
            if (!cert) {
                out << "not two-sided\n";
                return 1;
            }
            out << "two-sided, (" << cert->n1 << "," << cert->n2 << "), genus " << cert->genus
                << '\n';
            out << "splits:";
            for (const auto& [a, b] : cert->achievable_splits)
                out << " (" << a << "," << b << ")";
            out << '\n';
            return 0;
        }
        if (cmd_candidates->parsed()) {
            auto cands = generate_candidates(genus);
            for (const auto& c : cands)
                out << c.code << " vertices=" << c.graph.vertex_count()
                    << " edges=" << c.graph.edge_count() << '\n';
            out << "total: " << cands.size() << '\n';
            return 0;
        }
        if (cmd_verify->parsed()) {
            VerificationReport rep = verify_tables(table_selection);
            print_verification(rep, out);
            return rep.ok() ? 0 : 1;
        }
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << '\n';
        return 1;
    } catch (const CapacityError& e) {
        err << "capacity: " << e.what() << '\n';
        return 2;
    } catch (const FormatError& e) {
        err << "input: " << e.what() << '\n';
        return 2;
    } catch (const InputError& e) {
        err << "input: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace msep
