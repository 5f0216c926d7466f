#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include <msep/classify.hpp>
#include <msep/embedding.hpp>
#include <msep/multigraph.hpp>
#include <msep/tables.hpp>

using namespace msep;
using std::string;
using std::vector;

TEST_CASE("candidate catalogs") {
    CHECK(generate_candidates(0).size() == 1);
    CHECK(generate_candidates(1).size() == 4);
    CHECK(generate_candidates(2).size() == 31);
    CHECK(generate_candidates(3).size() == 452);
    CHECK_THROWS_AS(generate_candidates(5), CapacityError);
    CHECK_THROWS_AS(generate_candidates(3, 2), CapacityError);
    CHECK_THROWS_AS(generate_candidates(-1), InputError);

    vector<string> codes;
    for (const auto& c : generate_candidates(1))
        codes.push_back(c.code);
    CHECK(codes == vector<string>{"1:1", "1:2", "1:3", "2:0,4;4,0"});
}

TEST_CASE("candidates are admissible, connected and distinct") {
    std::set<string> seen;
    for (const auto& cand : generate_candidates(2)) {
        CAPTURE(cand.code);
        CHECK(seen.insert(cand.code).second);
        CHECK(is_connected(cand.graph));
        CHECK(is_admissible(cand.graph));
        CHECK(canonical_form(cand.graph) == cand.code);
        CHECK(cand.graph.vertex_count() <= 4);
        int e = cand.graph.edge_count();
        int v = cand.graph.vertex_count();
        CHECK(e >= (v == 1 && e == 1 ? 1 : 2 * v));
        CHECK(e <= 4 + v);
        std::set<int> loop_vertices;
        for (const auto& [a, b] : cand.graph.edges())
            if (a == b)
                loop_vertices.insert(a);
        CHECK(loop_vertices.size() <= 2);
    }
}

TEST_CASE("connected even graphs by window") {
    auto one_three = connected_even_graphs(1, 3);
    REQUIRE(one_three.size() == 1);
    CHECK(one_three[0].code == "1:3");

    auto two_four = connected_even_graphs(2, 4);
    REQUIRE(two_four.size() == 2);
    CHECK(two_four[0].code == "2:0,4;4,0");
    CHECK(two_four[1].code == "2:1,2;2,1");

    CHECK(connected_even_graphs(2, 3).empty());  // odd degree sum split
    CHECK(connected_even_graphs(3, 5).empty());  // cannot reach min degree 4
    CHECK_THROWS_AS(connected_even_graphs(0, 1), InputError);
}

TEST_CASE("count formulas") {
    const vector<long long> counts = {1, 3, 17, 161};
    CHECK(count_L(0, CountMode::paper, counts) == 1);
    CHECK(count_L(1, CountMode::paper, counts) == 4);
    CHECK(count_L(1, CountMode::multiset, counts) == 4);
    CHECK(count_L(2, CountMode::paper, counts) == 21);
    CHECK(count_L(2, CountMode::multiset, counts) == 21);
    CHECK(count_L(3, CountMode::paper, counts) == 191);
    CHECK(count_L(3, CountMode::multiset, counts) == 188);

    CHECK(count_G(1, CountMode::paper, counts) == 5);
    CHECK(count_G(2, CountMode::paper, counts) == 26);
    CHECK(count_G(2, CountMode::multiset, counts) == 26);
    CHECK(count_G(3, CountMode::paper, counts) == 217);
    CHECK(count_G(3, CountMode::multiset, counts) == 214);

    // the divergence is exactly the [2,2] partition: 3*3 ordered vs C(4,2) unordered
    CHECK(count_L(3, CountMode::paper, counts) - count_L(3, CountMode::multiset, counts) == 3);

    CHECK_THROWS_AS(count_L(3, CountMode::paper, {1, 3}), InputError);
    CHECK_THROWS_AS(count_L(-1, CountMode::paper, counts), InputError);
}

TEST_CASE("classification of genus 0 and 1") {
    ClassificationReport r0 = classify(0);
    CHECK(r0.i_count == 1);
    CHECK(r0.l_paper == 1);
    CHECK(r0.g_paper == 1);
    CHECK(r0.records.size() == 1);
    CHECK(r0.authoritative);

    ClassificationReport r1 = classify(1);
    CHECK(r1.i_count == 3);
    CHECK(r1.l_paper == 4);
    CHECK(r1.l_multiset == 4);
    CHECK(r1.g_paper == 5);
    CHECK(r1.records.size() == 4);
    CHECK(r1.i_counts == vector<long long>{1, 3});
    CHECK(r1.authoritative);
    CHECK(r1.bounded_records == 0);
}

TEST_CASE("classification of genus 2") {
    ClassificationReport rep = classify(2);
    CHECK(rep.i_count == 17);
    CHECK(rep.l_paper == 21);
    CHECK(rep.l_multiset == 21);
    CHECK(rep.g_paper == 26);
    CHECK(rep.g_multiset == 26);
    CHECK(rep.i_counts == vector<long long>{1, 3, 17});
    CHECK(rep.records.size() == 31);
    CHECK(rep.bounded_records == 0);
    CHECK(rep.authoritative);

    std::map<int, int> histogram;
    for (const auto& rec : rep.records) {
        REQUIRE(rec.scan.status == ScanResult::Status::exact);
        REQUIRE(rec.scan.gamma_minus.has_value());
        histogram[*rec.scan.gamma_minus] += 1;
        CHECK_FALSE(rec.witness_text.empty());
        CHECK_FALSE(rec.splits.empty());
    }
    CHECK(histogram == std::map<int, int>{{0, 1}, {1, 3}, {2, 17}, {3, 9}, {4, 1}});
}

TEST_CASE("direct enumeration of least separating graphs") {
    vector<string> l1 = classify_direct_L(1);
    CHECK(l1 == vector<string>{"1:1|1:1", "1:2", "1:3", "2:0,4;4,0"});

    vector<string> l2 = classify_direct_L(2);
    CHECK(l2.size() == 21);
    CHECK(std::set<string>(l2.begin(), l2.end()).size() == 21);
    int disconnected = 0;
    for (const string& code : l2)
        disconnected += code.find('|') != string::npos;
    CHECK(disconnected == 4); // {loop,loop,loop} and loop paired with each genus-1 graph
    CHECK(std::find(l2.begin(), l2.end(), "1:1|1:1|1:1") != l2.end());
    CHECK(std::find(l2.begin(), l2.end(), "1:1|1:2") != l2.end());

    // agrees with the multiset closed form
    CHECK(static_cast<long long>(l2.size()) == classify(2).l_multiset);

    CHECK_THROWS_AS(classify_direct_L(3), CapacityError);
}

TEST_CASE("json report for genus 1") {
    ClassificationReport rep = classify(1);
    string text = report_to_json(rep, CountMode::paper);
    auto j = nlohmann::json::parse(text);
    CHECK(j["genus"] == 1);
    CHECK(j["counts"]["I"] == 3);
    CHECK(j["counts"]["L_paper"] == 4);
    CHECK(j["counts"]["L_multiset"] == 4);
    CHECK(j["counts"]["G"] == 5);
    REQUIRE(j["graphs"].size() == 4);
    CHECK(j["graphs"][0]["code"] == "1:1");
    CHECK(j["graphs"][0]["status"] == "exact");
    CHECK(j["graphs"][0]["gamma_minus"] == 0);
    CHECK(j["graphs"][0]["witness_rotation"] == "v0: 0, 0\n");
    CHECK(j["graphs"][1]["code"] == "1:2");
    CHECK(j["graphs"][1]["gamma_minus"] == 1);
    CHECK(j["graphs"][1]["splits"][0] == nlohmann::json::array({1, 2}));
    CHECK(j["stats"]["authoritative"] == true);
    CHECK(j["stats"]["mode"] == "paper");
    CHECK_FALSE(j["stats"].contains("count_divergence"));
    CHECK(text.find("\"jobs\"") == string::npos); // no scheduling data in reports
    CHECK(text.find("seconds") == string::npos);  // no timing data either
}

TEST_CASE("json report flags the count divergence") {
    ClassificationReport rep;
    rep.genus = 3;
    rep.budget = 1;
    rep.i_counts = {1, 3, 17, 161};
    rep.i_count = 161;
    rep.l_paper = 191;
    rep.l_multiset = 188;
    rep.g_paper = 217;
    rep.g_multiset = 214;
    string text = report_to_json(rep, CountMode::multiset);
    auto j = nlohmann::json::parse(text);
    REQUIRE(j["stats"].contains("count_divergence"));
    CHECK(j["stats"]["count_divergence"]["L_paper"] == 191);
    CHECK(j["stats"]["count_divergence"]["L_multiset"] == 188);
    CHECK(j["counts"]["G"] == 214);
}

TEST_CASE("json reports are byte-identical across job counts") {
    ClassificationReport seq = classify(2, {.jobs = 1});
    ClassificationReport par = classify(2, {.jobs = 4});
    CHECK(report_to_json(seq, CountMode::paper) == report_to_json(par, CountMode::paper));
}

TEST_CASE("budget-limited classification reports bounds honestly") {
    // a tiny budget leaves the larger graphs bounded, never miscounted
    ClassificationReport rep = classify(2, {.budget = 1000});
    CHECK(rep.bounded_records > 0);
    CHECK_FALSE(rep.authoritative);
    CHECK(rep.i_count < 17);
    for (const auto& rec : rep.records)
        if (rec.scan.status == ScanResult::Status::bounded) {
            CHECK(rec.scan.raw_count > 1000);
            CHECK(rec.scan.lower <= rec.scan.upper);
            CHECK(rec.witness_text.empty());
        }
    string text = report_to_json(rep, CountMode::paper);
    CHECK(text.find("\"bounded\"") != string::npos);
}

TEST_CASE("exhaustive genus-3 classification certifies the catalog and three more graphs") {
    // the largest candidate (one vertex, seven loops) has 13! raw rotations,
    // so this budget makes every scan exact; takes tens of seconds
    ClassificationReport rep = classify(3, {.budget = 7'000'000'000, .jobs = 0});
    CHECK(rep.records.size() == 452);
    CHECK(rep.bounded_records == 0);
    CHECK(rep.authoritative);

    std::set<string> certified;
    std::map<int, int> by_vertices;
    for (const auto& rec : rep.records) {
        REQUIRE(rec.scan.status == ScanResult::Status::exact);
        if (rec.scan.gamma_minus == 3) {
            certified.insert(rec.code);
            by_vertices[rec.vertices] += 1;
        }
    }
    // every graph the bundled tables certify is rediscovered
    for (const auto& result : verify_tables("2").results)
        if (!result.code.empty())
            CHECK(certified.count(result.code) == 1);

    // the scan finds three six-vertex graphs beyond the 161 catalogued ones;
    // their witnesses are re-certified below, and with six vertices and
    // twelve edges no rotation system can separate a lower genus, so the
    // certificates alone settle membership
    CHECK(rep.i_count == 164);
    CHECK(rep.i_counts == vector<long long>{1, 3, 17, 164});
    CHECK(by_vertices ==
          std::map<int, int>{{1, 2}, {2, 13}, {3, 45}, {4, 53}, {5, 36}, {6, 15}});
    CHECK(rep.l_paper == 194);
    CHECK(rep.l_multiset == 191);
    CHECK(rep.g_paper == 220);
    CHECK(rep.g_multiset == 217);

    const vector<string> uncatalogued = {
        "6:0,0,0,1,1,2;0,0,0,1,2,1;0,0,0,2,1,1;1,1,2,0,0,0;1,2,1,0,0,0;2,1,1,0,0,0",
        "6:0,0,0,1,1,2;0,0,1,0,2,1;0,1,0,2,0,1;1,0,2,0,1,0;1,2,0,1,0,0;2,1,1,0,0,0",
        "6:0,0,0,1,1,2;0,0,1,0,2,1;0,1,0,2,1,0;1,0,2,0,0,1;1,2,1,0,0,0;2,1,0,1,0,0",
    };
    for (const auto& code : uncatalogued) {
        CAPTURE(code);
        REQUIRE(certified.count(code) == 1);
        auto rec = std::find_if(rep.records.begin(), rep.records.end(),
                                [&](const GraphRecord& r) { return r.code == code; });
        REQUIRE(rec != rep.records.end());
        CHECK(rec->vertices == 6);
        CHECK(rec->edges == 12);
        auto [graph, rot] = parse_rotation_table(rec->witness_text);
        CHECK(canonical_form(graph) == code);
        auto cert = check_two_sided(graph, trace_faces(graph, rot));
        REQUIRE(cert.has_value());
        CHECK(cert->n1 + cert->n2 == 2);
        CHECK(cert->genus == 3);
    }
}
