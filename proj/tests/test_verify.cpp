#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "rtdg/errors.hpp"
#include "rtdg/graph.hpp"
#include "rtdg/verify.hpp"

using namespace rtdg;

namespace {

bool all_verified(const std::vector<VerificationReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) {
        return r.status == VerifyStatus::verified;
    });
}

} // namespace

TEST_CASE("closed-form degree matches brute force") {
    for (const auto& spec : {SpaceSpec::zq(2, 4), SpaceSpec::zq(3, 3), SpaceSpec::sn(4),
                             SpaceSpec::product({2, 3, 2})}) {
        for (const auto& d : all_nonempty_distance_sets(spec)) {
            DistanceGraph dg = build_distance_graph(spec, d);
            auto deg = is_regular(dg.graph);
            REQUIRE(deg.has_value());
            CHECK(BigInt(*deg) == degree_formula(spec, d));
            CHECK(BigInt(connected_components(dg.graph).component_count) ==
                  component_count_formula(spec, d));
        }
    }
}

TEST_CASE("distance subsets enumerate in ascending bitmask order") {
    auto sets = all_nonempty_distance_sets(SpaceSpec::zq(2, 3));
    REQUIRE(sets.size() == 7);
    CHECK(sets[0].to_string() == "1");
    CHECK(sets[1].to_string() == "2");
    CHECK(sets[2].to_string() == "1,2");
    CHECK(sets[3].to_string() == "3");
    CHECK(sets[6].to_string() == "1,2,3");

    auto perm_sets = all_nonempty_distance_sets(SpaceSpec::sn(3));
    REQUIRE(perm_sets.size() == 3);
    CHECK(perm_sets[0].to_string() == "2");  // permutation distances start at 2

    CHECK(all_nonempty_distance_sets(SpaceSpec::sn(1)).empty());
}

TEST_CASE("structure theorem verifies on each family") {
    auto r1 = verify_structure_theorem(SpaceSpec::zq(2, 4), DistanceSet::parse("2,3"));
    CHECK(r1.status == VerifyStatus::verified);
    CHECK(r1.claim == "structure");
    CHECK(r1.evidence.find("isomorphic to 2*[K_2(2)]^2") != std::string::npos);

    auto r2 = verify_structure_theorem(SpaceSpec::sn(4), DistanceSet::parse("2,4"));
    CHECK(r2.status == VerifyStatus::verified);
    CHECK(r2.evidence.find("[3*K_2(1)]^4") != std::string::npos);

    auto r3 = verify_structure_theorem(SpaceSpec::product({2, 3, 2}), DistanceSet::parse("1,3"));
    CHECK(r3.status == VerifyStatus::verified);
    CHECK(r3.evidence.find("[3*K_2(1)]^2") != std::string::npos);
}

TEST_CASE("structure check goes inconclusive when the space is too large") {
    VerifyLimits lim;
    lim.max_points = 10;
    auto r = verify_structure_theorem(SpaceSpec::zq(2, 4), DistanceSet::parse("1"), lim);
    CHECK(r.status == VerifyStatus::inconclusive);
}

TEST_CASE("word-space corollary suite verifies end to end") {
    auto reports = verify_corollary_suite_zq(2, 3);
    CHECK(reports.size() == 22);  // 7 sets x {regularity, connectivity, chromatic} + distinctness
    CHECK(all_verified(reports));

    std::vector<BigInt> chis;
    for (const auto& d : all_nonempty_distance_sets(SpaceSpec::zq(2, 3))) {
        chis.push_back(chromatic_formula(SpaceSpec::zq(2, 3), d));
    }
    std::sort(chis.begin(), chis.end());
    CHECK(chis == std::vector<BigInt>{2, 2, 2, 4, 4, 4, 8});
}

TEST_CASE("permutation corollary suite verifies end to end") {
    auto reports = verify_corollary_suite_sn(4);
    CHECK(reports.size() == 29);  // 7 sets x 4 claims + distinctness
    CHECK(all_verified(reports));

    SpaceSpec spec = SpaceSpec::sn(4);
    CHECK(chromatic_formula(spec, DistanceSet::parse("2,3")) == 6);
    CHECK(chromatic_formula(spec, DistanceSet::parse("2,3,4")) == 24);
}

TEST_CASE("connectivity holds exactly when the full dimension participates") {
    SpaceSpec spec = SpaceSpec::zq(2, 3);
    int connected = 0;
    for (const auto& d : all_nonempty_distance_sets(spec)) {
        DistanceGraph dg = build_distance_graph(spec, d);
        bool is_connected = connected_components(dg.graph).component_count == 1;
        CHECK(is_connected == d.contains(3));
        if (is_connected) ++connected;
        CHECK(verify_connectivity(spec, d).status == VerifyStatus::verified);
    }
    CHECK(connected == 4);
}

TEST_CASE("distinctness separates all distance sets of a space") {
    auto r = verify_distinctness(SpaceSpec::zq(2, 3));
    CHECK(r.claim == "distinctness");
    CHECK(r.status == VerifyStatus::verified);
}

TEST_CASE("metric axioms: exhaustive on small spaces") {
    auto r = verify_metric_axioms(SpaceSpec::sn(4));
    CHECK(r.status == VerifyStatus::verified);
    CHECK(r.evidence.find("exhaustive") != std::string::npos);
    CHECK(r.evidence.find("subadditivity") != std::string::npos);

    auto r2 = verify_metric_axioms(SpaceSpec::zq(5, 3));
    CHECK(r2.status == VerifyStatus::verified);
    CHECK(r2.evidence.find("exhaustive over 125 points") != std::string::npos);

    auto r3 = verify_metric_axioms(SpaceSpec::sn(1));
    CHECK(r3.status == VerifyStatus::verified);
}

TEST_CASE("metric axioms: sampled on large spaces") {
    auto r = verify_metric_axioms(SpaceSpec::sn(6));
    CHECK(r.status == VerifyStatus::verified);
    CHECK(r.evidence.find("sampled") != std::string::npos);
    CHECK(r.evidence.find("seed") != std::string::npos);

    VerifyLimits lim;
    lim.max_points = 10;
    CHECK(verify_metric_axioms(SpaceSpec::zq(3, 3), lim).status == VerifyStatus::inconclusive);
}

TEST_CASE("permutation graphs embed into word graphs") {
    CHECK(verify_sn_embedding(3, DistanceSet::parse("2,3")).status == VerifyStatus::verified);
    CHECK(verify_sn_embedding(2, DistanceSet::parse("2")).status == VerifyStatus::verified);

    auto trivial = verify_sn_embedding(1, DistanceSet());
    CHECK(trivial.status == VerifyStatus::verified);
    CHECK(trivial.evidence.find("trivial") != std::string::npos);

    VerifyLimits lim;
    lim.embedding_max_n = 2;
    auto capped = verify_sn_embedding(3, DistanceSet::parse("2"), lim);
    CHECK(capped.status == VerifyStatus::inconclusive);
    CHECK(capped.evidence.find("embedding limit") != std::string::npos);
}

TEST_CASE("degree recovery round-trips every distance set") {
    for (int q : {2, 3, 4}) {
        SpaceSpec spec = SpaceSpec::zq(q, 5);
        std::set<BigInt> degrees;
        for (const auto& d : all_nonempty_distance_sets(spec)) {
            BigInt degree = degree_formula(spec, d);
            CHECK(recover_distance_set_zq(q, degree).values() == d.values());
            degrees.insert(degree);
        }
        CHECK(degrees.size() == 31);  // distinct degrees: recovery is well-posed
    }
    {
        SpaceSpec spec = SpaceSpec::sn(6);
        std::set<BigInt> degrees;
        for (const auto& d : all_nonempty_distance_sets(spec)) {
            BigInt degree = degree_formula(spec, d);
            CHECK(recover_distance_set_sn(degree).values() == d.values());
            degrees.insert(degree);
        }
        CHECK(degrees.size() == 31);
    }
}

TEST_CASE("degree recovery on frozen values") {
    CHECK(recover_distance_set_zq(3, 20).to_string() == "1,3");
    CHECK(recover_distance_set_zq(2, 0).empty());
    CHECK(recover_distance_set_zq(2, 3).to_string() == "1,2");
    CHECK(recover_distance_set_zq(3, 8).to_string() == "1,2");
    CHECK(recover_distance_set_sn(19).to_string() == "2,4");
    CHECK(recover_distance_set_sn(0).empty());
    CHECK(recover_distance_set_sn(5).to_string() == "2,3");
    CHECK(recover_distance_set_sn(23).to_string() == "2,3,4");
}

TEST_CASE("degrees without preimages are rejected") {
    CHECK_THROWS_AS(recover_distance_set_zq(3, 7), NoPreimageError);   // odd, q-1 = 2
    CHECK_THROWS_AS(recover_distance_set_zq(4, 6), NoPreimageError);   // base-4 digit 2
    CHECK_THROWS_AS(recover_distance_set_zq(3, -2), NoPreimageError);
    CHECK_THROWS_AS(recover_distance_set_sn(2), NoPreimageError);      // would repeat t=2
    CHECK_THROWS_AS(recover_distance_set_sn(3), NoPreimageError);
    CHECK_THROWS_AS(recover_distance_set_sn(-1), NoPreimageError);
    CHECK_THROWS_AS(recover_distance_set_zq(1, 0), Error);             // degenerate alphabet
}

TEST_CASE("report lines are compact json with a fixed field order") {
    auto r = verify_regularity(SpaceSpec::zq(2, 2), DistanceSet::parse("2"));
    std::string line = report_to_json_line(r);
    auto pos = [&](const std::string& key) { return line.find("\"" + key + "\""); };
    CHECK(pos("claim") == 1);
    CHECK(pos("claim") < pos("space"));
    CHECK(pos("space") < pos("distances"));
    CHECK(pos("distances") < pos("status"));
    CHECK(pos("status") < pos("evidence"));
    CHECK(pos("evidence") < pos("seconds"));
    CHECK(line.find('\n') == std::string::npos);
    CHECK(line.find("\"seconds\":0.0") != std::string::npos);
    CHECK(line.find("\"status\":\"verified\"") != std::string::npos);

    // Identical reruns serialize byte-identically unless timing is requested.
    auto again = verify_regularity(SpaceSpec::zq(2, 2), DistanceSet::parse("2"));
    CHECK(report_to_json_line(again) == line);
}

TEST_CASE("reports sort by claim, then space, then distances") {
    std::vector<VerificationReport> reports;
    auto add = [&](const char* claim, SpaceSpec spec, const char* d) {
        VerificationReport r;
        r.claim = claim;
        r.space = std::move(spec);
        r.distances = DistanceSet::parse(d);
        reports.push_back(std::move(r));
    };
    add("regularity", SpaceSpec::zq(3, 2), "2");
    add("connectivity", SpaceSpec::zq(3, 2), "1");
    add("regularity", SpaceSpec::zq(2, 2), "2");
    add("regularity", SpaceSpec::zq(2, 2), "1,2");
    add("regularity", SpaceSpec::zq(2, 2), "1");

    sort_reports(reports);
    CHECK(reports[0].claim == "connectivity");
    CHECK(reports[1].space == SpaceSpec::zq(2, 2));
    CHECK(reports[1].distances.to_string() == "1");
    CHECK(reports[2].distances.to_string() == "1,2");
    CHECK(reports[3].distances.to_string() == "2");
    CHECK(reports[4].space == SpaceSpec::zq(3, 2));
}

TEST_CASE("status names") {
    CHECK(to_string(VerifyStatus::verified) == "verified");
    CHECK(to_string(VerifyStatus::refuted) == "refuted");
    CHECK(to_string(VerifyStatus::inconclusive) == "inconclusive");
}
