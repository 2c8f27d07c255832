#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "dyckstat/dyck.hpp"
#include "helpers.hpp"

using namespace dyckstat;

TEST_CASE("catalan numbers", "[dyck]") {
    const long long expected[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
    for (int k = 0; k <= 10; ++k) CHECK(catalan(k) == expected[k]);
    CHECK(catalan(20) == BigCount("6564120420"));
    CHECK_THROWS_AS(catalan(-1), std::domain_error);
}

TEST_CASE("path construction validates the invariants", "[dyck]") {
    CHECK(parse_dyck("").semilength() == 0);
    CHECK(parse_dyck("UUDD").semilength() == 2);
    CHECK(parse_dyck("UUDD").to_string() == "UUDD");
    CHECK_THROWS_AS(parse_dyck("U"), std::domain_error);     // odd length
    CHECK_THROWS_AS(parse_dyck("DU"), std::domain_error);    // prefix dips
    CHECK_THROWS_AS(parse_dyck("UDD "), std::domain_error);  // stray character
    CHECK_THROWS_AS(parse_dyck("UUDDDU"), std::domain_error);
    CHECK_THROWS_AS(parse_dyck("UDUU"), std::domain_error);  // unbalanced
}

TEST_CASE("step access", "[dyck]") {
    const DyckPath D = parse_dyck("UUDDUD");
    CHECK(D.is_rise(1));
    CHECK(D.is_rise(5));
    CHECK_FALSE(D.is_rise(4));
    CHECK_THROWS_AS(D.step(0), std::domain_error);
    CHECK_THROWS_AS(D.step(7), std::domain_error);
}

TEST_CASE("enumeration counts, order and validity", "[dyck]") {
    CHECK(enumerate_dyck(0).size() == 1);
    CHECK(enumerate_dyck(0)[0].to_string().empty());

    const auto k2 = enumerate_dyck(2);
    REQUIRE(k2.size() == 2);
    CHECK(k2[0].to_string() == "UUDD");
    CHECK(k2[1].to_string() == "UDUD");

    const auto k3 = enumerate_dyck(3);
    const std::vector<std::string> expect3 = {"UUUDDD", "UUDUDD", "UUDDUD", "UDUUDD", "UDUDUD"};
    REQUIRE(k3.size() == expect3.size());
    for (std::size_t i = 0; i < expect3.size(); ++i) CHECK(k3[i].to_string() == expect3[i]);

    CHECK(enumerate_dyck(4).size() == 14);

    for (int k = 0; k <= 10; ++k) {
        const auto paths = enumerate_dyck(k);
        CHECK(BigCount(paths.size()) == catalan(k));
        // strictly increasing in the canonical order, hence no duplicates
        for (std::size_t i = 1; i < paths.size(); ++i) CHECK(paths[i - 1] < paths[i]);
        // each emitted path survives re-validation through the constructor
        if (k <= 8)
            for (const auto& D : paths) CHECK(parse_dyck(D.to_string()) == D);
    }

    CHECK_THROWS_AS(enumerate_dyck(kMaxEnumerationSemilength + 1), capacity_error);
    CHECK_THROWS_AS(enumerate_dyck(-1), std::domain_error);
}

TEST_CASE("interval fall counts on single paths", "[dyck]") {
    CHECK(interval_count(parse_dyck("UUDD"), 2, 1) == 1); // only steps 2..3
    CHECK(interval_count(parse_dyck("UDUD"), 2, 1) == 3);
    for (const auto& D : enumerate_dyck(2)) CHECK(interval_count(D, 4, 2) == 1);
    const DyckPath D = parse_dyck("UUDDUD");
    CHECK(interval_count(D, 0, 0) == 7); // empty window at every position
    CHECK_THROWS_AS(interval_count(D, 2, 3), std::domain_error);
    CHECK_THROWS_AS(interval_count(D, 7, 0), std::domain_error);
    CHECK_THROWS_AS(interval_count(D, 2, -1), std::domain_error);
}

TEST_CASE("brute-force statistic", "[dyck]") {
    CHECK(interval_stat_brute(2, 2, 1) == 4);
    CHECK(interval_stat_brute(2, 2, 0) == 1);
    CHECK(interval_stat_brute(3, 6, 3) == 5); // whole-path windows, one per path
    CHECK(interval_stat_brute(3, 0, 0) == 35);
    CHECK_THROWS_AS(interval_stat_brute(2, 2, 3), std::domain_error);
    CHECK_THROWS_AS(interval_stat_brute(kMaxEnumerationSemilength + 1, 1, 0), capacity_error);
}

TEST_CASE("brute-force statistic is reflection symmetric", "[dyck]") {
    for (int k = 0; k <= 5; ++k)
        for (long long m = 0; m <= 2 * k; ++m)
            for (long long l = 0; l <= m; ++l)
                CHECK(interval_stat_brute(k, m, l) == interval_stat_brute(k, m, m - l));
}

TEST_CASE("brute-force row sums count all windows", "[dyck]") {
    for (int k = 0; k <= 5; ++k)
        for (long long m = 0; m <= 2 * k; ++m) {
            BigCount sum = 0;
            for (long long l = 0; l <= m; ++l) sum += interval_stat_brute(k, m, l);
            CHECK(sum == catalan(k) * (2 * k - m + 1));
        }
}

TEST_CASE("reflection", "[dyck]") {
    CHECK(reflect(parse_dyck("UD")) == parse_dyck("UD"));
    CHECK(reflect(parse_dyck("UUDD")) == parse_dyck("UUDD"));
    CHECK(reflect(parse_dyck("UUDDUD")) == parse_dyck("UDUUDD"));
    for (int k = 0; k <= 6; ++k)
        for (const auto& D : enumerate_dyck(k)) CHECK(reflect(reflect(D)) == D);
}

TEST_CASE("random large paths keep the per-path invariants", "[dyck]") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 50; ++trial) {
        const DyckPath D = testutil::random_dyck(30, rng); // constructor re-validates
        CHECK(parse_dyck(D.to_string()) == D);
        CHECK(reflect(reflect(D)) == D);
        for (long long m : {0LL, 1LL, 7LL, 30LL, 60LL}) {
            BigCount windows = 0;
            for (long long l = 0; l <= m; ++l) windows += interval_count(D, m, l);
            CHECK(windows == 60 - m + 1);
        }
    }
}
