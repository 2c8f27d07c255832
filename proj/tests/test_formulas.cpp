#include <catch2/catch_amalgamated.hpp>

#include "dyckstat/dyck.hpp"
#include "dyckstat/formulas.hpp"

using namespace dyckstat;

TEST_CASE("binomial convention", "[formulas]") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 5) == 1);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(64, 32) == BigCount("1832624140942590534"));
    CHECK_THROWS_AS(binomial(-1, 0), std::domain_error);
}

TEST_CASE("summation form on pinned cells", "[formulas]") {
    CHECK(interval_stat_sum_form(2, 2, 1) == 4);  // d=0 gives 2, d=1 gives 2
    CHECK(interval_stat_sum_form(2, 4, 2) == 2);  // whole-path windows
    CHECK(interval_stat_sum_form(3, 3, 1) == 9);
    CHECK(interval_stat_sum_form(2, 4, 1) == 0);  // empty sum, k+l-m < 0
    CHECK(interval_stat_sum_form(0, 0, 0) == 1);
    CHECK_THROWS_AS(interval_stat_sum_form(2, 2, 2), std::domain_error); // needs 2l <= m
    CHECK_THROWS_AS(interval_stat_sum_form(2, 5, 1), std::domain_error);
}

TEST_CASE("alternative form on pinned cells", "[formulas]") {
    CHECK(interval_stat_alt_form(2, 2, 1) == 4); // 2*3 + 1*(1-3)
    CHECK(interval_stat_alt_form(2, 2, 0) == 1);
    CHECK_THROWS_AS(interval_stat_alt_form(1, 2, 2), std::domain_error);
}

TEST_CASE("the two closed forms agree", "[formulas]") {
    for (long long k = 0; k <= 9; ++k)
        for (long long m = 0; m <= 2 * k; ++m)
            for (long long l = 0; 2 * l <= m; ++l)
                CHECK(interval_stat_sum_form(k, m, l) == interval_stat_alt_form(k, m, l));
}

TEST_CASE("central specialization", "[formulas]") {
    CHECK(interval_stat_central(4, 2) == 36);
    CHECK(interval_stat_central(5, 0) == 1);
    CHECK(interval_stat_central(12, 6) == 924 * 924);
    CHECK_THROWS_AS(interval_stat_central(3, 4), std::domain_error);
}

TEST_CASE("near-central specializations", "[formulas]") {
    CHECK(interval_stat_central_plus1(3, 1) == 3);
    CHECK(interval_stat_central_plus1(3, 0) == 0); // binom(k,-1) vanishes
    CHECK_THROWS_AS(interval_stat_central_plus1(3, 3), std::domain_error);

    CHECK(interval_stat_central_minus1(2, 0) == 4);
    CHECK(interval_stat_central_minus1(3, 1) == 15); // 20 - 3 - 2
    CHECK(interval_stat_central_minus1(1, 0) == 3);
    CHECK_THROWS_AS(interval_stat_central_minus1(0, 0), std::domain_error);
    CHECK_THROWS_AS(interval_stat_central_minus1(4, 2), std::domain_error); // 2l > k-1
}

TEST_CASE("dispatcher canonicalizes by symmetry", "[formulas]") {
    CHECK(interval_stat(2, 2, 2) == 1);
    CHECK(interval_stat(3, 0, 0) == 35); // binom(2k+1, k)
    CHECK(interval_stat(0, 0, 0) == 1);
    CHECK(interval_stat(10, 13, 4) == interval_stat_alt_form(10, 13, 4));
    CHECK_THROWS_AS(interval_stat(2, 2, 3), std::domain_error);
    CHECK_THROWS_AS(interval_stat(2, 5, 1), std::domain_error);
    CHECK_THROWS_AS(interval_stat(2, 2, -1), std::domain_error);
    CHECK_THROWS_AS(interval_stat(-1, 0, 0), std::domain_error);
}

TEST_CASE("formulas agree with the enumeration oracle", "[formulas]") {
    for (int k = 0; k <= 6; ++k)
        for (long long m = 0; m <= 2 * k; ++m)
            for (long long l = 0; l <= m; ++l)
                CHECK(interval_stat(k, m, l) == interval_stat_brute(k, m, l));
}

TEST_CASE("dispatcher invariants", "[formulas]") {
    for (long long k = 0; k <= 10; ++k) {
        const BigCount ck = catalan(k);
        for (long long m = 0; m <= 2 * k; ++m) {
            BigCount row = 0;
            for (long long l = 0; l <= m; ++l) {
                row += interval_stat(k, m, l);
                CHECK(interval_stat(k, m, l) == interval_stat(k, m, m - l));
            }
            CHECK(row == ck * (2 * k - m + 1));
        }
    }
}

TEST_CASE("specializations match the dispatcher on their domains", "[formulas]") {
    for (long long k = 0; k <= 10; ++k) {
        for (long long l = 0; l <= k; ++l)
            CHECK(interval_stat_central(k, l) == interval_stat(k, k, l));
        if (k >= 1) {
            for (long long l = 0; 2 * l <= k + 1; ++l)
                CHECK(interval_stat_central_plus1(k, l) == interval_stat(k, k + 1, l));
            for (long long l = 0; 2 * l <= k - 1; ++l)
                CHECK(interval_stat_central_minus1(k, l) == interval_stat(k, k - 1, l));
        }
    }
}
