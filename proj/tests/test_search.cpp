#include "doctest.h"
#include "oracles.hpp"
#include "oospc/bounds.hpp"
#include "oospc/search.hpp"

using namespace oospc;

TEST_CASE("candidate enumeration") {
    const auto c22 = enumerate_candidates(2, 2, 2);
    REQUIRE(c22.size() == 1);
    CHECK(c22[0].elements == std::vector<int>{0, 1, 2});
    CHECK(classify(GridGroup(2, 2), c22[0].codeword).str() == "3.1");

    for (const auto& c : enumerate_candidates(3, 3, 2)) CHECK(c.elements.size() > 2);
    int subgroups = 0;
    for (const auto& c : enumerate_candidates(3, 3, 3)) subgroups += c.elements.size() == 2;
    CHECK(subgroups == 4);

    // support bits agree with the difference profile
    const GridGroup g(4, 6);
    const auto cands = enumerate_candidates(4, 6, 3, {{2, 0}});
    std::set<std::vector<int>> seen;
    for (const auto& c : cands) {
        const auto p = difference_profile(g, c.codeword);
        std::vector<int> want;
        for (const auto& e : p.support) want.push_back(g.index(e) - 1);
        std::sort(want.begin(), want.end());
        CHECK(c.elements == want);
        CHECK(c.lambda_x == p.lambda_x);
        CHECK(std::find(want.begin(), want.end(), g.index({2, 0}) - 1) == want.end());
        CHECK(seen.insert(want).second);
        for (int i : c.elements) CHECK((c.support[static_cast<size_t>(i / 64)] >> (i % 64) & 1) == 1);
    }
}

TEST_CASE("desk-scale maxima") {
    CHECK(max_code(2, 2, 2).best_size == 1);
    CHECK(max_code(2, 4, 3).best_size == 1);
    CHECK(max_code(4, 2, 2).best_size == 1);
    CHECK(max_code(2, 6, 2).best_size == 2);
    CHECK(max_code(2, 6, 3).best_size == 3);
    CHECK(max_code(3, 3, 3).best_size == 4);
    CHECK(max_code(2, 10, 2).best_size == 4);
    CHECK(max_code(2, 6, 3).best_size == theta_exact_2mod4(2, 6, 3));
}

TEST_CASE("search agrees with a naive enumeration for mn <= 36") {
    for (int m = 1; m <= 36; ++m)
        for (int n = 1; m * n <= 36; ++n) {
            if (m * n < 3) continue;
            for (int la : {1, 2, 3}) {
                CAPTURE(m);
                CAPTURE(n);
                CAPTURE(la);
                SearchOptions opt;
                opt.cap_by_bound = false;
                const SearchResult r = max_code(m, n, la, opt);
                REQUIRE(r.proven_optimal);
                CHECK(r.best_size == oracle::naive_max(m, n, la));
                CHECK(static_cast<int>(r.witness.size()) == r.best_size);
                CHECK(verify_diff(r.witness));
                CHECK(oracle::census_inequalities_hold(r.witness));
                if (la >= 2) CHECK(r.best_size <= theta_best_upper(m, n, la));
            }
        }
}

TEST_CASE("serial and parallel runs return the same witness") {
    for (auto [m, n, la] : {std::tuple{4, 6, 3}, {6, 6, 2}, {3, 12, 3}, {2, 14, 2}}) {
        SearchOptions serial;
        serial.parallel = false;
        const SearchResult a = max_code(m, n, la, serial);
        const SearchResult b = max_code(m, n, la);
        const SearchResult c = max_code(m, n, la, serial);
        CHECK(a.best_size == b.best_size);
        CHECK(a.witness.codewords == b.witness.codewords);
        CHECK(a.witness.codewords == c.witness.codewords);
    }
}

TEST_CASE("lower bound hint") {
    SearchOptions opt;
    opt.lower_bound_hint = 7;
    CHECK(max_code(6, 6, 2, opt).best_size == 7);
    opt.lower_bound_hint = 8;  // unattainable: the search reruns without it
    const SearchResult r = max_code(6, 6, 2, opt);
    CHECK(r.best_size == 7);
    CHECK(r.proven_optimal);
}

TEST_CASE("regular mode") {
    const SearchResult r55 = search_regular(5, 5, 1, 1, 1);
    CHECK(r55.best_size == 4);
    for (const auto& c : r55.witness.codewords) CHECK(classify(r55.witness.group, c).major == 6);
    CHECK(regularity(r55.witness) == std::pair{1, 1});

    const SearchResult r99 = search_regular(9, 9, 1, 3, 3);
    CHECK(r99.best_size == 12);
    CHECK(regularity(r99.witness) == std::pair{3, 3});

    const SearchResult r33 = search_regular(3, 3, 1, 3, 3);
    CHECK(r33.best_size == 0);
    CHECK(r33.proven_optimal);

    CHECK_THROWS_AS(search_regular(1, 9, 1, 1, 1), NoSuchDesign);
    CHECK_THROWS_AS(search_regular(4, 4, 1, 3, 1), std::invalid_argument);
}

TEST_CASE("timeout reports the best found") {
    SearchOptions opt;
    opt.timeout = std::chrono::milliseconds(0);
    opt.cap_by_bound = false;
    const SearchResult r = max_code(12, 12, 2, opt);
    CHECK_FALSE(r.proven_optimal);
    CHECK(verify_diff(r.witness));
    CHECK_THROWS_AS(search_regular(23, 23, 1, 1, 1, std::chrono::milliseconds(0)), SearchTimeout);
}
