#include "oracles.hpp"

#include <radokit/certify.hpp>
#include <radokit/search.hpp>

#include <doctest.h>

using namespace radokit;

namespace {

auto eq_of(const oracle::Vec & a) -> LinearEquation
{
    std::vector<BigInt> big(a.begin(), a.end());
    return LinearEquation::from_integers(big);
}

// Least avoiding coloring in the same order as the searcher, found by listing
// every r-coloring and filtering by first-use normal form.
auto least_normal_witness(const oracle::Vec & a, int r, std::int64_t n) -> std::optional<std::vector<int>>
{
    auto sols = oracle::solutions(a, n);
    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    std::optional<std::vector<int>> best;
    while (true) {
        int next = 0;
        bool normal = true;
        for (auto c : colors) {
            if (c > next)
                normal = false;
            if (c == next)
                ++next;
        }
        if (normal) {
            bool mono = false;
            for (const auto & s : sols) {
                bool same = true;
                for (auto v : s)
                    same = same && colors[v - 1] == colors[s[0] - 1];
                mono = mono || same;
            }
            if (! mono && (! best || colors < *best))
                best = colors;
        }
        // Odometer with the first position most significant for lex comparison.
        std::size_t k = colors.size();
        while (k > 0 && colors[k - 1] == r - 1)
            colors[--k] = 0;
        if (k == 0)
            break;
        ++colors[k - 1];
    }
    return best;
}

}

TEST_CASE("search examples")
{
    auto schur = LinearEquation::from_integers({1, 1, -1});
    auto c = search_avoiding(schur, 2, 4);
    REQUIRE(c.outcome == SearchOutcome::witness);
    CHECK(c.witness->colors() == std::vector<int>{0, 1, 1, 0});
    CHECK(check_certificate(c));
    CHECK(search_avoiding(schur, 2, 5).outcome == SearchOutcome::exhausted);
    CHECK(search_avoiding(LinearEquation::from_integers({1, 2, -4}), 1, 2).outcome == SearchOutcome::exhausted);
    CHECK(search_avoiding(LinearEquation::from_integers({1, 2, -4}), 1, 1).outcome == SearchOutcome::witness);
}

TEST_CASE("search outcome and witness match exhaustive enumeration (n <= 3, r = 2, N <= 12)")
{
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<int> len(2, 3), mag(-5, 5), nn(1, 12);
    for (int t = 0; t < 150; ++t) {
        oracle::Vec a;
        int n = len(rng);
        while (static_cast<int>(a.size()) < n)
            if (int v = mag(rng))
                a.push_back(v);
        std::int64_t N = nn(rng);
        auto cert = search_avoiding(eq_of(a), 2, N);
        auto ref = least_normal_witness(a, 2, N);
        CAPTURE(eq_of(a).render_list());
        CAPTURE(N);
        CHECK((cert.outcome == SearchOutcome::witness) == ref.has_value());
        CHECK((cert.outcome == SearchOutcome::witness) == oracle::avoiding_coloring_exists(a, 2, N));
        if (ref && cert.witness)
            CHECK(cert.witness->colors() == *ref);
        CHECK(check_certificate(cert));
    }
}

TEST_CASE("three colors against exhaustive enumeration")
{
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<int> mag(-4, 4), nn(1, 9);
    for (int t = 0; t < 60; ++t) {
        oracle::Vec a;
        while (a.size() < 3)
            if (int v = mag(rng))
                a.push_back(v);
        std::int64_t N = nn(rng);
        auto cert = search_avoiding(eq_of(a), 3, N);
        CHECK((cert.outcome == SearchOutcome::witness) == oracle::avoiding_coloring_exists(a, 3, N));
    }
}

TEST_CASE("rado numbers")
{
    auto schur = LinearEquation::from_integers({1, 1, -1});
    auto r2 = rado_number(schur, 2, 50);
    REQUIRE(r2.status == RadoResult::Status::found);
    CHECK(r2.value == 5);
    CHECK(r2.value == oracle::rado_number({1, 1, -1}, 2, 16));
    CHECK(search_avoiding(schur, 2, r2.value - 1).outcome == SearchOutcome::witness);
    CHECK(search_avoiding(schur, 2, r2.value).outcome == SearchOutcome::exhausted);

    auto f3 = rado_number(LinearEquation::from_integers({1, 2, -4}), 2, 100);
    REQUIRE(f3.status == RadoResult::Status::found);
    CHECK(f3.value == 4);
    CHECK(f3.value == oracle::rado_number({1, 2, -4}, 2, 16));

    auto half = rado_number(LinearEquation::from_integers({1, -2}), 2, 40);
    CHECK(half.status == RadoResult::Status::unknown);
    CHECK(half.witness_bound == 40);
    REQUIRE(half.witness);
    CHECK(verify_avoiding(*half.witness, LinearEquation::from_integers({1, -2}), 40).avoiding);

    CHECK(rado_number(LinearEquation::from_integers({1, -2}), 1, 10).value == 2);
}

TEST_CASE("rado numbers agree with the oracle on random small equations")
{
    std::mt19937_64 rng(59);
    std::uniform_int_distribution<int> mag(-4, 4);
    for (int t = 0; t < 30; ++t) {
        oracle::Vec a;
        while (a.size() < 3)
            if (int v = mag(rng))
                a.push_back(v);
        auto ref = oracle::rado_number(a, 2, 13);
        auto got = rado_number(eq_of(a), 2, 13);
        CAPTURE(eq_of(a).render_list());
        if (ref) {
            REQUIRE(got.status == RadoResult::Status::found);
            CHECK(got.value == ref);
        }
        else
            CHECK(got.status == RadoResult::Status::unknown);
    }
}

TEST_CASE("symmetry breaking keeps completeness")
{
    // Exhausted with first-use ordering iff no coloring at all avoids.
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<int> mag(-6, 6), nn(1, 10), rr(2, 3);
    for (int t = 0; t < 80; ++t) {
        oracle::Vec a;
        while (a.size() < 3)
            if (int v = mag(rng))
                a.push_back(v);
        int r = rr(rng);
        std::int64_t N = r == 3 ? std::min<std::int64_t>(nn(rng), 8) : nn(rng);
        bool exhausted = search_avoiding(eq_of(a), r, N).outcome == SearchOutcome::exhausted;
        CHECK(exhausted == ! oracle::avoiding_coloring_exists(a, r, N));
    }
}

TEST_CASE("budgets, seeds and threads")
{
    auto schur = LinearEquation::from_integers({1, 1, -1});
    SearchOptions tight;
    tight.budget.max_nodes = 50;
    auto c = search_avoiding(schur, 3, 14, tight);
    CHECK(c.outcome == SearchOutcome::budget_exceeded);
    CHECK(check_certificate(c));

    SearchOptions seeded;
    seeded.seed = std::vector<int>{0, 1, 1, 0};
    auto s = search_avoiding(schur, 3, 13, seeded);
    REQUIRE(s.outcome == SearchOutcome::witness);
    CHECK(check_certificate(s));
    auto plain = search_avoiding(schur, 3, 13);
    CHECK(plain.witness->colors() == s.witness->colors());

    // A seed that cannot be extended still gives the right answer.
    seeded.seed = std::vector<int>{0, 1, 0};
    auto restarted = search_avoiding(schur, 2, 4, seeded);
    CHECK(restarted.outcome == SearchOutcome::witness);
    CHECK(restarted.witness->colors() == std::vector<int>{0, 1, 1, 0});
    // Seeds that are not avoiding or use a color >= r are rejected.
    seeded.seed = std::vector<int>{0, 0};
    CHECK_THROWS_AS(search_avoiding(schur, 2, 4, seeded), Error);
    seeded.seed = std::vector<int>{0, 2};
    CHECK_THROWS_AS(search_avoiding(schur, 2, 4, seeded), Error);

    SearchOptions par;
    par.threads = 4;
    CHECK(search_avoiding(schur, 3, 14, par).outcome == SearchOutcome::exhausted);
    auto w = search_avoiding(schur, 3, 13, par);
    REQUIRE(w.outcome == SearchOutcome::witness);
    CHECK(check_certificate(w));
    auto rr = rado_number(schur, 3, 20, par);
    REQUIRE(rr.status == RadoResult::Status::found);
    CHECK(rr.value == 14);
}

TEST_CASE("degree of regularity reports")
{
    auto half = dor_report(LinearEquation::from_integers({1, -2}), 3, 40);
    CHECK_FALSE(half.regular);
    CHECK(half.certified_lower == 1);
    CHECK(half.evidence_upper == 1);
    CHECK(half.rows.at(0).rado_number == 2);

    auto f3 = dor_report(LinearEquation::from_integers({1, 2, -4}), 3, 60);
    REQUIRE(f3.certified_lower);
    CHECK(*f3.certified_lower >= 2);
    CHECK(f3.rows.at(1).rado_number == 4);
    if (f3.evidence_upper)
        CHECK(*f3.certified_lower <= *f3.evidence_upper);

    auto schur = dor_report(LinearEquation::from_integers({1, 1, -1}), 3, 60);
    CHECK(schur.regular);
    CHECK(schur.zero_subset == std::vector<std::size_t>{1, 3});
    for (const auto & row : schur.rows)
        CHECK(row.status == DorRow::Status::implied_by_criterion);

    SearchOptions tiny;
    tiny.budget.max_nodes = 5;
    auto cut = dor_report(LinearEquation::from_integers({3, 4, -6}), 2, 200, tiny);
    bool any_cut = false;
    for (const auto & row : cut.rows)
        any_cut = any_cut || row.status == DorRow::Status::budget_exceeded;
    CHECK(any_cut);
}

TEST_CASE("distinct mode is flagged")
{
    auto schur = LinearEquation::from_integers({1, 1, -1});
    SearchOptions o;
    o.distinct = true;
    auto c = search_avoiding(schur, 2, 8, o);
    CHECK(c.distinct);
    CHECK(check_certificate(c));
}
