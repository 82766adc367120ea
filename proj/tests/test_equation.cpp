#include "oracles.hpp"

#include <radokit/equation.hpp>

#include <doctest.h>

#include <random>

using namespace radokit;

namespace {

auto ints(const LinearEquation & eq) -> std::vector<std::int64_t> { return eq.coeffs_int64(); }

auto as_vecs(const std::vector<SolutionTuple> & ts) -> std::vector<oracle::Vec>
{
    std::vector<oracle::Vec> out;
    for (const auto & t : ts) {
        oracle::Vec v;
        for (const auto & x : t.values)
            v.push_back(static_cast<std::int64_t>(x));
        out.push_back(v);
    }
    return out;
}

}

TEST_CASE("parse coefficient lists and expressions")
{
    auto e = parse_equation("x1 + 2x2 - 4x3 = 0");
    CHECK(ints(e) == std::vector<std::int64_t>{1, 2, -4});
    CHECK(e.scale() == 1);

    auto h = parse_equation("1/2, 1/3, -1");
    CHECK(ints(h) == std::vector<std::int64_t>{3, 2, -6});
    CHECK(h.scale() == 6);

    CHECK(ints(parse_equation("1,2,-4")) == std::vector<std::int64_t>{1, 2, -4});
    CHECK(ints(parse_equation(" 2 , 4 , -6 ")) == std::vector<std::int64_t>{1, 2, -3});
    CHECK(ints(parse_equation("-3/2*x2 + x1 = 0")) == std::vector<std::int64_t>{2, -3});
    CHECK(ints(parse_equation("-x1 + x2 = 0")) == std::vector<std::int64_t>{-1, 1});

    // Sign is never flipped.
    CHECK(ints(parse_equation("-2,-4,6")) == std::vector<std::int64_t>{-1, -2, 3});
}

TEST_CASE("parse errors")
{
    for (const char * bad : {"0,1,-1", "5", "", "1,,2", "x1 + x2 = 3", "x1 + x1 = 0", "1,a,2", "x1 + 0*x2 = 0", "1/0,2"}) {
        CAPTURE(bad);
        try {
            parse_equation(bad);
            FAIL("expected a parse error");
        }
        catch (const Error & e) {
            CHECK(e.kind() == ErrorKind::parse);
        }
    }
}

TEST_CASE("render and parse round trip")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> len(2, 7), mag(-40, 40);
    for (int t = 0; t < 300; ++t) {
        std::vector<BigInt> c;
        int n = len(rng);
        while (static_cast<int>(c.size()) < n)
            if (int v = mag(rng))
                c.emplace_back(v);
        auto eq = LinearEquation::from_integers(c);
        // Identity on the canonical coefficients; the recorded scale describes the original input.
        CHECK(parse_equation(eq.render()).coeffs() == eq.coeffs());
        CHECK(parse_equation(eq.render_list()).coeffs() == eq.coeffs());
        CHECK(parse_equation(eq.render()).scale() == 1);
    }
}

TEST_CASE("is_regular examples")
{
    auto r = is_regular(LinearEquation::from_integers({1, 1, -1}));
    CHECK(r.regular);
    CHECK(r.subset == std::vector<std::size_t>{1, 3});
    CHECK_FALSE(is_regular(LinearEquation::from_integers({1, 2, -4})).regular);
    r = is_regular(LinearEquation::from_integers({2, 3, -5}));
    CHECK(r.regular);
    CHECK(r.subset == std::vector<std::size_t>{1, 2, 3});
}

TEST_CASE("is_regular agrees with all-subsets oracle for n <= 12")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> len(2, 12), mag(-20, 20);
    for (int t = 0; t < 2000; ++t) {
        oracle::Vec a;
        int n = len(rng);
        while (static_cast<int>(a.size()) < n)
            if (int v = mag(rng))
                a.push_back(v);
        std::vector<BigInt> big(a.begin(), a.end());
        auto eq = LinearEquation::from_integers(big);
        // The canonical form divides by the gcd, which does not change which subsets vanish.
        auto expect = oracle::zero_subset(a);
        auto got = is_regular(eq);
        CAPTURE(eq.render_list());
        CHECK(got.regular == ! expect.empty());
        CHECK(got.subset == expect);
    }
}

TEST_CASE("family equations")
{
    CHECK(ints(family_equation(2)) == std::vector<std::int64_t>{1, -2});
    CHECK(ints(family_equation(3)) == std::vector<std::int64_t>{1, 2, -4});
    CHECK(ints(family_equation(4)) == std::vector<std::int64_t>{1, 2, 4, -8});
    CHECK(family_equation(62)[61] == -(BigInt(1) << 61));
    CHECK_THROWS_AS(family_equation(1), Error);
    CHECK_THROWS_AS(family_equation(63), Error);
}

TEST_CASE("at_equation matches the rational formula")
{
    CHECK(ints(at_equation(2)) == std::vector<std::int64_t>{-1, 2});
    CHECK(ints(at_equation(3)) == std::vector<std::int64_t>{-7, 6, 4});
    CHECK(at_equation(3).scale() == 3);
    for (int n = 2; n <= 30; ++n) {
        auto rat = oracle::at_rational(n);
        auto eq = at_equation(n);
        // Canonical coefficients are a positive multiple of the rational ones.
        Rational ratio = Rational(eq[0]) / rat[0];
        CHECK(ratio > 0);
        for (std::size_t i = 0; i < rat.size(); ++i)
            CHECK(Rational(eq[i]) == ratio * rat[i]);
    }
    CHECK_THROWS_AS(at_equation(31), Error);
}

TEST_CASE("enumeration examples")
{
    auto eq = LinearEquation::from_integers({1, 2, -4});
    auto sols = as_vecs(enumerate_solutions(eq, {4, std::nullopt, false}));
    // (2, 3, 2) and (4, 4, 3) are solutions in the box too.
    CHECK(sols == std::vector<oracle::Vec>{{2, 1, 1}, {2, 3, 2}, {4, 2, 2}, {4, 4, 3}});
    CHECK(sols == oracle::solutions({1, 2, -4}, 4));

    auto schur = as_vecs(enumerate_solutions(LinearEquation::from_integers({1, 1, -1}), {4, std::nullopt, false}));
    CHECK(schur.size() == 6);
    CHECK(enumerate_solutions(LinearEquation::from_integers({1, 1, 1}), {50, std::nullopt, false}).empty());

    auto distinct = as_vecs(enumerate_solutions(LinearEquation::from_integers({1, 1, -1}), {4, std::nullopt, true}));
    CHECK(distinct == std::vector<oracle::Vec>{{1, 2, 3}, {1, 3, 4}, {2, 1, 3}, {3, 1, 4}});
}

TEST_CASE("enumeration agrees with brute force for n <= 4, max_value <= 12")
{
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> len(2, 4), mag(-9, 9), hi(1, 12);
    for (int t = 0; t < 300; ++t) {
        oracle::Vec a;
        int n = len(rng);
        while (static_cast<int>(a.size()) < n)
            if (int v = mag(rng))
                a.push_back(v);
        std::int64_t u = hi(rng);
        std::vector<BigInt> big(a.begin(), a.end());
        auto eq = LinearEquation::from_integers(big);
        CAPTURE(eq.render_list());
        CAPTURE(u);
        // Same order too: both are lexicographic.
        CHECK(as_vecs(enumerate_solutions(eq, {u, std::nullopt, false})) == oracle::solutions(a, u));
    }
}

TEST_CASE("union over max_element equals the full box")
{
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> len(2, 4), mag(-7, 7), hi(1, 14);
    for (int t = 0; t < 200; ++t) {
        std::vector<BigInt> c;
        int n = len(rng);
        while (static_cast<int>(c.size()) < n)
            if (int v = mag(rng))
                c.emplace_back(v);
        auto eq = LinearEquation::from_integers(c);
        std::int64_t u = hi(rng);
        std::set<oracle::Vec> joined;
        std::size_t count = 0;
        for (std::int64_t m = 1; m <= u; ++m)
            for (const auto & s : as_vecs(enumerate_solutions(eq, {u, m, false}))) {
                CHECK(*std::max_element(s.begin(), s.end()) == m);
                joined.insert(s);
                ++count;
            }
        auto full = as_vecs(enumerate_solutions(eq, {u, std::nullopt, false}));
        CHECK(count == full.size());
        CHECK(joined == std::set<oracle::Vec>(full.begin(), full.end()));
    }
}

TEST_CASE("enumeration overflow is an error")
{
    auto eq = LinearEquation::from_integers({1, -(1LL << 61)});
    CHECK_THROWS_AS(SolutionEnumerator(eq, {1LL << 40, std::nullopt, false}), Error);
}
