#include "oracles.hpp"

#include <radokit/certify.hpp>
#include <radokit/structures.hpp>

#include <doctest.h>

#include <map>
#include <tuple>

using namespace radokit;

namespace {

struct RefMember {
    std::vector<std::int64_t> elements;
    std::pair<std::size_t, std::size_t> index;
};

// Family members with largest element <= bound, listed from scratch and sorted.
auto ref_members(const std::vector<std::int64_t> & magnitudes, bool powers, int n, std::int64_t bound)
    -> std::vector<RefMember>
{
    std::vector<RefMember> out;
    if (powers) {
        for (int j = 1; j <= n - 1; ++j)
            for (std::int64_t k = 1; (k << j) <= bound; ++k)
                out.push_back({{k << j, k}, {static_cast<std::size_t>(j), 0}});
    }
    else {
        for (std::size_t i = 0; i < magnitudes.size(); ++i)
            for (std::size_t j = i + 1; j < magnitudes.size(); ++j)
                for (std::int64_t k = 1; std::max(magnitudes[i], magnitudes[j]) * k <= bound; ++k)
                    out.push_back({{magnitudes[i] * k, magnitudes[j] * k}, {i, j}});
    }
    std::stable_sort(out.begin(), out.end(), [](const RefMember & a, const RefMember & b) {
        auto la = *std::max_element(a.elements.begin(), a.elements.end());
        auto lb = *std::max_element(b.elements.begin(), b.elements.end());
        return std::tie(la, a.elements, a.index) < std::tie(lb, b.elements, b.index);
    });
    return out;
}

// First (d, member) whose fan fits in [1, N] and is monochromatic.
auto ref_fan(const std::vector<int> & colors, const std::vector<RefMember> & members, std::int64_t M, std::int64_t q,
    std::int64_t max_step) -> std::optional<std::pair<std::int64_t, std::vector<std::int64_t>>>
{
    const auto N = static_cast<std::int64_t>(colors.size());
    for (std::int64_t d = 1; d <= max_step; ++d) {
        if (q * d > N)
            break;
        for (const auto & m : members) {
            bool ok = true;
            int col = colors[q * d - 1];
            for (auto b : m.elements)
                for (std::int64_t l = -M; l <= M && ok; ++l) {
                    auto v = b + l * d;
                    ok = v >= 1 && v <= N && colors[v - 1] == col;
                }
            if (ok)
                return std::make_pair(d, m.elements);
        }
    }
    return std::nullopt;
}

}

TEST_CASE("pigeonhole examples")
{
    auto w = pigeonhole_powers(Coloring::modulo(2, 100), 3);
    CHECK(w.x == 2);
    CHECK(w.j == 1);
    w = pigeonhole_powers(Coloring::constant(100), 2);
    CHECK(w.x == 1);
    CHECK(w.j == 1);
    w = pigeonhole_powers(Coloring::nu2_modulo(2, 100), 3);
    CHECK(w.x == 1);
    CHECK(w.j == 2);
    CHECK_THROWS_AS(pigeonhole_powers(Coloring::constant(3), 3), Error);
}

TEST_CASE("pigeonhole never fails with at most n-1 colors (all small colorings)")
{
    for (int n = 2; n <= 4; ++n) {
        const std::int64_t N = std::int64_t{1} << (n - 1);
        const int r = n - 1;
        std::vector<int> colors(static_cast<std::size_t>(N), 0);
        // Every r-coloring of [1, 2^(n-1)].
        while (true) {
            auto c = Coloring::explicit_colors(r, colors);
            auto w = pigeonhole_powers(c, n);
            CHECK(check_pigeonhole(c, n, w));
            CHECK((w.x << w.j) <= N);
            std::size_t k = 0;
            while (k < colors.size() && colors[k] == r - 1)
                colors[k++] = 0;
            if (k == colors.size())
                break;
            ++colors[k];
        }
    }
    // n colors on n powers can be rainbow.
    auto rainbow = Coloring::explicit_colors(3, {0, 1, 0, 2});
    CHECK_THROWS_AS(pigeonhole_powers(rainbow, 3), Error);
}

TEST_CASE("progression examples")
{
    auto ap = find_monochromatic_ap(Coloring::constant(5), 5, 5);
    REQUIRE(ap);
    CHECK(ap->center == 3);
    CHECK(ap->step == 1);
    CHECK(ap->half_length == 2);

    ap = find_monochromatic_ap(Coloring::modulo(2, 6), 3, 6);
    REQUIRE(ap);
    CHECK(ap->center == 3);
    CHECK(ap->step == 2);
    CHECK(ap->color == 1);

    CHECK_FALSE(find_monochromatic_ap(Coloring::explicit_colors(2, {0, 1, 0, 1}), 3, 4));
    CHECK_THROWS_AS(find_monochromatic_ap(Coloring::constant(5), 4, 5), Error);
}

TEST_CASE("progression search agrees with exhaustive (a, d) scan for N <= 50")
{
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> nn(1, 50), rr(1, 3), ll(0, 3);
    for (int t = 0; t < 400; ++t) {
        std::int64_t N = nn(rng);
        int r = rr(rng);
        std::int64_t length = 2 * ll(rng) + 1;
        auto colors = oracle::random_colors(rng, r, N);
        auto c = Coloring::explicit_colors(r, colors);
        auto [a, d] = oracle::first_ap(colors, length, N);
        auto ap = find_monochromatic_ap(c, length, N);
        CHECK(ap.has_value() == (a != 0));
        if (ap) {
            CHECK(ap->center == a);
            CHECK(ap->step == d);
            CHECK(check_progression(c, *ap));
        }
    }
}

TEST_CASE("product coloring examples")
{
    auto m = Coloring::modulo(3, 60);
    auto p1 = product_coloring(m, 1);
    // R = 1: same classes as c.
    for (std::int64_t a = 1; a <= 60; ++a)
        for (std::int64_t b = 1; b <= 60; ++b)
            CHECK((p1.coloring.color_of(a) == p1.coloring.color_of(b)) == (m.color_of(a) == m.color_of(b)));

    CHECK(product_coloring(Coloring::constant(100), 4).coloring.num_colors() == 1);

    auto p2 = product_coloring(Coloring::modulo(2, 100), 2);
    CHECK(p2.coloring.num_colors() == 2);
    CHECK(p2.coloring.domain_bound() == 50);
    for (std::int64_t a = 1; a <= 50; ++a)
        CHECK((p2.coloring.color_of(a) == p2.coloring.color_of(1)) == (a % 2 == 1));

    CHECK_THROWS_AS(product_coloring(Coloring::constant(3), 4), Error);
}

TEST_CASE("homogeneous family member order")
{
    auto s1 = HomogeneousFamily::powers_of_two(3);
    auto ms = s1.members_up_to(8);
    auto ref = ref_members({}, true, 3, 8);
    REQUIRE(ms.size() == ref.size());
    for (std::size_t i = 0; i < ms.size(); ++i)
        CHECK(ms[i].elements == ref[i].elements);
    CHECK(s1.contains({12, 3}));
    CHECK_FALSE(s1.contains({24, 3}));

    auto s2 = HomogeneousFamily::coefficient_pairs(LinearEquation::from_integers({2, -3, 2}));
    auto m2 = s2.members_up_to(9);
    auto r2 = ref_members({2, 3, 2}, false, 0, 9);
    REQUIRE(m2.size() == r2.size());
    for (std::size_t i = 0; i < m2.size(); ++i) {
        CHECK(m2[i].elements == r2[i].elements);
        CHECK(m2[i].i_index == r2[i].index.first);
        CHECK(m2[i].j_index == r2[i].index.second);
    }
}

TEST_CASE("fan examples")
{
    // With radius 4 the base must clear 4d, so the first fan for the constant coloring is (10, 5).
    auto s = find_fan(Coloring::constant(100), HomogeneousFamily::powers_of_two(2), 4, 2, {});
    REQUIRE(s.fan);
    CHECK(s.fan->base() == std::vector<std::int64_t>{10, 5});
    CHECK(s.fan->step == 1);

    std::vector<int> sevens(100, 0);
    for (int x = 7; x <= 100; x += 7)
        sevens[x - 1] = 1;
    auto c7 = Coloring::explicit_colors(2, sevens);
    s = find_fan(c7, HomogeneousFamily::powers_of_two(2), 1, 1, {});
    REQUIRE(s.fan);
    auto ref = ref_fan(sevens, ref_members({}, true, 2, 100), 1, 1, 64);
    REQUIRE(ref);
    CHECK(s.fan->step == ref->first);
    CHECK(s.fan->base() == ref->second);
    CHECK(s.fan->base() == std::vector<std::int64_t>{4, 2});
    CHECK(s.fan->step % 7 != 0);
    CHECK(check_fan(c7, HomogeneousFamily::powers_of_two(2), *s.fan));

    auto nu = Coloring::nu2_modulo(2, 4000);
    s = find_fan(nu, HomogeneousFamily::powers_of_two(3), 2, 2, {});
    REQUIRE(s.fan);
    CHECK(check_fan(nu, HomogeneousFamily::powers_of_two(3), *s.fan));
    int parity = nu2(s.fan->base()[0]) % 2;
    for (auto b : s.fan->base())
        for (std::int64_t l = -2; l <= 2; ++l)
            CHECK(nu2(b + l * s.fan->step) % 2 == parity);

    // Exhaustion reports the range searched.
    // Step 1 always mixes parities.
    s = find_fan(Coloring::modulo(2, 30), HomogeneousFamily::powers_of_two(2), 1, 1, {1, 0, 0});
    CHECK_FALSE(s.fan);
    CHECK(s.steps_searched == 1);
    s = find_fan(Coloring::modulo(2, 30), HomogeneousFamily::powers_of_two(2), 1, 1, {2, 0, 0});
    REQUIRE(s.fan);
    CHECK(s.fan->step == 2);
    CHECK(s.fan->base() == std::vector<std::int64_t>{8, 4});
}

TEST_CASE("fan search agrees with a reference scan")
{
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<int> rr(1, 2), mm(0, 2), qq(1, 4), nn(2, 4);
    for (int t = 0; t < 120; ++t) {
        std::int64_t N = 150;
        int r = rr(rng);
        auto colors = oracle::random_colors(rng, r, N);
        // Plant long runs so that fans exist often.
        std::uniform_int_distribution<std::int64_t> start(1, N - 40);
        auto s0 = start(rng);
        for (std::int64_t x = s0; x < s0 + 40; ++x)
            colors[x - 1] = 0;
        auto c = Coloring::explicit_colors(r, colors);
        std::int64_t M = mm(rng), q = qq(rng);
        bool powers = t % 2 == 0;
        int n = nn(rng);
        std::vector<std::int64_t> mags{2, 3, 5};
        auto family = powers ? HomogeneousFamily::powers_of_two(n)
                             : HomogeneousFamily::coefficient_pairs(LinearEquation::from_integers({2, -3, 5}));
        auto got = find_fan(c, family, M, q, {20, 0, 0});
        auto ref = ref_fan(colors, ref_members(mags, powers, n, N), M, q, 20);
        CHECK(got.fan.has_value() == ref.has_value());
        if (got.fan && ref) {
            CHECK(got.fan->step == ref->first);
            CHECK(got.fan->base() == ref->second);
            CHECK(check_fan(c, family, *got.fan));
        }
    }
}

TEST_CASE("fan-chain pipeline")
{
    auto constant = Coloring::constant(400);
    auto family = HomogeneousFamily::powers_of_two(2);
    auto res = lemma22_demonstrate(constant, family, 1, 4, {});
    REQUIRE(res.trace);
    CHECK(check_lemma22(constant, family, *res.trace));
    CHECK(res.trace->rescaled_step == res.trace->progression.step * res.trace->lcm);

    auto m2 = Coloring::modulo(2, 5000);
    res = lemma22_demonstrate(m2, family, 1, 4, {});
    if (res.trace) {
        CHECK(check_lemma22(m2, family, *res.trace));
        const auto & t = *res.trace;
        for (std::size_t i = 0; i < t.multipliers.size(); ++i) {
            CHECK(t.base[i] == t.progression.center * t.multipliers[i]);
            // b_i (a + l d y / b_i) = a b_i + l d'.
            for (std::int64_t l = -t.radius; l <= t.radius; ++l) {
                std::int64_t inner = t.progression.center + l * t.progression.step * t.lcm / t.multipliers[i];
                CHECK(t.multipliers[i] * inner == t.base[i] + l * t.rescaled_step);
                CHECK(l * t.lcm / t.multipliers[i] <= t.progression.half_length);
            }
        }
    }
    else
        CHECK_FALSE(res.exhausted_stage.empty());

    // Too little room for a progression long enough to carry the rescaling.
    res = lemma22_demonstrate(Coloring::modulo(2, 40), family, 3, 4, {1, 100});
    CHECK_FALSE(res.trace);
}
