#include "oracles.hpp"

#include <radokit/certify.hpp>
#include <radokit/coloring.hpp>

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace radokit;

TEST_CASE("color_of examples and domain checks")
{
    CHECK(Coloring::nu2_modulo(2, 100).color_of(12) == 0);
    CHECK(Coloring::modulo(3, 100).color_of(7) == 1);
    CHECK(Coloring::constant(100).color_of(57) == 0);
    CHECK_THROWS_AS(Coloring::constant(10).color_of(11), Error);
    CHECK_THROWS_AS(Coloring::constant(10).color_of(0), Error);
    CHECK(nu2(96) == 5);
}

TEST_CASE("family colorings agree with their expansion")
{
    for (auto c : {Coloring::constant(300), Coloring::modulo(4, 300), Coloring::nu2_modulo(3, 300),
             parse_coloring_spec("mod:5", 300), parse_coloring_spec("nu2:2", 300)}) {
        auto e = c.expand();
        CHECK(e.is_explicit());
        CHECK(e.num_colors() == c.num_colors());
        for (std::int64_t x = 1; x <= 300; ++x)
            CHECK(e.color_of(x) == c.color_of(x));
    }
    CHECK_THROWS_AS(Coloring::family({FamilyDescriptor::Kind::mod, 3}, 2, 10), Error);
    CHECK_THROWS_AS(parse_coloring_spec("mod:0", 10), Error);
    CHECK_THROWS_AS(parse_coloring_spec("stripes", 10), Error);
}

TEST_CASE("coloring file format")
{
    std::istringstream in("2 4\n0 1 0 1");
    auto c = read_coloring(in);
    CHECK(c.num_colors() == 2);
    CHECK(c.colors() == std::vector<int>{0, 1, 0, 1});

    std::ostringstream out;
    write_coloring(out, c);
    std::istringstream back(out.str());
    CHECK(read_coloring(back) == c);

    for (const char * bad : {"2 3\n0 1 0 1", "2 4\n0 1 2 1", "2 4\n0 1 0", "x 4\n0 1 0 1", "0 1\n0", "2 2\n0 -1"}) {
        CAPTURE(bad);
        std::istringstream s(bad);
        CHECK_THROWS_AS(read_coloring(s), Error);
    }

    auto path = std::filesystem::temp_directory_path() / "radokit_coloring_roundtrip.txt";
    auto m = Coloring::modulo(3, 50).expand();
    store_coloring(m, path);
    CHECK(load_coloring(path) == m);
    CHECK(parse_coloring_spec("file:" + path.string(), 0) == m);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(load_coloring(path), Error);
}

TEST_CASE("verify_avoiding examples")
{
    auto v = verify_avoiding(Coloring::nu2_modulo(2, 1000000), LinearEquation::from_integers({1, -2}), 1000000);
    CHECK(v.avoiding);

    v = verify_avoiding(Coloring::modulo(2, 5), LinearEquation::from_integers({1, 1, -1}), 5);
    REQUIRE_FALSE(v.avoiding);
    CHECK(v.violation->values == std::vector<BigInt>{2, 2, 4});
    CHECK(v.color == 0);

    v = verify_avoiding(Coloring::constant(2), LinearEquation::from_integers({1, 2, -4}), 2);
    REQUIRE_FALSE(v.avoiding);
    CHECK(v.violation->values == std::vector<BigInt>{2, 1, 1});

    CHECK_THROWS_AS(verify_avoiding(Coloring::constant(5), LinearEquation::from_integers({1, 1, -1}), 6), Error);
}

TEST_CASE("verify_avoiding agrees with brute force (n <= 3, N <= 12)")
{
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> len(2, 3), mag(-6, 6), nn(1, 12), rr(1, 3);
    for (int t = 0; t < 600; ++t) {
        oracle::Vec a;
        int n = len(rng);
        while (static_cast<int>(a.size()) < n)
            if (int v = mag(rng))
                a.push_back(v);
        std::int64_t N = nn(rng);
        int r = rr(rng);
        auto colors = oracle::random_colors(rng, r, N);
        auto c = Coloring::explicit_colors(r, colors);
        std::vector<BigInt> big(a.begin(), a.end());
        auto eq = LinearEquation::from_integers(big);
        auto v = verify_avoiding(c, eq, N);
        CAPTURE(eq.render_list());
        CHECK(v.avoiding == ! oracle::has_mono_solution(a, colors, N));
        if (! v.avoiding) {
            CHECK(check_monochromatic_solution(c, eq, *v.violation));
            // Minimal largest coordinate among all monochromatic solutions.
            std::int64_t best = 0;
            for (const auto & s : oracle::solutions(a, N)) {
                bool mono = true;
                for (auto x : s)
                    mono = mono && colors[x - 1] == colors[s[0] - 1];
                if (mono) {
                    auto mx = *std::max_element(s.begin(), s.end());
                    if (best == 0 || mx < best)
                        best = mx;
                }
            }
            BigInt got = *std::max_element(v.violation->values.begin(), v.violation->values.end());
            CHECK(got == best);
        }
    }
}

TEST_CASE("threaded verification matches sequential")
{
    std::mt19937_64 rng(29);
    for (int t = 0; t < 6; ++t) {
        auto c = Coloring::explicit_colors(3, oracle::random_colors(rng, 3, 3000));
        auto eq = LinearEquation::from_integers({3, 5, -7});
        auto a = verify_avoiding(c, eq, 3000, 1);
        auto b = verify_avoiding(c, eq, 3000, 4);
        CHECK(a.avoiding == b.avoiding);
        if (! a.avoiding)
            CHECK(a.violation->values == b.violation->values);
    }
    auto nu = Coloring::nu2_modulo(2, 200000);
    CHECK(verify_avoiding(nu, LinearEquation::from_integers({1, -2}), 200000, 4).avoiding);
}

TEST_CASE("nu2 coloring avoids x1 = 2 x2 for every modulus")
{
    for (int m = 2; m <= 5; ++m)
        CHECK(verify_avoiding(Coloring::nu2_modulo(m, 20000), family_equation(2), 20000).avoiding);
}
