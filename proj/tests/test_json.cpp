#include <radokit/json_io.hpp>

#include <doctest.h>

using namespace radokit;

TEST_CASE("canonical equation JSON round trip")
{
    for (const char * text : {"1,2,-4", "1/2, 1/3, -1", "-7,6,4", "123456789012345678901234567890, -1"}) {
        auto eq = parse_equation(text);
        auto j = canonical_json(eq);
        CHECK(equation_from_json(j).coeffs() == eq.coeffs());
        CHECK(equation_from_json(Json::parse(to_json(eq).dump())).coeffs() == eq.coeffs());
    }
    CHECK(canonical_json(parse_equation("1,2,-4")).dump() == R"(["1","2","-4"])");
    CHECK_THROWS_AS(equation_from_json(Json::parse("[1, 2]")), Error);
    CHECK_THROWS_AS(equation_from_json(Json::parse(R"(["1", "x"])")), Error);
}

TEST_CASE("power-of-two family trace replays from JSON alone")
{
    auto c = Coloring::modulo(2, 200000);
    auto o = prove_theorem1(c, 3, {});
    REQUIRE(o.proof);
    auto j = Json::parse(to_json(o).dump());
    REQUIRE(j["status"] == "found");
    const auto & p = j["proof"];
    for (const char * key : {"pigeonhole", "fan", "lambdas", "tuple", "color"})
        CHECK(p.contains(key));

    std::vector<BigInt> x;
    for (const auto & v : p["tuple"])
        x.emplace_back(v.get<std::string>());
    CHECK(family_equation(3).is_solution(x));
    int color = p["color"];
    for (const auto & v : x)
        CHECK(c.color_of(static_cast<std::int64_t>(v)) == color);

    auto fan = p["fan"];
    std::int64_t d = fan["step"], M = fan["radius"], q = fan["multiplier"];
    CHECK(fan["multiplier_times_step"] == q * d);
    for (auto b : fan["base"].get<std::vector<std::int64_t>>())
        for (std::int64_t l = -M; l <= M; ++l)
            CHECK(c.color_of(b + l * d) == color);
}

TEST_CASE("certificate and report JSON fields")
{
    auto cert = search_avoiding(LinearEquation::from_integers({1, 1, -1}), 2, 4);
    auto j = to_json(cert);
    CHECK(j["outcome"] == "witness");
    CHECK(j["witness"] == Json::array({0, 1, 1, 0}));
    CHECK(j["stats"].contains("nodes"));
    CHECK(j["distinct"] == false);

    auto r = to_json(rado_number(LinearEquation::from_integers({1, 1, -1}), 2, 20));
    CHECK(r["status"] == "found");
    CHECK(r["value"] == 5);
    CHECK(r["witness"].size() == 4);

    auto rep = to_json(dor_report(LinearEquation::from_integers({1, -2}), 2, 20));
    CHECK(rep["certified_lower"] == 1);
    CHECK(rep["evidence_upper"] == 1);
    CHECK(rep["rows"].size() == 2);

    auto lt = lemma22_demonstrate(Coloring::constant(400), HomogeneousFamily::powers_of_two(2), 1, 4, {});
    REQUIRE(lt.trace);
    auto lj = to_json(lt);
    for (const char * key : {"R", "product_signatures", "progression", "multipliers", "base", "lcm", "rescaled_step"})
        CHECK(lj["trace"].contains(key));
}
