#include <radokit/json_io.hpp>

namespace radokit {

auto big_json(const BigInt & v) -> Json { return v.str(); }

auto rational_string(const Rational & v) -> std::string
{
    if (boost::multiprecision::denominator(v) == 1)
        return boost::multiprecision::numerator(v).str();
    return boost::multiprecision::numerator(v).str() + "/" + boost::multiprecision::denominator(v).str();
}

namespace {
    auto big_array(const std::vector<BigInt> & v) -> Json
    {
        Json a = Json::array();
        for (const auto & x : v)
            a.push_back(big_json(x));
        return a;
    }
}

auto canonical_json(const LinearEquation & eq) -> Json { return big_array(eq.coeffs()); }

auto to_json(const LinearEquation & eq) -> Json
{
    return Json{{"coeffs", canonical_json(eq)}, {"n", eq.size()}, {"scale", rational_string(eq.scale())},
        {"text", eq.render()}};
}

auto equation_from_json(const Json & j) -> LinearEquation
{
    const Json & arr = j.is_object() ? j.at("coeffs") : j;
    if (! arr.is_array())
        fail(ErrorKind::parse, "equation JSON must be an array of decimal strings");
    std::vector<BigInt> c;
    for (const auto & e : arr) {
        if (! e.is_string())
            fail(ErrorKind::parse, "coefficients must be decimal strings");
        auto s = e.get<std::string>();
        try {
            c.emplace_back(s);
        }
        catch (const std::exception &) {
            fail(ErrorKind::parse, "bad coefficient \"" + s + "\"");
        }
    }
    return LinearEquation::from_integers(c);
}

auto to_json(const RegularityResult & r) -> Json
{
    return Json{{"regular", r.regular}, {"subset", r.subset}};
}

auto to_json(const SolutionTuple & t) -> Json
{
    Json j{{"values", big_array(t.values)}};
    if (! t.lambdas.empty())
        j["lambdas"] = big_array(t.lambdas);
    return j;
}

auto to_json(const Coloring & c, bool embed_colors) -> Json
{
    Json j{{"num_colors", c.num_colors()}, {"domain_bound", c.domain_bound()}};
    if (auto f = c.family_descriptor())
        j["family"] = f->describe();
    else
        j["family"] = nullptr;
    if (embed_colors && (c.is_explicit() || c.domain_bound() <= 4096))
        j["colors"] = c.colors();
    return j;
}

auto to_json(const AvoidanceVerdict & v) -> Json
{
    Json j{{"verdict", v.avoiding ? "avoiding" : "violated"}};
    if (v.violation) {
        j["solution"] = big_array(v.violation->values);
        j["color"] = v.color;
    }
    return j;
}

auto to_json(const PigeonholeWitness & w) -> Json
{
    return Json{{"x", w.x}, {"j", w.j}, {"partner", w.x << w.j}, {"color", w.color}};
}

auto to_json(const APWitness & ap) -> Json
{
    return Json{{"center", ap.center}, {"step", ap.step}, {"half_length", ap.half_length}, {"color", ap.color}};
}

auto to_json(const HomogeneousFamily & f) -> Json
{
    Json j{{"description", f.describe()}};
    if (f.kind() == HomogeneousFamily::Kind::powers_of_two) {
        j["kind"] = "powers-of-two";
        j["n"] = f.n();
    }
    else {
        j["kind"] = "coefficient-pairs";
        j["magnitudes"] = f.magnitudes();
    }
    return j;
}

auto to_json(const HomogeneousFamily::Member & m) -> Json
{
    Json j{{"elements", m.elements}, {"scale", m.scale}};
    if (m.j)
        j["j"] = m.j;
    else
        j["pair"] = {m.i_index + 1, m.j_index + 1};
    return j;
}

auto to_json(const MonochromaticFan & fan) -> Json
{
    return Json{{"base", fan.base()}, {"member", to_json(fan.member)}, {"step", fan.step}, {"radius", fan.radius},
        {"multiplier", fan.multiplier}, {"multiplier_times_step", fan.multiplier * fan.step}, {"color", fan.color}};
}

auto to_json(const FanSearch & s) -> Json
{
    Json j{{"status", s.fan ? "found" : "budget-exhausted"}, {"steps_searched", s.steps_searched},
        {"base_bound", s.base_bound}, {"checks", s.checks}};
    j["fan"] = s.fan ? to_json(*s.fan) : Json(nullptr);
    return j;
}

auto to_json(const Lemma22Trace & t) -> Json
{
    Json sig = Json::array();
    for (std::size_t k = 0; k < t.signatures.size(); ++k)
        sig.push_back(Json{{"product_color", k}, {"signature", t.signatures[k]}});
    return Json{{"R", t.multiplier_bound}, {"product_signatures", sig}, {"progression", to_json(t.progression)},
        {"multipliers", t.multipliers}, {"base", t.base}, {"member", to_json(t.member)}, {"lcm", t.lcm},
        {"rescaled_step", t.rescaled_step}, {"radius", t.radius}, {"color", t.color}};
}

auto to_json(const Lemma22Result & r) -> Json
{
    if (r.trace)
        return Json{{"status", "found"}, {"trace", to_json(*r.trace)}};
    return Json{{"status", "budget-exhausted"}, {"stage", r.exhausted_stage}};
}

auto to_json(const ExtensionSolution & s) -> Json
{
    return Json{{"tuple", to_json(s.tuple)}, {"sign_adjusted", s.sign_adjusted}};
}

auto to_json(const HyperplaneSolution & s) -> Json
{
    Json j{{"tuple", to_json(s.tuple)}, {"flips", s.flips}, {"P", big_json(s.product)}};
    j["flipped_index"] = s.flipped_index ? Json(*s.flipped_index + 1) : Json(nullptr);
    return j;
}

auto to_json(const Theorem1Proof & p) -> Json
{
    return Json{{"n", p.n}, {"pigeonhole", to_json(p.pigeonhole)}, {"fan", to_json(p.fan)},
        {"lambdas", big_array(p.tuple.lambdas)}, {"tuple", big_array(p.tuple.values)}, {"color", p.color}};
}

auto to_json(const Theorem1Outcome & o) -> Json
{
    if (o.proof)
        return Json{{"status", "found"}, {"proof", to_json(*o.proof)}};
    return Json{{"status", "budget-exhausted"}, {"search", to_json(o.search)}};
}

auto to_json(const AtProof & p) -> Json
{
    return Json{{"n", p.n}, {"equation", to_json(at_equation(p.n))}, {"pigeonhole", to_json(p.pigeonhole)},
        {"tuple", big_array(p.tuple.values)}, {"color", p.color}};
}

auto to_json(const HyperplaneOutcome & o) -> Json
{
    if (o.proof)
        return Json{{"status", "found"}, {"fan", to_json(o.proof->fan)}, {"solution", to_json(o.proof->solution)},
            {"color", o.proof->color}};
    return Json{{"status", "budget-exhausted"}, {"search", to_json(o.search)}};
}

auto to_json(const SearchCertificate & c) -> Json
{
    Json j{{"equation", canonical_json(c.equation)}, {"r", c.num_colors}, {"N", c.bound}, {"outcome", to_string(c.outcome)},
        {"distinct", c.distinct}, {"seeded", c.seeded}, {"stats", Json{{"nodes", c.nodes}}}};
    j["witness"] = c.witness ? Json(c.witness->colors()) : Json(nullptr);
    return j;
}

auto to_json(const RadoResult & r) -> Json
{
    Json j{{"status", to_string(r.status)}};
    j["value"] = r.status == RadoResult::Status::found ? Json(r.value) : Json(nullptr);
    j["witness_bound"] = r.witness_bound;
    j["witness"] = r.witness ? Json(r.witness->colors()) : Json(nullptr);
    j["stats"] = Json{{"nodes", r.nodes}};
    return j;
}

auto to_json(const DorReport & r) -> Json
{
    Json rows = Json::array();
    for (const auto & row : r.rows) {
        Json jr{{"r", row.num_colors}, {"status", to_string(row.status)}};
        jr["rado_number"] = row.rado_number ? Json(*row.rado_number) : Json(nullptr);
        jr["witness_bound"] = row.witness_bound;
        jr["nodes"] = row.nodes;
        rows.push_back(jr);
    }
    Json j{{"equation", canonical_json(r.equation)}, {"is_regular", r.regular}, {"zero_subset", r.zero_subset}};
    j["certified_lower"] = r.certified_lower ? Json(*r.certified_lower) : Json(nullptr);
    j["evidence_upper"] = r.evidence_upper ? Json(*r.evidence_upper) : Json(nullptr);
    j["evidence_bound"] = r.evidence_bound;
    j["rows"] = rows;
    return j;
}

}
