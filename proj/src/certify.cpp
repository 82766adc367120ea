#include <radokit/certify.hpp>

#include <algorithm>
#include <numeric>

namespace radokit {

namespace {
    auto in_domain(const Coloring & c, const BigInt & v) -> bool { return v >= 1 && v <= c.domain_bound(); }

    auto str(std::int64_t v) -> std::string { return std::to_string(v); }
}

auto check_pigeonhole(const Coloring & c, int n, const PigeonholeWitness & w) -> Verdict
{
    if (w.j < 1 || w.j > n - 1)
        return Verdict::failure("j = " + str(w.j) + " outside [1, n-1]");
    if (w.x < 1 || w.x > (std::int64_t{1} << (n - 1)) >> w.j)
        return Verdict::failure("x * 2^j exceeds 2^(n-1)");
    const std::int64_t y = w.x << w.j;
    if (y > c.domain_bound())
        return Verdict::failure("2^j x outside the coloring domain");
    if (c.color_of(w.x) != c.color_of(y))
        return Verdict::failure("c(x) != c(2^j x)");
    if (c.color_of(w.x) != w.color)
        return Verdict::failure("reported color is wrong");
    return Verdict::pass();
}

auto check_progression(const Coloring & c, const APWitness & ap) -> Verdict
{
    if (ap.step < 1 || ap.half_length < 0)
        return Verdict::failure("bad step or half-length");
    if (ap.center - ap.half_length * ap.step < 1 || ap.center + ap.half_length * ap.step > c.domain_bound())
        return Verdict::failure("progression leaves the domain");
    for (std::int64_t l = -ap.half_length; l <= ap.half_length; ++l)
        if (c.color_of(ap.center + l * ap.step) != ap.color)
            return Verdict::failure("term " + str(ap.center + l * ap.step) + " has the wrong color");
    return Verdict::pass();
}

auto check_product_coloring(const Coloring & c, const ProductColoring & p) -> Verdict
{
    const std::int64_t r = p.multiplier_bound;
    const std::int64_t domain = p.coloring.domain_bound();
    if (domain * r > c.domain_bound())
        return Verdict::failure("product domain times R exceeds the base domain");
    for (std::int64_t a = 1; a <= domain; ++a) {
        const auto & sig = p.signatures.at(static_cast<std::size_t>(p.coloring.color_of(a)));
        for (std::int64_t i = 1; i <= r; ++i)
            if (sig[static_cast<std::size_t>(i - 1)] != c.color_of(a * i))
                return Verdict::failure("signature of " + str(a) + " does not match at i = " + str(i));
    }
    for (std::size_t k = 0; k < p.signatures.size(); ++k)
        for (std::size_t l = k + 1; l < p.signatures.size(); ++l)
            if (p.signatures[k] == p.signatures[l])
                return Verdict::failure("two product colors share a signature");
    return Verdict::pass();
}

auto check_fan(const Coloring & c, const HomogeneousFamily & family, const MonochromaticFan & fan) -> Verdict
{
    if (! family.contains(fan.base()))
        return Verdict::failure("base is not a member of the family");
    if (fan.step < 1 || fan.radius < 0 || fan.multiplier < 1)
        return Verdict::failure("bad fan parameters");
    const std::int64_t top = fan.multiplier * fan.step;
    if (top > c.domain_bound())
        return Verdict::failure("q d outside the domain");
    const int color = c.color_of(top);
    if (color != fan.color)
        return Verdict::failure("q d has the wrong color");
    for (auto b : fan.base())
        for (std::int64_t l = -fan.radius; l <= fan.radius; ++l) {
            const std::int64_t v = b + l * fan.step;
            if (v < 1 || v > c.domain_bound())
                return Verdict::failure("fan element " + str(v) + " outside the domain");
            if (c.color_of(v) != color)
                return Verdict::failure("fan element " + str(v) + " has the wrong color");
        }
    return Verdict::pass();
}

auto check_lemma22(const Coloring & c, const HomogeneousFamily & family, const Lemma22Trace & t) -> Verdict
{
    const std::int64_t r = t.multiplier_bound;
    const auto & ap = t.progression;
    if (ap.center - ap.half_length * ap.step < 1 || (ap.center + ap.half_length * ap.step) * r > c.domain_bound())
        return Verdict::failure("progression times R leaves the domain");
    // Every term of the progression must share the signature of its center.
    for (std::int64_t l = -ap.half_length; l <= ap.half_length; ++l)
        for (std::int64_t i = 1; i <= r; ++i)
            if (c.color_of((ap.center + l * ap.step) * i) != c.color_of(ap.center * i))
                return Verdict::failure("progression is not monochromatic in the product coloring");

    if (t.multipliers.empty() || ! family.contains(t.multipliers))
        return Verdict::failure("multipliers are not a family member");
    std::int64_t y = 1;
    for (auto b : t.multipliers) {
        if (b < 1 || b > r)
            return Verdict::failure("multiplier outside [1, R]");
        y = std::lcm(y, b);
    }
    if (y != t.lcm)
        return Verdict::failure("reported lcm is wrong");
    if (t.rescaled_step != ap.step * y)
        return Verdict::failure("d' != d * y");
    if (t.base.size() != t.multipliers.size())
        return Verdict::failure("base size mismatch");
    for (std::size_t i = 0; i < t.base.size(); ++i) {
        const std::int64_t b = t.multipliers[i];
        if (t.base[i] != ap.center * b)
            return Verdict::failure("base element is not a * b_i");
        if (t.radius * (y / b) > ap.half_length)
            return Verdict::failure("lambda y / b_i exceeds K");
        for (std::int64_t l = -t.radius; l <= t.radius; ++l) {
            // a b_i + l d' = b_i (a + l d (y / b_i))
            const std::int64_t inner = ap.center + l * ap.step * (y / b);
            if (t.base[i] + l * t.rescaled_step != b * inner)
                return Verdict::failure("rescaling identity fails");
            if (c.color_of(t.base[i] + l * t.rescaled_step) != t.color)
                return Verdict::failure("fan element has the wrong color");
        }
    }
    return Verdict::pass();
}

auto check_monochromatic_solution(const Coloring & c, const LinearEquation & eq, const SolutionTuple & t) -> Verdict
{
    if (t.values.size() != eq.size())
        return Verdict::failure("tuple length does not match the equation");
    BigInt residual = 0;
    for (std::size_t i = 0; i < t.values.size(); ++i)
        residual += eq[i] * t.values[i];
    if (residual != 0)
        return Verdict::failure("residual is " + residual.str());
    std::optional<int> color;
    for (const auto & v : t.values) {
        if (! in_domain(c, v))
            return Verdict::failure("value " + v.str() + " outside the coloring domain");
        int cv = c(static_cast<std::int64_t>(v));
        if (color && *color != cv)
            return Verdict::failure("tuple is not monochromatic");
        color = cv;
    }
    return Verdict::pass();
}

auto check_avoiding_bruteforce(const Coloring & c, const LinearEquation & eq, std::int64_t up_to) -> Verdict
{
    const auto a = eq.coeffs_int64();
    const std::size_t n = a.size();
    std::vector<std::int64_t> x(n, 1);
    while (true) {
        std::int64_t sum = 0;
        for (std::size_t i = 0; i < n; ++i)
            sum += a[i] * x[i];
        if (sum == 0) {
            bool mono = std::all_of(x.begin(), x.end(), [&](std::int64_t v) { return c(v) == c(x[0]); });
            if (mono) {
                std::string s;
                for (auto v : x)
                    s += (s.empty() ? "" : ",") + str(v);
                return Verdict::failure("monochromatic solution (" + s + ")");
            }
        }
        std::size_t k = n;
        while (k-- > 0) {
            if (x[k] < up_to) {
                ++x[k];
                break;
            }
            x[k] = 1;
        }
        if (k == static_cast<std::size_t>(-1))
            return Verdict::pass();
    }
}

auto check_theorem1_proof(const Coloring & c, const Theorem1Proof & p) -> Verdict
{
    if (auto v = check_pigeonhole(c, p.n, p.pigeonhole); ! v)
        return v;
    if (auto v = check_fan(c, HomogeneousFamily::powers_of_two(p.n), p.fan); ! v)
        return v;
    if (p.fan.radius != (std::int64_t{1} << p.n) || p.fan.multiplier != (std::int64_t{1} << (p.n - 1)))
        return Verdict::failure("fan radius or multiplier differs from 2^n, 2^(n-1)");
    if (auto v = check_monochromatic_solution(c, family_equation(p.n), p.tuple); ! v)
        return v;
    if (c(static_cast<std::int64_t>(p.tuple.values[0])) != p.color)
        return Verdict::failure("reported color is wrong");
    return Verdict::pass();
}

auto check_hyperplane_solution(const LinearEquation & eq, const HyperplaneSolution & s) -> Verdict
{
    if (s.flips.size() != eq.size() || s.tuple.values.size() != eq.size())
        return Verdict::failure("size mismatch");
    if (std::count(s.flips.begin(), s.flips.end(), -1) > 1)
        return Verdict::failure("more than one sign flipped");
    BigInt p = 1;
    for (const auto & a : eq.coeffs())
        p *= a < 0 ? BigInt(-a) : a;
    if (p != s.product)
        return Verdict::failure("P != |a1 ... an|");
    BigInt residual = 0;
    for (std::size_t i = 0; i < eq.size(); ++i) {
        if (s.flips[i] != 1 && s.flips[i] != -1)
            return Verdict::failure("flip is not +-1");
        if (s.tuple.values[i] < 1)
            return Verdict::failure("nonpositive coordinate");
        residual += s.flips[i] * eq[i] * s.tuple.values[i];
    }
    if (residual != 0)
        return Verdict::failure("flipped residual is " + residual.str());
    return Verdict::pass();
}

auto check_certificate(const SearchCertificate & cert) -> Verdict
{
    if (cert.outcome != SearchOutcome::witness)
        return cert.witness ? Verdict::failure("non-witness certificate carries a coloring") : Verdict::pass();
    if (! cert.witness)
        return Verdict::failure("witness certificate without a coloring");
    const auto & w = *cert.witness;
    if (w.domain_bound() != cert.bound || w.num_colors() > cert.num_colors)
        return Verdict::failure("witness has the wrong shape");
    auto verdict = verify_avoiding(w, cert.equation, cert.bound, 1, cert.distinct);
    if (! verdict.avoiding)
        return Verdict::failure("witness has a monochromatic solution");
    return Verdict::pass();
}

}
