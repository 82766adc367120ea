#include <radokit/certify.hpp>
#include <radokit/constructive.hpp>

#include <algorithm>

namespace radokit {

namespace {
    auto abs_big(const BigInt & v) -> BigInt { return v < 0 ? BigInt(-v) : v; }
}

auto build_theorem1_solution(int n, int j, const BigInt & b, const BigInt & d) -> SolutionTuple
{
    if (n < 2)
        fail(ErrorKind::domain, "n must be >= 2");
    if (j < 1 || j > n - 1)
        fail(ErrorKind::domain, "j must lie in [1, n-1], got " + std::to_string(j));
    if (b < 1 || d < 1)
        fail(ErrorKind::domain, "b and d must be positive");

    const BigInt lambda2 = pow2(n - 1);
    const BigInt lambda1 = pow2(n - 1) + pow2(j);
    SolutionTuple t;
    t.values.assign(static_cast<std::size_t>(n), pow2(n - 1) * d);
    t.values[static_cast<std::size_t>(n - j - 1)] = pow2(j) * b + lambda1 * d;
    t.values[static_cast<std::size_t>(n - 1)] = b + lambda2 * d;
    t.lambdas = {lambda1, lambda2};
    return t;
}

auto build_at_solution(int n, int i, const BigInt & x) -> SolutionTuple
{
    if (n < 2)
        fail(ErrorKind::domain, "n must be >= 2");
    if (i < 1 || i > n - 1)
        fail(ErrorKind::domain, "i must lie in [1, n-1], got " + std::to_string(i));
    if (x < 1)
        fail(ErrorKind::domain, "x must be positive");
    SolutionTuple t;
    t.values.assign(static_cast<std::size_t>(n), pow2(i) * x);
    t.values[static_cast<std::size_t>(i)] = x;
    return t;
}

auto build_theorem41_solution(std::span<const BigInt> base, const BigInt & a1, const Rational & b_sum, std::size_t k,
    const BigInt & d) -> ExtensionSolution
{
    if (base.empty())
        fail(ErrorKind::invalid_argument, "base solution is empty");
    if (k < 1)
        fail(ErrorKind::invalid_argument, "at least one added term is required");
    if (a1 == 0 || d < 1)
        fail(ErrorKind::domain, "a1 must be nonzero and d positive");

    ExtensionSolution out;
    out.sign_adjusted = a1 < 0;
    const Rational lambda1 = out.sign_adjusted ? b_sum : Rational(-b_sum);
    const Rational shift = lambda1 * Rational(d);
    if (boost::multiprecision::denominator(shift) != 1)
        fail(ErrorKind::domain, "(b1 + ... + bk) * d = " + Rational(b_sum * Rational(d)).str()
                + " is not an integer; choose d as a multiple of the denominator");

    out.tuple.values.assign(base.begin(), base.end());
    out.tuple.values[0] += boost::multiprecision::numerator(shift);
    const BigInt appended = abs_big(a1) * d;
    for (std::size_t l = 0; l < k; ++l)
        out.tuple.values.push_back(appended);
    for (std::size_t idx = 0; idx < out.tuple.values.size(); ++idx)
        if (out.tuple.values[idx] < 1)
            fail(ErrorKind::domain, "coordinate x" + std::to_string(idx + 1) + " = " + out.tuple.values[idx].str()
                    + " is not positive; start from a base solution with larger y1");
    if (boost::multiprecision::denominator(lambda1) == 1)
        out.tuple.lambdas = {boost::multiprecision::numerator(lambda1)};
    return out;
}

auto extended_coefficients(const LinearEquation & eq, std::span<const Rational> extra) -> std::vector<Rational>
{
    std::vector<Rational> out(eq.coeffs().begin(), eq.coeffs().end());
    out.insert(out.end(), extra.begin(), extra.end());
    return out;
}

namespace {
    auto flip_for(const LinearEquation & eq, std::size_t i, std::size_t j) -> int
    {
        return (eq[i] < 0) != (eq[j] < 0) ? 1 : -1;
    }

    auto product_magnitude(const LinearEquation & eq) -> BigInt
    {
        BigInt p = 1;
        for (const auto & a : eq.coeffs())
            p *= abs_big(a);
        return p;
    }
}

auto theorem42_lambda(const LinearEquation & eq, std::size_t i, std::size_t j) -> BigInt
{
    if (i >= j || j >= eq.size())
        fail(ErrorKind::domain, "need 0 <= i < j < n");
    BigInt others = 0;
    for (std::size_t l = 0; l < eq.size(); ++l)
        if (l != i && l != j)
            others += eq[l];
    const BigInt num = -product_magnitude(eq) * others;
    const BigInt den = flip_for(eq, i, j) * eq[i];
    if (num % den != 0)
        fail(ErrorKind::verification, "P is not divisible by a_i");
    return num / den;
}

auto build_theorem42_solution(const LinearEquation & eq, std::size_t i, std::size_t j, const BigInt & k, const BigInt & d)
    -> HyperplaneSolution
{
    if (k < 1 || d < 1)
        fail(ErrorKind::domain, "k and d must be positive");
    const BigInt lambda1 = theorem42_lambda(eq, i, j);
    const std::size_t n = eq.size();

    HyperplaneSolution s;
    s.product = product_magnitude(eq);
    s.flips.assign(n, 1);
    if (flip_for(eq, i, j) < 0) {
        s.flips[i] = -1;
        s.flipped_index = i;
    }

    s.tuple.values.assign(n, s.product * d);
    s.tuple.values[i] = abs_big(eq[j]) * k + lambda1 * d;
    s.tuple.values[j] = abs_big(eq[i]) * k;
    s.tuple.lambdas = {lambda1, 0};

    if (s.tuple.values[i] < 1) {
        const BigInt aj = abs_big(eq[j]);
        const BigInt need = 1 - lambda1 * d;
        const BigInt min_k = (need + aj - 1) / aj;
        fail(ErrorKind::domain, "x" + std::to_string(i + 1) + " = " + s.tuple.values[i].str()
                + " is not positive; k must be at least " + min_k.str());
    }
    return s;
}

auto prove_theorem1(const Coloring & c, int n, const FanBudget & budget) -> Theorem1Outcome
{
    if (n < 2 || n > 30)
        fail(ErrorKind::domain, "n must lie in [2, 30]");
    if (c.num_colors() > n - 1)
        fail(ErrorKind::invalid_argument, "the construction needs at most n-1 = " + std::to_string(n - 1)
                + " colors, the coloring has " + std::to_string(c.num_colors()));

    Theorem1Outcome out;
    const auto pigeonhole = pigeonhole_powers(c, n);
    const auto family = HomogeneousFamily::powers_of_two(n);
    const std::int64_t radius = std::int64_t{1} << n;
    const std::int64_t multiplier = std::int64_t{1} << (n - 1);
    out.search = find_fan(c, family, radius, multiplier, budget);
    if (! out.search.fan)
        return out;

    const auto & fan = *out.search.fan;
    Theorem1Proof p;
    p.n = n;
    p.pigeonhole = pigeonhole;
    p.fan = fan;
    p.tuple = build_theorem1_solution(n, fan.member.j, fan.member.scale, fan.step);
    p.color = fan.color;

    if (auto v = check_theorem1_proof(c, p); ! v)
        fail(ErrorKind::verification, "constructed solution failed verification: " + v.reason);
    out.proof = std::move(p);
    return out;
}

auto prove_at(const Coloring & c, int n) -> AtProof
{
    if (n < 2 || n > 30)
        fail(ErrorKind::domain, "n must lie in [2, 30]");
    AtProof p;
    p.n = n;
    p.pigeonhole = pigeonhole_powers(c, n);
    p.tuple = build_at_solution(n, p.pigeonhole.j, p.pigeonhole.x);
    p.color = p.pigeonhole.color;
    if (auto v = check_monochromatic_solution(c, at_equation(n), p.tuple); ! v)
        fail(ErrorKind::verification, "constructed solution failed verification: " + v.reason);
    return p;
}

auto prove_hyperplane(const Coloring & c, const LinearEquation & eq, const FanBudget & budget) -> HyperplaneOutcome
{
    const std::size_t n = eq.size();
    if (c.num_colors() > static_cast<int>(n) - 1)
        fail(ErrorKind::invalid_argument, "the construction needs at most n-1 = " + std::to_string(n - 1)
                + " colors, the coloring has " + std::to_string(c.num_colors()));

    BigInt radius = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            radius = std::max(radius, abs_big(theorem42_lambda(eq, i, j)));
    const std::int64_t product = checked::to_int64(product_magnitude(eq));

    HyperplaneOutcome out;
    const auto family = HomogeneousFamily::coefficient_pairs(eq);
    out.search = find_fan(c, family, checked::to_int64(radius), product, budget);
    if (! out.search.fan)
        return out;

    const auto & fan = *out.search.fan;
    HyperplaneProof p;
    p.fan = fan;
    p.solution = build_theorem42_solution(eq, fan.member.i_index, fan.member.j_index, fan.member.scale, fan.step);
    p.color = fan.color;

    if (auto v = check_hyperplane_solution(eq, p.solution); ! v)
        fail(ErrorKind::verification, "hyperplane solution failed verification: " + v.reason);
    const int color = c.color_of(checked::to_int64(p.solution.tuple.values[0]));
    for (const auto & x : p.solution.tuple.values)
        if (c.color_of(checked::to_int64(x)) != color)
            fail(ErrorKind::verification, "hyperplane solution is not monochromatic");
    out.proof = std::move(p);
    return out;
}

}
