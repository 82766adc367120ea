#include <radokit/structures.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace radokit {

auto pigeonhole_powers(const Coloring & c, int n) -> PigeonholeWitness
{
    if (n < 2 || n > 62)
        fail(ErrorKind::domain, "pigeonhole over powers of two needs 2 <= n <= 62");
    const std::int64_t top = std::int64_t{1} << (n - 1);
    if (c.domain_bound() < top)
        fail(ErrorKind::domain, "coloring domain " + std::to_string(c.domain_bound()) + " does not reach 2^(n-1) = "
                + std::to_string(top));
    std::vector<int> seen;
    for (int t = 0; t < n; ++t) {
        int ct = c(std::int64_t{1} << t);
        for (int s = 0; s < t; ++s)
            if (seen[static_cast<std::size_t>(s)] == ct)
                return {std::int64_t{1} << s, t - s, ct};
        seen.push_back(ct);
    }
    fail(ErrorKind::verification, "1, 2, ..., 2^(n-1) received " + std::to_string(n) + " distinct colors; the coloring has "
            + std::to_string(c.num_colors()) + " >= n colors");
}

namespace {
    auto ap_is_monochromatic(const Coloring & c, std::int64_t a, std::int64_t d, std::int64_t k) -> bool
    {
        const int ca = c(a);
        for (std::int64_t l = 1; l <= k; ++l)
            if (c(a + l * d) != ca || c(a - l * d) != ca)
                return false;
        return true;
    }

    // Visits progressions a + l d, |l| <= k, inside [1, bound] in (d, a) order.
    template <typename Visit>
    void for_each_progression(std::int64_t k, std::int64_t bound, Visit && visit)
    {
        for (std::int64_t d = 1;; ++d) {
            if (1 + 2 * k * d > bound)
                return;
            for (std::int64_t a = 1 + k * d; a + k * d <= bound; ++a)
                if (! visit(a, d))
                    return;
            if (k == 0)
                return;
        }
    }
}

auto find_monochromatic_ap(const Coloring & c, std::int64_t length, std::int64_t search_bound) -> std::optional<APWitness>
{
    if (length < 1 || length % 2 == 0)
        fail(ErrorKind::invalid_argument, "progression length must be odd and positive, got " + std::to_string(length));
    if (search_bound > c.domain_bound())
        fail(ErrorKind::domain, "search bound " + std::to_string(search_bound) + " exceeds the coloring domain");
    const std::int64_t k = (length - 1) / 2;
    std::optional<APWitness> found;
    for_each_progression(k, search_bound, [&](std::int64_t a, std::int64_t d) {
        if (ap_is_monochromatic(c, a, d, k)) {
            found = APWitness{a, d, k, c(a)};
            return false;
        }
        return true;
    });
    return found;
}

auto product_coloring(const Coloring & c, std::int64_t multiplier_bound) -> ProductColoring
{
    if (multiplier_bound < 1)
        fail(ErrorKind::invalid_argument, "multiplier bound R must be >= 1");
    const std::int64_t domain = c.domain_bound() / multiplier_bound;
    if (domain < 1)
        fail(ErrorKind::domain, "coloring domain " + std::to_string(c.domain_bound()) + " is smaller than R = "
                + std::to_string(multiplier_bound));

    ProductColoring out{multiplier_bound, Coloring::constant(1), {}};
    std::map<std::vector<int>, int> index;
    std::vector<int> colors(static_cast<std::size_t>(domain));
    std::vector<int> sig(static_cast<std::size_t>(multiplier_bound));
    for (std::int64_t a = 1; a <= domain; ++a) {
        for (std::int64_t i = 1; i <= multiplier_bound; ++i)
            sig[static_cast<std::size_t>(i - 1)] = c(a * i);
        auto [it, inserted] = index.try_emplace(sig, static_cast<int>(out.signatures.size()));
        if (inserted)
            out.signatures.push_back(sig);
        colors[static_cast<std::size_t>(a - 1)] = it->second;
    }
    out.coloring = Coloring::explicit_colors(static_cast<int>(out.signatures.size()), std::move(colors));
    return out;
}

auto HomogeneousFamily::powers_of_two(int n) -> HomogeneousFamily
{
    if (n < 2 || n > 62)
        fail(ErrorKind::domain, "powers-of-two family needs 2 <= n <= 62");
    HomogeneousFamily f;
    f.kind_ = Kind::powers_of_two;
    f.n_ = n;
    return f;
}

auto HomogeneousFamily::coefficient_pairs(const LinearEquation & eq) -> HomogeneousFamily
{
    HomogeneousFamily f;
    f.kind_ = Kind::coefficient_pairs;
    f.n_ = static_cast<int>(eq.size());
    for (auto a : eq.coeffs_int64())
        f.magnitudes_.push_back(a < 0 ? -a : a);
    return f;
}

auto HomogeneousFamily::describe() const -> std::string
{
    if (kind_ == Kind::powers_of_two)
        return "powers-of-two pairs (2^j b, b), 1 <= j <= " + std::to_string(n_ - 1);
    std::string mags;
    for (std::size_t i = 0; i < magnitudes_.size(); ++i)
        mags += (i ? "," : "") + std::to_string(magnitudes_[i]);
    return "coefficient pairs (|ai| k, |aj| k) for |a| = (" + mags + ")";
}

auto HomogeneousFamily::members_with_largest(std::int64_t largest) const -> std::vector<Member>
{
    std::vector<Member> out;
    if (largest < 1)
        return out;
    if (kind_ == Kind::powers_of_two) {
        for (int j = 1; j < n_ && j < 63; ++j) {
            std::int64_t p = std::int64_t{1} << j;
            if (largest % p == 0) {
                Member m;
                m.scale = largest / p;
                m.j = j;
                m.elements = {largest, m.scale};
                out.push_back(std::move(m));
            }
        }
    }
    else {
        for (std::size_t i = 0; i < magnitudes_.size(); ++i)
            for (std::size_t j = i + 1; j < magnitudes_.size(); ++j) {
                std::int64_t mx = std::max(magnitudes_[i], magnitudes_[j]);
                if (largest % mx == 0) {
                    Member m;
                    m.scale = largest / mx;
                    m.i_index = i;
                    m.j_index = j;
                    m.elements = {magnitudes_[i] * m.scale, magnitudes_[j] * m.scale};
                    out.push_back(std::move(m));
                }
            }
    }
    std::stable_sort(out.begin(), out.end(), [](const Member & l, const Member & r) {
        return std::tie(l.elements, l.j, l.i_index, l.j_index) < std::tie(r.elements, r.j, r.i_index, r.j_index);
    });
    return out;
}

auto HomogeneousFamily::members_up_to(std::int64_t bound) const -> std::vector<Member>
{
    std::vector<Member> out;
    for (std::int64_t l = 1; l <= bound; ++l)
        for (auto & m : members_with_largest(l))
            out.push_back(std::move(m));
    return out;
}

auto HomogeneousFamily::generators() const -> std::vector<Member>
{
    std::vector<Member> out;
    if (kind_ == Kind::powers_of_two) {
        for (int j = 1; j < n_; ++j) {
            Member m;
            m.j = j;
            m.scale = 1;
            m.elements = {std::int64_t{1} << j, 1};
            out.push_back(std::move(m));
        }
    }
    else {
        for (std::size_t i = 0; i < magnitudes_.size(); ++i)
            for (std::size_t j = i + 1; j < magnitudes_.size(); ++j) {
                Member m;
                m.i_index = i;
                m.j_index = j;
                m.scale = 1;
                m.elements = {magnitudes_[i], magnitudes_[j]};
                out.push_back(std::move(m));
            }
    }
    return out;
}

auto HomogeneousFamily::contains(const std::vector<std::int64_t> & elements) const -> bool
{
    if (elements.size() != 2 || elements[0] < 1 || elements[1] < 1)
        return false;
    const std::int64_t largest = std::max(elements[0], elements[1]);
    for (const auto & m : members_with_largest(largest))
        if (m.elements == elements)
            return true;
    return false;
}

namespace {
    auto fan_fits(const Coloring & c, const std::vector<std::int64_t> & base, std::int64_t d, std::int64_t radius,
        std::int64_t multiplier) -> std::optional<int>
    {
        const int color = c(multiplier * d);
        for (auto b : base)
            for (std::int64_t l = -radius; l <= radius; ++l)
                if (c(b + l * d) != color)
                    return std::nullopt;
        return color;
    }
}

auto find_fan(const Coloring & c, const HomogeneousFamily & family, std::int64_t radius, std::int64_t multiplier,
    const FanBudget & budget) -> FanSearch
{
    if (radius < 0 || multiplier < 1)
        fail(ErrorKind::invalid_argument, "fan radius must be >= 0 and multiplier >= 1");
    const std::int64_t n = c.domain_bound();
    FanSearch out;
    out.base_bound = budget.max_base > 0 ? std::min(budget.max_base, n) : n;

    for (std::int64_t d = 1; d <= budget.max_step; ++d) {
        if (multiplier > n / d || radius > n / d)
            break;
        out.steps_searched = d;
        const std::int64_t reach = radius * d;
        const std::int64_t top = std::min(out.base_bound, n - reach);
        for (std::int64_t largest = 1 + reach; largest <= top; ++largest) {
            for (auto & m : family.members_with_largest(largest)) {
                if (*std::min_element(m.elements.begin(), m.elements.end()) - reach < 1)
                    continue;
                ++out.checks;
                if (auto color = fan_fits(c, m.elements, d, radius, multiplier)) {
                    out.fan = MonochromaticFan{std::move(m), d, radius, multiplier, *color};
                    return out;
                }
                if (budget.max_checks && out.checks >= budget.max_checks)
                    return out;
            }
        }
    }
    return out;
}

namespace {
    auto lcm_of(const std::vector<std::int64_t> & v) -> std::int64_t
    {
        std::int64_t y = 1;
        for (auto b : v)
            y = checked::mul(y / std::gcd(y, b), b);
        return y;
    }
}

auto lemma22_demonstrate(const Coloring & c, const HomogeneousFamily & family, std::int64_t radius,
    std::int64_t multiplier_bound, const Lemma22Budget & budget) -> Lemma22Result
{
    if (radius < 1)
        fail(ErrorKind::invalid_argument, "fan radius must be >= 1");
    if (budget.ap_half_length < 0)
        fail(ErrorKind::invalid_argument, "progression half-length must be >= 0");

    Lemma22Result result;
    auto product = product_coloring(c, multiplier_bound);
    const Coloring & omega = product.coloring;

    // Candidate multiplier sets: family members inside [1, R].
    auto candidates = family.members_up_to(multiplier_bound);
    if (candidates.empty()) {
        result.exhausted_stage = "product";
        return result;
    }

    const std::int64_t k = budget.ap_half_length;
    std::uint64_t examined = 0;
    bool any_progression = false;
    for_each_progression(k, omega.domain_bound(), [&](std::int64_t a, std::int64_t d) {
        if (budget.max_progressions && examined >= budget.max_progressions)
            return false;
        ++examined;
        if (! ap_is_monochromatic(omega, a, d, k))
            return true;
        any_progression = true;

        for (const auto & cand : candidates) {
            const auto & mult = cand.elements;
            const int color = c(a * mult[0]);
            bool mono = std::all_of(mult.begin(), mult.end(), [&](std::int64_t b) { return c(a * b) == color; });
            if (! mono)
                continue;
            const std::int64_t y = lcm_of(mult);
            std::int64_t worst = 0;
            for (auto b : mult)
                worst = std::max(worst, y / b);
            if (radius > k / worst)
                continue;

            Lemma22Trace t;
            t.multiplier_bound = multiplier_bound;
            t.signatures = product.signatures;
            t.progression = APWitness{a, d, k, omega(a)};
            t.multipliers = mult;
            for (auto b : mult)
                t.base.push_back(a * b);
            t.member = cand;
            t.member.scale = cand.scale * a;
            t.member.elements = t.base;
            t.lcm = y;
            t.rescaled_step = checked::mul(d, y);
            t.radius = radius;
            t.color = color;
            result.trace = std::move(t);
            return false;
        }
        return true;
    });

    if (! result.trace)
        result.exhausted_stage = any_progression ? "extract" : "progression";
    return result;
}

}
