#pragma once

#include <radokit/common.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace radokit {

/// A single homogeneous equation a1*x1 + ... + an*xn = 0 in canonical integer
/// form: no zero coefficients, gcd of |ai| equal to 1, signs and order as given.
class LinearEquation {
public:
    /// Canonicalizes: clears denominators by their lcm, then divides by the gcd.
    /// The overall sign is never flipped.
    static auto from_rationals(std::span<const Rational> coeffs) -> LinearEquation;
    static auto from_integers(std::span<const BigInt> coeffs) -> LinearEquation;
    static auto from_integers(std::initializer_list<long long> coeffs) -> LinearEquation;

    auto coeffs() const -> const std::vector<BigInt> & { return coeffs_; }
    auto size() const -> std::size_t { return coeffs_.size(); }
    auto operator[](std::size_t i) const -> const BigInt & { return coeffs_[i]; }

    /// Factor that maps the input coefficients onto the canonical ones.
    auto scale() const -> const Rational & { return scale_; }

    /// Coefficients as 64-bit integers; throws ErrorKind::overflow if any does not fit.
    auto coeffs_int64() const -> std::vector<std::int64_t>;

    auto residual(std::span<const BigInt> values) const -> BigInt;
    auto residual(std::span<const std::int64_t> values) const -> BigInt;
    auto is_solution(std::span<const BigInt> values) const -> bool;

    /// "x1 + 2*x2 - 4*x3 = 0"
    auto render() const -> std::string;
    /// "1,2,-4"
    auto render_list() const -> std::string;

    friend auto operator==(const LinearEquation &, const LinearEquation &) -> bool = default;

private:
    LinearEquation() = default;

    std::vector<BigInt> coeffs_;
    Rational scale_{1};
};

/// Accepts "1,2,-4", "1/2, 1/3, -1" or "x1 + 2x2 - 4*x3 = 0" (rational
/// coefficients allowed). Throws ErrorKind::parse on malformed input.
auto parse_equation(std::string_view text) -> LinearEquation;

struct RegularityResult {
    bool regular = false;
    /// 1-based indices of the lexicographically first zero-sum subset.
    std::vector<std::size_t> subset;
};

/// Rado's criterion for one equation: regular iff some nonempty subset of the
/// coefficients sums to zero.
auto is_regular(const LinearEquation & eq) -> RegularityResult;

/// x1 + 2x2 + ... + 2^(n-2) x(n-1) - 2^(n-1) xn = 0, for 2 <= n <= 62.
auto family_equation(int n) -> LinearEquation;

/// Canonical integer form of
///   (1 - sum_{i<n} 2^i/(2^i-1)) x1 + sum_{i<n} 2^i/(2^i-1) x(i+1) = 0
/// for 2 <= n <= 30.
auto at_equation(int n) -> LinearEquation;

struct SolutionTuple {
    std::vector<BigInt> values;
    std::vector<BigInt> lambdas;

    friend auto operator==(const SolutionTuple &, const SolutionTuple &) -> bool = default;
};

auto make_tuple_from(std::span<const std::int64_t> values) -> SolutionTuple;

struct EnumerationOptions {
    std::int64_t max_value = 1;
    /// When set, only tuples whose largest coordinate equals this value.
    std::optional<std::int64_t> max_element;
    /// Reject tuples with repeated coordinates.
    bool distinct = false;
};

/// Depth-first enumeration of positive solutions in lexicographic order, with
/// each coordinate's range cut to the interval that can still reach zero. The
/// last coordinate is solved for directly.
class SolutionEnumerator {
public:
    SolutionEnumerator(const LinearEquation & eq, const EnumerationOptions & options);

    /// Calls visit(std::span<const std::int64_t>) for each solution until it
    /// returns false. Returns false iff stopped early.
    template <typename Visit>
    auto for_each(Visit && visit) -> bool
    {
        if (empty_)
            return true;
        return descend(0, 0, ! max_element_, visit);
    }

private:
    template <typename Visit>
    auto descend(std::size_t k, std::int64_t partial, bool have_max, Visit & visit) -> bool;

    auto range_for(std::size_t k, std::int64_t partial, std::int64_t rest_min, std::int64_t rest_max,
        std::int64_t lo, std::int64_t hi) const -> std::pair<std::int64_t, std::int64_t>;

    auto distinct_ok() const -> bool;

    std::vector<std::int64_t> a_;
    std::int64_t upper_ = 0;
    std::optional<std::int64_t> max_element_;
    bool distinct_ = false;
    bool empty_ = false;
    // Sum ranges of a(k..n-1) * x(k..n-1) with every x free in [1, upper].
    std::vector<std::int64_t> free_min_, free_max_;
    // Hull of the same ranges when at least one x in the suffix equals max_element.
    std::vector<std::int64_t> forced_min_, forced_max_;
    std::vector<std::int64_t> x_;
};

template <typename Visit>
auto SolutionEnumerator::descend(std::size_t k, std::int64_t partial, bool have_max, Visit & visit) -> bool
{
    // Every quantity below is bounded by twice the sum of |ai| * upper, which the
    // constructor has checked fits in 64 bits.
    const std::size_t n = a_.size();
    const std::int64_t ak = a_[k];

    if (k + 1 == n) {
        if ((-partial) % ak != 0)
            return true;
        std::int64_t v = -partial / ak;
        if (v < 1 || v > upper_)
            return true;
        if (! have_max && v != *max_element_)
            return true;
        x_[k] = v;
        if (distinct_ && ! distinct_ok())
            return true;
        return visit(std::span<const std::int64_t>(x_));
    }

    if (have_max) {
        auto [lo, hi] = range_for(k, partial, free_min_[k + 1], free_max_[k + 1], 1, upper_);
        for (std::int64_t v = lo; v <= hi; ++v) {
            x_[k] = v;
            if (! descend(k + 1, partial + ak * v, true, visit))
                return false;
        }
        return true;
    }

    const std::int64_t m = *max_element_;
    auto [lo, hi] = range_for(k, partial, forced_min_[k + 1], forced_max_[k + 1], 1, m - 1);
    for (std::int64_t v = lo; v <= hi; ++v) {
        x_[k] = v;
        if (! descend(k + 1, partial + ak * v, false, visit))
            return false;
    }
    auto [mlo, mhi] = range_for(k, partial, free_min_[k + 1], free_max_[k + 1], m, m);
    if (mlo <= mhi) {
        x_[k] = m;
        if (! descend(k + 1, partial + ak * m, true, visit))
            return false;
    }
    return true;
}

/// All solutions in [1, max_value]^n (or with maximum exactly max_element), in
/// lexicographic order.
auto enumerate_solutions(const LinearEquation & eq, const EnumerationOptions & options) -> std::vector<SolutionTuple>;

}
