#include <radokit/equation.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace radokit {

auto pow2(int e) -> BigInt
{
    BigInt r = 1;
    r <<= e;
    return r;
}

namespace {
    auto abs_big(const BigInt & v) -> BigInt { return v < 0 ? BigInt(-v) : v; }
}

auto LinearEquation::from_rationals(std::span<const Rational> coeffs) -> LinearEquation
{
    if (coeffs.size() < 2)
        fail(ErrorKind::parse, "an equation needs at least 2 terms, got " + std::to_string(coeffs.size()));
    BigInt denom_lcm = 1;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0)
            fail(ErrorKind::parse, "coefficient of x" + std::to_string(i + 1) + " is zero");
        denom_lcm = boost::multiprecision::lcm(denom_lcm, boost::multiprecision::denominator(coeffs[i]));
    }

    LinearEquation eq;
    BigInt g = 0;
    for (const auto & c : coeffs) {
        BigInt v = boost::multiprecision::numerator(c) * (denom_lcm / boost::multiprecision::denominator(c));
        g = boost::multiprecision::gcd(g, abs_big(v));
        eq.coeffs_.push_back(std::move(v));
    }
    for (auto & c : eq.coeffs_)
        c /= g;
    eq.scale_ = Rational(denom_lcm, g);
    return eq;
}

auto LinearEquation::from_integers(std::span<const BigInt> coeffs) -> LinearEquation
{
    std::vector<Rational> r(coeffs.begin(), coeffs.end());
    return from_rationals(r);
}

auto LinearEquation::from_integers(std::initializer_list<long long> coeffs) -> LinearEquation
{
    std::vector<Rational> r;
    for (auto c : coeffs)
        r.emplace_back(c);
    return from_rationals(r);
}

auto LinearEquation::coeffs_int64() const -> std::vector<std::int64_t>
{
    std::vector<std::int64_t> out;
    out.reserve(coeffs_.size());
    for (const auto & c : coeffs_)
        out.push_back(checked::to_int64(c));
    return out;
}

auto LinearEquation::residual(std::span<const BigInt> values) const -> BigInt
{
    if (values.size() != coeffs_.size())
        fail(ErrorKind::invalid_argument, "tuple has " + std::to_string(values.size()) + " entries, equation has "
                + std::to_string(coeffs_.size()) + " variables");
    BigInt sum = 0;
    for (std::size_t i = 0; i < values.size(); ++i)
        sum += coeffs_[i] * values[i];
    return sum;
}

auto LinearEquation::residual(std::span<const std::int64_t> values) const -> BigInt
{
    std::vector<BigInt> big(values.begin(), values.end());
    return residual(big);
}

auto LinearEquation::is_solution(std::span<const BigInt> values) const -> bool
{
    return values.size() == coeffs_.size() && residual(values) == 0;
}

auto LinearEquation::render() const -> std::string
{
    std::ostringstream out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const BigInt & c = coeffs_[i];
        BigInt mag = abs_big(c);
        if (i == 0)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        if (mag != 1)
            out << mag << "*";
        out << "x" << (i + 1);
    }
    out << " = 0";
    return out.str();
}

auto LinearEquation::render_list() const -> std::string
{
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i)
            out += ',';
        out += coeffs_[i].str();
    }
    return out;
}

namespace {
    class Lexer {
    public:
        explicit Lexer(std::string_view text) : text_(text) {}

        void skip_space()
        {
            while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
        }

        auto peek() -> char
        {
            skip_space();
            return pos_ < text_.size() ? text_[pos_] : '\0';
        }

        auto done() -> bool { return peek() == '\0'; }

        auto consume(char c) -> bool
        {
            if (peek() == c) {
                ++pos_;
                return true;
            }
            return false;
        }

        auto at_digit() -> bool { return std::isdigit(static_cast<unsigned char>(peek())); }
        auto at_alpha() -> bool { return std::isalpha(static_cast<unsigned char>(peek())); }

        auto digits() -> BigInt
        {
            skip_space();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (start == pos_)
                error("expected a number");
            return BigInt(std::string(text_.substr(start, pos_ - start)));
        }

        auto rational() -> Rational
        {
            BigInt num = digits();
            if (consume('/')) {
                BigInt den = digits();
                if (den == 0)
                    error("zero denominator");
                return Rational(num, den);
            }
            return Rational(num);
        }

        auto identifier() -> std::string
        {
            skip_space();
            std::size_t start = pos_;
            while (pos_ < text_.size()
                && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            return std::string(text_.substr(start, pos_ - start));
        }

        [[noreturn]] void error(const std::string & what) const
        {
            fail(ErrorKind::parse, what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
        }

    private:
        std::string_view text_;
        std::size_t pos_ = 0;
    };

    auto parse_list(std::string_view text) -> std::vector<Rational>
    {
        Lexer lex(text);
        std::vector<Rational> out;
        while (true) {
            bool negative = false;
            if (lex.consume('-'))
                negative = true;
            else
                lex.consume('+');
            Rational v = lex.rational();
            out.push_back(negative ? Rational(-v) : v);
            if (lex.done())
                break;
            if (! lex.consume(','))
                lex.error("expected ','");
        }
        return out;
    }

    auto x_index(const std::string & name) -> std::optional<long>
    {
        if (name.size() < 2 || name[0] != 'x')
            return std::nullopt;
        if (! std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            return std::nullopt;
        return std::stol(name.substr(1));
    }

    auto parse_expression(std::string_view text) -> std::vector<Rational>
    {
        Lexer lex(text);
        std::vector<std::pair<std::string, Rational>> terms;
        bool first = true;
        while (true) {
            bool negative = false;
            if (lex.consume('-'))
                negative = true;
            else if (! lex.consume('+') && ! first)
                lex.error("expected '+' or '-'");
            first = false;

            Rational c{1};
            if (lex.at_digit()) {
                c = lex.rational();
                lex.consume('*');
            }
            if (! lex.at_alpha())
                lex.error("expected a variable");
            std::string name = lex.identifier();
            for (const auto & [seen, _] : terms)
                if (seen == name)
                    lex.error("variable " + name + " appears twice");
            terms.emplace_back(name, negative ? Rational(-c) : c);

            char next = lex.peek();
            if (next == '=' || next == '\0')
                break;
        }
        if (! lex.consume('='))
            lex.error("expected '= 0'");
        Rational rhs = lex.rational();
        if (rhs != 0 || ! lex.done())
            lex.error("right-hand side must be 0");

        bool all_indexed = std::all_of(terms.begin(), terms.end(), [](const auto & t) { return x_index(t.first).has_value(); });
        if (all_indexed)
            std::stable_sort(terms.begin(), terms.end(),
                [](const auto & l, const auto & r) { return *x_index(l.first) < *x_index(r.first); });

        std::vector<Rational> out;
        for (auto & t : terms)
            out.push_back(t.second);
        return out;
    }
}

auto parse_equation(std::string_view text) -> LinearEquation
{
    bool expression = std::any_of(text.begin(), text.end(),
        [](char c) { return c == '=' || std::isalpha(static_cast<unsigned char>(c)); });
    auto coeffs = expression ? parse_expression(text) : parse_list(text);
    return LinearEquation::from_rationals(coeffs);
}

namespace {
    // Is there a subset of `values` (sorted by decreasing magnitude) summing to
    // `target`? The empty subset counts.
    class SubsetSumOracle {
    public:
        explicit SubsetSumOracle(std::vector<BigInt> values) : values_(std::move(values))
        {
            std::sort(values_.begin(), values_.end(), [](const BigInt & l, const BigInt & r) { return abs_big(l) > abs_big(r); });
            pos_rest_.assign(values_.size() + 1, 0);
            neg_rest_.assign(values_.size() + 1, 0);
            for (std::size_t k = values_.size(); k-- > 0;) {
                pos_rest_[k] = pos_rest_[k + 1] + (values_[k] > 0 ? values_[k] : BigInt(0));
                neg_rest_[k] = neg_rest_[k + 1] + (values_[k] < 0 ? values_[k] : BigInt(0));
            }
        }

        auto reachable(const BigInt & target) const -> bool { return search(0, target); }

    private:
        auto search(std::size_t k, const BigInt & target) const -> bool
        {
            if (target == 0)
                return true;
            if (k == values_.size())
                return false;
            if (target > pos_rest_[k] || target < neg_rest_[k])
                return false;
            return search(k + 1, target - values_[k]) || search(k + 1, target);
        }

        std::vector<BigInt> values_;
        std::vector<BigInt> pos_rest_, neg_rest_;
    };
}

auto is_regular(const LinearEquation & eq) -> RegularityResult
{
    const auto & a = eq.coeffs();
    const std::size_t n = a.size();

    // Greedy over indices in increasing order: take the smallest index whose
    // inclusion still admits a completion from later indices. Pre-order over
    // sorted index lists is lexicographic order, so this yields the first subset.
    RegularityResult result;
    BigInt sum = 0;
    std::size_t start = 0;
    while (true) {
        bool extended = false;
        for (std::size_t i = start; i < n; ++i) {
            BigInt s = sum + a[i];
            if (s == 0) {
                result.subset.push_back(i + 1);
                result.regular = true;
                return result;
            }
            SubsetSumOracle oracle(std::vector<BigInt>(a.begin() + static_cast<std::ptrdiff_t>(i) + 1, a.end()));
            if (oracle.reachable(-s)) {
                result.subset.push_back(i + 1);
                sum = s;
                start = i + 1;
                extended = true;
                break;
            }
        }
        if (! extended) {
            result.subset.clear();
            return result;
        }
    }
}

auto family_equation(int n) -> LinearEquation
{
    if (n < 2 || n > 62)
        fail(ErrorKind::domain, "family equation needs 2 <= n <= 62, got " + std::to_string(n));
    std::vector<BigInt> c;
    for (int i = 0; i < n - 1; ++i)
        c.push_back(pow2(i));
    c.push_back(-pow2(n - 1));
    return LinearEquation::from_integers(c);
}

auto at_equation(int n) -> LinearEquation
{
    if (n < 2 || n > 30)
        fail(ErrorKind::domain, "Alexeev-Tsimerman equation needs 2 <= n <= 30, got " + std::to_string(n));
    std::vector<Rational> c(static_cast<std::size_t>(n));
    Rational first{1};
    for (int i = 1; i <= n - 1; ++i) {
        Rational w(pow2(i), pow2(i) - 1);
        c[static_cast<std::size_t>(i)] = w;
        first -= w;
    }
    c[0] = first;
    return LinearEquation::from_rationals(c);
}

auto make_tuple_from(std::span<const std::int64_t> values) -> SolutionTuple
{
    SolutionTuple t;
    t.values.assign(values.begin(), values.end());
    return t;
}

SolutionEnumerator::SolutionEnumerator(const LinearEquation & eq, const EnumerationOptions & options) :
    a_(eq.coeffs_int64()),
    upper_(options.max_value),
    max_element_(options.max_element),
    distinct_(options.distinct)
{
    if (options.max_value < 1)
        fail(ErrorKind::invalid_argument, "max_value must be >= 1");
    if (max_element_) {
        if (*max_element_ < 1 || *max_element_ > options.max_value) {
            empty_ = true;
            return;
        }
        upper_ = *max_element_;
    }

    const std::size_t n = a_.size();
    x_.assign(n, 0);

    std::int64_t total = 0;
    for (auto c : a_) {
        if (c == std::numeric_limits<std::int64_t>::min())
            fail(ErrorKind::overflow, "coefficient magnitude exceeds 64 bits");
        total = checked::add(total, checked::mul(c < 0 ? -c : c, upper_));
    }
    checked::mul(total, 2);

    free_min_.assign(n + 1, 0);
    free_max_.assign(n + 1, 0);
    for (std::size_t k = n; k-- > 0;) {
        std::int64_t lo = a_[k] > 0 ? a_[k] : a_[k] * upper_;
        std::int64_t hi = a_[k] > 0 ? a_[k] * upper_ : a_[k];
        free_min_[k] = free_min_[k + 1] + lo;
        free_max_[k] = free_max_[k + 1] + hi;
    }

    if (max_element_) {
        const std::int64_t m = *max_element_;
        forced_min_.assign(n + 1, 0);
        forced_max_.assign(n + 1, 0);
        for (std::size_t k = 0; k < n; ++k) {
            std::int64_t best_lo = std::numeric_limits<std::int64_t>::max();
            std::int64_t best_hi = std::numeric_limits<std::int64_t>::min();
            for (std::size_t q = k; q < n; ++q) {
                std::int64_t q_lo = a_[q] > 0 ? a_[q] : a_[q] * upper_;
                std::int64_t q_hi = a_[q] > 0 ? a_[q] * upper_ : a_[q];
                best_lo = std::min(best_lo, free_min_[k] - q_lo + a_[q] * m);
                best_hi = std::max(best_hi, free_max_[k] - q_hi + a_[q] * m);
            }
            forced_min_[k] = best_lo;
            forced_max_[k] = best_hi;
        }
    }
}

auto SolutionEnumerator::range_for(std::size_t k, std::int64_t partial, std::int64_t rest_min, std::int64_t rest_max,
    std::int64_t lo, std::int64_t hi) const -> std::pair<std::int64_t, std::int64_t>
{
    // Need rest_min <= -(partial + a_k v) <= rest_max.
    const std::int64_t ak = a_[k];
    const std::int64_t low_target = -partial - rest_max;
    const std::int64_t high_target = -partial - rest_min;
    std::int64_t vlo, vhi;
    if (ak > 0) {
        vlo = ceil_div(low_target, ak);
        vhi = floor_div(high_target, ak);
    }
    else {
        vlo = ceil_div(high_target, ak);
        vhi = floor_div(low_target, ak);
    }
    return {std::max(vlo, lo), std::min(vhi, hi)};
}

auto SolutionEnumerator::distinct_ok() const -> bool
{
    for (std::size_t i = 0; i < x_.size(); ++i)
        for (std::size_t j = i + 1; j < x_.size(); ++j)
            if (x_[i] == x_[j])
                return false;
    return true;
}

auto enumerate_solutions(const LinearEquation & eq, const EnumerationOptions & options) -> std::vector<SolutionTuple>
{
    std::vector<SolutionTuple> out;
    SolutionEnumerator e(eq, options);
    e.for_each([&](std::span<const std::int64_t> x) {
        out.push_back(make_tuple_from(x));
        return true;
    });
    return out;
}

}
