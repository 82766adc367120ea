#include <radokit/json_io.hpp>
#include <radokit/radokit.h>

#include <cstring>
#include <new>
#include <sstream>

struct rk_equation {
    radokit::LinearEquation eq;
};

struct rk_coloring {
    radokit::Coloring c;
};

namespace {
    thread_local std::string last_error;

    auto status_for(radokit::ErrorKind kind) -> rk_status
    {
        using radokit::ErrorKind;
        switch (kind) {
        case ErrorKind::invalid_argument: return RK_ERR_INVALID_ARGUMENT;
        case ErrorKind::parse: return RK_ERR_PARSE;
        case ErrorKind::overflow: return RK_ERR_OVERFLOW;
        case ErrorKind::domain: return RK_ERR_DOMAIN;
        case ErrorKind::io: return RK_ERR_IO;
        case ErrorKind::verification: return RK_ERR_VERIFICATION;
        }
        return RK_ERR_INTERNAL;
    }

    template <typename Fn>
    auto guarded(Fn && fn) -> rk_status
    {
        last_error.clear();
        try {
            return fn();
        }
        catch (const radokit::Error & e) {
            last_error = e.what();
            return status_for(e.kind());
        }
        catch (const nlohmann::json::exception & e) {
            last_error = e.what();
            return RK_ERR_PARSE;
        }
        catch (const std::bad_alloc &) {
            last_error = "out of memory";
            return RK_ERR_INTERNAL;
        }
        catch (const std::exception & e) {
            last_error = e.what();
            return RK_ERR_INTERNAL;
        }
    }

    auto dup(const std::string & s) -> char *
    {
        auto * out = static_cast<char *>(std::malloc(s.size() + 1));
        if (! out)
            throw std::bad_alloc();
        std::memcpy(out, s.c_str(), s.size() + 1);
        return out;
    }

    void emit(char ** json, const radokit::Json & j)
    {
        if (json)
            *json = dup(j.dump());
    }

    void require(const void * p, const char * what)
    {
        if (! p)
            radokit::fail(radokit::ErrorKind::invalid_argument, std::string(what) + " is null");
    }

    auto big(const char * s, const char * what) -> radokit::BigInt
    {
        require(s, what);
        std::string text(s);
        if (text.empty() || text.find_first_not_of("-0123456789") != std::string::npos)
            radokit::fail(radokit::ErrorKind::parse, std::string(what) + " \"" + text + "\" is not an integer");
        try {
            return radokit::BigInt(text);
        }
        catch (const std::exception &) {
            radokit::fail(radokit::ErrorKind::parse, std::string(what) + " \"" + text + "\" is not an integer");
        }
    }

    auto split(const char * s) -> std::vector<std::string>
    {
        std::vector<std::string> out;
        std::stringstream in(s);
        std::string item;
        while (std::getline(in, item, ','))
            out.push_back(item);
        return out;
    }

    auto rational(const std::string & s) -> radokit::Rational
    {
        auto slash = s.find('/');
        if (slash == std::string::npos)
            return radokit::Rational(big(s.c_str(), "rational"));
        auto den = big(s.substr(slash + 1).c_str(), "denominator");
        if (den == 0)
            radokit::fail(radokit::ErrorKind::parse, "zero denominator in \"" + s + "\"");
        return radokit::Rational(big(s.substr(0, slash).c_str(), "numerator"), den);
    }

    auto search_options(const rk_search_options * o) -> radokit::SearchOptions
    {
        radokit::SearchOptions out;
        if (! o)
            return out;
        out.budget.max_nodes = o->max_nodes;
        out.budget.max_seconds = o->max_seconds;
        out.threads = o->threads == 0 ? 1 : o->threads;
        out.distinct = o->distinct != 0;
        if (o->seed && o->seed_len)
            out.seed = std::vector<int>(o->seed, o->seed + o->seed_len);
        return out;
    }

    auto fan_budget(const rk_fan_budget * b) -> radokit::FanBudget
    {
        radokit::FanBudget out;
        if (b) {
            out.max_step = b->max_step;
            out.max_base = b->max_base;
            out.max_checks = b->max_checks;
        }
        return out;
    }

    auto family(int family_n, const rk_equation * family_eq) -> radokit::HomogeneousFamily
    {
        if (family_n >= 2)
            return radokit::HomogeneousFamily::powers_of_two(family_n);
        require(family_eq, "family equation");
        return radokit::HomogeneousFamily::coefficient_pairs(family_eq->eq);
    }
}

extern "C" {

const char * rk_version(void) { return "1.0.0"; }

const char * rk_last_error(void) { return last_error.c_str(); }

const char * rk_status_name(rk_status status)
{
    switch (status) {
    case RK_OK: return "ok";
    case RK_BUDGET_EXHAUSTED: return "budget-exhausted";
    case RK_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case RK_ERR_PARSE: return "parse-error";
    case RK_ERR_OVERFLOW: return "overflow";
    case RK_ERR_DOMAIN: return "domain-error";
    case RK_ERR_IO: return "io-error";
    case RK_ERR_VERIFICATION: return "verification-failed";
    case RK_ERR_INTERNAL: return "internal-error";
    }
    return "unknown";
}

void rk_string_free(char * s) { std::free(s); }

rk_status rk_equation_parse(const char * text, rk_equation ** out)
{
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = new rk_equation{radokit::parse_equation(text)};
        return RK_OK;
    });
}

rk_status rk_equation_from_json(const char * json, rk_equation ** out)
{
    return guarded([&] {
        require(json, "json");
        require(out, "out");
        *out = new rk_equation{radokit::equation_from_json(radokit::Json::parse(json))};
        return RK_OK;
    });
}

rk_status rk_equation_family(int n, rk_equation ** out)
{
    return guarded([&] {
        require(out, "out");
        *out = new rk_equation{radokit::family_equation(n)};
        return RK_OK;
    });
}

rk_status rk_equation_at(int n, rk_equation ** out)
{
    return guarded([&] {
        require(out, "out");
        *out = new rk_equation{radokit::at_equation(n)};
        return RK_OK;
    });
}

void rk_equation_free(rk_equation * eq) { delete eq; }

size_t rk_equation_size(const rk_equation * eq) { return eq ? eq->eq.size() : 0; }

rk_status rk_equation_json(const rk_equation * eq, char ** json)
{
    return guarded([&] {
        require(eq, "equation");
        emit(json, radokit::to_json(eq->eq));
        return RK_OK;
    });
}

rk_status rk_equation_is_regular(const rk_equation * eq, int * regular, char ** json)
{
    return guarded([&] {
        require(eq, "equation");
        auto r = radokit::is_regular(eq->eq);
        if (regular)
            *regular = r.regular ? 1 : 0;
        auto j = radokit::to_json(r);
        j["equation"] = radokit::canonical_json(eq->eq);
        emit(json, j);
        return RK_OK;
    });
}

rk_status rk_equation_solutions(const rk_equation * eq, int64_t max_value, int64_t max_element, int distinct,
    size_t limit, char ** json)
{
    return guarded([&] {
        require(eq, "equation");
        radokit::EnumerationOptions o;
        o.max_value = max_value;
        if (max_element > 0)
            o.max_element = max_element;
        o.distinct = distinct != 0;
        radokit::SolutionEnumerator e(eq->eq, o);
        radokit::Json sols = radokit::Json::array();
        bool truncated = false;
        e.for_each([&](std::span<const std::int64_t> x) {
            if (limit && sols.size() >= limit) {
                truncated = true;
                return false;
            }
            sols.push_back(std::vector<std::int64_t>(x.begin(), x.end()));
            return true;
        });
        emit(json, radokit::Json{{"equation", radokit::canonical_json(eq->eq)}, {"max_value", max_value},
                       {"count", sols.size()}, {"truncated", truncated}, {"solutions", sols}});
        return RK_OK;
    });
}

rk_status rk_coloring_from_spec(const char * spec, int64_t domain_bound, rk_coloring ** out)
{
    return guarded([&] {
        require(spec, "spec");
        require(out, "out");
        *out = new rk_coloring{radokit::parse_coloring_spec(spec, domain_bound)};
        return RK_OK;
    });
}

rk_status rk_coloring_from_array(int num_colors, const int * colors, size_t length, rk_coloring ** out)
{
    return guarded([&] {
        require(colors, "colors");
        require(out, "out");
        *out = new rk_coloring{radokit::Coloring::explicit_colors(num_colors, std::vector<int>(colors, colors + length))};
        return RK_OK;
    });
}

rk_status rk_coloring_load(const char * path, rk_coloring ** out)
{
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        *out = new rk_coloring{radokit::load_coloring(path)};
        return RK_OK;
    });
}

rk_status rk_coloring_store(const rk_coloring * c, const char * path)
{
    return guarded([&] {
        require(c, "coloring");
        require(path, "path");
        radokit::store_coloring(c->c, path);
        return RK_OK;
    });
}

void rk_coloring_free(rk_coloring * c) { delete c; }

int rk_coloring_num_colors(const rk_coloring * c) { return c ? c->c.num_colors() : 0; }

int64_t rk_coloring_domain_bound(const rk_coloring * c) { return c ? c->c.domain_bound() : 0; }

rk_status rk_coloring_color_of(const rk_coloring * c, int64_t x, int * color)
{
    return guarded([&] {
        require(c, "coloring");
        require(color, "color");
        *color = c->c.color_of(x);
        return RK_OK;
    });
}

rk_status rk_coloring_text(const rk_coloring * c, char ** text)
{
    return guarded([&] {
        require(c, "coloring");
        require(text, "text");
        std::ostringstream out;
        radokit::write_coloring(out, c->c);
        *text = dup(out.str());
        return RK_OK;
    });
}

rk_status rk_coloring_info(const rk_coloring * c, char ** json)
{
    return guarded([&] {
        require(c, "coloring");
        auto j = radokit::to_json(c->c, false);
        std::vector<std::int64_t> counts(static_cast<std::size_t>(c->c.num_colors()), 0);
        for (std::int64_t x = 1; x <= c->c.domain_bound(); ++x)
            ++counts[static_cast<std::size_t>(c->c(x))];
        j["class_sizes"] = counts;
        j["description"] = c->c.describe();
        emit(json, j);
        return RK_OK;
    });
}

rk_status rk_coloring_verify(const rk_coloring * c, const rk_equation * eq, int64_t up_to, unsigned threads,
    int distinct, int * avoiding, char ** json)
{
    return guarded([&] {
        require(c, "coloring");
        require(eq, "equation");
        auto v = radokit::verify_avoiding(c->c, eq->eq, up_to, threads, distinct != 0);
        if (avoiding)
            *avoiding = v.avoiding ? 1 : 0;
        auto j = radokit::to_json(v);
        j["equation"] = radokit::canonical_json(eq->eq);
        j["up_to"] = up_to;
        j["coloring"] = c->c.describe();
        emit(json, j);
        return RK_OK;
    });
}

rk_status rk_pigeonhole_powers(const rk_coloring * c, int n, char ** json)
{
    return guarded([&] {
        require(c, "coloring");
        auto w = radokit::pigeonhole_powers(c->c, n);
        if (auto v = radokit::check_pigeonhole(c->c, n, w); ! v)
            radokit::fail(radokit::ErrorKind::verification, v.reason);
        emit(json, radokit::to_json(w));
        return RK_OK;
    });
}

rk_status rk_find_progression(const rk_coloring * c, int64_t length, int64_t search_bound, char ** json)
{
    return guarded([&] {
        require(c, "coloring");
        auto ap = radokit::find_monochromatic_ap(c->c, length, search_bound);
        radokit::Json j{{"length", length}, {"search_bound", search_bound}};
        if (ap) {
            if (auto v = radokit::check_progression(c->c, *ap); ! v)
                radokit::fail(radokit::ErrorKind::verification, v.reason);
            j["status"] = "found";
            j["progression"] = radokit::to_json(*ap);
        }
        else
            j["status"] = "not-found";
        emit(json, j);
        return RK_OK;
    });
}

rk_status rk_product_coloring(const rk_coloring * c, int64_t multiplier_bound, rk_coloring ** out, char ** json)
{
    return guarded([&] {
        require(c, "coloring");
        auto p = radokit::product_coloring(c->c, multiplier_bound);
        if (json) {
            radokit::Json sig = radokit::Json::array();
            for (const auto & s : p.signatures)
                sig.push_back(s);
            emit(json, radokit::Json{{"R", p.multiplier_bound}, {"num_colors", p.coloring.num_colors()},
                           {"domain_bound", p.coloring.domain_bound()}, {"signatures", sig}});
        }
        if (out)
            *out = new rk_coloring{std::move(p.coloring)};
        return RK_OK;
    });
}

rk_status rk_find_fan(const rk_coloring * c, int family_n, const rk_equation * family_eq, int64_t radius,
    int64_t multiplier, const rk_fan_budget * budget, char ** json)
{
    return guarded([&] {
        require(c, "coloring");
        auto f = family(family_n, family_eq);
        auto s = radokit::find_fan(c->c, f, radius, multiplier, fan_budget(budget));
        if (s.fan)
            if (auto v = radokit::check_fan(c->c, f, *s.fan); ! v)
                radokit::fail(radokit::ErrorKind::verification, v.reason);
        auto j = radokit::to_json(s);
        j["family"] = radokit::to_json(f);
        emit(json, j);
        return s.fan ? RK_OK : RK_BUDGET_EXHAUSTED;
    });
}

rk_status rk_fan_chain(const rk_coloring * c, int family_n, const rk_equation * family_eq, int64_t radius,
    int64_t multiplier_bound, int64_t half_length, uint64_t max_progressions, char ** json)
{
    return guarded([&] {
        require(c, "coloring");
        auto f = family(family_n, family_eq);
        auto r = radokit::lemma22_demonstrate(c->c, f, radius, multiplier_bound, {half_length, max_progressions});
        if (r.trace)
            if (auto v = radokit::check_lemma22(c->c, f, *r.trace); ! v)
                radokit::fail(radokit::ErrorKind::verification, v.reason);
        auto j = radokit::to_json(r);
        j["family"] = radokit::to_json(f);
        emit(json, j);
        return r.trace ? RK_OK : RK_BUDGET_EXHAUSTED;
    });
}

rk_status rk_build_theorem1(int n, int j, const char * b, const char * d, char ** json)
{
    return guarded([&] {
        auto t = radokit::build_theorem1_solution(n, j, big(b, "b"), big(d, "d"));
        auto eq = radokit::family_equation(n);
        if (! eq.is_solution(t.values))
            radokit::fail(radokit::ErrorKind::verification, "parametrized tuple does not solve the equation");
        emit(json, radokit::Json{{"equation", radokit::canonical_json(eq)}, {"tuple", radokit::to_json(t)},
                       {"residual", radokit::big_json(eq.residual(t.values))}});
        return RK_OK;
    });
}

rk_status rk_build_at(int n, int i, const char * x, char ** json)
{
    return guarded([&] {
        auto t = radokit::build_at_solution(n, i, big(x, "x"));
        auto eq = radokit::at_equation(n);
        if (! eq.is_solution(t.values))
            radokit::fail(radokit::ErrorKind::verification, "tuple does not solve the equation");
        emit(json, radokit::Json{{"equation", radokit::canonical_json(eq)}, {"tuple", radokit::to_json(t)},
                       {"residual", radokit::big_json(eq.residual(t.values))}});
        return RK_OK;
    });
}

rk_status rk_build_extension(const rk_equation * eq, const char * base, const char * extra, const char * d, char ** json)
{
    return guarded([&] {
        require(eq, "equation");
        require(base, "base");
        require(extra, "extra");
        std::vector<radokit::BigInt> y;
        for (const auto & s : split(base))
            y.push_back(big(s.c_str(), "base value"));
        if (! eq->eq.is_solution(y))
            radokit::fail(radokit::ErrorKind::invalid_argument, "base tuple does not solve the equation");
        std::vector<radokit::Rational> b;
        radokit::Rational b_sum = 0;
        for (const auto & s : split(extra)) {
            b.push_back(rational(s));
            b_sum += b.back();
        }
        auto sol = radokit::build_theorem41_solution(y, eq->eq[0], b_sum, b.size(), big(d, "d"));
        auto coeffs = radokit::extended_coefficients(eq->eq, b);
        radokit::Rational residual = 0;
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            residual += coeffs[i] * radokit::Rational(sol.tuple.values[i]);
        if (residual != 0)
            radokit::fail(radokit::ErrorKind::verification, "extended tuple does not solve the extended equation");
        radokit::Json ext = radokit::Json::array();
        for (const auto & c : coeffs)
            ext.push_back(radokit::rational_string(c));
        auto j = radokit::to_json(sol);
        j["extended_equation"] = ext;
        j["residual"] = radokit::rational_string(residual);
        emit(json, j);
        return RK_OK;
    });
}

rk_status rk_build_hyperplane(const rk_equation * eq, size_t i, size_t j, const char * k, const char * d, char ** json)
{
    return guarded([&] {
        require(eq, "equation");
        if (i < 1 || j <= i || j > eq->eq.size())
            radokit::fail(radokit::ErrorKind::domain, "need 1 <= i < j <= n");
        auto s = radokit::build_theorem42_solution(eq->eq, i - 1, j - 1, big(k, "k"), big(d, "d"));
        if (auto v = radokit::check_hyperplane_solution(eq->eq, s); ! v)
            radokit::fail(radokit::ErrorKind::verification, v.reason);
        auto out = radokit::to_json(s);
        out["equation"] = radokit::canonical_json(eq->eq);
        emit(json, out);
        return RK_OK;
    });
}

rk_status rk_prove_theorem1(const rk_coloring * c, int n, const rk_fan_budget * budget, char ** json)
{
    return guarded([&] {
        require(c, "coloring");
        auto o = radokit::prove_theorem1(c->c, n, fan_budget(budget));
        auto j = radokit::to_json(o);
        j["equation"] = radokit::canonical_json(radokit::family_equation(n));
        emit(json, j);
        return o.proof ? RK_OK : RK_BUDGET_EXHAUSTED;
    });
}

rk_status rk_prove_at(const rk_coloring * c, int n, char ** json)
{
    return guarded([&] {
        require(c, "coloring");
        emit(json, radokit::to_json(radokit::prove_at(c->c, n)));
        return RK_OK;
    });
}

rk_status rk_prove_hyperplane(const rk_coloring * c, const rk_equation * eq, const rk_fan_budget * budget, char ** json)
{
    return guarded([&] {
        require(c, "coloring");
        require(eq, "equation");
        auto o = radokit::prove_hyperplane(c->c, eq->eq, fan_budget(budget));
        auto j = radokit::to_json(o);
        j["equation"] = radokit::canonical_json(eq->eq);
        emit(json, j);
        return o.proof ? RK_OK : RK_BUDGET_EXHAUSTED;
    });
}

rk_status rk_search_avoid(const rk_equation * eq, int num_colors, int64_t bound, const rk_search_options * options,
    char ** json)
{
    return guarded([&] {
        require(eq, "equation");
        auto cert = radokit::search_avoiding(eq->eq, num_colors, bound, search_options(options));
        if (auto v = radokit::check_certificate(cert); ! v)
            radokit::fail(radokit::ErrorKind::verification, v.reason);
        emit(json, radokit::to_json(cert));
        return cert.outcome == radokit::SearchOutcome::budget_exceeded ? RK_BUDGET_EXHAUSTED : RK_OK;
    });
}

rk_status rk_search_rado(const rk_equation * eq, int num_colors, int64_t max_n, const rk_search_options * options,
    char ** json)
{
    return guarded([&] {
        require(eq, "equation");
        auto r = radokit::rado_number(eq->eq, num_colors, max_n, search_options(options));
        if (r.witness)
            if (! radokit::verify_avoiding(*r.witness, eq->eq, r.witness_bound).avoiding)
                radokit::fail(radokit::ErrorKind::verification, "surviving witness is not avoiding");
        auto j = radokit::to_json(r);
        j["equation"] = radokit::canonical_json(eq->eq);
        j["r"] = num_colors;
        j["max_n"] = max_n;
        emit(json, j);
        return r.status == radokit::RadoResult::Status::budget_exceeded ? RK_BUDGET_EXHAUSTED : RK_OK;
    });
}

rk_status rk_search_dor(const rk_equation * eq, int r_max, int64_t evidence_bound, const rk_search_options * options,
    char ** json)
{
    return guarded([&] {
        require(eq, "equation");
        auto report = radokit::dor_report(eq->eq, r_max, evidence_bound, search_options(options));
        emit(json, radokit::to_json(report));
        return RK_OK;
    });
}

}
