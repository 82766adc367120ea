// Command-line front end. Everything goes through the C API in radokit.h.

#include <radokit/radokit.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

using Json = nlohmann::ordered_json;

namespace {

struct EquationDeleter {
    void operator()(rk_equation * e) const { rk_equation_free(e); }
};
struct ColoringDeleter {
    void operator()(rk_coloring * c) const { rk_coloring_free(c); }
};
using EquationPtr = std::unique_ptr<rk_equation, EquationDeleter>;
using ColoringPtr = std::unique_ptr<rk_coloring, ColoringDeleter>;

struct CallFailed {
    rk_status status;
    std::string message;
};

void check(rk_status s)
{
    if (s != RK_OK && s != RK_BUDGET_EXHAUSTED)
        throw CallFailed{s, rk_last_error()};
}

// Runs one C API call that fills a JSON string.
struct Result {
    rk_status status = RK_OK;
    Json payload;
};

auto call(const std::function<rk_status(char **)> & fn) -> Result
{
    char * out = nullptr;
    rk_status s = fn(&out);
    check(s);
    Result r{s, out ? Json::parse(out) : Json(nullptr)};
    rk_string_free(out);
    return r;
}

auto parse_equation(const std::string & text) -> EquationPtr
{
    rk_equation * e = nullptr;
    check(rk_equation_parse(text.c_str(), &e));
    return EquationPtr(e);
}

auto make_coloring(const std::string & spec, std::int64_t bound) -> ColoringPtr
{
    rk_coloring * c = nullptr;
    check(rk_coloring_from_spec(spec.c_str(), bound, &c));
    return ColoringPtr(c);
}

auto dump_list(const Json & arr) -> std::string
{
    std::string s = "(";
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i)
            s += ", ";
        s += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
    }
    return s + ")";
}

struct Output {
    bool json = false;
    bool timing = false;
};

// Prints the result and returns the exit code: 0 ok, 1 error, 3 budget exhausted.
auto finish(const Output & out, const Result & r, double seconds, const std::function<void(const Json &)> & human) -> int
{
    const bool ok = r.status == RK_OK;
    if (out.json) {
        Json env{{"status", ok ? "ok" : "budget-exhausted"}, {"payload", r.payload}};
        if (out.timing)
            env["timing"] = Json{{"seconds", seconds}};
        std::cout << env.dump(2) << '\n';
    }
    else {
        human(r.payload);
        if (! ok)
            std::cout << "status: budget exhausted (not a counterexample, only a bound)\n";
        if (out.timing)
            std::printf("time: %.3f s\n", seconds);
    }
    return ok ? 0 : 3;
}

auto fan_budget(std::int64_t max_step, std::int64_t max_base, std::uint64_t max_checks) -> rk_fan_budget
{
    return rk_fan_budget{max_step, max_base, max_checks};
}

auto read_seed(const std::string & path) -> std::vector<int>
{
    rk_coloring * c = nullptr;
    check(rk_coloring_load(path.c_str(), &c));
    ColoringPtr guard(c);
    std::vector<int> colors;
    for (std::int64_t x = 1; x <= rk_coloring_domain_bound(c); ++x) {
        int col = 0;
        check(rk_coloring_color_of(c, x, &col));
        colors.push_back(col);
    }
    return colors;
}

void write_witness(const std::string & path, int r, const Json & colors)
{
    if (path.empty() || ! colors.is_array())
        return;
    auto v = colors.get<std::vector<int>>();
    rk_coloring * c = nullptr;
    check(rk_coloring_from_array(r, v.data(), v.size(), &c));
    ColoringPtr guard(c);
    check(rk_coloring_store(c, path.c_str()));
}

// CLI11 treats "-1,2" as a short flag; rewrite leading-negative coefficient
// lists into --equation=... before parsing.
auto normalize_args(int argc, char ** argv) -> std::vector<std::string>
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a.size() >= 2 && a[0] == '-' && (std::isdigit(static_cast<unsigned char>(a[1])) || a[1] == '/')
            && a.find(',') != std::string::npos)
            a = "--equation=" + a;
        args.push_back(a);
    }
    std::reverse(args.begin(), args.end());
    return args;
}

}

int main(int argc, char ** argv)
{
    CLI::App app{"radokit: partition regularity of single linear equations"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(rk_version()));

    Output out;
    std::function<int()> action;
    auto add_output_flags = [&](CLI::App * sub) {
        sub->add_flag("--json", out.json, "Print a JSON envelope {status, payload}");
        sub->add_flag("--timing", out.timing, "Report wall time");
    };

    std::string eq_text;
    std::string coloring_spec = "const";
    std::int64_t domain = 65536;
    unsigned threads = 1;
    bool distinct = false;

    // ---- eq ----
    auto * eq = app.add_subcommand("eq", "Equation tools");
    eq->require_subcommand(1);

    auto * eq_check = eq->add_subcommand("check", "Rado's criterion: is some coefficient subset zero-sum?");
    eq_check->add_option("equation,--equation", eq_text, "Coefficients (1,2,-4) or expression")->required();
    add_output_flags(eq_check);
    eq_check->callback([&] {
        action = [&] {
            auto e = parse_equation(eq_text);
            auto r = call([&](char ** j) { return rk_equation_is_regular(e.get(), nullptr, j); });
            return finish(out, r, 0, [](const Json & p) {
                std::cout << "equation: " << dump_list(p["equation"]) << '\n';
                if (p["regular"].get<bool>())
                    std::cout << "regular: yes, zero-sum subset " << p["subset"].dump() << '\n';
                else
                    std::cout << "regular: no (no nonempty coefficient subset sums to 0)\n";
            });
        };
    });

    auto * eq_canon = eq->add_subcommand("canon", "Canonical integer form");
    eq_canon->add_option("equation,--equation", eq_text)->required();
    add_output_flags(eq_canon);
    eq_canon->callback([&] {
        action = [&] {
            auto e = parse_equation(eq_text);
            auto r = call([&](char ** j) { return rk_equation_json(e.get(), j); });
            return finish(out, r, 0, [](const Json & p) {
                std::cout << p["text"].get<std::string>() << "\ncoefficients: " << dump_list(p["coeffs"])
                          << "\nscale: " << p["scale"].get<std::string>() << '\n';
            });
        };
    });

    int family_n = 3;
    auto * eq_family = eq->add_subcommand("family", "x1 + 2x2 + ... - 2^(n-1)xn = 0");
    eq_family->add_option("-n", family_n, "Number of variables")->required();
    add_output_flags(eq_family);
    auto * eq_at = eq->add_subcommand("at", "Alexeev-Tsimerman equation, canonical integer form");
    eq_at->add_option("-n", family_n, "Number of variables")->required();
    add_output_flags(eq_at);
    auto show_equation = [&](bool at) {
        action = [&, at] {
            rk_equation * e = nullptr;
            check(at ? rk_equation_at(family_n, &e) : rk_equation_family(family_n, &e));
            EquationPtr guard(e);
            auto r = call([&](char ** j) { return rk_equation_json(e, j); });
            return finish(out, r, 0, [](const Json & p) {
                std::cout << p["text"].get<std::string>() << "\ncoefficients: " << dump_list(p["coeffs"]) << '\n';
            });
        };
    };
    eq_family->callback([&] { show_equation(false); });
    eq_at->callback([&] { show_equation(true); });

    std::int64_t max_value = 10;
    std::int64_t max_element = 0;
    std::size_t limit = 0;
    auto * eq_solutions = eq->add_subcommand("solutions", "List positive solutions in a box");
    eq_solutions->add_option("equation,--equation", eq_text)->required();
    eq_solutions->add_option("--max-value", max_value, "Coordinates range over [1, max-value]")->required();
    eq_solutions->add_option("--max-element", max_element, "Only solutions whose largest coordinate is this");
    eq_solutions->add_option("--limit", limit, "Stop after this many solutions");
    eq_solutions->add_flag("--distinct", distinct, "Require pairwise distinct coordinates");
    add_output_flags(eq_solutions);
    eq_solutions->callback([&] {
        action = [&] {
            auto e = parse_equation(eq_text);
            auto r = call([&](char ** j) { return rk_equation_solutions(e.get(), max_value, max_element, distinct, limit, j); });
            return finish(out, r, 0, [](const Json & p) {
                for (const auto & s : p["solutions"])
                    std::cout << dump_list(s) << '\n';
                std::cout << p["count"] << " solution(s)" << (p["truncated"].get<bool>() ? " (truncated)" : "") << '\n';
            });
        };
    });

    // ---- coloring ----
    auto * col = app.add_subcommand("coloring", "Coloring tools");
    col->require_subcommand(1);
    std::string out_path;

    auto * col_verify = col->add_subcommand("verify", "Look for a monochromatic solution");
    col_verify->add_option("equation,--equation", eq_text)->required();
    col_verify->add_option("--coloring", coloring_spec, "const | mod:m | nu2:m | file:path");
    col_verify->add_option("-N", domain, "Check solutions with every coordinate <= N")->required();
    col_verify->add_option("--threads", threads);
    col_verify->add_flag("--distinct", distinct, "Require pairwise distinct coordinates");
    add_output_flags(col_verify);
    col_verify->callback([&] {
        action = [&] {
            auto e = parse_equation(eq_text);
            auto c = make_coloring(coloring_spec, domain);
            auto r = call([&](char ** j) {
                return rk_coloring_verify(c.get(), e.get(), domain, threads, distinct, nullptr, j);
            });
            return finish(out, r, 0, [](const Json & p) {
                std::cout << p["coloring"].get<std::string>() << '\n';
                if (p["verdict"] == "avoiding")
                    std::cout << "avoiding: no monochromatic solution with coordinates <= " << p["up_to"] << '\n';
                else
                    std::cout << "violated: " << dump_list(p["solution"]) << " all color "
                              << p["color"].get<int>() + 1 << '\n';
            });
        };
    });

    auto * col_expand = col->add_subcommand("expand", "Write the coloring in the file format");
    col_expand->add_option("--coloring", coloring_spec);
    col_expand->add_option("-N", domain)->required();
    col_expand->add_option("--out", out_path, "Output file (default stdout)");
    col_expand->callback([&] {
        action = [&] {
            auto c = make_coloring(coloring_spec, domain);
            if (! out_path.empty()) {
                check(rk_coloring_store(c.get(), out_path.c_str()));
                return 0;
            }
            char * text = nullptr;
            check(rk_coloring_text(c.get(), &text));
            std::cout << text;
            rk_string_free(text);
            return 0;
        };
    });

    auto * col_info = col->add_subcommand("info", "Summary of a coloring");
    col_info->add_option("--coloring", coloring_spec);
    col_info->add_option("-N", domain)->required();
    add_output_flags(col_info);
    col_info->callback([&] {
        action = [&] {
            auto c = make_coloring(coloring_spec, domain);
            auto r = call([&](char ** j) { return rk_coloring_info(c.get(), j); });
            return finish(out, r, 0, [](const Json & p) {
                std::cout << p["description"].get<std::string>() << '\n';
                auto sizes = p["class_sizes"];
                for (std::size_t k = 0; k < sizes.size(); ++k)
                    std::cout << "  color " << k + 1 << ": " << sizes[k] << " integers\n";
            });
        };
    });

    // ---- struct ----
    auto * st = app.add_subcommand("struct", "Structures: pigeonhole pairs, progressions, fans, product colorings");
    st->require_subcommand(1);
    int n_vars = 3;
    std::int64_t length = 3, bound = 0, radius = 1, multiplier = 1, mult_bound = 4, half_length = 8;
    std::int64_t max_step = 64, max_base = 0;
    std::uint64_t max_checks = 0, max_progressions = 100000;
    std::string family_eq;

    auto add_coloring_opts = [&](CLI::App * sub) {
        sub->add_option("--coloring", coloring_spec, "const | mod:m | nu2:m | file:path");
        sub->add_option("-N", domain, "Coloring domain bound for families");
    };
    auto family_handle = [&](EquationPtr & holder) -> std::pair<int, rk_equation *> {
        if (family_eq.empty())
            return {n_vars, nullptr};
        holder = parse_equation(family_eq);
        return {0, holder.get()};
    };

    auto * st_pig = st->add_subcommand("pigeonhole", "x and 2^j x of one color among powers of two");
    add_coloring_opts(st_pig);
    st_pig->add_option("-n", n_vars)->required();
    add_output_flags(st_pig);
    st_pig->callback([&] {
        action = [&] {
            auto c = make_coloring(coloring_spec, domain);
            auto r = call([&](char ** j) { return rk_pigeonhole_powers(c.get(), n_vars, j); });
            return finish(out, r, 0, [](const Json & p) {
                std::cout << "x = " << p["x"] << ", j = " << p["j"] << ": " << p["x"] << " and " << p["partner"]
                          << " have color " << p["color"].get<int>() + 1 << '\n';
            });
        };
    });

    auto * st_ap = st->add_subcommand("ap", "Monochromatic arithmetic progression");
    add_coloring_opts(st_ap);
    st_ap->add_option("--length", length, "Odd progression length");
    st_ap->add_option("--bound", bound, "Search inside [1, bound] (default N)");
    add_output_flags(st_ap);
    st_ap->callback([&] {
        action = [&] {
            auto c = make_coloring(coloring_spec, domain);
            std::int64_t b = bound > 0 ? bound : rk_coloring_domain_bound(c.get());
            auto r = call([&](char ** j) { return rk_find_progression(c.get(), length, b, j); });
            return finish(out, r, 0, [](const Json & p) {
                if (p["status"] == "found") {
                    auto ap = p["progression"];
                    std::cout << "center " << ap["center"] << ", step " << ap["step"] << ", half-length "
                              << ap["half_length"] << ", color " << ap["color"].get<int>() + 1 << '\n';
                }
                else
                    std::cout << "no monochromatic progression of length " << p["length"] << " in [1, "
                              << p["search_bound"] << "]\n";
            });
        };
    });

    auto * st_product = st->add_subcommand("product", "Product coloring a ~ b iff c(a i) = c(b i), i <= R");
    add_coloring_opts(st_product);
    st_product->add_option("-R", mult_bound)->required();
    st_product->add_option("--out", out_path, "Write the product coloring to a file");
    add_output_flags(st_product);
    st_product->callback([&] {
        action = [&] {
            auto c = make_coloring(coloring_spec, domain);
            rk_coloring * prod = nullptr;
            auto r = call([&](char ** j) { return rk_product_coloring(c.get(), mult_bound, &prod, j); });
            ColoringPtr guard(prod);
            if (! out_path.empty())
                check(rk_coloring_store(prod, out_path.c_str()));
            return finish(out, r, 0, [](const Json & p) {
                std::cout << p["num_colors"] << " product colors on [1, " << p["domain_bound"] << "]\n";
            });
        };
    });

    auto add_family_opts = [&](CLI::App * sub) {
        sub->add_option("-n", n_vars, "Powers-of-two family (2^j b, b), 1 <= j <= n-1");
        sub->add_option("--family-eq", family_eq, "Use the coefficient-pair family of this equation instead");
    };

    auto * st_fan = st->add_subcommand("fan", "Monochromatic fan {b + l d : |l| <= M} with q d");
    add_coloring_opts(st_fan);
    add_family_opts(st_fan);
    st_fan->add_option("--radius,-M", radius)->required();
    st_fan->add_option("--multiplier,-q", multiplier)->required();
    st_fan->add_option("--max-step", max_step);
    st_fan->add_option("--max-base", max_base);
    st_fan->add_option("--max-checks", max_checks);
    add_output_flags(st_fan);
    st_fan->callback([&] {
        action = [&] {
            auto c = make_coloring(coloring_spec, domain);
            EquationPtr holder;
            auto [fn, fe] = family_handle(holder);
            auto budget = fan_budget(max_step, max_base, max_checks);
            auto r = call([&](char ** j) { return rk_find_fan(c.get(), fn, fe, radius, multiplier, &budget, j); });
            return finish(out, r, 0, [](const Json & p) {
                if (p["fan"].is_null()) {
                    std::cout << "no fan with step <= " << p["steps_searched"] << " and base <= " << p["base_bound"] << '\n';
                    return;
                }
                auto f = p["fan"];
                std::cout << "base " << dump_list(f["base"]) << ", step " << f["step"] << ", radius " << f["radius"]
                          << ", q d = " << f["multiplier_times_step"] << ", color " << f["color"].get<int>() + 1 << '\n';
            });
        };
    });

    auto * st_lemma = st->add_subcommand("fan-chain", "Product coloring -> progression -> rescaled monochromatic fan");
    add_coloring_opts(st_lemma);
    add_family_opts(st_lemma);
    st_lemma->add_option("--radius,-M", radius)->required();
    st_lemma->add_option("-R", mult_bound)->required();
    st_lemma->add_option("--half-length,-K", half_length);
    st_lemma->add_option("--max-progressions", max_progressions);
    add_output_flags(st_lemma);
    st_lemma->callback([&] {
        action = [&] {
            auto c = make_coloring(coloring_spec, domain);
            EquationPtr holder;
            auto [fn, fe] = family_handle(holder);
            auto r = call([&](char ** j) {
                return rk_fan_chain(c.get(), fn, fe, radius, mult_bound, half_length, max_progressions, j);
            });
            return finish(out, r, 0, [](const Json & p) {
                if (p["status"] != "found") {
                    std::cout << "budget exhausted at stage: " << p["stage"].get<std::string>() << '\n';
                    return;
                }
                auto t = p["trace"];
                std::cout << "progression center " << t["progression"]["center"] << " step " << t["progression"]["step"]
                          << " in the product coloring (" << t["product_signatures"].size() << " colors)\n"
                          << "base " << dump_list(t["base"]) << ", lcm " << t["lcm"] << ", rescaled step "
                          << t["rescaled_step"] << ", radius " << t["radius"] << '\n';
            });
        };
    });

    // ---- construct ----
    auto * con = app.add_subcommand("construct", "Explicit monochromatic solutions");
    con->require_subcommand(1);
    std::string b_text, d_text = "1", x_text, k_text, base_text, extra_text;
    int j_index = 0, i_index = 0;
    bool use_coloring = false;

    auto * con_t1 = con->add_subcommand("theorem1", "x1 + 2x2 + ... - 2^(n-1)xn = 0 from a fan, or from given j, b, d");
    con_t1->add_option("-n", family_n)->required();
    add_coloring_opts(con_t1);
    con_t1->add_option("-j", j_index, "Build directly from j, b, d instead of a coloring");
    con_t1->add_option("--b", b_text);
    con_t1->add_option("--d", d_text);
    con_t1->add_option("--max-step", max_step);
    con_t1->add_option("--max-base", max_base);
    con_t1->add_option("--max-checks", max_checks);
    add_output_flags(con_t1);
    con_t1->callback([&] {
        action = [&] {
            auto print_tuple = [](const Json & p) {
                if (p.contains("proof")) {
                    auto pr = p["proof"];
                    std::cout << "pigeonhole: x = " << pr["pigeonhole"]["x"] << ", j = " << pr["pigeonhole"]["j"] << '\n'
                              << "fan: base " << dump_list(pr["fan"]["base"]) << ", step " << pr["fan"]["step"] << '\n'
                              << "lambdas " << dump_list(pr["lambdas"]) << '\n'
                              << "solution " << dump_list(pr["tuple"]) << ", color " << pr["color"].get<int>() + 1
                              << " (verified)\n";
                }
                else if (p.contains("tuple"))
                    std::cout << "solution " << dump_list(p["tuple"]["values"]) << ", lambdas "
                              << dump_list(p["tuple"]["lambdas"]) << ", residual " << p["residual"].get<std::string>() << '\n';
                else
                    std::cout << "no fan within step <= " << p["search"]["steps_searched"] << '\n';
            };
            auto t0 = std::chrono::steady_clock::now();
            Result r;
            if (j_index > 0) {
                if (b_text.empty())
                    throw CallFailed{RK_ERR_INVALID_ARGUMENT, "--b is required with -j"};
                r = call([&](char ** j) { return rk_build_theorem1(family_n, j_index, b_text.c_str(), d_text.c_str(), j); });
            }
            else {
                auto c = make_coloring(coloring_spec, domain);
                auto budget = fan_budget(max_step, max_base, max_checks);
                r = call([&](char ** j) { return rk_prove_theorem1(c.get(), family_n, &budget, j); });
            }
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            return finish(out, r, secs, print_tuple);
        };
    });

    auto * con_at = con->add_subcommand("at", "Alexeev-Tsimerman equation: x(i+1) = x, others 2^i x");
    con_at->add_option("-n", family_n)->required();
    add_coloring_opts(con_at);
    con_at->add_option("-i", i_index, "Build directly from i and --x instead of a coloring");
    con_at->add_option("--x", x_text);
    add_output_flags(con_at);
    con_at->callback([&] {
        action = [&] {
            Result r;
            if (i_index > 0) {
                if (x_text.empty())
                    throw CallFailed{RK_ERR_INVALID_ARGUMENT, "--x is required with -i"};
                r = call([&](char ** j) { return rk_build_at(family_n, i_index, x_text.c_str(), j); });
            }
            else {
                auto c = make_coloring(coloring_spec, domain);
                r = call([&](char ** j) { return rk_prove_at(c.get(), family_n, j); });
            }
            return finish(out, r, 0, [](const Json & p) {
                if (p.contains("pigeonhole"))
                    std::cout << "equation " << dump_list(p["equation"]["coeffs"]) << "\npigeonhole: x = "
                              << p["pigeonhole"]["x"] << ", i = " << p["pigeonhole"]["j"] << "\nsolution "
                              << dump_list(p["tuple"]) << ", color " << p["color"].get<int>() + 1 << " (verified)\n";
                else
                    std::cout << "equation " << dump_list(p["equation"]) << "\nsolution " << dump_list(p["tuple"]["values"])
                              << ", residual " << p["residual"].get<std::string>() << '\n';
            });
        };
    });

    auto * con_ext = con->add_subcommand("extend", "Append terms b1 x(n+1) + ... + bk x(n+k) to a solved equation");
    con_ext->add_option("equation,--equation", eq_text)->required();
    con_ext->add_option("--base", base_text, "Solution y1,...,yn of the equation")->required();
    con_ext->add_option("--b", extra_text, "Added coefficients b1,...,bk (rationals allowed)")->required();
    con_ext->add_option("--d", d_text);
    add_output_flags(con_ext);
    con_ext->callback([&] {
        action = [&] {
            auto e = parse_equation(eq_text);
            auto r = call([&](char ** j) {
                return rk_build_extension(e.get(), base_text.c_str(), extra_text.c_str(), d_text.c_str(), j);
            });
            return finish(out, r, 0, [](const Json & p) {
                std::cout << "extended equation " << dump_list(p["extended_equation"]) << "\nsolution "
                          << dump_list(p["tuple"]["values"]) << (p["sign_adjusted"].get<bool>() ? " (a1 < 0: used |a1| d)" : "")
                          << ", residual " << p["residual"].get<std::string>() << '\n';
            });
        };
    });

    auto * con_hyp = con->add_subcommand("hyperplane", "Solution with at most one coefficient sign flipped");
    con_hyp->add_option("equation,--equation", eq_text)->required();
    con_hyp->add_option("--i", i_index, "First index (1-based, default 1)");
    con_hyp->add_option("--j", j_index, "Second index (1-based, default 2)");
    con_hyp->add_option("--k", k_text, "Scale k of the pair (|ai| k, |aj| k)");
    con_hyp->add_option("--d", d_text);
    con_hyp->add_option("--coloring", coloring_spec, "Search a fan in this coloring instead of using --k/--d");
    con_hyp->add_option("-N", domain);
    con_hyp->add_option("--max-step", max_step);
    con_hyp->add_option("--max-base", max_base);
    add_output_flags(con_hyp);
    con_hyp->callback([&] {
        use_coloring = con_hyp->count("--coloring") > 0;
        action = [&] {
            auto e = parse_equation(eq_text);
            Result r;
            if (use_coloring) {
                auto c = make_coloring(coloring_spec, domain);
                auto budget = fan_budget(max_step, max_base, max_checks);
                r = call([&](char ** j) { return rk_prove_hyperplane(c.get(), e.get(), &budget, j); });
            }
            else {
                if (k_text.empty())
                    throw CallFailed{RK_ERR_INVALID_ARGUMENT, "--k is required without --coloring"};
                std::size_t i = i_index > 0 ? static_cast<std::size_t>(i_index) : 1;
                std::size_t j = j_index > 0 ? static_cast<std::size_t>(j_index) : 2;
                r = call([&](char ** out_json) {
                    return rk_build_hyperplane(e.get(), i, j, k_text.c_str(), d_text.c_str(), out_json);
                });
            }
            return finish(out, r, 0, [](const Json & p) {
                const Json & s = p.contains("solution") ? p["solution"] : p;
                if (s.is_null() || ! s.contains("tuple")) {
                    std::cout << "no fan within the budget\n";
                    return;
                }
                std::cout << "solution " << dump_list(s["tuple"]["values"]) << " with signs " << dump_list(s["flips"])
                          << ", P = " << s["P"].get<std::string>() << '\n';
            });
        };
    });

    // ---- search ----
    auto * se = app.add_subcommand("search", "Certified coloring search");
    se->require_subcommand(1);
    int colors = 2, r_max = 3;
    std::int64_t n_bound = 0, max_n = 200, evidence_bound = 0;
    std::uint64_t node_budget = 0;
    double seconds_budget = 0;
    std::string seed_path;

    auto add_search_opts = [&](CLI::App * sub) {
        sub->add_option("equation,--equation", eq_text)->required();
        sub->add_option("--budget", node_budget, "Node limit (0 = unlimited)");
        sub->add_option("--seconds", seconds_budget, "Wall-clock limit (0 = unlimited)");
        sub->add_option("--threads", threads, "Worker threads (1 = deterministic)");
        sub->add_flag("--distinct", distinct, "Only count solutions with distinct values (not a certificate)");
        add_output_flags(sub);
    };
    auto options = [&](std::vector<int> & seed) {
        rk_search_options o{node_budget, seconds_budget, threads, distinct ? 1 : 0, nullptr, 0};
        if (! seed_path.empty()) {
            seed = read_seed(seed_path);
            o.seed = seed.data();
            o.seed_len = seed.size();
        }
        return o;
    };

    auto * se_avoid = se->add_subcommand("avoid", "Find an avoiding r-coloring of [1, N] or prove none exists");
    add_search_opts(se_avoid);
    se_avoid->add_option("-r", colors)->required();
    se_avoid->add_option("-N", n_bound)->required();
    se_avoid->add_option("--seed-witness", seed_path, "Coloring file to resume from");
    se_avoid->add_option("--out", out_path, "Write a witness to this coloring file");
    se_avoid->callback([&] {
        action = [&] {
            auto e = parse_equation(eq_text);
            std::vector<int> seed;
            auto o = options(seed);
            auto t0 = std::chrono::steady_clock::now();
            auto r = call([&](char ** j) { return rk_search_avoid(e.get(), colors, n_bound, &o, j); });
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            write_witness(out_path, colors, r.payload["witness"]);
            return finish(out, r, secs, [](const Json & p) {
                std::cout << "outcome: " << p["outcome"].get<std::string>() << " (r = " << p["r"] << ", N = " << p["N"]
                          << ", " << p["stats"]["nodes"] << " nodes)\n";
                if (p["outcome"] == "witness")
                    std::cout << "witness colors of 1..N: " << dump_list(p["witness"]) << '\n';
                else if (p["outcome"] == "exhausted")
                    std::cout << "every coloring has a monochromatic solution\n";
            });
        };
    });

    auto * se_rado = se->add_subcommand("rado", "Least N such that every r-coloring of [1, N] has a monochromatic solution");
    add_search_opts(se_rado);
    se_rado->add_option("-r", colors)->required();
    se_rado->add_option("--max-n", max_n);
    se_rado->add_option("--seed-witness", seed_path, "Coloring file to resume from");
    se_rado->add_option("--out", out_path, "Write the surviving witness to this coloring file");
    se_rado->callback([&] {
        action = [&] {
            auto e = parse_equation(eq_text);
            std::vector<int> seed;
            auto o = options(seed);
            auto t0 = std::chrono::steady_clock::now();
            auto r = call([&](char ** j) { return rk_search_rado(e.get(), colors, max_n, &o, j); });
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            write_witness(out_path, colors, r.payload["witness"]);
            return finish(out, r, secs, [](const Json & p) {
                if (p["status"] == "found")
                    std::cout << p["value"] << '\n';
                else
                    std::cout << "unknown: an avoiding coloring of [1, " << p["witness_bound"] << "] survives\n";
            });
        };
    });

    auto * se_dor = se->add_subcommand("dor", "Degree-of-regularity report for r = 1..r-max");
    add_search_opts(se_dor);
    se_dor->add_option("--r-max", r_max);
    se_dor->add_option("--evidence-bound", evidence_bound, "Largest N tried per r (default 60)");
    se_dor->callback([&] {
        action = [&] {
            auto e = parse_equation(eq_text);
            std::vector<int> seed;
            auto o = options(seed);
            std::int64_t ev = evidence_bound > 0 ? evidence_bound : 60;
            auto t0 = std::chrono::steady_clock::now();
            auto r = call([&](char ** j) { return rk_search_dor(e.get(), r_max, ev, &o, j); });
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            return finish(out, r, secs, [](const Json & p) {
                std::cout << "equation " << dump_list(p["equation"]) << (p["is_regular"].get<bool>() ? " is regular" : " is not regular")
                          << '\n';
                std::printf("%4s  %-30s  %12s  %14s\n", "r", "status", "rado number", "witness bound");
                for (const auto & row : p["rows"]) {
                    std::string rn = row["rado_number"].is_null() ? "-" : row["rado_number"].dump();
                    std::printf("%4d  %-30s  %12s  %14lld\n", row["r"].get<int>(), row["status"].get<std::string>().c_str(),
                        rn.c_str(), static_cast<long long>(row["witness_bound"].get<std::int64_t>()));
                }
                auto show = [](const Json & v) { return v.is_null() ? std::string("-") : v.dump(); };
                std::cout << "certified lower bound: " << show(p["certified_lower"])
                          << ", evidence upper bound: " << show(p["evidence_upper"]) << '\n';
            });
        };
    });

    auto args = normalize_args(argc, argv);
    try {
        app.parse(args);
    }
    catch (const CLI::ParseError & e) {
        return app.exit(e);
    }

    try {
        return action ? action() : 1;
    }
    catch (const CallFailed & f) {
        if (out.json) {
            Json env{{"status", "error"}, {"payload", nullptr}, {"error", Json{{"code", rk_status_name(f.status)}, {"message", f.message}}}};
            std::cout << env.dump(2) << '\n';
        }
        else
            std::cerr << "error (" << rk_status_name(f.status) << "): " << f.message << '\n';
        return 1;
    }
}
