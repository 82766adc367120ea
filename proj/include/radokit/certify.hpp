#pragma once

// Independent re-verification of everything the searchers and builders return.
// Nothing here calls into the search code paths.

#include <radokit/coloring.hpp>
#include <radokit/constructive.hpp>
#include <radokit/equation.hpp>
#include <radokit/search.hpp>
#include <radokit/structures.hpp>

#include <string>

namespace radokit {

struct Verdict {
    bool ok = true;
    std::string reason;

    explicit operator bool() const { return ok; }

    static auto pass() -> Verdict { return {}; }
    static auto failure(std::string why) -> Verdict { return {false, std::move(why)}; }
};

auto check_pigeonhole(const Coloring & c, int n, const PigeonholeWitness & w) -> Verdict;
auto check_progression(const Coloring & c, const APWitness & ap) -> Verdict;
auto check_product_coloring(const Coloring & c, const ProductColoring & p) -> Verdict;
auto check_fan(const Coloring & c, const HomogeneousFamily & family, const MonochromaticFan & fan) -> Verdict;
auto check_lemma22(const Coloring & c, const HomogeneousFamily & family, const Lemma22Trace & t) -> Verdict;

/// Positive values, residual exactly zero, every coordinate the same color.
auto check_monochromatic_solution(const Coloring & c, const LinearEquation & eq, const SolutionTuple & t) -> Verdict;

/// Brute force over [1, N]^n; independent of the pruned enumerator.
auto check_avoiding_bruteforce(const Coloring & c, const LinearEquation & eq, std::int64_t up_to) -> Verdict;

auto check_theorem1_proof(const Coloring & c, const Theorem1Proof & p) -> Verdict;
auto check_hyperplane_solution(const LinearEquation & eq, const HyperplaneSolution & s) -> Verdict;
auto check_certificate(const SearchCertificate & cert) -> Verdict;

}
