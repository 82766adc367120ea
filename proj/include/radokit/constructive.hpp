#pragma once

#include <radokit/coloring.hpp>
#include <radokit/common.hpp>
#include <radokit/equation.hpp>
#include <radokit/structures.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace radokit {

/// Parametrized solution of x1 + 2x2 + ... + 2^(n-2)x(n-1) - 2^(n-1)xn = 0:
/// every coordinate is 2^(n-1) d except x(n-j) = 2^j b + l1 d and xn = b + l2 d,
/// with l2 = 2^(n-1) and l1 = 2^(n-1) + 2^j. lambdas = (l1, l2).
auto build_theorem1_solution(int n, int j, const BigInt & b, const BigInt & d) -> SolutionTuple;

/// x(i+1) = x and every other coordinate 2^i x; solves at_equation(n).
auto build_at_solution(int n, int i, const BigInt & x) -> SolutionTuple;

struct ExtensionSolution {
    SolutionTuple tuple; // x1..xn followed by the k appended coordinates; lambdas = (l1)
    bool sign_adjusted = false;
};

/// Extends a solution y of sum ai yi = 0 to a solution of
/// sum ai xi + b1 x(n+1) + ... + bk x(n+k) = 0 with x1 = y1 + l1 d, x(n+1..n+k) = |a1| d.
/// l1 = -(b1 + ... + bk) when a1 > 0; for a1 < 0 the appended coordinates use
/// |a1| d and l1 changes sign. Throws ErrorKind::domain if b_sum d is not an
/// integer or a coordinate would not be positive.
auto build_theorem41_solution(std::span<const BigInt> base, const BigInt & a1, const Rational & b_sum, std::size_t k,
    const BigInt & d) -> ExtensionSolution;

/// Coefficients of the extended equation, a1..an then b1..bk (not canonicalized).
auto extended_coefficients(const LinearEquation & eq, std::span<const Rational> extra) -> std::vector<Rational>;

struct HyperplaneSolution {
    SolutionTuple tuple;      // lambdas = (l1, l2)
    std::vector<int> flips;   // f(1..n), each +1 or -1
    std::optional<std::size_t> flipped_index; // 0-based
    BigInt product;           // P = |a1 ... an|
};

/// Monochromatic-parametrization solution on one of the n+1 sign-flipped
/// hyperplanes. i < j are 0-based. Throws ErrorKind::domain when the chosen k
/// leaves a coordinate below 1 (the message names the smallest k that works).
auto build_theorem42_solution(const LinearEquation & eq, std::size_t i, std::size_t j, const BigInt & k, const BigInt & d)
    -> HyperplaneSolution;

/// l1 for the pair (i, j): -P * (sum of a_l, l != i, j) / (f(i) a_i).
auto theorem42_lambda(const LinearEquation & eq, std::size_t i, std::size_t j) -> BigInt;

struct Theorem1Proof {
    int n = 0;
    PigeonholeWitness pigeonhole;
    MonochromaticFan fan;
    SolutionTuple tuple;
    int color = 0;
};

struct Theorem1Outcome {
    std::optional<Theorem1Proof> proof;
    FanSearch search;
};

/// Pigeonhole over powers of two, then a fan for the (2^j b, b) family with
/// radius 2^n and multiplier 2^(n-1), then the parametrized solution. The
/// result is checked against the coloring and the equation before returning.
auto prove_theorem1(const Coloring & c, int n, const FanBudget & budget) -> Theorem1Outcome;

struct AtProof {
    int n = 0;
    PigeonholeWitness pigeonhole;
    SolutionTuple tuple;
    int color = 0;
};

/// Monochromatic solution of at_equation(n) from a pigeonhole pair x, 2^i x.
auto prove_at(const Coloring & c, int n) -> AtProof;

struct HyperplaneProof {
    MonochromaticFan fan;
    HyperplaneSolution solution;
    int color = 0;
};

struct HyperplaneOutcome {
    std::optional<HyperplaneProof> proof;
    FanSearch search;
};

/// Fan over (|ai| k, |aj| k) with multiplier P and radius max |l1|, then the
/// sign-flipped parametrization. Verified before returning.
auto prove_hyperplane(const Coloring & c, const LinearEquation & eq, const FanBudget & budget) -> HyperplaneOutcome;

}
