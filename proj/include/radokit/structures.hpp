#pragma once

#include <radokit/coloring.hpp>
#include <radokit/common.hpp>
#include <radokit/equation.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace radokit {

/// c(x) == c(2^j x).
struct PigeonholeWitness {
    std::int64_t x = 0;
    int j = 0;
    int color = 0;
};

/// Among 1, 2, 4, ..., 2^(n-1) finds the first pair s < t with equal colors and
/// reports x = 2^s, j = t - s. Throws ErrorKind::domain if the coloring does not
/// reach 2^(n-1), ErrorKind::verification if no pair exists (only possible with
/// r >= n colors).
auto pigeonhole_powers(const Coloring & c, int n) -> PigeonholeWitness;

/// {a + l d : |l| <= half_length}, one color.
struct APWitness {
    std::int64_t center = 0;
    std::int64_t step = 0;
    std::int64_t half_length = 0;
    int color = 0;
};

/// Monochromatic progression of odd `length` inside [1, search_bound],
/// minimizing (step, center). std::nullopt when none fits.
auto find_monochromatic_ap(const Coloring & c, std::int64_t length, std::int64_t search_bound) -> std::optional<APWitness>;

struct ProductColoring {
    std::int64_t multiplier_bound = 0; // R
    Coloring coloring;                 // on [1, floor(N / R)]
    /// signatures[k] = (c(a), c(2a), ..., c(Ra)) for every a of product color k.
    std::vector<std::vector<int>> signatures;
};

/// a and b share a color iff c(a i) == c(b i) for 1 <= i <= R. Colors are
/// numbered by first appearance.
auto product_coloring(const Coloring & c, std::int64_t multiplier_bound) -> ProductColoring;

/// The two homogeneous families used by the constructions: pairs (2^j b, b)
/// with 1 <= j <= n-1, and pairs (|ai| k, |aj| k) with i < j for a given equation.
class HomogeneousFamily {
public:
    enum class Kind { powers_of_two, coefficient_pairs };

    static auto powers_of_two(int n) -> HomogeneousFamily;
    static auto coefficient_pairs(const LinearEquation & eq) -> HomogeneousFamily;

    auto kind() const -> Kind { return kind_; }
    auto n() const -> int { return n_; }
    auto magnitudes() const -> const std::vector<std::int64_t> & { return magnitudes_; }
    auto describe() const -> std::string;

    struct Member {
        std::vector<std::int64_t> elements;
        int j = 0;            // powers_of_two: elements = (2^j k, k)
        std::size_t i_index = 0; // coefficient_pairs: 0-based (i, j), elements = (|ai| k, |aj| k)
        std::size_t j_index = 0;
        std::int64_t scale = 0;  // k
    };

    /// Members whose largest element is <= bound, ordered by largest element,
    /// then elements lexicographically, then generating index.
    auto members_up_to(std::int64_t bound) const -> std::vector<Member>;
    /// Members whose largest element is exactly `largest`, in the same order.
    auto members_with_largest(std::int64_t largest) const -> std::vector<Member>;

    /// Generators with scale 1 (the pigeonhole candidates).
    auto generators() const -> std::vector<Member>;

    auto contains(const std::vector<std::int64_t> & elements) const -> bool;

private:
    Kind kind_ = Kind::powers_of_two;
    int n_ = 2;
    std::vector<std::int64_t> magnitudes_;
};

/// {b + l d : b in base, |l| <= radius} together with q d, all one color.
struct MonochromaticFan {
    HomogeneousFamily::Member member;
    std::int64_t step = 0;
    std::int64_t radius = 0;
    std::int64_t multiplier = 0;
    int color = 0;

    auto base() const -> const std::vector<std::int64_t> & { return member.elements; }
};

struct FanBudget {
    std::int64_t max_step = 64;
    /// Largest family-member element tried; 0 means the coloring's domain bound.
    std::int64_t max_base = 0;
    std::uint64_t max_checks = 0;
};

struct FanSearch {
    std::optional<MonochromaticFan> fan;
    std::int64_t steps_searched = 0;
    std::int64_t base_bound = 0;
    std::uint64_t checks = 0;
};

/// Direct search over (step ascending, member ascending); returns the first fan
/// that fits inside the coloring domain.
auto find_fan(const Coloring & c, const HomogeneousFamily & family, std::int64_t radius, std::int64_t multiplier,
    const FanBudget & budget) -> FanSearch;

struct Lemma22Budget {
    std::int64_t ap_half_length = 8; // K
    std::uint64_t max_progressions = 100000;
};

struct Lemma22Trace {
    std::int64_t multiplier_bound = 0; // R
    std::vector<std::vector<int>> signatures;
    APWitness progression;             // in the product coloring
    std::vector<std::int64_t> multipliers; // b_i, so the base is a * b_i
    std::vector<std::int64_t> base;
    HomogeneousFamily::Member member;
    std::int64_t lcm = 0;              // y
    std::int64_t rescaled_step = 0;    // d' = d * y
    std::int64_t radius = 0;           // requested fan radius
    int color = 0;
};

struct Lemma22Result {
    std::optional<Lemma22Trace> trace;
    /// "product", "progression" or "extract" when no trace was produced.
    std::string exhausted_stage;
};

/// Builds the product coloring, looks for a progression of length 2K+1 in it,
/// extracts a monochromatic family member from {a, 2a, ..., Ra} and rescales
/// the step by the lcm of its multipliers.
auto lemma22_demonstrate(const Coloring & c, const HomogeneousFamily & family, std::int64_t radius,
    std::int64_t multiplier_bound, const Lemma22Budget & budget) -> Lemma22Result;

}
