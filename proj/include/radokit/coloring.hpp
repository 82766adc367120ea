#pragma once

#include <radokit/common.hpp>
#include <radokit/equation.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace radokit {

/// Builtin coloring families: constant, x mod m, and nu2(x) mod m where nu2 is
/// the 2-adic valuation.
struct FamilyDescriptor {
    enum class Kind { constant, mod, nu2mod };

    Kind kind = Kind::constant;
    std::int64_t modulus = 1;

    auto color(std::int64_t x) const -> int;
    auto describe() const -> std::string;

    friend auto operator==(const FamilyDescriptor &, const FamilyDescriptor &) -> bool = default;
};

auto nu2(std::int64_t x) -> int;

/// An r-coloring of [1, N]. Colors are 0-based.
class Coloring {
public:
    static auto constant(std::int64_t domain_bound) -> Coloring;
    static auto modulo(std::int64_t m, std::int64_t domain_bound) -> Coloring;
    static auto nu2_modulo(std::int64_t m, std::int64_t domain_bound) -> Coloring;
    static auto family(FamilyDescriptor family, int num_colors, std::int64_t domain_bound) -> Coloring;
    /// colors[i] is the color of i + 1.
    static auto explicit_colors(int num_colors, std::vector<int> colors) -> Coloring;

    auto num_colors() const -> int { return num_colors_; }
    auto domain_bound() const -> std::int64_t { return domain_bound_; }
    auto is_explicit() const -> bool { return std::holds_alternative<std::vector<int>>(source_); }
    auto family_descriptor() const -> std::optional<FamilyDescriptor>;

    /// Throws ErrorKind::domain when x is outside [1, N].
    auto color_of(std::int64_t x) const -> int;

    /// No range check.
    auto operator()(std::int64_t x) const -> int
    {
        if (auto e = std::get_if<std::vector<int>>(&source_))
            return (*e)[static_cast<std::size_t>(x - 1)];
        return std::get<FamilyDescriptor>(source_).color(x);
    }

    auto expand() const -> Coloring;
    auto colors() const -> std::vector<int>;
    auto restricted(std::int64_t new_bound) const -> Coloring;
    auto describe() const -> std::string;

    friend auto operator==(const Coloring &, const Coloring &) -> bool = default;

private:
    Coloring() = default;

    int num_colors_ = 1;
    std::int64_t domain_bound_ = 1;
    std::variant<std::vector<int>, FamilyDescriptor> source_;
};

/// "const", "mod:m", "nu2:m" or "file:path". Family colorings take the given
/// domain bound; files carry their own.
auto parse_coloring_spec(std::string_view spec, std::int64_t domain_bound) -> Coloring;

/// File format: header "r N", then N whitespace-separated color indices for 1..N.
auto read_coloring(std::istream & in) -> Coloring;
void write_coloring(std::ostream & out, const Coloring & c);
auto load_coloring(const std::filesystem::path & path) -> Coloring;
void store_coloring(const Coloring & c, const std::filesystem::path & path);

struct AvoidanceVerdict {
    bool avoiding = true;
    std::optional<SolutionTuple> violation;
    int color = -1;
};

/// Scans solutions by largest coordinate ascending, then lexicographically, and
/// returns the first monochromatic one with every coordinate <= up_to.
auto verify_avoiding(const Coloring & c, const LinearEquation & eq, std::int64_t up_to, unsigned threads = 1,
    bool distinct = false) -> AvoidanceVerdict;

}
