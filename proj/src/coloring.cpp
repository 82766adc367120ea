#include <radokit/coloring.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <istream>
#include <ostream>
#include <sstream>

namespace radokit {

auto nu2(std::int64_t x) -> int { return x == 0 ? 0 : __builtin_ctzll(static_cast<unsigned long long>(x)); }

auto FamilyDescriptor::color(std::int64_t x) const -> int
{
    switch (kind) {
    case Kind::constant: return 0;
    case Kind::mod: return static_cast<int>(x % modulus);
    case Kind::nu2mod: return nu2(x) % static_cast<int>(modulus);
    }
    return 0;
}

auto FamilyDescriptor::describe() const -> std::string
{
    switch (kind) {
    case Kind::constant: return "const";
    case Kind::mod: return "mod:" + std::to_string(modulus);
    case Kind::nu2mod: return "nu2:" + std::to_string(modulus);
    }
    return "?";
}

auto Coloring::family(FamilyDescriptor family, int num_colors, std::int64_t domain_bound) -> Coloring
{
    if (domain_bound < 1)
        fail(ErrorKind::invalid_argument, "domain bound must be >= 1");
    if (family.modulus < 1)
        fail(ErrorKind::invalid_argument, "modulus must be >= 1");
    std::int64_t needed = family.kind == FamilyDescriptor::Kind::constant ? 1 : family.modulus;
    if (num_colors < needed)
        fail(ErrorKind::invalid_argument,
            family.describe() + " needs at least " + std::to_string(needed) + " colors, got " + std::to_string(num_colors));
    Coloring c;
    c.num_colors_ = num_colors;
    c.domain_bound_ = domain_bound;
    c.source_ = family;
    return c;
}

auto Coloring::constant(std::int64_t domain_bound) -> Coloring
{
    return family({FamilyDescriptor::Kind::constant, 1}, 1, domain_bound);
}

auto Coloring::modulo(std::int64_t m, std::int64_t domain_bound) -> Coloring
{
    return family({FamilyDescriptor::Kind::mod, m}, static_cast<int>(m), domain_bound);
}

auto Coloring::nu2_modulo(std::int64_t m, std::int64_t domain_bound) -> Coloring
{
    return family({FamilyDescriptor::Kind::nu2mod, m}, static_cast<int>(m), domain_bound);
}

auto Coloring::explicit_colors(int num_colors, std::vector<int> colors) -> Coloring
{
    if (num_colors < 1)
        fail(ErrorKind::invalid_argument, "a coloring needs at least one color");
    if (colors.empty())
        fail(ErrorKind::invalid_argument, "an explicit coloring needs N >= 1 entries");
    for (std::size_t i = 0; i < colors.size(); ++i)
        if (colors[i] < 0 || colors[i] >= num_colors)
            fail(ErrorKind::invalid_argument, "color " + std::to_string(colors[i]) + " of " + std::to_string(i + 1)
                    + " is outside [0, " + std::to_string(num_colors - 1) + "]");
    Coloring c;
    c.num_colors_ = num_colors;
    c.domain_bound_ = static_cast<std::int64_t>(colors.size());
    c.source_ = std::move(colors);
    return c;
}

auto Coloring::family_descriptor() const -> std::optional<FamilyDescriptor>
{
    if (auto f = std::get_if<FamilyDescriptor>(&source_))
        return *f;
    return std::nullopt;
}

auto Coloring::color_of(std::int64_t x) const -> int
{
    if (x < 1 || x > domain_bound_)
        fail(ErrorKind::domain, std::to_string(x) + " is outside the coloring domain [1, " + std::to_string(domain_bound_) + "]");
    return (*this)(x);
}

auto Coloring::colors() const -> std::vector<int>
{
    if (auto e = std::get_if<std::vector<int>>(&source_))
        return *e;
    std::vector<int> out(static_cast<std::size_t>(domain_bound_));
    for (std::int64_t x = 1; x <= domain_bound_; ++x)
        out[static_cast<std::size_t>(x - 1)] = (*this)(x);
    return out;
}

auto Coloring::expand() const -> Coloring { return explicit_colors(num_colors_, colors()); }

auto Coloring::restricted(std::int64_t new_bound) const -> Coloring
{
    if (new_bound < 1 || new_bound > domain_bound_)
        fail(ErrorKind::domain, "cannot restrict a coloring of [1, " + std::to_string(domain_bound_) + "] to [1, "
                + std::to_string(new_bound) + "]");
    if (auto f = std::get_if<FamilyDescriptor>(&source_))
        return family(*f, num_colors_, new_bound);
    auto e = std::get<std::vector<int>>(source_);
    e.resize(static_cast<std::size_t>(new_bound));
    return explicit_colors(num_colors_, std::move(e));
}

auto Coloring::describe() const -> std::string
{
    std::string src = is_explicit() ? std::string("explicit") : std::get<FamilyDescriptor>(source_).describe();
    return src + " (" + std::to_string(num_colors_) + " colors on [1, " + std::to_string(domain_bound_) + "])";
}

auto parse_coloring_spec(std::string_view spec, std::int64_t domain_bound) -> Coloring
{
    if (spec == "const")
        return Coloring::constant(domain_bound);
    auto colon = spec.find(':');
    if (colon == std::string_view::npos)
        fail(ErrorKind::parse, "unknown coloring spec \"" + std::string(spec) + "\" (expected const | mod:m | nu2:m | file:path)");
    auto head = spec.substr(0, colon);
    auto tail = std::string(spec.substr(colon + 1));
    if (head == "file")
        return load_coloring(tail);

    std::int64_t m = 0;
    try {
        std::size_t used = 0;
        m = std::stoll(tail, &used);
        if (used != tail.size())
            throw std::invalid_argument(tail);
    }
    catch (const std::exception &) {
        fail(ErrorKind::parse, "bad modulus in coloring spec \"" + std::string(spec) + "\"");
    }
    if (m < 1)
        fail(ErrorKind::parse, "modulus must be positive in \"" + std::string(spec) + "\"");
    if (head == "mod")
        return Coloring::modulo(m, domain_bound);
    if (head == "nu2")
        return Coloring::nu2_modulo(m, domain_bound);
    fail(ErrorKind::parse, "unknown coloring family \"" + std::string(head) + "\"");
}

auto read_coloring(std::istream & in) -> Coloring
{
    std::string header;
    if (! std::getline(in, header))
        fail(ErrorKind::parse, "coloring file is empty");
    std::istringstream hs(header);
    long long r = 0, n = 0;
    std::string extra;
    if (! (hs >> r >> n) || (hs >> extra) || r < 1 || n < 1)
        fail(ErrorKind::parse, "malformed coloring header \"" + header + "\" (expected \"r N\")");

    std::vector<int> colors;
    colors.reserve(static_cast<std::size_t>(n));
    std::string token;
    while (in >> token) {
        long long v = 0;
        try {
            std::size_t used = 0;
            v = std::stoll(token, &used);
            if (used != token.size())
                throw std::invalid_argument(token);
        }
        catch (const std::exception &) {
            fail(ErrorKind::parse, "bad color index \"" + token + "\"");
        }
        if (v < 0 || v >= r)
            fail(ErrorKind::parse, "color index " + std::to_string(v) + " at position " + std::to_string(colors.size() + 1)
                    + " is not below r = " + std::to_string(r));
        colors.push_back(static_cast<int>(v));
    }
    if (static_cast<long long>(colors.size()) != n)
        fail(ErrorKind::parse, "coloring header declares N = " + std::to_string(n) + " but the file has "
                + std::to_string(colors.size()) + " entries");
    return Coloring::explicit_colors(static_cast<int>(r), std::move(colors));
}

void write_coloring(std::ostream & out, const Coloring & c)
{
    out << c.num_colors() << ' ' << c.domain_bound() << '\n';
    auto colors = c.colors();
    for (std::size_t i = 0; i < colors.size(); ++i) {
        if (i)
            out << ' ';
        out << colors[i];
    }
    out << '\n';
}

auto load_coloring(const std::filesystem::path & path) -> Coloring
{
    std::ifstream in(path);
    if (! in)
        fail(ErrorKind::io, "cannot open coloring file " + path.string());
    return read_coloring(in);
}

void store_coloring(const Coloring & c, const std::filesystem::path & path)
{
    std::ofstream out(path);
    if (! out)
        fail(ErrorKind::io, "cannot write coloring file " + path.string());
    write_coloring(out, c);
    if (! out)
        fail(ErrorKind::io, "write failed for " + path.string());
}

namespace {
    auto scan_range(const Coloring & c, const LinearEquation & eq, std::int64_t from, std::int64_t to, bool distinct)
        -> AvoidanceVerdict
    {
        AvoidanceVerdict verdict;
        for (std::int64_t m = from; m <= to; ++m) {
            SolutionEnumerator e(eq, {.max_value = m, .max_element = m, .distinct = distinct});
            const int cm = c(m);
            e.for_each([&](std::span<const std::int64_t> x) {
                for (auto v : x)
                    if (c(v) != cm)
                        return true;
                verdict.avoiding = false;
                verdict.violation = make_tuple_from(x);
                verdict.color = cm;
                return false;
            });
            if (! verdict.avoiding)
                break;
        }
        return verdict;
    }
}

auto verify_avoiding(const Coloring & c, const LinearEquation & eq, std::int64_t up_to, unsigned threads, bool distinct)
    -> AvoidanceVerdict
{
    if (up_to > c.domain_bound())
        fail(ErrorKind::domain, "cannot verify up to " + std::to_string(up_to) + " on a coloring of [1, "
                + std::to_string(c.domain_bound()) + "]");
    if (up_to < 1)
        return {};
    if (threads <= 1 || up_to < 1024)
        return scan_range(c, eq, 1, up_to, distinct);

    // Contiguous shards; the lowest shard holding a violation has the minimal one.
    std::vector<std::future<AvoidanceVerdict>> parts;
    std::int64_t chunk = (up_to + threads - 1) / threads;
    for (std::int64_t lo = 1; lo <= up_to; lo += chunk) {
        std::int64_t hi = std::min(up_to, lo + chunk - 1);
        parts.push_back(std::async(std::launch::async, [&, lo, hi] { return scan_range(c, eq, lo, hi, distinct); }));
    }
    AvoidanceVerdict result;
    for (auto & p : parts) {
        auto v = p.get();
        if (result.avoiding && ! v.avoiding)
            result = std::move(v);
    }
    return result;
}

}
