#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <chrono>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace radokit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class ErrorKind {
    invalid_argument,
    parse,
    overflow,
    domain,
    io,
    verification,
};

// All library failures surface as this exception; the C API maps `kind` onto
// its status codes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string & what) : std::runtime_error(what), kind_(kind) {}

    auto kind() const noexcept -> ErrorKind { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string & what) { throw Error(kind, what); }

// Node and wall-clock limits shared by every search. Zero means unlimited.
struct Budget {
    std::uint64_t max_nodes = 0;
    double max_seconds = 0.0;
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}

    auto seconds() const -> double
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

namespace checked {
    inline auto add(std::int64_t a, std::int64_t b) -> std::int64_t
    {
        std::int64_t r;
        if (__builtin_add_overflow(a, b, &r))
            fail(ErrorKind::overflow, "64-bit overflow in addition");
        return r;
    }

    inline auto sub(std::int64_t a, std::int64_t b) -> std::int64_t
    {
        std::int64_t r;
        if (__builtin_sub_overflow(a, b, &r))
            fail(ErrorKind::overflow, "64-bit overflow in subtraction");
        return r;
    }

    inline auto mul(std::int64_t a, std::int64_t b) -> std::int64_t
    {
        std::int64_t r;
        if (__builtin_mul_overflow(a, b, &r))
            fail(ErrorKind::overflow, "64-bit overflow in multiplication");
        return r;
    }

    inline auto to_int64(const BigInt & v) -> std::int64_t
    {
        if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
            fail(ErrorKind::overflow, "value " + v.str() + " does not fit in 64 bits");
        return static_cast<std::int64_t>(v);
    }
}

inline auto floor_div(std::int64_t a, std::int64_t b) -> std::int64_t
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

inline auto ceil_div(std::int64_t a, std::int64_t b) -> std::int64_t
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0)))
        ++q;
    return q;
}

auto pow2(int e) -> BigInt;

}
