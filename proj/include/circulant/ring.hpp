#pragma once

// Ring and root-of-unity contracts shared by the circulant product, the
// radix-2 baseline, polynomial multiplication and the integer multiplier.

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace circulant {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class RootTableExhausted : public Error {
public:
    using Error::Error;
};

class UnsupportedTransformSize : public Error {
public:
    using Error::Error;
};

class ParameterError : public Error {
public:
    using Error::Error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string &what, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Symbolic f = root(level, index), a 2^level-th root of unity raised to index.
struct FExponent {
    int level = 0;
    std::uint64_t index = 0;

    friend bool operator==(const FExponent &, const FExponent &) = default;
};

inline constexpr FExponent f_one{0, 0};

/// Ring interface: value semantics, pure operations.
///
/// `half` and `div_pow2` divide by powers of two. Both rings used here have 2
/// as a root of unity (2^31 = 1 mod 2^31-1, 2^2K = 1 mod 2^K+1), so these are
/// shift/rotate operations rather than general products.
template <typename R>
concept Ring = requires(const R &r, const typename R::value_type &x, unsigned k) {
    typename R::value_type;
    { r.zero() } -> std::convertible_to<typename R::value_type>;
    { r.one() } -> std::convertible_to<typename R::value_type>;
    { r.add(x, x) } -> std::convertible_to<typename R::value_type>;
    { r.sub(x, x) } -> std::convertible_to<typename R::value_type>;
    { r.mul(x, x) } -> std::convertible_to<typename R::value_type>;
    { r.neg(x) } -> std::convertible_to<typename R::value_type>;
    { r.equal(x, x) } -> std::convertible_to<bool>;
    { r.div_pow2(x, k) } -> std::convertible_to<typename R::value_type>;
};

/// Table of 2^k-th roots of unity for 0 <= k <= depth_max().
///
/// root(k, e) is w_{2^k}^e, with root(k+1, e)^2 == root(k, e). `mul_root` and
/// `mul_root_inv` multiply by a root or its inverse; a context may route them
/// through a table product or a shift.
template <typename C>
concept RootContext = Ring<typename C::ring_type> &&
    requires(const C &c, const typename C::ring_type::value_type &x, FExponent fe) {
        typename C::ring_type;
        { c.ring() } -> std::convertible_to<const typename C::ring_type &>;
        { c.depth_max() } -> std::convertible_to<int>;
        { c.root(fe.level, fe.index) } -> std::convertible_to<typename C::ring_type::value_type>;
        { c.root_inv(fe.level, fe.index) } -> std::convertible_to<typename C::ring_type::value_type>;
        { c.inv2() } -> std::convertible_to<typename C::ring_type::value_type>;
        { c.mul_root(x, fe) } -> std::convertible_to<typename C::ring_type::value_type>;
        { c.mul_root_inv(x, fe) } -> std::convertible_to<typename C::ring_type::value_type>;
    };

/// Square roots of f: first is sqrt(f) = root(k+1, e), second is -sqrt(f).
/// The even lift root(k+1, e) is the fixed sign convention.
inline std::pair<FExponent, FExponent> sqrt_f(FExponent fe, int depth_max) {
    if (fe.level + 1 > depth_max) {
        throw RootTableExhausted("root table exhausted: level " + std::to_string(fe.level + 1) +
                                 " exceeds depth " + std::to_string(depth_max));
    }
    const std::uint64_t half_turn = std::uint64_t{1} << fe.level;
    return {FExponent{fe.level + 1, fe.index}, FExponent{fe.level + 1, fe.index + half_turn}};
}

template <RootContext C>
std::pair<FExponent, FExponent> sqrt_f(FExponent fe, const C &ctx) {
    return sqrt_f(fe, ctx.depth_max());
}

template <RootContext C>
typename C::ring_type::value_type resolve(const C &ctx, FExponent fe) {
    return ctx.root(fe.level, fe.index);
}

constexpr bool is_pow2(std::uint64_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

constexpr int log2_exact(std::uint64_t n) noexcept {
    int k = 0;
    while ((std::uint64_t{1} << k) < n) {
        ++k;
    }
    return k;
}

}  // namespace circulant
