#pragma once

// Integer polynomial multiplication over Z/pZ[sqrt 3], p = 2^31 - 1.

#include "circulant/circulant.hpp"
#include "circulant/mersenne.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace circulant::poly {

/// Coefficients low-order first; empty means the zero polynomial.
struct Polynomial {
    std::vector<std::int64_t> coeffs;

    friend bool operator==(const Polynomial &, const Polynomial &) = default;
};

enum class Engine { circulant, classic, schoolbook };

std::string_view engine_name(Engine e) noexcept;
/// Throws ParameterError on an unknown name.
Engine parse_engine(std::string_view name);

struct PolyMulOptions {
    Engine engine = Engine::circulant;
    /// Require a uniquely liftable integer result; otherwise return residues
    /// in [0, p).
    bool exact = true;
    /// Use the OpenMP kernel for the circulant engine.
    bool parallel = false;
    std::size_t base_threshold = 1;
};

/// Smallest power of two >= len(p) + len(q) - 1 (0 for a zero factor).
std::size_t padded_length(const Polynomial &p, const Polynomial &q) noexcept;

/// Throws OverflowError when the ring result could not be lifted uniquely:
/// nonnegative inputs need min(len) * max|p| * max|q| < p; signed inputs need
/// twice that below p.
void check_exact(const Polynomial &p, const Polynomial &q);

/// p * q with a caller-supplied root table (depth >= log2 padded_length).
Polynomial poly_mul(const Polynomial &p, const Polynomial &q, const mersenne::Fp2RootContext &ctx,
                    const PolyMulOptions &options = {}, ProductStats *stats = nullptr);

/// Convenience overload that builds the root table.
Polynomial poly_mul(const Polynomial &p, const Polynomial &q, const PolyMulOptions &options = {});

/// Exact O(n m) integer product. Accumulates in 128 bits; throws
/// OverflowError only if a result coefficient does not fit in 64 bits.
Polynomial poly_mul_schoolbook(const Polynomial &p, const Polynomial &q);

/// Residues in [0, p) of each coefficient.
Polynomial reduce_mod_p(const Polynomial &p);

/// Independent pairs, optionally spread over OpenMP threads.
std::vector<Polynomial> poly_mul_batch(const std::vector<std::pair<Polynomial, Polynomial>> &pairs,
                                       const mersenne::Fp2RootContext &ctx, const PolyMulOptions &options = {});

/// One polynomial per line, whitespace-separated decimal coefficients.
/// `line_number` is reported in ParseError.
Polynomial parse_polynomial(std::string_view line, std::size_t line_number = 1);
std::string format_polynomial(const Polynomial &p);

}  // namespace circulant::poly
