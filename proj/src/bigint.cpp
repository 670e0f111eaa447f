#include "circulant/bigint.hpp"

#include "circulant/circulant_omp.hpp"
#include "circulant/fermat.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <string>

namespace circulant::bigint {

using limbs::Limb;
using limbs::Limbs;

namespace {

constexpr Limb kDecimalChunk = 10'000'000'000'000'000'000ull;  // 10^19
constexpr std::size_t kDecimalChunkDigits = 19;

using Wide = unsigned __int128;

void mul_small_add(Limbs &x, Limb factor, Limb addend) {
    Limb carry = addend;
    for (auto &d : x) {
        const Wide t = Wide{d} * factor + carry;
        d = static_cast<Limb>(t);
        carry = static_cast<Limb>(t >> 64);
    }
    if (carry != 0) {
        x.push_back(carry);
    }
}

Limb div_small(Limbs &x, Limb divisor) {
    Wide rem = 0;
    for (std::size_t i = x.size(); i-- > 0;) {
        const Wide cur = (rem << 64) | x[i];
        x[i] = static_cast<Limb>(cur / divisor);
        rem = cur % divisor;
    }
    limbs::trim(x);
    return static_cast<Limb>(rem);
}

void record_level(SsaStats *stats, int level) {
    if (stats == nullptr) {
        return;
    }
    std::atomic_ref<int> max_level(stats->max_level);
    int seen = max_level.load();
    while (seen < level && !max_level.compare_exchange_weak(seen, level)) {
    }
    std::atomic_ref<std::uint64_t>(stats->circulant_products).fetch_add(1);
}

Limbs ssa_limbs(std::span<const Limb> x, std::span<const Limb> y, const SsaConfig &config, SsaStats *stats,
                int level);

Limbs multiply_limbs(std::span<const Limb> x, std::span<const Limb> y, const SsaConfig &config, SsaStats *stats,
                     int level) {
    x = x.first(limbs::significant(x));
    y = y.first(limbs::significant(y));
    if (x.empty() || y.empty()) {
        return {};
    }
    return ssa_limbs(x, y, config, stats, level);
}

Limbs ssa_limbs(std::span<const Limb> x, std::span<const Limb> y, const SsaConfig &config, SsaStats *stats,
                int level) {
    const std::uint64_t bx = limbs::bit_length(x);
    const std::uint64_t by = limbs::bit_length(y);
    const SsaParams params = choose_params(bx + by, config);
    if (params.direct) {
        Limbs out = limbs::mul_schoolbook(x, y);
        limbs::trim(out);
        return out;
    }
    record_level(stats, level + 1);

    fermat::MulKernel kernel = [config, stats, level](std::span<const Limb> u, std::span<const Limb> v) {
        return multiply_limbs(u, v, config, stats, level + 1);
    };
    const fermat::FermatRootContext ctx(fermat::FermatRing(params.k, std::move(kernel)),
                                        log2_exact(params.parts));
    const auto &ring = ctx.ring();

    const auto split = [&](std::span<const Limb> v, std::uint64_t bits) {
        std::vector<fermat::FermatElem> parts(params.parts, ring.zero());
        for (std::uint64_t i = 0; i * params.part_bits < bits; ++i) {
            parts[i] = ring.from_limbs(limbs::extract_bits(v, i * params.part_bits, params.part_bits));
        }
        return parts;
    };
    const auto a = split(x, bx);
    const auto b = split(y, by);

    std::vector<fermat::FermatElem> conv;
    if (config.parallel) {
        conv = parallel::cyclic_convolve<fermat::FermatRootContext>(a, b, ctx);
    } else {
        conv = cyclic_convolve<fermat::FermatRootContext>(a, b, ctx);
    }
    // Canonical representatives are the true coefficients: each is below
    // N 2^(2 part_bits) <= 2^K.
    std::vector<Limbs> coeffs;
    coeffs.reserve(conv.size());
    for (const auto &c : conv) {
        coeffs.push_back(ring.to_limbs(c));
    }
    return carry_propagate(coeffs, params.part_bits).digits();
}

}  // namespace

BigNumber::BigNumber(std::uint64_t v) {
    if (v != 0) {
        digits_.push_back(v);
    }
}

BigNumber::BigNumber(Limbs digits) : digits_(std::move(digits)) { limbs::trim(digits_); }

BigNumber BigNumber::from_decimal(std::string_view text) {
    if (text.empty()) {
        throw ParseError("empty number", 1, 1);
    }
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            throw ParseError(std::string("non-digit character '") + text[i] + "'", 1, i + 1);
        }
    }
    Limbs acc;
    std::size_t pos = 0;
    std::size_t head = text.size() % kDecimalChunkDigits;
    if (head == 0) {
        head = kDecimalChunkDigits;
    }
    while (pos < text.size()) {
        const std::size_t len = pos == 0 ? head : kDecimalChunkDigits;
        Limb chunk = 0;
        Limb scale = 1;
        for (std::size_t i = 0; i < len; ++i) {
            chunk = chunk * 10 + static_cast<Limb>(text[pos + i] - '0');
            scale *= 10;
        }
        mul_small_add(acc, scale, chunk);
        pos += len;
    }
    return BigNumber(std::move(acc));
}

std::string BigNumber::to_decimal() const {
    if (digits_.empty()) {
        return "0";
    }
    Limbs x = digits_;
    std::vector<Limb> chunks;
    while (!x.empty()) {
        chunks.push_back(div_small(x, kDecimalChunk));
    }
    std::string out = std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
        const std::string part = std::to_string(chunks[i]);
        out.append(kDecimalChunkDigits - part.size(), '0');
        out += part;
    }
    return out;
}

BigNumber operator+(const BigNumber &x, const BigNumber &y) {
    const BigNumber &big = x.size() >= y.size() ? x : y;
    const BigNumber &small = x.size() >= y.size() ? y : x;
    Limbs sum = big.digits_;
    sum.push_back(0);
    limbs::add_in_place(sum, small.digits_);
    return BigNumber(std::move(sum));
}

SsaParams choose_params(std::uint64_t total_bits, const SsaConfig &config) {
    SsaParams p;
    if (total_bits < 2 * static_cast<std::uint64_t>(config.threshold_words) * limbs::kLimbBits || total_bits < 16) {
        p.direct = true;
        return p;
    }
    // N = 2^round(log2(total_bits) / 2)
    const int log_total = std::bit_width(total_bits) - 1;
    const int log_parts = std::max(2, (log_total + 1) / 2);
    p.parts = std::uint64_t{1} << log_parts;
    p.part_bits = (total_bits + p.parts - 2) / (p.parts - 1);
    const std::uint64_t min_k = 2 * p.part_bits + static_cast<std::uint64_t>(log_parts);
    const std::uint64_t align = std::max<std::uint64_t>(limbs::kLimbBits, p.parts / 2);
    p.k = (min_k + align - 1) / align * align;
    // Small products can round K up past the input size; recursing there
    // would never terminate.
    if (2 * (p.k + 1) >= total_bits) {
        return SsaParams{true, 0, 0, 0};
    }
    return p;
}

bool params_valid(const SsaParams &p, std::uint64_t total_bits) {
    if (p.direct) {
        return true;
    }
    if (!is_pow2(p.parts) || p.parts < 2 || p.part_bits == 0 || p.k == 0) {
        return false;
    }
    if ((2 * p.k) % p.parts != 0) {
        return false;
    }
    // N 2^(2 part_bits) <= 2^K  <=>  log2 N + 2 part_bits <= K
    if (static_cast<std::uint64_t>(log2_exact(p.parts)) + 2 * p.part_bits > p.k) {
        return false;
    }
    return (p.parts - 1) * p.part_bits >= total_bits;
}

BigNumber schoolbook_mul(const BigNumber &x, const BigNumber &y) {
    if (x.is_zero() || y.is_zero()) {
        return {};
    }
    return BigNumber(limbs::mul_schoolbook(x.digits(), y.digits()));
}

BigNumber ssa_mul(const BigNumber &x, const BigNumber &y, const SsaConfig &config, SsaStats *stats) {
    return BigNumber(multiply_limbs(x.digits(), y.digits(), config, stats, 0));
}

BigNumber carry_propagate(std::span<const Limbs> coeffs, std::uint64_t part_bits) {
    Limbs acc;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        limbs::add_shifted(acc, coeffs[i], static_cast<std::size_t>(i * part_bits));
    }
    return BigNumber(std::move(acc));
}

}  // namespace circulant::bigint
