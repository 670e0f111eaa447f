#include "circulant/poly.hpp"

#include "circulant/circulant_omp.hpp"
#include "circulant/fft.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace circulant::poly {

using mersenne::Fp2;
using mersenne::Fp2Ring;
using mersenne::Fp2RootContext;
using mersenne::kModulus;

std::string_view engine_name(Engine e) noexcept {
    switch (e) {
    case Engine::circulant:
        return "circulant";
    case Engine::classic:
        return "classic";
    case Engine::schoolbook:
        return "schoolbook";
    }
    return "unknown";
}

Engine parse_engine(std::string_view name) {
    for (Engine e : {Engine::circulant, Engine::classic, Engine::schoolbook}) {
        if (engine_name(e) == name) {
            return e;
        }
    }
    throw ParameterError("unknown engine '" + std::string(name) + "' (expected circulant, classic or schoolbook)");
}

std::size_t padded_length(const Polynomial &p, const Polynomial &q) noexcept {
    if (p.coeffs.empty() || q.coeffs.empty()) {
        return 0;
    }
    const std::size_t len = p.coeffs.size() + q.coeffs.size() - 1;
    std::size_t n = 1;
    while (n < len) {
        n *= 2;
    }
    return n;
}

namespace {

using U128 = unsigned __int128;

U128 max_abs(const Polynomial &p) {
    U128 m = 0;
    for (auto c : p.coeffs) {
        const U128 a = c < 0 ? static_cast<U128>(-(static_cast<__int128>(c))) : static_cast<U128>(c);
        m = std::max(m, a);
    }
    return m;
}

bool nonnegative(const Polynomial &p) {
    return std::all_of(p.coeffs.begin(), p.coeffs.end(), [](std::int64_t c) { return c >= 0; });
}

std::int64_t lift(std::uint32_t residue, bool symmetric) {
    if (symmetric && residue > kModulus / 2) {
        return static_cast<std::int64_t>(residue) - kModulus;
    }
    return residue;
}

std::vector<Fp2> to_ring(const Polynomial &p, std::size_t len) {
    std::vector<Fp2> out(len, Fp2Ring::zero());
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
        out[i] = Fp2Ring::from_int(p.coeffs[i]);
    }
    return out;
}

}  // namespace

void check_exact(const Polynomial &p, const Polynomial &q) {
    if (p.coeffs.empty() || q.coeffs.empty()) {
        return;
    }
    const U128 terms = std::min(p.coeffs.size(), q.coeffs.size());
    const U128 mp = max_abs(p);
    const U128 mq = max_abs(q);
    const bool signed_result = !(nonnegative(p) && nonnegative(q));
    const U128 limit = signed_result ? (kModulus - 1) / 2 : kModulus - 1;  // bound <= limit
    const auto fail = [&] {
        throw OverflowError(std::string("coefficient bound exceeded: ") + std::to_string(static_cast<std::uint64_t>(terms)) +
                            " terms of products up to |p_i| |q_j| cannot be recovered exactly modulo 2^31 - 1" +
                            (signed_result ? " with signed coefficients" : ""));
    };
    if (mp == 0 || mq == 0) {
        return;
    }
    if (mp > limit || mq > limit / mp) {
        fail();
    }
    if (terms > limit / (mp * mq)) {
        fail();
    }
}

Polynomial reduce_mod_p(const Polynomial &p) {
    Polynomial out;
    out.coeffs.reserve(p.coeffs.size());
    for (auto c : p.coeffs) {
        out.coeffs.push_back(Fp2Ring::from_int(c).a.value);
    }
    return out;
}

Polynomial poly_mul_schoolbook(const Polynomial &p, const Polynomial &q) {
    if (p.coeffs.empty() || q.coeffs.empty()) {
        return {};
    }
    const std::size_t len = p.coeffs.size() + q.coeffs.size() - 1;
    std::vector<__int128> acc(len, 0);
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
        for (std::size_t j = 0; j < q.coeffs.size(); ++j) {
            acc[i + j] += static_cast<__int128>(p.coeffs[i]) * q.coeffs[j];
        }
    }
    Polynomial out;
    out.coeffs.reserve(len);
    for (std::size_t k = 0; k < len; ++k) {
        if (acc[k] > std::numeric_limits<std::int64_t>::max() || acc[k] < std::numeric_limits<std::int64_t>::min()) {
            throw OverflowError("schoolbook coefficient " + std::to_string(k) + " does not fit in 64 bits");
        }
        out.coeffs.push_back(static_cast<std::int64_t>(acc[k]));
    }
    return out;
}

Polynomial poly_mul(const Polynomial &p, const Polynomial &q, const Fp2RootContext &ctx,
                    const PolyMulOptions &options, ProductStats *stats) {
    if (p.coeffs.empty() || q.coeffs.empty()) {
        return {};
    }
    if (options.engine == Engine::schoolbook) {
        if (options.exact) {
            return poly_mul_schoolbook(p, q);
        }
        // residues below 2^31: each product < 2^62, so 128-bit sums never wrap
        const auto rp = reduce_mod_p(p);
        const auto rq = reduce_mod_p(q);
        std::vector<U128> acc(p.coeffs.size() + q.coeffs.size() - 1, 0);
        for (std::size_t i = 0; i < rp.coeffs.size(); ++i) {
            for (std::size_t j = 0; j < rq.coeffs.size(); ++j) {
                acc[i + j] += static_cast<U128>(rp.coeffs[i]) * static_cast<U128>(rq.coeffs[j]);
            }
        }
        Polynomial out;
        out.coeffs.reserve(acc.size());
        for (auto v : acc) {
            out.coeffs.push_back(static_cast<std::int64_t>(v % kModulus));
        }
        return out;
    }
    if (options.exact) {
        check_exact(p, q);
    }
    const std::size_t out_len = p.coeffs.size() + q.coeffs.size() - 1;
    const std::size_t n = padded_length(p, q);
    const auto a = to_ring(p, n);
    const auto b = to_ring(q, n);

    std::vector<Fp2> conv;
    if (options.engine == Engine::circulant) {
        if (options.parallel) {
            parallel::ParallelOptions popts;
            popts.recursion.base_threshold = options.base_threshold;
            conv = parallel::cyclic_convolve<Fp2RootContext>(a, b, ctx, stats, popts);
        } else {
            conv = cyclic_convolve<Fp2RootContext>(a, b, ctx, stats, RecursiveOptions{options.base_threshold});
        }
    } else {
        // Same fill-up and index mapping as the circulant engine.
        const auto plan = make_plan(n, ctx);
        const auto reversed = cyclic_reverse(std::span<const Fp2>(b));
        const auto out = circulant_mul_classic<Fp2RootContext>(a, reversed, plan, stats);
        conv = cyclic_reverse(std::span<const Fp2>(out));
    }

    const bool symmetric = options.exact && !(nonnegative(p) && nonnegative(q));
    Polynomial result;
    result.coeffs.reserve(out_len);
    for (std::size_t k = 0; k < out_len; ++k) {
        result.coeffs.push_back(lift(conv[k].a.value, symmetric));
    }
    return result;
}

Polynomial poly_mul(const Polynomial &p, const Polynomial &q, const PolyMulOptions &options) {
    const std::size_t n = padded_length(p, q);
    const Fp2RootContext ctx(log2_exact(std::max<std::size_t>(n, 1)));
    return poly_mul(p, q, ctx, options);
}

std::vector<Polynomial> poly_mul_batch(const std::vector<std::pair<Polynomial, Polynomial>> &pairs,
                                       const Fp2RootContext &ctx, const PolyMulOptions &options) {
    std::vector<Polynomial> out(pairs.size());
    PolyMulOptions inner = options;
    inner.parallel = false;  // parallelism is across pairs here
    const auto count = static_cast<std::ptrdiff_t>(pairs.size());
#pragma omp parallel for schedule(dynamic, 8) if (options.parallel)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        out[static_cast<std::size_t>(i)] = poly_mul(pairs[static_cast<std::size_t>(i)].first,
                                                    pairs[static_cast<std::size_t>(i)].second, ctx, inner);
    }
    return out;
}

Polynomial parse_polynomial(std::string_view line, std::size_t line_number) {
    Polynomial p;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        const std::string_view token = line.substr(start, i - start);
        std::int64_t value = 0;
        const char *first = token.data();
        const char *last = token.data() + token.size();
        if (!token.empty() && token.front() == '+') {
            ++first;
        }
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec == std::errc::result_out_of_range) {
            throw ParseError("coefficient '" + std::string(token) + "' out of 64-bit range", line_number, start + 1);
        }
        if (ec != std::errc{} || ptr != last || first == last) {
            const std::size_t bad = ec != std::errc{} ? static_cast<std::size_t>(first - token.data())
                                                      : static_cast<std::size_t>(ptr - token.data());
            throw ParseError("expected a decimal integer, got '" + std::string(token) + "'", line_number,
                             start + bad + 1);
        }
        p.coeffs.push_back(value);
    }
    return p;
}

std::string format_polynomial(const Polynomial &p) {
    std::ostringstream os;
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
        if (i != 0) {
            os << ' ';
        }
        os << p.coeffs[i];
    }
    return os.str();
}

}  // namespace circulant::poly
