#include "circulant/limbs.hpp"

#include <algorithm>
#include <bit>

namespace circulant::limbs {

namespace {
using Wide = unsigned __int128;
}

void trim(Limbs &x) {
    while (!x.empty() && x.back() == 0) {
        x.pop_back();
    }
}

std::size_t significant(std::span<const Limb> x) noexcept {
    std::size_t n = x.size();
    while (n > 0 && x[n - 1] == 0) {
        --n;
    }
    return n;
}

std::size_t bit_length(std::span<const Limb> x) noexcept {
    const std::size_t n = significant(x);
    if (n == 0) {
        return 0;
    }
    return (n - 1) * kLimbBits + static_cast<std::size_t>(std::bit_width(x[n - 1]));
}

int compare(std::span<const Limb> x, std::span<const Limb> y) noexcept {
    const std::size_t nx = significant(x);
    const std::size_t ny = significant(y);
    if (nx != ny) {
        return nx < ny ? -1 : 1;
    }
    for (std::size_t i = nx; i-- > 0;) {
        if (x[i] != y[i]) {
            return x[i] < y[i] ? -1 : 1;
        }
    }
    return 0;
}

Limb add_in_place(std::span<Limb> acc, std::span<const Limb> x) noexcept {
    Limb carry = 0;
    std::size_t i = 0;
    for (; i < x.size(); ++i) {
        const Wide s = Wide{acc[i]} + x[i] + carry;
        acc[i] = static_cast<Limb>(s);
        carry = static_cast<Limb>(s >> 64);
    }
    for (; carry != 0 && i < acc.size(); ++i) {
        acc[i] += 1;
        carry = acc[i] == 0 ? 1 : 0;
    }
    return carry;
}

Limb sub_in_place(std::span<Limb> acc, std::span<const Limb> x) noexcept {
    Limb borrow = 0;
    std::size_t i = 0;
    for (; i < x.size(); ++i) {
        const Limb a = acc[i];
        const Limb d = a - x[i] - borrow;
        borrow = (a < x[i] || (a == x[i] && borrow != 0)) ? 1 : 0;
        acc[i] = d;
    }
    for (; borrow != 0 && i < acc.size(); ++i) {
        borrow = acc[i] == 0 ? 1 : 0;
        acc[i] -= 1;
    }
    return borrow;
}

Limbs mul_schoolbook(std::span<const Limb> x, std::span<const Limb> y) {
    Limbs out(x.size() + y.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) {
            continue;
        }
        Limb carry = 0;
        for (std::size_t j = 0; j < y.size(); ++j) {
            const Wide t = Wide{x[i]} * y[j] + out[i + j] + carry;
            out[i + j] = static_cast<Limb>(t);
            carry = static_cast<Limb>(t >> 64);
        }
        out[i + y.size()] = carry;
    }
    return out;
}

Limbs shift_left(std::span<const Limb> x, std::size_t bits, std::size_t len) {
    Limbs out(len, 0);
    const std::size_t limb_shift = bits / kLimbBits;
    const unsigned bit_shift = static_cast<unsigned>(bits % kLimbBits);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const std::size_t j = i + limb_shift;
        if (j >= len) {
            break;
        }
        out[j] |= x[i] << bit_shift;
        if (bit_shift != 0 && j + 1 < len) {
            out[j + 1] |= x[i] >> (kLimbBits - bit_shift);
        }
    }
    return out;
}

Limbs shift_right(std::span<const Limb> x, std::size_t bits, std::size_t len) {
    Limbs out(len, 0);
    const std::size_t limb_shift = bits / kLimbBits;
    const unsigned bit_shift = static_cast<unsigned>(bits % kLimbBits);
    for (std::size_t j = 0; j < len; ++j) {
        const std::size_t i = j + limb_shift;
        if (i >= x.size()) {
            break;
        }
        Limb v = x[i] >> bit_shift;
        if (bit_shift != 0 && i + 1 < x.size()) {
            v |= x[i + 1] << (kLimbBits - bit_shift);
        }
        out[j] = v;
    }
    return out;
}

Limbs low_bits(std::span<const Limb> x, std::size_t bits, std::size_t len) {
    Limbs out(len, 0);
    const std::size_t full = bits / kLimbBits;
    const unsigned rem = static_cast<unsigned>(bits % kLimbBits);
    const std::size_t n = std::min({x.size(), len, full});
    std::copy_n(x.begin(), n, out.begin());
    if (rem != 0 && full < x.size() && full < len) {
        out[full] = x[full] & ((Limb{1} << rem) - 1);
    }
    return out;
}

void add_shifted(Limbs &acc, std::span<const Limb> x, std::size_t bit_offset) {
    const std::size_t nx = significant(x);
    if (nx == 0) {
        return;
    }
    const std::size_t limb_offset = bit_offset / kLimbBits;
    const std::size_t need = limb_offset + nx + 1;
    if (acc.size() < need) {
        acc.resize(need, 0);
    }
    const Limbs shifted = shift_left(x.first(nx), bit_offset % kLimbBits, nx + 1);
    Limb carry = add_in_place(std::span<Limb>(acc).subspan(limb_offset), shifted);
    if (carry != 0) {
        acc.push_back(carry);
    }
}

Limbs extract_bits(std::span<const Limb> x, std::size_t offset, std::size_t count) {
    const std::size_t len = (count + kLimbBits - 1) / kLimbBits;
    const Limbs shifted = shift_right(x, offset, len);
    return low_bits(shifted, count, len);
}

}  // namespace circulant::limbs
