#include "circulant/mersenne.hpp"

#include <string>

namespace circulant::mersenne {

Fp2RootContext::Fp2RootContext(int depth) : depth_(depth) {
    if (depth < 0 || depth > kMaxDepth) {
        throw UnsupportedTransformSize("Fp2 root table depth " + std::to_string(depth) +
                                       " out of range [0, 31]: 2^depth must divide p + 1 = 2^31");
    }
    const std::uint64_t n = std::uint64_t{1} << depth;
    // (p + 1) / 2^depth
    const Fp2 w = fp2_pow(kGenerator, (std::uint64_t{1} << kMaxDepth) >> depth);
    table_.resize(n);
    Fp2 acc = Fp2Ring::one();
    for (std::uint64_t e = 0; e < n; ++e) {
        table_[e] = acc;
        acc = fp2_mul(acc, w);
    }
}

Fp2RootContext build_root_context(int depth) { return Fp2RootContext(depth); }

}  // namespace circulant::mersenne
