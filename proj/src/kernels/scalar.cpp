#include "swrg/kernels/kernels.hpp"

namespace swrg::kernels {

namespace {

void add_rows(std::uint8_t* dst, const std::uint8_t* src, std::size_t n, const AddSpec& spec) {
    switch (spec.kind) {
        case AddKind::Cyclic:
            for (std::size_t i = 0; i < n; ++i) {
                unsigned s = unsigned(dst[i]) + src[i];
                dst[i] = static_cast<std::uint8_t>(s >= spec.modulus ? s - spec.modulus : s);
            }
            return;
        case AddKind::Xor:
            for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
            return;
        default:
            for (std::size_t i = 0; i < n; ++i) dst[i] = spec.table[std::size_t{dst[i]} * spec.size + src[i]];
            return;
    }
}

std::uint32_t weight_sum(const std::uint8_t* word, std::size_t n, const std::uint8_t* wtable) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < n; ++i) s += wtable[word[i]];
    return s;
}

void accumulate_u16(std::uint16_t* acc, const std::uint8_t* contrib, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) acc[i] = static_cast<std::uint16_t>(acc[i] + contrib[i]);
}

void retract_u16(std::uint16_t* acc, const std::uint8_t* contrib, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) acc[i] = static_cast<std::uint16_t>(acc[i] - contrib[i]);
}

bool window_ok(const std::uint16_t* acc, const std::uint8_t* lo, const std::uint8_t* hi, std::size_t n, std::uint32_t r,
               const std::uint16_t* targets, std::size_t ntargets) {
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t a = acc[i] + r * lo[i], b = acc[i] + r * hi[i];
        bool ok = false;
        for (std::size_t t = 0; t < ntargets && !ok; ++t) ok = a <= targets[t] && targets[t] <= b;
        if (!ok) return false;
    }
    return true;
}

void walk_step_i64(const std::int64_t* src, std::int64_t* dst, const std::uint32_t* nbr, std::size_t V, std::size_t K,
                   std::int64_t b) {
    for (std::size_t v = 0; v < V; ++v) dst[v] = b * src[v];
    for (std::size_t k = 0; k < K; ++k) {
        const std::uint32_t* row = nbr + k * V;
        for (std::size_t v = 0; v < V; ++v) dst[v] += src[row[v]];
    }
}

}  // namespace

const KernelTable& scalar() {
    static const KernelTable table{"scalar", add_rows, weight_sum, accumulate_u16, retract_u16, window_ok, walk_step_i64};
    return table;
}

}  // namespace swrg::kernels
