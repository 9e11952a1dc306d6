#include "swrg/kernels/kernels.hpp"

#include <immintrin.h>

namespace swrg::kernels {

namespace {

void add_rows(std::uint8_t* dst, const std::uint8_t* src, std::size_t n, const AddSpec& spec) {
    std::size_t i = 0;
    switch (spec.kind) {
        case AddKind::Cyclic: {
            const __m256i m = _mm256_set1_epi8(static_cast<char>(spec.modulus));
            for (; i + 32 <= n; i += 32) {
                __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
                __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
                __m256i s = _mm256_add_epi8(a, b);
                // s - M wraps above s exactly when s < M
                _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_min_epu8(s, _mm256_sub_epi8(s, m)));
            }
            break;
        }
        case AddKind::Xor:
            for (; i + 32 <= n; i += 32) {
                __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
                __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
                _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
            }
            break;
        case AddKind::Table: {
            alignas(32) std::uint8_t rows[16][16] = {};
            for (std::uint32_t a = 0; a < spec.size; ++a)
                for (std::uint32_t b = 0; b < spec.size; ++b) rows[a][b] = spec.table[a * spec.size + b];
            for (; i + 32 <= n; i += 32) {
                __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
                __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
                __m256i out = _mm256_setzero_si256();
                for (std::uint32_t k = 0; k < spec.size; ++k) {
                    __m256i row = _mm256_broadcastsi128_si256(_mm_load_si128(reinterpret_cast<const __m128i*>(rows[k])));
                    __m256i hit = _mm256_cmpeq_epi8(a, _mm256_set1_epi8(static_cast<char>(k)));
                    out = _mm256_or_si256(out, _mm256_and_si256(hit, _mm256_shuffle_epi8(row, b)));
                }
                _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), out);
            }
            break;
        }
        default:
            break;
    }
    if (i < n) scalar().add_rows(dst + i, src + i, n - i, spec);
}

std::uint32_t weight_sum(const std::uint8_t* word, std::size_t n, const std::uint8_t* wtable) {
    const __m256i lut = _mm256_broadcastsi128_si256(_mm_loadu_si128(reinterpret_cast<const __m128i*>(wtable)));
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i w = _mm256_shuffle_epi8(lut, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(word + i)));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(w, _mm256_setzero_si256()));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::uint32_t s = static_cast<std::uint32_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
    for (; i < n; ++i) s += wtable[word[i]];
    return s;
}

void accumulate_u16(std::uint16_t* acc, const std::uint8_t* contrib, std::size_t n) {
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        __m256i c = _mm256_cvtepu8_epi16(_mm_loadu_si128(reinterpret_cast<const __m128i*>(contrib + i)));
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), _mm256_add_epi16(a, c));
    }
    for (; i < n; ++i) acc[i] = static_cast<std::uint16_t>(acc[i] + contrib[i]);
}

void retract_u16(std::uint16_t* acc, const std::uint8_t* contrib, std::size_t n) {
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        __m256i c = _mm256_cvtepu8_epi16(_mm_loadu_si128(reinterpret_cast<const __m128i*>(contrib + i)));
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), _mm256_sub_epi16(a, c));
    }
    for (; i < n; ++i) acc[i] = static_cast<std::uint16_t>(acc[i] - contrib[i]);
}

bool window_ok(const std::uint16_t* acc, const std::uint8_t* lo, const std::uint8_t* hi, std::size_t n, std::uint32_t r,
               const std::uint16_t* targets, std::size_t ntargets) {
    const __m256i rr = _mm256_set1_epi16(static_cast<short>(r));
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
        __m256i l = _mm256_cvtepu8_epi16(_mm_loadu_si128(reinterpret_cast<const __m128i*>(lo + i)));
        __m256i h = _mm256_cvtepu8_epi16(_mm_loadu_si128(reinterpret_cast<const __m128i*>(hi + i)));
        __m256i low = _mm256_add_epi16(a, _mm256_mullo_epi16(l, rr));
        __m256i high = _mm256_add_epi16(a, _mm256_mullo_epi16(h, rr));
        __m256i ok = _mm256_setzero_si256();
        for (std::size_t t = 0; t < ntargets; ++t) {
            __m256i tv = _mm256_set1_epi16(static_cast<short>(targets[t]));
            __m256i ge = _mm256_cmpeq_epi16(_mm256_max_epu16(low, tv), tv);   // low <= t
            __m256i le = _mm256_cmpeq_epi16(_mm256_min_epu16(high, tv), tv);  // t <= high
            ok = _mm256_or_si256(ok, _mm256_and_si256(ge, le));
        }
        if (static_cast<std::uint32_t>(_mm256_movemask_epi8(ok)) != 0xFFFFFFFFu) return false;
    }
    return i == n || scalar().window_ok(acc + i, lo + i, hi + i, n - i, r, targets, ntargets);
}

void walk_step_i64(const std::int64_t* src, std::int64_t* dst, const std::uint32_t* nbr, std::size_t V, std::size_t K,
                   std::int64_t b) {
    const long long* base = reinterpret_cast<const long long*>(src);
    for (std::size_t v = 0; v < V; ++v) dst[v] = b * src[v];
    std::size_t v = 0;
    for (; v + 4 <= V; v += 4) {
        __m256i acc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + v));
        for (std::size_t k = 0; k < K; ++k) {
            __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(nbr + k * V + v));
            acc = _mm256_add_epi64(acc, _mm256_i32gather_epi64(base, idx, 8));
        }
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + v), acc);
    }
    for (; v < V; ++v)
        for (std::size_t k = 0; k < K; ++k) dst[v] += src[nbr[k * V + v]];
}

}  // namespace

const KernelTable& avx2_table() {
    static const KernelTable table{"avx2", add_rows, weight_sum, accumulate_u16, retract_u16, window_ok, walk_step_i64};
    return table;
}

}  // namespace swrg::kernels
