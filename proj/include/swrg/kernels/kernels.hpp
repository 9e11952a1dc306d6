#pragma once

// Byte/word data-parallel inner loops. Each kernel exists as a scalar reference and,
// on x86-64, an AVX2 variant picked at runtime. SWRG_KERNELS=scalar forces the reference.

#include "swrg/algebra/ring.hpp"

#include <cstddef>
#include <cstdint>
#include <string>

namespace swrg::kernels {

/// Element-wise addition rule for encoded ring elements stored one per byte.
struct AddSpec {
    AddKind kind = AddKind::Generic;
    std::uint8_t modulus = 0;            // Cyclic only
    std::uint32_t size = 0;              // ring size
    const std::uint8_t* table = nullptr; // size*size addition table (required unless Cyclic/Xor)

    static AddSpec for_ring(const Ring& R);
};

struct KernelTable {
    const char* name;
    /// dst[i] = dst[i] + src[i]
    void (*add_rows)(std::uint8_t* dst, const std::uint8_t* src, std::size_t n, const AddSpec& spec);
    /// sum of wtable[word[i]]; word entries < 16, wtable has 16 entries
    std::uint32_t (*weight_sum)(const std::uint8_t* word, std::size_t n, const std::uint8_t* wtable);
    /// acc[i] += contrib[i]
    void (*accumulate_u16)(std::uint16_t* acc, const std::uint8_t* contrib, std::size_t n);
    /// acc[i] -= contrib[i]
    void (*retract_u16)(std::uint16_t* acc, const std::uint8_t* contrib, std::size_t n);
    /// true iff every lane has some target t with acc + r*lo <= t <= acc + r*hi
    bool (*window_ok)(const std::uint16_t* acc, const std::uint8_t* lo, const std::uint8_t* hi, std::size_t n,
                      std::uint32_t r, const std::uint16_t* targets, std::size_t ntargets);
    /// dst[v] = b*src[v] + sum_k src[nbr[k*V + v]]; caller guarantees no overflow
    void (*walk_step_i64)(const std::int64_t* src, std::int64_t* dst, const std::uint32_t* nbr, std::size_t V,
                          std::size_t K, std::int64_t b);
};

const KernelTable& scalar();
/// nullptr when the AVX2 variant is not compiled in or the CPU lacks AVX2.
const KernelTable* avx2();
/// The table used by the library: AVX2 when available unless SWRG_KERNELS=scalar.
const KernelTable& active();

}  // namespace swrg::kernels
