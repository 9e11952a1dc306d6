#include "swrg/kernels/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace swrg::kernels {

#if defined(SWRG_HAVE_AVX2)
const KernelTable& avx2_table();
#endif

AddSpec AddSpec::for_ring(const Ring& R) {
    AddSpec spec;
    spec.kind = R.add_kind();
    spec.size = R.size();
    spec.modulus = R.add_kind() == AddKind::Cyclic ? static_cast<std::uint8_t>(R.size()) : 0;
    spec.table = R.add_table_u8().empty() ? nullptr : R.add_table_u8().data();
    return spec;
}

const KernelTable* avx2() {
#if defined(SWRG_HAVE_AVX2)
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? &avx2_table() : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable& active() {
    static const KernelTable* chosen = [] {
        const char* env = std::getenv("SWRG_KERNELS");
        if (env && std::strcmp(env, "scalar") == 0) return &scalar();
        const KernelTable* fast = avx2();
        return fast ? fast : &scalar();
    }();
    return *chosen;
}

}  // namespace swrg::kernels
