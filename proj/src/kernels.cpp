#include "tri/kernels.hpp"

#include <atomic>
#include <cstdlib>

namespace tri::kernels {

#if defined(TRI_HAVE_AVX2_KERNELS)
const KernelSet* avx2_kernels_unchecked();
#endif
#if defined(TRI_HAVE_NEON_KERNELS)
const KernelSet* neon_kernels_unchecked();
#endif

const KernelSet* avx2() {
#if defined(TRI_HAVE_AVX2_KERNELS)
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? avx2_kernels_unchecked() : nullptr;
#else
    return nullptr;
#endif
}

const KernelSet* neon() {
#if defined(TRI_HAVE_NEON_KERNELS)
    // Advanced SIMD is mandatory on AArch64.
    return neon_kernels_unchecked();
#else
    return nullptr;
#endif
}

std::vector<const KernelSet*> available() {
    std::vector<const KernelSet*> out{&scalar()};
    if (const KernelSet* k = avx2()) out.push_back(k);
    if (const KernelSet* k = neon()) out.push_back(k);
    return out;
}

namespace {

const KernelSet* find(std::string_view name) {
    for (const KernelSet* k : available())
        if (name == k->name) return k;
    return nullptr;
}

const KernelSet* initial() {
    if (const char* env = std::getenv("TRI_KERNELS"))
        if (const KernelSet* k = find(env)) return k;
    return available().back();
}

std::atomic<const KernelSet*>& current() {
    static std::atomic<const KernelSet*> k{initial()};
    return k;
}

}  // namespace

const KernelSet& active() { return *current().load(std::memory_order_relaxed); }

bool select(std::string_view name) {
    const KernelSet* k = find(name);
    if (!k) return false;
    current().store(k, std::memory_order_relaxed);
    return true;
}

}  // namespace tri::kernels
