// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "tri/kernels.hpp"

namespace tri::kernels {

namespace avx2_impl {
namespace {

inline __m256i load(const std::uint8_t* p) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}
inline void store(std::uint8_t* p, __m256i v) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}
// vpshufb looks up within each 128-bit lane, so the table goes in both.
inline __m256i broadcast(const Lut& lut) {
    return _mm256_broadcastsi128_si256(_mm_loadu_si128(reinterpret_cast<const __m128i*>(lut.data())));
}

void map_unary(const Lut& lut, const std::uint8_t* in, std::uint8_t* out, std::size_t len) {
    const __m256i table = broadcast(lut);
    std::size_t i = 0;
    for (; i + 32 <= len; i += 32) store(out + i, _mm256_shuffle_epi8(table, load(in + i)));
    scalar().map_unary(lut, in + i, out + i, len - i);
}

void map_binary(const Lut& lut, const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out,
                std::size_t len) {
    const __m256i table = broadcast(lut);
    std::size_t i = 0;
    for (; i + 32 <= len; i += 32) {
        const __m256i va = load(a + i);
        const __m256i idx = _mm256_add_epi8(_mm256_add_epi8(va, va), _mm256_add_epi8(va, load(b + i)));
        store(out + i, _mm256_shuffle_epi8(table, idx));
    }
    scalar().map_binary(lut, a + i, b + i, out + i, len - i);
}

void min(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out, std::size_t len) {
    std::size_t i = 0;
    for (; i + 32 <= len; i += 32) store(out + i, _mm256_min_epu8(load(a + i), load(b + i)));
    scalar().min(a + i, b + i, out + i, len - i);
}

void max(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out, std::size_t len) {
    std::size_t i = 0;
    for (; i + 32 <= len; i += 32) store(out + i, _mm256_max_epu8(load(a + i), load(b + i)));
    scalar().max(a + i, b + i, out + i, len - i);
}

std::size_t count_equal(const std::uint8_t* in, std::uint8_t value, std::size_t len) {
    const __m256i v = _mm256_set1_epi8(static_cast<char>(value));
    std::size_t count = 0;
    std::size_t i = 0;
    for (; i + 32 <= len; i += 32) {
        const auto mask = static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(load(in + i), v)));
        count += static_cast<std::size_t>(__builtin_popcount(mask));
    }
    return count + scalar().count_equal(in + i, value, len - i);
}

std::size_t find_unmatched(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t value,
                           std::size_t len) {
    const __m256i v = _mm256_set1_epi8(static_cast<char>(value));
    std::size_t i = 0;
    for (; i + 32 <= len; i += 32) {
        const __m256i in_a = _mm256_cmpeq_epi8(load(a + i), v);
        const __m256i in_b = _mm256_cmpeq_epi8(load(b + i), v);
        const auto mask = static_cast<unsigned>(_mm256_movemask_epi8(_mm256_andnot_si256(in_b, in_a)));
        if (mask) return i + static_cast<std::size_t>(__builtin_ctz(mask));
    }
    return i + scalar().find_unmatched(a + i, b + i, value, len - i);
}

}  // namespace

constexpr KernelSet kAvx2{"avx2", map_unary, map_binary, min, max, count_equal, find_unmatched};

}  // namespace avx2_impl

const KernelSet* avx2_kernels_unchecked() { return &avx2_impl::kAvx2; }

}  // namespace tri::kernels
