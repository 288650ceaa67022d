#include <arm_neon.h>

#include "tri/kernels.hpp"

namespace tri::kernels {

namespace neon_impl {
namespace {

void map_unary(const Lut& lut, const std::uint8_t* in, std::uint8_t* out, std::size_t len) {
    const uint8x16_t table = vld1q_u8(lut.data());
    std::size_t i = 0;
    for (; i + 16 <= len; i += 16) vst1q_u8(out + i, vqtbl1q_u8(table, vld1q_u8(in + i)));
    scalar().map_unary(lut, in + i, out + i, len - i);
}

void map_binary(const Lut& lut, const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out,
                std::size_t len) {
    const uint8x16_t table = vld1q_u8(lut.data());
    const uint8x16_t three = vdupq_n_u8(3);
    std::size_t i = 0;
    for (; i + 16 <= len; i += 16) {
        const uint8x16_t idx = vmlaq_u8(vld1q_u8(b + i), vld1q_u8(a + i), three);
        vst1q_u8(out + i, vqtbl1q_u8(table, idx));
    }
    scalar().map_binary(lut, a + i, b + i, out + i, len - i);
}

void min(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out, std::size_t len) {
    std::size_t i = 0;
    for (; i + 16 <= len; i += 16) vst1q_u8(out + i, vminq_u8(vld1q_u8(a + i), vld1q_u8(b + i)));
    scalar().min(a + i, b + i, out + i, len - i);
}

void max(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out, std::size_t len) {
    std::size_t i = 0;
    for (; i + 16 <= len; i += 16) vst1q_u8(out + i, vmaxq_u8(vld1q_u8(a + i), vld1q_u8(b + i)));
    scalar().max(a + i, b + i, out + i, len - i);
}

std::size_t count_equal(const std::uint8_t* in, std::uint8_t value, std::size_t len) {
    const uint8x16_t v = vdupq_n_u8(value);
    std::size_t count = 0;
    std::size_t i = 0;
    for (; i + 16 <= len; i += 16) {
        // 0xFF lanes become 1 after the shift; at most 16 per block.
        const uint8x16_t hits = vshrq_n_u8(vceqq_u8(vld1q_u8(in + i), v), 7);
        count += vaddvq_u8(hits);
    }
    return count + scalar().count_equal(in + i, value, len - i);
}

std::size_t find_unmatched(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t value,
                           std::size_t len) {
    const uint8x16_t v = vdupq_n_u8(value);
    std::size_t i = 0;
    for (; i + 16 <= len; i += 16) {
        const uint8x16_t bad = vbicq_u8(vceqq_u8(vld1q_u8(a + i), v), vceqq_u8(vld1q_u8(b + i), v));
        if (vmaxvq_u8(bad)) return i + scalar().find_unmatched(a + i, b + i, value, 16);
    }
    return i + scalar().find_unmatched(a + i, b + i, value, len - i);
}

}  // namespace

constexpr KernelSet kNeon{"neon", map_unary, map_binary, min, max, count_equal, find_unmatched};

}  // namespace neon_impl

const KernelSet* neon_kernels_unchecked() { return &neon_impl::kNeon; }

}  // namespace tri::kernels
