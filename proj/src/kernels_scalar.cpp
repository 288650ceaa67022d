#include "tri/kernels.hpp"

namespace tri::kernels {
namespace {

void map_unary(const Lut& lut, const std::uint8_t* in, std::uint8_t* out, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) out[i] = lut[in[i]];
}

void map_binary(const Lut& lut, const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out,
                std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) out[i] = lut[3 * a[i] + b[i]];
}

void min(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) out[i] = a[i] < b[i] ? a[i] : b[i];
}

void max(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) out[i] = a[i] < b[i] ? b[i] : a[i];
}

std::size_t count_equal(const std::uint8_t* in, std::uint8_t value, std::size_t len) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < len; ++i) count += in[i] == value;
    return count;
}

std::size_t find_unmatched(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t value,
                           std::size_t len) {
    for (std::size_t i = 0; i < len; ++i)
        if (a[i] == value && b[i] != value) return i;
    return len;
}

constexpr KernelSet kScalar{"scalar", map_unary, map_binary, min, max, count_equal, find_unmatched};

}  // namespace

const KernelSet& scalar() { return kScalar; }

}  // namespace tri::kernels
