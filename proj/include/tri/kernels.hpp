#pragma once

// Byte-wise kernels over truth-value columns.
//
// Every semantic question in this library is answered by evaluating
// formulas on all 3^n interpretations at once. A column holds one byte per
// interpretation, in canonical order, each byte a TruthValue code in
// {0, 1, 2}. The scalar set is the reference; vector sets must agree with it
// byte for byte (tests/test_kernels.cpp) and are picked at runtime.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace tri::kernels {

/// 16-entry lookup table; only entries reachable from codes < 3 (unary) or
/// 3*a + b < 9 (binary) are read.
using Lut = std::array<std::uint8_t, 16>;

struct KernelSet {
    const char* name;
    /// out[i] = lut[in[i]]
    void (*map_unary)(const Lut& lut, const std::uint8_t* in, std::uint8_t* out, std::size_t len);
    /// out[i] = lut[3 * a[i] + b[i]]
    void (*map_binary)(const Lut& lut, const std::uint8_t* a, const std::uint8_t* b,
                       std::uint8_t* out, std::size_t len);
    void (*min)(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out, std::size_t len);
    void (*max)(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out, std::size_t len);
    std::size_t (*count_equal)(const std::uint8_t* in, std::uint8_t value, std::size_t len);
    /// First i with a[i] == value and b[i] != value, or len if none.
    std::size_t (*find_unmatched)(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t value,
                                  std::size_t len);
};

const KernelSet& scalar();

/// Null when not compiled in or not supported by the running CPU.
const KernelSet* avx2();
const KernelSet* neon();

/// Every set usable on this machine, scalar first.
std::vector<const KernelSet*> available();

/// The set used by the library. Defaults to the widest available; the
/// TRI_KERNELS environment variable (scalar, avx2, neon) overrides it.
const KernelSet& active();

/// Switches the active set by name; returns false if it is unavailable.
bool select(std::string_view name);

}  // namespace tri::kernels
