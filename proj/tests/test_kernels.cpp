#include <gtest/gtest.h>

#include <vector>

#include "generators.hpp"
#include "tri/kernels.hpp"
#include "tri/parser.hpp"
#include "tri/semantics.hpp"

namespace tri {
namespace {

using kernels::KernelSet;
using kernels::Lut;
using Bytes = std::vector<std::uint8_t>;

// Restores the process-wide kernel choice after a test switches it.
class KernelGuard {
public:
    KernelGuard() : saved_(kernels::active().name) {}
    ~KernelGuard() { kernels::select(saved_); }

private:
    std::string saved_;
};

Bytes random_trits(testing::Gen& gen, std::size_t len) {
    Bytes out(len);
    for (auto& b : out) b = static_cast<std::uint8_t>(gen.below(3));
    return out;
}

Lut random_lut(testing::Gen& gen) {
    Lut lut{};
    for (auto& b : lut) b = static_cast<std::uint8_t>(gen.below(3));
    return lut;
}

std::vector<std::size_t> lengths() {
    std::vector<std::size_t> out;
    for (std::size_t len = 0; len <= 100; ++len) out.push_back(len);
    for (std::size_t len : {127u, 128u, 129u, 243u, 729u, 2187u, 6561u, 19683u}) out.push_back(len);
    return out;
}

TEST(Kernels, ScalarAlwaysAvailableAndFirst) {
    const auto sets = kernels::available();
    ASSERT_FALSE(sets.empty());
    EXPECT_STREQ(sets.front()->name, "scalar");
    EXPECT_FALSE(kernels::select("no-such-set"));
}

TEST(Kernels, ReportsVectorSets) {
    for (const KernelSet* k : kernels::available()) std::printf("kernel set available: %s\n", k->name);
#if defined(__x86_64__)
    if (__builtin_cpu_supports("avx2")) {
        EXPECT_NE(kernels::avx2(), nullptr);
    }
#endif
}

TEST(Kernels, EverySetMatchesScalarByteForByte) {
    const KernelSet& ref = kernels::scalar();
    testing::Gen gen(21);
    for (const KernelSet* k : kernels::available()) {
        SCOPED_TRACE(k->name);
        for (std::size_t len : lengths()) {
            const Bytes a = random_trits(gen, len);
            const Bytes b = random_trits(gen, len);
            const Lut lut = random_lut(gen);
            Bytes want(len), got(len);

            ref.map_unary(lut, a.data(), want.data(), len);
            k->map_unary(lut, a.data(), got.data(), len);
            EXPECT_EQ(got, want) << "map_unary len " << len;

            ref.map_binary(lut, a.data(), b.data(), want.data(), len);
            k->map_binary(lut, a.data(), b.data(), got.data(), len);
            EXPECT_EQ(got, want) << "map_binary len " << len;

            ref.min(a.data(), b.data(), want.data(), len);
            k->min(a.data(), b.data(), got.data(), len);
            EXPECT_EQ(got, want) << "min len " << len;

            ref.max(a.data(), b.data(), want.data(), len);
            k->max(a.data(), b.data(), got.data(), len);
            EXPECT_EQ(got, want) << "max len " << len;

            for (std::uint8_t v = 0; v < 3; ++v) {
                EXPECT_EQ(k->count_equal(a.data(), v, len), ref.count_equal(a.data(), v, len));
                EXPECT_EQ(k->find_unmatched(a.data(), b.data(), v, len),
                          ref.find_unmatched(a.data(), b.data(), v, len));
            }
        }
    }
}

TEST(Kernels, FindUnmatchedLocatesSinglePlantedMismatch) {
    for (const KernelSet* k : kernels::available()) {
        SCOPED_TRACE(k->name);
        for (std::size_t len : {1u, 31u, 32u, 33u, 64u, 100u, 1000u}) {
            for (std::size_t pos : {std::size_t{0}, len / 2, len - 1}) {
                Bytes a(len, 2), b(len, 2);
                b[pos] = 1;
                EXPECT_EQ(k->find_unmatched(a.data(), b.data(), 2, len), pos);
                b[pos] = 2;
                EXPECT_EQ(k->find_unmatched(a.data(), b.data(), 2, len), len);
            }
        }
    }
}

TEST(Kernels, ColumnEvaluationMatchesReferenceUnderEverySet) {
    KernelGuard guard;
    testing::Gen gen(22);
    std::vector<Formula> formulas;
    for (int i = 0; i < 150; ++i) formulas.push_back(gen.formula(5, 7));
    for (const KernelSet* k : kernels::available()) {
        ASSERT_TRUE(kernels::select(k->name));
        SCOPED_TRACE(k->name);
        for (std::size_t n : {1u, 3u, 5u}) {
            const auto worlds = enumerate_interpretations(n);
            for (const Formula& f : formulas) {
                if (f.var_bound() > n) continue;
                const TruthColumn col = eval_all(f, n);
                for (std::size_t w = 0; w < worlds.size(); ++w)
                    ASSERT_EQ(col[w], eval(f, worlds[w])) << render(f) << " at " << worlds[w].to_string();
            }
        }
    }
}

}  // namespace
}  // namespace tri
