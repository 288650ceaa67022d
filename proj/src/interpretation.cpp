#include "tri/interpretation.hpp"

#include <stdexcept>

namespace tri {

std::size_t world_count(std::size_t n) {
    if (n > kMaxVariables)
        throw std::length_error("variable count " + std::to_string(n) + " exceeds limit of " +
                                std::to_string(kMaxVariables));
    std::size_t count = 1;
    for (std::size_t i = 0; i < n; ++i) count *= 3;
    return count;
}

Interpretation Interpretation::from_index(std::size_t index, std::size_t n) {
    if (index >= world_count(n)) throw std::out_of_range("interpretation index out of range");
    std::vector<TruthValue> values(n);
    for (std::size_t i = n; i-- > 0;) {
        values[i] = from_code(static_cast<std::uint8_t>(index % 3));
        index /= 3;
    }
    return Interpretation(std::move(values));
}

std::size_t Interpretation::index() const {
    std::size_t index = 0;
    for (TruthValue v : values_) index = index * 3 + code(v);
    return index;
}

std::string Interpretation::to_string(char separator) const {
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out += separator;
        out += to_char(values_[i]);
    }
    return out;
}

std::vector<Interpretation> enumerate_interpretations(std::size_t n) {
    const std::size_t count = world_count(n);
    std::vector<Interpretation> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(Interpretation::from_index(i, n));
    return out;
}

Interpretation parse_interpretation(std::string_view literal) {
    std::vector<TruthValue> values;
    bool expect_digit = true;
    for (char c : literal) {
        if (expect_digit) {
            const auto v = truth_value_from_char(c);
            if (!v)
                throw std::invalid_argument("bad interpretation literal '" + std::string(literal) +
                                            "': expected one of 0, u, 1");
            values.push_back(*v);
            expect_digit = false;
        } else {
            if (c != ',')
                throw std::invalid_argument("bad interpretation literal '" + std::string(literal) +
                                            "': digits must be separated by ','");
            expect_digit = true;
        }
    }
    if (expect_digit && !literal.empty())
        throw std::invalid_argument("bad interpretation literal '" + std::string(literal) +
                                    "': trailing ','");
    return Interpretation(std::move(values));
}

}  // namespace tri
