#include "tri/truth_value.hpp"

namespace tri {

TruthValue implies(TruthValue a, TruthValue b) noexcept {
    // 1/2 -> 1/2 is 1/2, so this is not the Lukasiewicz arrow.
    return join(negate(a), b);
}

TruthValue diamond1(TruthValue a) noexcept {
    switch (a) {
        case TruthValue::One: return TruthValue::Half;
        case TruthValue::Half: return TruthValue::Zero;
        case TruthValue::Zero: return TruthValue::Zero;
    }
    return TruthValue::Zero;
}

TruthValue box1(TruthValue a) noexcept {
    switch (a) {
        case TruthValue::One: return TruthValue::One;
        case TruthValue::Half: return TruthValue::One;
        case TruthValue::Zero: return TruthValue::Half;
    }
    return TruthValue::One;
}

TruthValue diamond2(TruthValue a) noexcept {
    return a == TruthValue::One ? TruthValue::One : TruthValue::Zero;
}

TruthValue box2(TruthValue a) noexcept {
    return a == TruthValue::Zero ? TruthValue::Zero : TruthValue::One;
}

char to_char(TruthValue v) noexcept {
    switch (v) {
        case TruthValue::Zero: return '0';
        case TruthValue::Half: return 'u';
        case TruthValue::One: return '1';
    }
    return '?';
}

std::optional<TruthValue> truth_value_from_char(char c) noexcept {
    switch (c) {
        case '0': return TruthValue::Zero;
        case 'u': return TruthValue::Half;
        case '1': return TruthValue::One;
        default: return std::nullopt;
    }
}

std::ostream& operator<<(std::ostream& os, TruthValue v) { return os << to_char(v); }

}  // namespace tri
