#pragma once

#include <cstdint>

namespace fast {

// Three-valued signal level. Unknown models the remnant charge of a dynamic
// node after an illegal switching sequence: the level is real but cannot be
// predicted functionally.
enum class TriBit : uint8_t { Zero = 0, One = 1, Unknown = 2 };

constexpr TriBit tri(bool b) { return b ? TriBit::One : TriBit::Zero; }

constexpr bool is_known(TriBit t) { return t != TriBit::Unknown; }

// Only meaningful for known values; Unknown reads as false.
constexpr bool as_bool(TriBit t) { return t == TriBit::One; }

constexpr char tri_char(TriBit t) {
    return t == TriBit::Zero ? '0' : (t == TriBit::One ? '1' : 'x');
}

// Kleene logic: a gate output is Unknown unless the known inputs alone
// determine it.
constexpr TriBit tri_not(TriBit a) {
    if (a == TriBit::Unknown) return TriBit::Unknown;
    return tri(!as_bool(a));
}

constexpr TriBit tri_and(TriBit a, TriBit b) {
    if (a == TriBit::Zero || b == TriBit::Zero) return TriBit::Zero;
    if (a == TriBit::One && b == TriBit::One) return TriBit::One;
    return TriBit::Unknown;
}

constexpr TriBit tri_or(TriBit a, TriBit b) {
    if (a == TriBit::One || b == TriBit::One) return TriBit::One;
    if (a == TriBit::Zero && b == TriBit::Zero) return TriBit::Zero;
    return TriBit::Unknown;
}

constexpr TriBit tri_xor(TriBit a, TriBit b) {
    if (!is_known(a) || !is_known(b)) return TriBit::Unknown;
    return tri(as_bool(a) != as_bool(b));
}

// Exact three-valued evaluation of an arbitrary 3-input truth table
// (bit index = in0 | in1<<1 | in2<<2): enumerate every completion of the
// unknown inputs; the output is known only if all completions agree.
constexpr TriBit tri_lut3(uint8_t table, TriBit in0, TriBit in1, TriBit in2) {
    bool can0 = false;
    bool can1 = false;
    const TriBit in[3] = {in0, in1, in2};
    for (int m = 0; m < 8; ++m) {
        bool consistent = true;
        for (int i = 0; i < 3; ++i) {
            if (is_known(in[i]) && as_bool(in[i]) != (((m >> i) & 1) != 0)) {
                consistent = false;
                break;
            }
        }
        if (!consistent) continue;
        if ((table >> m) & 1) {
            can1 = true;
        } else {
            can0 = true;
        }
    }
    if (can0 && can1) return TriBit::Unknown;
    return can1 ? TriBit::One : TriBit::Zero;
}

constexpr TriBit tri_xor3(TriBit a, TriBit b, TriBit c) {
    return tri_lut3(0x96, a, b, c);
}

constexpr TriBit tri_maj(TriBit a, TriBit b, TriBit c) {
    return tri_lut3(0xE8, a, b, c);
}

}  // namespace fast
