#pragma once

// Shared test fixtures: two reference problems whose full synthesis traces
// were worked out by hand, plus deterministic random generators that stay
// independent of the library's own sampling code.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <cnotsynth/cnotsynth.hpp>

namespace fixtures {

// --- six-wire reference problem -------------------------------------------
// Reduces with section width 2 through a known 15-operation trace.

inline cnotsynth::BitMatrix six_wire_matrix() {
    return cnotsynth::BitMatrix::from_rows({
        "110000",
        "100110",
        "010010",
        "111111",
        "110111",
        "001110",
    });
}

// Upper-triangular form left by the first reduction pass.
inline cnotsynth::BitMatrix six_wire_upper_triangular() {
    return cnotsynth::BitMatrix::from_rows({
        "110000",
        "010110",
        "001011",
        "000100",
        "000011",
        "000001",
    });
}

// Transpose of the matrix above, the input to the second pass.
inline cnotsynth::BitMatrix six_wire_upper_transposed() {
    return cnotsynth::BitMatrix::from_rows({
        "100000",
        "110000",
        "001000",
        "010100",
        "011010",
        "001011",
    });
}

inline std::vector<cnotsynth::RowOp> six_wire_lower_ops() {
    using cnotsynth::SynthStep;
    return {
        {0, 3, SynthStep::dedup}, {0, 4, SynthStep::dedup}, {0, 1, SynthStep::clear},
        {1, 2, SynthStep::clear}, {2, 4, SynthStep::dedup}, {3, 5, SynthStep::dedup},
        {3, 2, SynthStep::pivot}, {2, 3, SynthStep::clear},
    };
}

inline std::vector<cnotsynth::RowOp> six_wire_upper_ops() {
    using cnotsynth::SynthStep;
    return {
        {3, 4, SynthStep::dedup}, {0, 1, SynthStep::clear}, {1, 3, SynthStep::clear},
        {2, 5, SynthStep::dedup}, {2, 4, SynthStep::clear}, {3, 4, SynthStep::clear},
        {4, 5, SynthStep::clear},
    };
}

// The full 15-gate circuit the two passes stitch together, application order.
inline std::vector<cnotsynth::CnotGate> six_wire_gates() {
    return {
        {4, 3}, {1, 0}, {3, 1}, {5, 2}, {4, 2}, {4, 3}, {5, 4},            // upper pass, roles swapped
        {2, 3}, {3, 2}, {3, 5}, {2, 4}, {1, 2}, {0, 1}, {0, 4}, {0, 3},    // lower pass, reversed
    };
}

// --- four-wire reference pair ----------------------------------------------
// A small circuit and the transform it computes, checkable by hand.

inline cnotsynth::Circuit four_wire_circuit() {
    return cnotsynth::Circuit(4, {{0, 1}, {2, 3}, {1, 2}, {2, 1}, {1, 0}, {2, 3}});
}

inline cnotsynth::BitMatrix four_wire_matrix() {
    return cnotsynth::BitMatrix::from_rows({
        "1010",
        "0010",
        "1110",
        "1101",
    });
}

// --- deterministic generators ----------------------------------------------

// Uniform random bit matrix (not conditioned on anything); draws one bit per
// entry so it does not depend on the library's word layout.
inline cnotsynth::BitMatrix random_matrix(int n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    cnotsynth::BitMatrix m(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m.set_bit(r, c, gen() & 1u);
    return m;
}

// Random singular matrix by rejection.
inline cnotsynth::BitMatrix random_singular(int n, std::uint64_t seed) {
    for (std::uint64_t k = 0;; ++k) {
        cnotsynth::BitMatrix m = random_matrix(n, seed + 0x9e3779b9u * (k + 1));
        if (!m.is_invertible()) return m;
    }
}

// Random circuit with `len` gates over n >= 2 wires.
inline cnotsynth::Circuit random_circuit(int n, int len, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<int> wire(0, n - 1);
    std::vector<cnotsynth::CnotGate> gates;
    gates.reserve(len);
    for (int i = 0; i < len; ++i) {
        const int control = wire(gen);
        int target = wire(gen);
        while (target == control) target = wire(gen);
        gates.push_back({control, target});
    }
    return cnotsynth::Circuit(n, std::move(gates));
}

}  // namespace fixtures
