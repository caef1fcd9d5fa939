#pragma once

// CNOT circuits on n wires and the linear transforms they compute.

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gf2.hpp"

namespace cnotsynth {

/// One controlled-NOT: XORs the control wire into the target wire. As a
/// linear map it is the identity matrix with bit (target, control) set.
struct CnotGate {
    int control;
    int target;

    friend bool operator==(const CnotGate&, const CnotGate&) = default;
};

/// An n-wire CNOT circuit. Gates are stored in application order (front acts
/// first); the circuit is immutable after construction.
class Circuit {
public:
    explicit Circuit(int n) : Circuit(n, {}) {}

    Circuit(int n, std::vector<CnotGate> gates) : n_(n), gates_(std::move(gates)) {
        if (n_ < 1) throw std::invalid_argument("Circuit: wire count must be positive");
        for (const CnotGate& g : gates_) check_gate(g);
    }

    int wires() const noexcept { return n_; }
    const std::vector<CnotGate>& gates() const noexcept { return gates_; }
    std::size_t size() const noexcept { return gates_.size(); }

    friend bool operator==(const Circuit&, const Circuit&) = default;

private:
    void check_gate(const CnotGate& g) const {
        if (g.control < 0 || g.control >= n_ || g.target < 0 || g.target >= n_)
            throw std::out_of_range("Circuit: wire index out of range");
        if (g.control == g.target)
            throw std::invalid_argument("Circuit: control and target must differ");
    }

    int n_;
    std::vector<CnotGate> gates_;
};

/// Runs the circuit on a bit vector of length wires().
inline std::vector<bool> apply_to_vector(const Circuit& c, std::vector<bool> x) {
    if (static_cast<int>(x.size()) != c.wires())
        throw std::invalid_argument("apply_to_vector: vector length must equal the wire count");
    for (const CnotGate& g : c.gates()) x[g.target] = x[g.target] != x[g.control];
    return x;
}

/// The linear transform the circuit computes: the product of its gates'
/// elementary matrices with the last gate leftmost. Built by replaying the
/// gates as row additions on an identity matrix.
inline BitMatrix eval_matrix(const Circuit& c) {
    BitMatrix m = BitMatrix::identity(c.wires());
    for (const CnotGate& g : c.gates()) m.add_row(g.control, g.target);
    return m;
}

inline Circuit reverse(const Circuit& c) {
    std::vector<CnotGate> gates(c.gates().rbegin(), c.gates().rend());
    return Circuit(c.wires(), std::move(gates));
}

inline Circuit swap_control_target(const Circuit& c) {
    std::vector<CnotGate> gates;
    gates.reserve(c.size());
    for (const CnotGate& g : c.gates()) gates.push_back({g.target, g.control});
    return Circuit(c.wires(), std::move(gates));
}

/// CNOTs are self-inverse, so undoing a circuit is replaying it backwards.
inline Circuit inverse(const Circuit& c) { return reverse(c); }

/// Circuit text format: a "wires <n>" header, then one "cnot <control>
/// <target>" line per gate in application order, wires 0-based. Lines
/// starting with '#' and blank lines are skipped.
inline Circuit parse_circuit(std::istream& in) {
    int n = -1;
    std::vector<CnotGate> gates;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line[0] == '#') continue;
        std::istringstream fields(line);
        std::string keyword;
        if (!(fields >> keyword)) continue;  // blank or whitespace-only
        std::string extra;
        if (n < 0) {
            if (keyword != "wires") throw ParseError(line_no, "expected 'wires <n>' header");
            if (!(fields >> n) || n < 1)
                throw ParseError(line_no, "wire count must be a positive integer");
            if (fields >> extra) throw ParseError(line_no, "unexpected text after wire count");
            continue;
        }
        if (keyword != "cnot") throw ParseError(line_no, "expected 'cnot <control> <target>'");
        int control = 0;
        int target = 0;
        if (!(fields >> control >> target))
            throw ParseError(line_no, "expected two wire indices");
        if (fields >> extra) throw ParseError(line_no, "unexpected text after gate");
        if (control < 0 || control >= n || target < 0 || target >= n)
            throw ParseError(line_no, "wire index out of range for " + std::to_string(n) + " wires");
        if (control == target) throw ParseError(line_no, "control and target must differ");
        gates.push_back({control, target});
    }
    if (n < 0) throw ParseError(line_no + 1, "missing 'wires <n>' header");
    return Circuit(n, std::move(gates));
}

inline Circuit parse_circuit(const std::string& text) {
    std::istringstream in(text);
    return parse_circuit(in);
}

inline std::string serialize_circuit(const Circuit& c) {
    std::string out = "wires " + std::to_string(c.wires()) + "\n";
    for (const CnotGate& g : c.gates())
        out += "cnot " + std::to_string(g.control) + " " + std::to_string(g.target) + "\n";
    return out;
}

inline std::ostream& operator<<(std::ostream& out, const CnotGate& g) {
    return out << "cnot(" << g.control << "," << g.target << ")";
}

inline std::ostream& operator<<(std::ostream& out, const Circuit& c) { return out << serialize_circuit(c); }

}  // namespace cnotsynth
