#pragma once

// Synthesis of CNOT circuits for invertible GF(2) matrices.
//
// Both synthesizers run the same two-pass scheme: reduce the matrix to upper
// triangular form while recording row operations, transpose the remainder,
// reduce again, and stitch the two operation lists into one circuit. The
// sectioned variant eliminates duplicate sub-rows before touching individual
// columns, which brings the gate count down to O(n^2 / log n); the plain
// Gaussian variant is the quadratic baseline it is measured against.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "circuit.hpp"

namespace cnotsynth {

/// Raised when elimination finds a column with no usable pivot, which
/// happens precisely when the input matrix is singular.
class SingularMatrixError : public std::runtime_error {
public:
    explicit SingularMatrixError(int column)
        : std::runtime_error("singular matrix: no pivot available in column " + std::to_string(column)),
          column_(column) {}

    int column() const noexcept { return column_; }

private:
    int column_;
};

/// Elimination phase that emitted a row operation: collapsing a duplicate
/// sub-row (step a), placing a missing diagonal one (step b), or clearing a
/// one below the diagonal (step c).
enum class SynthStep : std::uint8_t { dedup, pivot, clear };

/// One row operation "add row src to row dst"; as a gate this is the CNOT
/// with control src and target dst.
struct RowOp {
    int src;
    int dst;
    SynthStep step;

    friend bool operator==(const RowOp&, const RowOp&) = default;
};

struct SynthOptions {
    /// Section width m in columns; 0 picks default_section_size(n).
    int section_width = 0;
};

/// Widths past this would need a 2^width-entry pattern table; no useful
/// width comes close (the default grows like log2(n)/2).
inline constexpr int kMaxSectionWidth = 24;

struct SynthReport {
    int n = 0;
    int m_used = 0;  // 0 means no column sectioning (the plain baseline)
    int gate_count_total = 0;
    int gates_step_a = 0;
    int gates_step_b = 0;
    int gates_step_c = 0;
    std::string note;  // set when an out-of-range section width was clamped

    std::string to_json() const {
        return "{\"n\":" + std::to_string(n) + ",\"m\":" + std::to_string(m_used) +
               ",\"total\":" + std::to_string(gate_count_total) +
               ",\"step_a\":" + std::to_string(gates_step_a) +
               ",\"step_b\":" + std::to_string(gates_step_b) +
               ",\"step_c\":" + std::to_string(gates_step_c) + "}";
    }
};

/// Result of one triangular-reduction pass.
struct LowerSynthesis {
    BitMatrix reduced;        // upper triangular, unit diagonal
    std::vector<RowOp> ops;   // in application order
};

struct Synthesis {
    Circuit circuit;
    SynthReport report;
};

/// Default section width: half the base-2 logarithm of n, rounded half up,
/// never below 1.
inline int default_section_size(int n) {
    if (n < 1) throw std::invalid_argument("default_section_size: n must be positive");
    return std::max(1, static_cast<int>(std::floor(std::log2(static_cast<double>(n)) / 2.0 + 0.5)));
}

/// Reduces `a` to upper triangular form with a unit diagonal and returns the
/// reduced matrix plus the row operations applied, in application order.
///
/// Columns are processed in sections of at most `section_width` columns.
/// Per section, scanning from the section's first diagonal row down:
///   step a: rows repeating an earlier row's sub-row pattern inside the
///           section collapse onto that first occurrence (one op per
///           duplicate); all-zero patterns need no work and are skipped;
///   step b: a missing diagonal one is fixed by adding the first lower row
///           holding a one in the column;
///   step c: every remaining one below the diagonal is cleared by adding the
///           diagonal row.
/// Ties always resolve to the topmost candidate row, so the output is a
/// deterministic function of the input.
inline LowerSynthesis lwr_cnot_synth(BitMatrix a, int section_width) {
    const int n = a.dim();
    if (section_width < 1) throw std::invalid_argument("lwr_cnot_synth: section width must be positive");
    const int m = std::min(section_width, n);
    if (m > kMaxSectionWidth)
        throw std::invalid_argument("lwr_cnot_synth: section width exceeds " + std::to_string(kMaxSectionWidth));

    std::vector<RowOp> ops;
    std::vector<int> first_row_with_pattern;  // indexed directly by sub-row bits
    for (int col_lo = 0; col_lo < n; col_lo += m) {
        const int width = std::min(m, n - col_lo);
        const int col_hi = col_lo + width;

        // step a: collapse repeated sub-rows onto their first occurrence
        first_row_with_pattern.assign(std::size_t(1) << width, -1);
        for (int row = col_lo; row < n; ++row) {
            const std::uint32_t pattern = a.sub_row(row, col_lo, width);
            if (pattern == 0) continue;
            int& first = first_row_with_pattern[pattern];
            if (first < 0) {
                first = row;
            } else {
                a.add_row(first, row);
                ops.push_back({first, row, SynthStep::dedup});
            }
        }

        // steps b and c: eliminate the few distinct patterns column by column
        for (int col = col_lo; col < col_hi; ++col) {
            bool diag_one = a.bit(col, col);
            for (int row = col + 1; row < n; ++row) {
                if (!a.bit(row, col)) continue;
                if (!diag_one) {
                    a.add_row(row, col);
                    ops.push_back({row, col, SynthStep::pivot});
                    diag_one = true;
                }
                a.add_row(col, row);
                ops.push_back({col, row, SynthStep::clear});
            }
            if (!diag_one) throw SingularMatrixError(col);
        }
    }
    return {std::move(a), std::move(ops)};
}

namespace detail {

/// Stitches the two triangular passes into one circuit. A row op (src, dst)
/// is left-multiplication by the elementary matrix with bit (dst, src), so
/// the recorded ops satisfy  L_p..L_1 * A * transposed(U_q..U_1) = I  after
/// both passes. Solving for A: replay the upper-pass ops in recorded order
/// with control and target swapped (the transpose flips each elementary
/// factor), then the lower-pass ops in reverse order unswapped.
inline std::vector<CnotGate> combine_passes(const std::vector<RowOp>& lower_ops,
                                            const std::vector<RowOp>& upper_ops) {
    std::vector<CnotGate> gates;
    gates.reserve(lower_ops.size() + upper_ops.size());
    for (const RowOp& op : upper_ops) gates.push_back({op.dst, op.src});
    for (auto it = lower_ops.rbegin(); it != lower_ops.rend(); ++it) gates.push_back({it->src, it->dst});
    return gates;
}

inline void tally_steps(SynthReport& report, const std::vector<RowOp>& ops) {
    for (const RowOp& op : ops) {
        switch (op.step) {
            case SynthStep::dedup: ++report.gates_step_a; break;
            case SynthStep::pivot: ++report.gates_step_b; break;
            case SynthStep::clear: ++report.gates_step_c; break;
        }
    }
}

inline Synthesis assemble(int n, int m_used, std::string note, const LowerSynthesis& lower,
                          const LowerSynthesis& upper) {
    SynthReport report;
    report.n = n;
    report.m_used = m_used;
    report.note = std::move(note);
    detail::tally_steps(report, lower.ops);
    detail::tally_steps(report, upper.ops);
    report.gate_count_total = static_cast<int>(lower.ops.size() + upper.ops.size());
    return {Circuit(n, combine_passes(lower.ops, upper.ops)), report};
}

}  // namespace detail

/// Synthesizes a CNOT circuit computing the invertible matrix `a` using
/// sectioned elimination on both triangular passes. eval_matrix of the
/// result equals `a` exactly. An out-of-range section width is clamped into
/// [1, min(n, kMaxSectionWidth)] and the adjustment is noted in the report.
inline Synthesis cnot_synth_pmh(const BitMatrix& a, const SynthOptions& options = {}) {
    const int n = a.dim();
    const int requested = options.section_width == 0 ? default_section_size(n) : options.section_width;
    const int m = std::clamp(requested, 1, std::min(n, kMaxSectionWidth));
    std::string note;
    if (m != requested)
        note = "section width " + std::to_string(requested) + " clamped to " + std::to_string(m);

    const LowerSynthesis lower = lwr_cnot_synth(a, m);
    const LowerSynthesis upper = lwr_cnot_synth(lower.reduced.transposed(), m);
    return detail::assemble(n, m, std::move(note), lower, upper);
}

/// One triangular pass of the baseline: plain column-at-a-time elimination,
/// same pivot rule and op recording as the sectioned pass but no step a.
inline LowerSynthesis gaussian_lower(BitMatrix a) {
    const int n = a.dim();
    std::vector<RowOp> ops;
    for (int col = 0; col < n; ++col) {
        if (!a.bit(col, col)) {
            int pivot = -1;
            for (int row = col + 1; row < n; ++row)
                if (a.bit(row, col)) {
                    pivot = row;
                    break;
                }
            if (pivot < 0) throw SingularMatrixError(col);
            a.add_row(pivot, col);
            ops.push_back({pivot, col, SynthStep::pivot});
        }
        for (int row = col + 1; row < n; ++row)
            if (a.bit(row, col)) {
                a.add_row(col, row);
                ops.push_back({col, row, SynthStep::clear});
            }
    }
    return {std::move(a), std::move(ops)};
}

/// Baseline synthesis by plain Gaussian elimination; two passes combined the
/// same way as cnot_synth_pmh. Never emits more than n^2 gates.
inline Synthesis gaussian_synth(const BitMatrix& a) {
    const LowerSynthesis lower = gaussian_lower(a);
    const LowerSynthesis upper = gaussian_lower(lower.reduced.transposed());
    return detail::assemble(a.dim(), 0, "", lower, upper);
}

/// Worst-case gate floor for n wires: (n^2 - n) / log2(n^2 - n + 1).
inline double lower_bound_gates(int n) {
    if (n < 2) throw std::domain_error("lower_bound_gates: needs n >= 2");
    const double q = static_cast<double>(n) * n - n;
    return q / std::log2(q + 1.0);
}

/// Worst-case row-operation ceiling for sectioned elimination with section
/// width m: (n+m)*ceil(n/m) + n + 2*ceil(n/m)*m*(2^m + m), computed exactly.
inline BigInt upper_bound_row_ops(int n, int m) {
    if (n < 1) throw std::domain_error("upper_bound_row_ops: needs n >= 1");
    if (m < 1 || m > n) throw std::domain_error("upper_bound_row_ops: needs 1 <= m <= n");
    const long long sections = (static_cast<long long>(n) + m - 1) / m;
    const BigInt pow2m = BigInt(1) << m;
    return BigInt(n + m) * sections + n + 2 * sections * m * (pow2m + m);
}

/// True iff the circuit computes exactly the transform `a`.
inline bool verify(const BitMatrix& a, const Circuit& circuit) {
    if (circuit.wires() != a.dim())
        throw std::invalid_argument("verify: wire count does not match the matrix dimension");
    return eval_matrix(circuit) == a;
}

}  // namespace cnotsynth
