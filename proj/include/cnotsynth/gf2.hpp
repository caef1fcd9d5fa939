#pragma once

// Square bit matrices over GF(2), packed 64 bits per word, plus the helpers
// the synthesis layer is built on: row addition, rank, random invertible
// draws, and the plain-text matrix format.

#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cnotsynth {

using BigInt = boost::multiprecision::cpp_int;

/// Raised by the text-format parsers; carries the 1-based offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// An n-by-n matrix over GF(2). Each row is packed into ceil(n/64) 64-bit
/// words so that adding one row to another is a short XOR sweep. Bits past
/// column n-1 are kept zero, which lets operator== compare raw words.
class BitMatrix {
public:
    using Word = std::uint64_t;
    static constexpr int kWordBits = 64;

    explicit BitMatrix(int n)
        : n_(checked_dim(n)),
          words_per_row_((n_ + kWordBits - 1) / kWordBits),
          words_(static_cast<std::size_t>(n_) * words_per_row_, 0) {}

    static BitMatrix identity(int n) {
        BitMatrix m(n);
        for (int i = 0; i < n; ++i) m.set_bit(i, i, true);
        return m;
    }

    /// Builds from one string of '0'/'1' per row; rows must form a square.
    static BitMatrix from_rows(const std::vector<std::string>& rows) {
        BitMatrix m(static_cast<int>(rows.size()));
        for (int r = 0; r < m.n_; ++r) {
            if (static_cast<int>(rows[r].size()) != m.n_)
                throw std::invalid_argument("from_rows: rows must form a square matrix");
            for (int c = 0; c < m.n_; ++c) {
                const char ch = rows[r][c];
                if (ch == '1')
                    m.set_bit(r, c, true);
                else if (ch != '0')
                    throw std::invalid_argument("from_rows: rows may contain only '0' and '1'");
            }
        }
        return m;
    }

    int dim() const noexcept { return n_; }

    bool bit(int r, int c) const {
        check_index(r);
        check_index(c);
        return (row_ptr(r)[c / kWordBits] >> (c % kWordBits)) & 1u;
    }

    void set_bit(int r, int c, bool value) {
        check_index(r);
        check_index(c);
        const Word mask = Word(1) << (c % kWordBits);
        if (value)
            row_ptr(r)[c / kWordBits] |= mask;
        else
            row_ptr(r)[c / kWordBits] &= ~mask;
    }

    /// row dst ^= row src; the elementary row operation everything else is
    /// phrased in. src and dst must differ.
    void add_row(int src, int dst) {
        check_index(src);
        check_index(dst);
        if (src == dst) throw std::invalid_argument("add_row: source and destination rows must differ");
        Word* d = row_ptr(dst);
        const Word* s = row_ptr(src);
        for (int w = 0; w < words_per_row_; ++w) d[w] ^= s[w];
    }

    /// Bits [col, col+width) of row r as an integer; bit i of the result is
    /// column col+i. Needs 1 <= width <= 32 and col+width <= dim().
    std::uint32_t sub_row(int r, int col, int width) const {
        check_index(r);
        if (width < 1 || width > 32 || col < 0 || col + width > n_)
            throw std::out_of_range("sub_row: bit range out of range");
        const Word* row = row_ptr(r);
        const int word = col / kWordBits;
        const int offset = col % kWordBits;
        std::uint64_t bits = row[word] >> offset;
        if (offset + width > kWordBits) bits |= row[word + 1] << (kWordBits - offset);
        return static_cast<std::uint32_t>(bits & ((std::uint64_t(1) << width) - 1));
    }

    BitMatrix transposed() const {
        BitMatrix out(n_);
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < n_; ++c)
                if (bit(r, c)) out.set_bit(c, r, true);
        return out;
    }

    /// Rank over GF(2); eliminates a scratch copy, *this is left untouched.
    int rank() const {
        std::vector<Word> scratch(words_);
        auto row = [&](int r) { return scratch.data() + static_cast<std::size_t>(r) * words_per_row_; };
        int rk = 0;
        for (int col = 0; col < n_ && rk < n_; ++col) {
            const int word = col / kWordBits;
            const Word mask = Word(1) << (col % kWordBits);
            int pivot = -1;
            for (int r = rk; r < n_; ++r)
                if (row(r)[word] & mask) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) continue;
            if (pivot != rk)
                for (int w = 0; w < words_per_row_; ++w) std::swap(row(pivot)[w], row(rk)[w]);
            for (int r = pivot + 1; r < n_; ++r)
                if (row(r)[word] & mask)
                    for (int w = 0; w < words_per_row_; ++w) row(r)[w] ^= row(rk)[w];
            ++rk;
        }
        return rk;
    }

    bool is_invertible() const { return rank() == n_; }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

    /// Product over GF(2) (AND for bit products, XOR for sums):
    /// out.row(r) is the XOR of b's rows picked by the set bits of a.row(r).
    friend BitMatrix multiply(const BitMatrix& a, const BitMatrix& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("multiply: dimension mismatch");
        BitMatrix out(a.n_);
        for (int r = 0; r < a.n_; ++r) {
            Word* dst = out.row_ptr(r);
            const Word* ar = a.row_ptr(r);
            for (int w = 0; w < a.words_per_row_; ++w) {
                Word bits = ar[w];
                while (bits) {
                    const int j = w * kWordBits + std::countr_zero(bits);
                    bits &= bits - 1;
                    const Word* bj = b.row_ptr(j);
                    for (int k = 0; k < a.words_per_row_; ++k) dst[k] ^= bj[k];
                }
            }
        }
        return out;
    }

    /// Uniform over the invertible matrices: draw uniform bits, reject until
    /// the draw has full rank. Deterministic for a fixed (n, seed) because
    /// mt19937_64 is pinned down by the standard.
    friend BitMatrix random_invertible(int n, std::uint64_t seed) {
        BitMatrix m(n);
        std::mt19937_64 gen(seed);
        const int tail = n % kWordBits;
        const Word tail_mask = tail == 0 ? ~Word(0) : (Word(1) << tail) - 1;
        do {
            for (int r = 0; r < n; ++r) {
                Word* row = m.row_ptr(r);
                for (int w = 0; w < m.words_per_row_; ++w) row[w] = gen();
                row[m.words_per_row_ - 1] &= tail_mask;
            }
        } while (!m.is_invertible());
        return m;
    }

private:
    static int checked_dim(int n) {
        if (n < 1) throw std::invalid_argument("BitMatrix: dimension must be positive");
        return n;
    }

    void check_index(int i) const {
        if (i < 0 || i >= n_)
            throw std::out_of_range("BitMatrix: index " + std::to_string(i) + " out of range for dimension " +
                                    std::to_string(n_));
    }

    Word* row_ptr(int r) { return words_.data() + static_cast<std::size_t>(r) * words_per_row_; }
    const Word* row_ptr(int r) const { return words_.data() + static_cast<std::size_t>(r) * words_per_row_; }

    int n_;
    int words_per_row_;
    std::vector<Word> words_;
};

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b);
BitMatrix random_invertible(int n, std::uint64_t seed);

/// Number of invertible n-by-n matrices over GF(2):
/// product over i < n of (2^n - 2^i). Exceeds 64 bits from n = 9 on, hence
/// the arbitrary-precision result.
inline BigInt count_linear_reversible(int n) {
    if (n < 1) throw std::invalid_argument("count_linear_reversible: n must be positive");
    BigInt result = 1;
    const BigInt two_n = BigInt(1) << n;
    for (int i = 0; i < n; ++i) result *= two_n - (BigInt(1) << i);
    return result;
}

/// Matrix text format: n lines of n characters from {0,1}, row-major, no
/// separators. The dimension is inferred from the first line.
inline BitMatrix parse_matrix(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    if (lines.empty()) throw ParseError(1, "empty matrix file");
    const int n = static_cast<int>(lines.front().size());
    if (n == 0) throw ParseError(1, "empty row");
    if (static_cast<int>(lines.size()) != n) {
        const int at = static_cast<int>(lines.size()) < n ? static_cast<int>(lines.size()) + 1 : n + 1;
        throw ParseError(at, "expected " + std::to_string(n) + " rows to match " + std::to_string(n) +
                                 " columns, found " + std::to_string(lines.size()));
    }
    BitMatrix m(n);
    for (int r = 0; r < n; ++r) {
        const std::string& row = lines[r];
        if (static_cast<int>(row.size()) != n)
            throw ParseError(r + 1, "row has " + std::to_string(row.size()) + " columns, expected " +
                                        std::to_string(n));
        for (int c = 0; c < n; ++c) {
            if (row[c] == '1')
                m.set_bit(r, c, true);
            else if (row[c] != '0')
                throw ParseError(r + 1, std::string("invalid character '") + row[c] + "'");
        }
    }
    return m;
}

inline BitMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
}

inline std::string format_matrix(const BitMatrix& m) {
    std::string out;
    out.reserve(static_cast<std::size_t>(m.dim()) * (m.dim() + 1));
    for (int r = 0; r < m.dim(); ++r) {
        for (int c = 0; c < m.dim(); ++c) out += m.bit(r, c) ? '1' : '0';
        out += '\n';
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& out, const BitMatrix& m) { return out << format_matrix(m); }

}  // namespace cnotsynth
