#pragma once

// Independent reference implementations used only by tests.

#include <cstdint>
#include <vector>

#include "wald/matrix.hpp"
#include "wald/rational.hpp"

namespace wald::testsupport {

/// Deterministic xorshift64* generator so test data is identical across
/// platforms and runs.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545f4914f6cdd1dull;
    }

    /// Uniform-ish integer in [lo, hi].
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

inline BigInt minor_det(const IntMatrix& m, const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols) {
    const std::size_t k = rows.size();
    if (k == 1) return m.at(rows[0], cols[0]);
    BigInt det = 0;
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
        std::vector<std::size_t> sub_cols;
        for (std::size_t c = 0; c < k; ++c)
            if (c != j) sub_cols.push_back(cols[c]);
        BigInt term = m.at(rows[0], cols[j]) * minor_det(m, sub_rows, sub_cols);
        if (j % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

inline bool has_nonzero_minor(const IntMatrix& m, std::size_t k, std::vector<std::size_t>& rows,
                              std::vector<std::size_t>& cols, std::size_t row_from,
                              std::size_t col_from) {
    if (rows.size() < k) {
        for (std::size_t r = row_from; r + (k - rows.size()) <= m.rows(); ++r) {
            rows.push_back(r);
            if (has_nonzero_minor(m, k, rows, cols, r + 1, col_from)) return true;
            rows.pop_back();
        }
        return false;
    }
    if (cols.size() < k) {
        for (std::size_t c = col_from; c + (k - cols.size()) <= m.cols(); ++c) {
            cols.push_back(c);
            if (has_nonzero_minor(m, k, rows, cols, row_from, c + 1)) return true;
            cols.pop_back();
        }
        return false;
    }
    return minor_det(m, rows, cols) != 0;
}

/// Rank as the largest k with a nonzero k x k minor — brutally slow, only
/// for tiny matrices.
inline std::size_t rank_by_minors(const IntMatrix& m) {
    const std::size_t bound = std::min(m.rows(), m.cols());
    for (std::size_t k = bound; k >= 1; --k) {
        std::vector<std::size_t> rows, cols;
        if (has_nonzero_minor(m, k, rows, cols, 0, 0)) return k;
    }
    return 0;
}

inline IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = rng.range(lo, hi);
    return m;
}

} // namespace wald::testsupport
