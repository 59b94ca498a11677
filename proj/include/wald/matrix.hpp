#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "wald/rational.hpp"

namespace wald {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;

    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        entries_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw std::invalid_argument("ragged matrix initializer");
            for (long v : row) entries_.emplace_back(v);
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    /// M * v over the integers.
    std::vector<BigInt> apply(const std::vector<BigInt>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in apply");
        std::vector<BigInt> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            BigInt acc = 0;
            for (std::size_t j = 0; j < cols_; ++j)
                acc += at(i, j) * v[j];
            out[i] = std::move(acc);
        }
        return out;
    }

    bool annihilates(const std::vector<BigInt>& v) const {
        for (const BigInt& x : apply(v))
            if (x != 0) return false;
        return true;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> entries_;
};

} // namespace wald
