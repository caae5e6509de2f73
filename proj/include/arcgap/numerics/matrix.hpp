#pragma once

#include <cstddef>
#include <vector>

namespace arcgap {

/// Row-major dense square or rectangular matrix; just storage and indexing.
template <class T>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, T fill = T(0.0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1.0);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<T>& data() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using Matrix = DenseMatrix<double>;

}  // namespace arcgap
