#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace wavecoh {

// Dense row-major (scale x time) grid.
template <class T>
class Grid {
public:
    Grid() = default;
    Grid(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), v_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return v_.empty(); }

    T& operator()(std::size_t j, std::size_t n) { return v_[j * cols_ + n]; }
    const T& operator()(std::size_t j, std::size_t n) const { return v_[j * cols_ + n]; }

    T* row(std::size_t j) { return v_.data() + j * cols_; }
    const T* row(std::size_t j) const { return v_.data() + j * cols_; }

    std::vector<T>& data() { return v_; }
    const std::vector<T>& data() const { return v_; }

    template <class U>
    bool same_shape(const Grid<U>& o) const { return rows_ == o.rows() && cols_ == o.cols(); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> v_;
};

using RealGrid = Grid<double>;
using ComplexGrid = Grid<std::complex<double>>;
using MaskGrid = Grid<std::uint8_t>;

}  // namespace wavecoh
