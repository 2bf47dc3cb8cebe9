#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace wmetrics {

// Dense row-major matrix. Just storage plus the few reductions the metrics
// need; sized K x K or K x N, so no attempt at clever linear algebra.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<double>& data() const { return data_; }

    // Sum of the main diagonal; defined for square matrices only.
    double trace() const {
        if (rows_ != cols_) {
            throw std::logic_error("trace requires a square matrix");
        }
        double sum = 0.0;
        for (std::size_t i = 0; i < rows_; ++i) {
            sum += (*this)(i, i);
        }
        return sum;
    }

    double frobenius_norm() const {
        double sum = 0.0;
        for (double v : data_) {
            sum += v * v;
        }
        return std::sqrt(sum);
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> data_;
};

}  // namespace wmetrics
