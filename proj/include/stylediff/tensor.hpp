#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstring>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "stylediff/errors.hpp"
#include "stylediff/rng.hpp"

namespace stylediff {

// Dense row-major array of 64-bit floats. Rank 1 and 2 cover everything the
// engine needs; data length always equals the product of the shape.
struct Tensor {
    std::vector<std::size_t> shape;
    std::vector<double> data;

    Tensor() = default;

    Tensor(std::vector<std::size_t> shape_, std::vector<double> data_)
        : shape(std::move(shape_)), data(std::move(data_)) {
        if (data.size() != element_count(shape))
            throw ShapeError("tensor data length does not match shape");
    }

    static std::size_t element_count(const std::vector<std::size_t>& shape) {
        std::size_t n = 1;
        for (std::size_t d : shape) n *= d;
        return n;
    }

    static Tensor zeros(std::vector<std::size_t> shape) {
        std::size_t n = element_count(shape);
        return Tensor(std::move(shape), std::vector<double>(n, 0.0));
    }

    static Tensor identity(std::size_t n) {
        Tensor t = zeros({n, n});
        for (std::size_t i = 0; i < n; ++i) t.data[i * n + i] = 1.0;
        return t;
    }

    static Tensor from_rows(std::initializer_list<std::initializer_list<double>> rows) {
        std::size_t m = rows.size();
        std::size_t n = m ? rows.begin()->size() : 0;
        Tensor t = zeros({m, n});
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != n) throw ShapeError("ragged row list");
            std::copy(row.begin(), row.end(), t.data.begin() + static_cast<std::ptrdiff_t>(i * n));
            ++i;
        }
        return t;
    }

    std::size_t size() const { return data.size(); }
    std::size_t rank() const { return shape.size(); }

    std::size_t rows() const {
        if (rank() != 2) throw ShapeError("rows() on non-matrix tensor");
        return shape[0];
    }
    std::size_t cols() const {
        if (rank() != 2) throw ShapeError("cols() on non-matrix tensor");
        return shape[1];
    }

    double& at(std::size_t i, std::size_t j) { return data[i * cols() + j]; }
    double at(std::size_t i, std::size_t j) const { return data[i * cols() + j]; }

    bool same_shape(const Tensor& o) const { return shape == o.shape; }

    bool all_finite() const {
        for (double v : data)
            if (!std::isfinite(v)) return false;
        return true;
    }
};

inline std::string shape_string(const Tensor& t) {
    std::string s = "[";
    for (std::size_t i = 0; i < t.shape.size(); ++i) {
        if (i) s += "x";
        s += std::to_string(t.shape[i]);
    }
    return s + "]";
}

// Standard matrix product with a fixed accumulation order: for every output
// element, contributions are summed over k in increasing order, so results
// are reproducible bit for bit across runs.
inline Tensor matmul(const Tensor& a, const Tensor& b) {
    if (a.rank() != 2 || b.rank() != 2)
        throw ShapeError("matmul expects rank-2 tensors, got " + shape_string(a) + " and " + shape_string(b));
    if (a.cols() != b.rows())
        throw ShapeError("matmul inner dimensions disagree: " + shape_string(a) + " vs " + shape_string(b));
    const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
    Tensor out = Tensor::zeros({m, n});
    for (std::size_t i = 0; i < m; ++i) {
        double* out_row = out.data.data() + i * n;
        for (std::size_t p = 0; p < k; ++p) {
            const double aip = a.data[i * k + p];
            const double* b_row = b.data.data() + p * n;
            for (std::size_t j = 0; j < n; ++j) out_row[j] += aip * b_row[j];
        }
    }
    return out;
}

inline Tensor transpose(const Tensor& a) {
    const std::size_t m = a.rows(), n = a.cols();
    Tensor out = Tensor::zeros({n, m});
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) out.data[j * m + i] = a.data[i * n + j];
    return out;
}

// Row-wise softmax with max subtraction; rows sum to 1 within 1e-12.
inline Tensor softmax_rows(const Tensor& a) {
    if (a.rank() != 2) throw ShapeError("softmax_rows expects a matrix");
    const std::size_t m = a.rows(), n = a.cols();
    Tensor out = Tensor::zeros({m, n});
    for (std::size_t i = 0; i < m; ++i) {
        const double* in_row = a.data.data() + i * n;
        double* out_row = out.data.data() + i * n;
        double mx = in_row[0];
        for (std::size_t j = 1; j < n; ++j) mx = std::max(mx, in_row[j]);
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            out_row[j] = std::exp(in_row[j] - mx);
            sum += out_row[j];
        }
        for (std::size_t j = 0; j < n; ++j) out_row[j] /= sum;
    }
    return out;
}

inline Tensor add(const Tensor& a, const Tensor& b) {
    if (!a.same_shape(b)) throw ShapeError("add shape mismatch");
    Tensor out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out.data[i] += b.data[i];
    return out;
}

inline Tensor sub(const Tensor& a, const Tensor& b) {
    if (!a.same_shape(b)) throw ShapeError("sub shape mismatch");
    Tensor out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out.data[i] -= b.data[i];
    return out;
}

inline Tensor scale(const Tensor& a, double s) {
    Tensor out = a;
    for (double& v : out.data) v *= s;
    return out;
}

// a += s * b, in place.
inline void add_scaled(Tensor& a, const Tensor& b, double s) {
    if (!a.same_shape(b)) throw ShapeError("add_scaled shape mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a.data[i] += s * b.data[i];
}

inline double frobenius_norm(const Tensor& a) {
    double sum = 0.0;
    for (double v : a.data) sum += v * v;
    return std::sqrt(sum);
}

inline double max_abs_diff(const Tensor& a, const Tensor& b) {
    if (!a.same_shape(b)) throw ShapeError("max_abs_diff shape mismatch");
    double mx = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) mx = std::max(mx, std::abs(a.data[i] - b.data[i]));
    return mx;
}

inline bool bitwise_equal(const Tensor& a, const Tensor& b) {
    return a.shape == b.shape &&
           std::equal(a.data.begin(), a.data.end(), b.data.begin(),
                      [](double x, double y) {
                          return std::memcmp(&x, &y, sizeof(double)) == 0;
                      });
}

// Deterministic stream of standard normals: splitmix64 words fed through
// Box-Muller, two variates per pair, the trailing spare dropped.
inline Tensor rng_normal(SeededRng& rng, std::size_t n) {
    Tensor out = Tensor::zeros({n});
    for (std::size_t i = 0; i < n; i += 2) {
        double z0, z1;
        box_muller(rng, z0, z1);
        out.data[i] = z0;
        if (i + 1 < n) out.data[i + 1] = z1;
    }
    return out;
}

inline Tensor rng_normal_matrix(SeededRng& rng, std::size_t rows, std::size_t cols, double sigma) {
    Tensor flat = rng_normal(rng, rows * cols);
    Tensor out({rows, cols}, std::move(flat.data));
    for (double& v : out.data) v *= sigma;
    return out;
}

}  // namespace stylediff
