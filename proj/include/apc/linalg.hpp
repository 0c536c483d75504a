#pragma once
// Vectors and matrices of exact integers or floats.
//
// Both containers are homogeneous: if any element is a float, every
// element is promoted to a float at the current context when the
// container is built.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "apc/bignum/number.hpp"

namespace apc {

enum class ElementKind { Int, Float };

enum class ArithOp { Add, Sub, Mul, Div, Pow };

std::string_view op_symbol(ArithOp op) noexcept;
Number apply(ArithOp op, const Number& a, const Number& b, const PrecisionContext& ctx);

class NumVector {
public:
    NumVector() = default;
    // Promotes to float if any element is a float.
    static NumVector from(std::vector<Number> elements, const PrecisionContext& ctx);

    std::size_t size() const noexcept { return elems_.size(); }
    bool empty() const noexcept { return elems_.empty(); }
    ElementKind kind() const noexcept { return kind_; }
    const Number& operator[](std::size_t i) const { return elems_[i]; }
    const std::vector<Number>& elements() const noexcept { return elems_; }

private:
    std::vector<Number> elems_;
    ElementKind kind_ = ElementKind::Int;
};

class NumMatrix {
public:
    // Row-major data; must hold rows * cols elements.
    static NumMatrix from(std::size_t rows, std::size_t cols, std::vector<Number> data,
                          const PrecisionContext& ctx);
    static NumMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    ElementKind kind() const noexcept { return kind_; }
    const Number& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    const std::vector<Number>& data() const noexcept { return data_; }
    std::string shape() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Number> data_;
    ElementKind kind_ = ElementKind::Int;
};

// Row-major fill from data; missing trailing elements become 0.
NumMatrix construct_matrix(const NumVector& data, const Number& rows, const Number& cols,
                           const PrecisionContext& ctx);

// v op s, or s op v when scalar_left.
NumVector broadcast(ArithOp op, const NumVector& v, const Number& s, bool scalar_left,
                    const PrecisionContext& ctx);
NumVector zip(ArithOp op, const NumVector& a, const NumVector& b, const PrecisionContext& ctx);
// Errors raised by fn are re-raised with the failing component index.
NumVector map(const std::function<Number(const Number&)>& fn, const NumVector& v,
              const PrecisionContext& ctx);

Number dotprod(const NumVector& a, const NumVector& b, const PrecisionContext& ctx);
NumVector append(const NumVector& v, const NumVector& tail, const PrecisionContext& ctx);
// start + i*step for i = 0..n; the endpoint is included when reached within
// a relative tolerance of 2^-(bits-16).
NumVector sequence(const Number& start, const Number& stop, const Number& step,
                   const PrecisionContext& ctx);

NumMatrix mat_mul(const NumMatrix& a, const NumMatrix& b, const PrecisionContext& ctx);
NumMatrix mat_zip(ArithOp op, const NumMatrix& a, const NumMatrix& b, const PrecisionContext& ctx);
NumMatrix mat_scalar(ArithOp op, const NumMatrix& m, const Number& s, bool scalar_left,
                     const PrecisionContext& ctx);
NumVector mat_vec(const NumMatrix& m, const NumVector& v, const PrecisionContext& ctx);
NumMatrix transpose(const NumMatrix& m);
// Gauss-Jordan with partial pivoting at guarded precision.
NumMatrix invert(const NumMatrix& m, const PrecisionContext& ctx);
// Exact (fraction-free) for integer matrices, pivot product otherwise.
Number det(const NumMatrix& m, const PrecisionContext& ctx);
Number trace(const NumMatrix& m, const PrecisionContext& ctx);

}  // namespace apc
