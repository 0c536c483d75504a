#include "apc/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "apc/bignum/bigfloat.hpp"
#include "apc/errors.hpp"

namespace apc {

namespace {

constexpr std::size_t kMaxElements = std::size_t(1) << 26;

std::vector<Number> promote(std::vector<Number> elems, const PrecisionContext& ctx, ElementKind& kind) {
    kind = ElementKind::Int;
    for (const Number& n : elems) {
        if (n.is_float()) {
            kind = ElementKind::Float;
            break;
        }
    }
    if (kind == ElementKind::Float) {
        for (Number& n : elems) {
            if (n.is_int()) n = Number(n.to_float(ctx));
        }
    }
    return elems;
}

std::size_t to_dimension(const Number& n, const char* what) {
    if (!n.is_integral()) {
        fail(ErrorKind::Type, std::string("matrix ") + what + " must be an integer, got " + n.format(17));
    }
    BigInt v = n.to_bigint();
    if (v.sign() <= 0 || !v.fits_i64() || std::uint64_t(v.to_i64()) > kMaxElements) {
        fail(ErrorKind::Dimension, std::string("matrix ") + what + " must be in 1.." +
                                       std::to_string(kMaxElements) + ", got " + v.to_string());
    }
    return std::size_t(v.to_i64());
}

Number zero_like(ElementKind kind) {
    if (kind == ElementKind::Float) return Number(BigFloat{});
    return Number::integer(0);
}

std::vector<std::vector<BigFloat>> float_rows(const NumMatrix& m, const PrecisionContext& w) {
    std::vector<std::vector<BigFloat>> a(m.rows(), std::vector<BigFloat>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m.at(r, c).to_float(w);
    }
    return a;
}

void require_square(const NumMatrix& m, const char* fn) {
    if (m.rows() != m.cols()) {
        fail(ErrorKind::Dimension, std::string(fn) + " requires a square matrix, got " + m.shape());
    }
}

}  // namespace

std::string_view op_symbol(ArithOp op) noexcept {
    switch (op) {
    case ArithOp::Add: return "+";
    case ArithOp::Sub: return "-";
    case ArithOp::Mul: return "*";
    case ArithOp::Div: return "/";
    case ArithOp::Pow: return "^";
    }
    return "?";
}

Number apply(ArithOp op, const Number& a, const Number& b, const PrecisionContext& ctx) {
    switch (op) {
    case ArithOp::Add: return add(a, b, ctx);
    case ArithOp::Sub: return sub(a, b, ctx);
    case ArithOp::Mul: return mul(a, b, ctx);
    case ArithOp::Div: return div(a, b, ctx);
    case ArithOp::Pow: return pow(a, b, ctx);
    }
    return {};
}

NumVector NumVector::from(std::vector<Number> elements, const PrecisionContext& ctx) {
    NumVector v;
    v.elems_ = promote(std::move(elements), ctx, v.kind_);
    return v;
}

NumMatrix NumMatrix::from(std::size_t rows, std::size_t cols, std::vector<Number> data,
                          const PrecisionContext& ctx) {
    if (data.size() != rows * cols) {
        fail(ErrorKind::Dimension, "matrix data has " + std::to_string(data.size()) +
                                       " elements, expected " + std::to_string(rows * cols));
    }
    NumMatrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.data_ = promote(std::move(data), ctx, m.kind_);
    return m;
}

NumMatrix NumMatrix::identity(std::size_t n) {
    NumMatrix m;
    m.rows_ = m.cols_ = n;
    m.data_.assign(n * n, Number::integer(0));
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = Number::integer(1);
    return m;
}

std::string NumMatrix::shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

NumMatrix construct_matrix(const NumVector& data, const Number& rows, const Number& cols,
                           const PrecisionContext& ctx) {
    const std::size_t r = to_dimension(rows, "rows");
    const std::size_t c = to_dimension(cols, "columns");
    if (r * c > kMaxElements) fail(ErrorKind::Dimension, "matrix too large");
    if (data.size() > r * c) {
        fail(ErrorKind::Dimension, "matrix data has " + std::to_string(data.size()) +
                                       " elements but " + std::to_string(r) + "x" + std::to_string(c) +
                                       " holds only " + std::to_string(r * c));
    }
    std::vector<Number> cells = data.elements();
    cells.resize(r * c, zero_like(data.kind()));
    return NumMatrix::from(r, c, std::move(cells), ctx);
}

NumVector broadcast(ArithOp op, const NumVector& v, const Number& s, bool scalar_left,
                    const PrecisionContext& ctx) {
    std::vector<Number> out;
    out.reserve(v.size());
    for (const Number& x : v.elements()) {
        out.push_back(scalar_left ? apply(op, s, x, ctx) : apply(op, x, s, ctx));
    }
    return NumVector::from(std::move(out), ctx);
}

NumVector zip(ArithOp op, const NumVector& a, const NumVector& b, const PrecisionContext& ctx) {
    if (a.size() != b.size()) {
        fail(ErrorKind::Dimension, "vector lengths differ: " + std::to_string(a.size()) + " and " +
                                       std::to_string(b.size()));
    }
    std::vector<Number> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(apply(op, a[i], b[i], ctx));
    return NumVector::from(std::move(out), ctx);
}

NumVector map(const std::function<Number(const Number&)>& fn, const NumVector& v,
              const PrecisionContext& ctx) {
    std::vector<Number> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        ctx.poll();
        try {
            out.push_back(fn(v[i]));
        } catch (const SyntaxError&) {
            throw;
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::Interrupted) throw;
            throw Error(e.kind(), std::string(e.what()) + " (component " + std::to_string(i) + ")");
        }
    }
    return NumVector::from(std::move(out), ctx);
}

Number dotprod(const NumVector& a, const NumVector& b, const PrecisionContext& ctx) {
    if (a.size() != b.size()) {
        fail(ErrorKind::Dimension, "dotprod: vector lengths differ: " + std::to_string(a.size()) +
                                       " and " + std::to_string(b.size()));
    }
    if (a.empty()) fail(ErrorKind::Dimension, "dotprod of empty vectors");
    const PrecisionContext w = ctx.guarded();
    Number sum = Number::integer(0);
    for (std::size_t i = 0; i < a.size(); ++i) sum = add(sum, mul(a[i], b[i], w), w);
    if (sum.is_float()) return Number(sum.as_float().rounded(ctx));
    return sum;
}

NumVector append(const NumVector& v, const NumVector& tail, const PrecisionContext& ctx) {
    std::vector<Number> out = v.elements();
    out.insert(out.end(), tail.elements().begin(), tail.elements().end());
    return NumVector::from(std::move(out), ctx);
}

NumVector sequence(const Number& start, const Number& stop, const Number& step,
                   const PrecisionContext& ctx) {
    if (step.is_zero()) fail(ErrorKind::Domain, "sequence step must be non-zero");
    Number span = sub(stop, start, ctx);
    Number ratio = div(span, step, ctx);
    if (ratio.sign() < 0) {
        fail(ErrorKind::Domain, "sequence step " + step.format(ctx.output_digits) +
                                    " points away from the end value");
    }
    BigInt n = ratio.is_int() ? ratio.as_int() : ratio.as_float().round_integer();
    if (!n.fits_i64() || n.to_i64() >= std::int64_t(kMaxElements)) {
        fail(ErrorKind::Range, "sequence would have too many elements");
    }
    auto element = [&](std::int64_t i) { return add(start, mul(Number::integer(i), step, ctx), ctx); };
    std::int64_t count = n.to_i64();
    Number miss = sub(element(count), stop, ctx).abs();
    if (!miss.is_zero()) {
        // Within tolerance of the end value counts as reaching it.
        Number scale = std::max({start.abs(), stop.abs(), step.abs()},
                                [](const Number& a, const Number& b) { return compare(a, b) < 0; });
        BigFloat tol = scale.to_float(ctx).ldexp(-std::int64_t(ctx.bits()) + 16);
        if (compare(miss, Number(tol)) > 0) {
            BigInt fl = ratio.is_int() ? ratio.as_int() : ratio.as_float().trunc();
            count = fl.to_i64();
        }
    }
    std::vector<Number> out;
    out.reserve(std::size_t(count) + 1);
    for (std::int64_t i = 0; i <= count; ++i) {
        if ((i & 1023) == 1023) ctx.poll();
        out.push_back(element(i));
    }
    return NumVector::from(std::move(out), ctx);
}

NumMatrix mat_mul(const NumMatrix& a, const NumMatrix& b, const PrecisionContext& ctx) {
    if (a.cols() != b.rows()) {
        fail(ErrorKind::Dimension, "cannot multiply " + a.shape() + " by " + b.shape());
    }
    const PrecisionContext w = ctx.guarded();
    std::vector<Number> out;
    out.reserve(a.rows() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Number sum = Number::integer(0);
            for (std::size_t k = 0; k < a.cols(); ++k) sum = add(sum, mul(a.at(i, k), b.at(k, j), w), w);
            out.push_back(sum.is_float() ? Number(sum.as_float().rounded(ctx)) : sum);
        }
        ctx.poll();
    }
    return NumMatrix::from(a.rows(), b.cols(), std::move(out), ctx);
}

NumMatrix mat_zip(ArithOp op, const NumMatrix& a, const NumMatrix& b, const PrecisionContext& ctx) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        fail(ErrorKind::Dimension, std::string("operator ") + std::string(op_symbol(op)) +
                                       " needs equal shapes, got " + a.shape() + " and " + b.shape());
    }
    std::vector<Number> out;
    out.reserve(a.data().size());
    for (std::size_t i = 0; i < a.data().size(); ++i) out.push_back(apply(op, a.data()[i], b.data()[i], ctx));
    return NumMatrix::from(a.rows(), a.cols(), std::move(out), ctx);
}

NumMatrix mat_scalar(ArithOp op, const NumMatrix& m, const Number& s, bool scalar_left,
                     const PrecisionContext& ctx) {
    std::vector<Number> out;
    out.reserve(m.data().size());
    for (const Number& x : m.data()) out.push_back(scalar_left ? apply(op, s, x, ctx) : apply(op, x, s, ctx));
    return NumMatrix::from(m.rows(), m.cols(), std::move(out), ctx);
}

NumVector mat_vec(const NumMatrix& m, const NumVector& v, const PrecisionContext& ctx) {
    if (m.cols() != v.size()) {
        fail(ErrorKind::Dimension, "cannot multiply " + m.shape() + " by a vector of length " +
                                       std::to_string(v.size()));
    }
    std::vector<Number> out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<Number> row(m.data().begin() + std::ptrdiff_t(i * m.cols()),
                                m.data().begin() + std::ptrdiff_t((i + 1) * m.cols()));
        out.push_back(dotprod(NumVector::from(std::move(row), ctx), v, ctx));
    }
    return NumVector::from(std::move(out), ctx);
}

NumMatrix transpose(const NumMatrix& m) {
    std::vector<Number> out;
    out.reserve(m.data().size());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.at(r, c));
    }
    return NumMatrix::from(m.cols(), m.rows(), std::move(out), PrecisionContext{});
}

NumMatrix invert(const NumMatrix& m, const PrecisionContext& ctx) {
    require_square(m, "invert");
    const std::size_t n = m.rows();
    const PrecisionContext w = ctx.guarded();
    auto a = float_rows(m, w);
    auto inv = float_rows(NumMatrix::identity(n), w);
    for (std::size_t col = 0; col < n; ++col) {
        ctx.poll();
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col].abs() > a[pivot][col].abs()) pivot = r;
        }
        if (a[pivot][col].is_zero()) {
            fail(ErrorKind::SingularMatrix, "matrix is singular (zero pivot in column " + std::to_string(col) + ")");
        }
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const BigFloat p = a[col][col];
        for (std::size_t c = 0; c < n; ++c) {
            a[col][c] = div(a[col][c], p, w);
            inv[col][c] = div(inv[col][c], p, w);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            const BigFloat f = a[r][col];
            for (std::size_t c = 0; c < n; ++c) {
                a[r][c] = sub(a[r][c], mul(f, a[col][c], w), w);
                inv[r][c] = sub(inv[r][c], mul(f, inv[col][c], w), w);
            }
        }
    }
    std::vector<Number> out;
    out.reserve(n * n);
    for (auto& row : inv) {
        for (auto& x : row) out.emplace_back(x.rounded(ctx));
    }
    return NumMatrix::from(n, n, std::move(out), ctx);
}

Number det(const NumMatrix& m, const PrecisionContext& ctx) {
    require_square(m, "det");
    const std::size_t n = m.rows();
    if (m.kind() == ElementKind::Int) {
        // Bareiss fraction-free elimination; every division is exact.
        std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) a[r][c] = m.at(r, c).as_int();
        }
        int sign = 1;
        BigInt prev(1);
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (a[k][k].is_zero()) {
                std::size_t swap_row = k + 1;
                while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
                if (swap_row == n) return Number::integer(0);
                std::swap(a[k], a[swap_row]);
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                for (std::size_t j = k + 1; j < n; ++j) {
                    BigInt q, r;
                    BigInt::divmod(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev, q, r);
                    a[i][j] = q;
                }
            }
            prev = a[k][k];
        }
        BigInt d = a[n - 1][n - 1];
        return sign < 0 ? -d : d;
    }
    const PrecisionContext w = ctx.guarded();
    auto a = float_rows(m, w);
    BigFloat d = BigFloat::from_int(1, w);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col].abs() > a[pivot][col].abs()) pivot = r;
        }
        if (a[pivot][col].is_zero()) return Number(BigFloat{});
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            d = -d;
        }
        d = mul(d, a[col][col], w);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            BigFloat f = div(a[r][col], a[col][col], w);
            for (std::size_t c = col; c < n; ++c) a[r][c] = sub(a[r][c], mul(f, a[col][c], w), w);
        }
    }
    return Number(d.rounded(ctx));
}

Number trace(const NumMatrix& m, const PrecisionContext& ctx) {
    require_square(m, "trace");
    Number sum = m.kind() == ElementKind::Float ? Number(BigFloat{}) : Number::integer(0);
    for (std::size_t i = 0; i < m.rows(); ++i) sum = add(sum, m.at(i, i), ctx);
    return sum;
}

}  // namespace apc
