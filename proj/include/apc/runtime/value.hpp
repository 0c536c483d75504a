#pragma once
// The universal result of evaluating an expression.

#include <memory>
#include <string>
#include <type_traits>
#include <variant>

#include "apc/bignum/number.hpp"
#include "apc/data/dataset.hpp"
#include "apc/linalg.hpp"
#include "apc/report/report.hpp"
#include "apc/viz/chart.hpp"

namespace apc {

struct Unit {};
struct Text {
    std::string str;
};

using DatasetPtr = std::shared_ptr<const data::Dataset>;
using ChartPtr = std::shared_ptr<const viz::ChartSpec>;
using ReportPtr = std::shared_ptr<const report::Report>;

class Value {
public:
    // Alternative order matches Class.
    using Storage = std::variant<Unit, BigInt, BigFloat, BigComplex, NumVector, NumMatrix, DatasetPtr,
                                 ChartPtr, ReportPtr, Text, bool>;
    enum class Class { Unit, Int, Float, Complex, Vector, Matrix, Dataset, Chart, Report, Text, Bool };

    Value() = default;
    Value(Storage s) : v_(std::move(s)) {}  // NOLINT(google-explicit-constructor)
    Value(const Number& n);                 // NOLINT(google-explicit-constructor)
    template <class T>
        requires(std::is_constructible_v<Storage, T &&> && !std::is_same_v<std::remove_cvref_t<T>, Storage> &&
                 !std::is_same_v<std::remove_cvref_t<T>, Number> && !std::is_same_v<std::remove_cvref_t<T>, Value>)
    Value(T&& x) : v_(std::forward<T>(x)) {}  // NOLINT(google-explicit-constructor)

    Class cls() const noexcept { return Class(v_.index()); }
    template <class T> bool is() const noexcept { return std::holds_alternative<T>(v_); }
    template <class T> const T& as() const { return std::get<T>(v_); }
    const Storage& storage() const noexcept { return v_; }

    bool is_number() const noexcept { return is<BigInt>() || is<BigFloat>(); }
    Number number() const;

private:
    Storage v_;
};

// "integer", "float", "complex", "vector", ...
std::string_view class_name(Value::Class c) noexcept;
inline std::string_view class_name(const Value& v) noexcept { return class_name(v.cls()); }

std::string render_complex(const BigComplex& z, std::uint32_t digits);
std::string render_vector(const NumVector& v, std::uint32_t digits);
// Rows in brackets on a right-aligned grid.
std::string render_matrix(const NumMatrix& m, std::uint32_t digits);
// Console text for a value; Unit renders as "".
std::string render_value(const Value& v, std::uint32_t digits);

}  // namespace apc
