#include "apc/runtime/value.hpp"

#include <algorithm>

#include "apc/bignum/decimal.hpp"

namespace apc {

Value::Value(const Number& n) {
    if (n.is_int()) {
        v_ = n.as_int();
    } else {
        v_ = n.as_float();
    }
}

Number Value::number() const {
    if (is<BigInt>()) return as<BigInt>();
    return as<BigFloat>();
}

std::string_view class_name(Value::Class c) noexcept {
    switch (c) {
    case Value::Class::Unit: return "nothing";
    case Value::Class::Int: return "integer";
    case Value::Class::Float: return "float";
    case Value::Class::Complex: return "complex";
    case Value::Class::Vector: return "vector";
    case Value::Class::Matrix: return "matrix";
    case Value::Class::Dataset: return "dataset";
    case Value::Class::Chart: return "chart";
    case Value::Class::Report: return "report";
    case Value::Class::Text: return "text";
    case Value::Class::Bool: return "boolean";
    }
    return "value";
}

std::string render_complex(const BigComplex& z, std::uint32_t digits) {
    std::string re = z.re.format(digits);
    if (z.im.is_zero()) return re;
    if (z.im.sign() < 0) return re + " - i " + z.im.abs().format(digits);
    return re + " + i " + z.im.format(digits);
}

std::string render_vector(const NumVector& v, std::uint32_t digits) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].format(digits);
    }
    return out + "]";
}

std::string render_matrix(const NumMatrix& m, std::uint32_t digits) {
    std::vector<std::string> cells;
    cells.reserve(m.data().size());
    for (const Number& n : m.data()) cells.push_back(n.format(digits));
    std::vector<std::size_t> width(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) width[c] = std::max(width[c], cells[r * m.cols() + c].size());
    }
    std::string out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out += r == 0 ? "[ " : "\n  ";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out += "  ";
            const std::string& cell = cells[r * m.cols() + c];
            out.append(width[c] - cell.size(), ' ');
            out += cell;
        }
    }
    return out + " ]";
}

std::string render_value(const Value& v, std::uint32_t digits) {
    switch (v.cls()) {
    case Value::Class::Unit: return {};
    case Value::Class::Int:
    case Value::Class::Float: return v.number().format(digits);
    case Value::Class::Complex: return render_complex(v.as<BigComplex>(), digits);
    case Value::Class::Vector: return render_vector(v.as<NumVector>(), digits);
    case Value::Class::Matrix: return render_matrix(v.as<NumMatrix>(), digits);
    case Value::Class::Dataset: {
        const auto& d = *v.as<DatasetPtr>();
        return "dataset " + d.name + " (" + std::to_string(d.rows) + " rows x " +
               std::to_string(d.columns.size()) + " columns)";
    }
    case Value::Class::Chart: return v.as<ChartPtr>()->name;
    case Value::Class::Report: return v.as<ReportPtr>()->name;
    case Value::Class::Text: return v.as<Text>().str;
    case Value::Class::Bool: return v.as<bool>() ? "true" : "false";
    }
    return {};
}

}  // namespace apc
