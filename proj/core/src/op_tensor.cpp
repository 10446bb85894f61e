#include "lq/op_tensor.hpp"

#include <stdexcept>

namespace lq {

bool OpTensor::is_zero() const {
    for (const Rat& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

Vec OpTensor::basis_product(int i, int j) const {
    Vec v(static_cast<size_t>(dim_));
    for (int k = 0; k < dim_; ++k) v[size_t(k)] = at(i, j, k);
    return v;
}

Vec OpTensor::product(const Vec& x, const Vec& y) const {
    if (int(x.size()) != dim_ || int(y.size()) != dim_)
        throw std::invalid_argument("operand length does not match tensor dimension");
    Vec v(static_cast<size_t>(dim_));
    for (int i = 0; i < dim_; ++i) {
        if (x[size_t(i)].is_zero()) continue;
        for (int j = 0; j < dim_; ++j) {
            if (y[size_t(j)].is_zero()) continue;
            Rat f = x[size_t(i)] * y[size_t(j)];
            for (int k = 0; k < dim_; ++k) v[size_t(k)] += f * at(i, j, k);
        }
    }
    return v;
}

Vec OpTensor::left_basis_product(int i, const Vec& v) const {
    Vec out(static_cast<size_t>(dim_));
    for (int j = 0; j < dim_; ++j) {
        if (v[size_t(j)].is_zero()) continue;
        for (int k = 0; k < dim_; ++k) out[size_t(k)] += v[size_t(j)] * at(i, j, k);
    }
    return out;
}

Vec OpTensor::right_basis_product(const Vec& v, int j) const {
    Vec out(static_cast<size_t>(dim_));
    for (int i = 0; i < dim_; ++i) {
        if (v[size_t(i)].is_zero()) continue;
        for (int k = 0; k < dim_; ++k) out[size_t(k)] += v[size_t(i)] * at(i, j, k);
    }
    return out;
}

OpTensor operator+(const OpTensor& a, const OpTensor& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("tensor dimension mismatch");
    OpTensor t(a);
    for (size_t i = 0; i < t.c_.size(); ++i) t.c_[i] += b.c_[i];
    return t;
}

OpTensor operator-(const OpTensor& a, const OpTensor& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("tensor dimension mismatch");
    OpTensor t(a);
    for (size_t i = 0; i < t.c_.size(); ++i) t.c_[i] -= b.c_[i];
    return t;
}

bool operator==(const OpTensor& a, const OpTensor& b) {
    return a.dim_ == b.dim_ && a.c_ == b.c_;
}

OpTensor OpTensor::scaled(const Rat& c) const {
    OpTensor t(*this);
    for (Rat& x : t.c_) x *= c;
    return t;
}

OpTensor opposite(const OpTensor& t) {
    OpTensor o(t.dim());
    for (int i = 0; i < t.dim(); ++i)
        for (int j = 0; j < t.dim(); ++j)
            for (int k = 0; k < t.dim(); ++k) o.at(i, j, k) = t.at(j, i, k);
    return o;
}

}  // namespace lq
