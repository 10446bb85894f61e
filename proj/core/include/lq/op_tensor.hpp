#pragma once

#include "lq/rational.hpp"

namespace lq {

/// Structure constants of one bilinear product on an n-dimensional space:
/// c(i, j, k) is the e_k coefficient of e_i * e_j. Bilinearity is built into
/// the representation; nothing else is assumed about the product.
class OpTensor {
public:
    OpTensor() = default;
    explicit OpTensor(int dim) : dim_(dim), c_(size_t(dim) * dim * dim) {}

    int dim() const { return dim_; }
    Rat& at(int i, int j, int k) { return c_[(size_t(i) * dim_ + j) * dim_ + k]; }
    const Rat& at(int i, int j, int k) const { return c_[(size_t(i) * dim_ + j) * dim_ + k]; }

    bool is_zero() const;

    /// e_i * e_j as a coefficient vector.
    Vec basis_product(int i, int j) const;
    /// x * y for arbitrary coefficient vectors, by bilinear extension.
    Vec product(const Vec& x, const Vec& y) const;
    /// e_i * v and v * e_k, the two one-sided contractions.
    Vec left_basis_product(int i, const Vec& v) const;
    Vec right_basis_product(const Vec& v, int k) const;

    friend OpTensor operator+(const OpTensor& a, const OpTensor& b);
    friend OpTensor operator-(const OpTensor& a, const OpTensor& b);
    friend bool operator==(const OpTensor& a, const OpTensor& b);
    OpTensor scaled(const Rat& c) const;

private:
    int dim_ = 0;
    Vec c_;
};

/// The product with swapped arguments: opposite(t)(x, y) = t(y, x).
OpTensor opposite(const OpTensor& t);

}  // namespace lq
