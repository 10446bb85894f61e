#pragma once

#include <optional>
#include <string>

#include "lq/rational.hpp"

namespace lq {

/// Dense exact matrix. Doubles as LinearMap: columns index the domain
/// basis, rows the codomain basis, so apply() is the usual M * x.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
    static Mat identity(int n);
    static Mat from_rows(std::initializer_list<std::initializer_list<int>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    Vec column(int c) const;

    Mat transposed() const;
    Mat scaled(const Rat& c) const;
    Vec apply(const Vec& x) const;

    friend Mat operator+(const Mat& a, const Mat& b);
    friend Mat operator-(const Mat& a, const Mat& b);
    friend Mat operator*(const Mat& a, const Mat& b);
    friend bool operator==(const Mat& a, const Mat& b);

    Rat det() const;
    bool invertible() const { return is_square() && !det().is_zero(); }
    Mat inverse() const;  // throws std::domain_error when singular

    /// Exact solution of (*this) * x = b; nullopt when inconsistent.
    /// Rectangular systems allowed; for underdetermined ones the free
    /// variables are set to zero.
    std::optional<Vec> solve(const Vec& b) const;

    /// Column indices forming a basis of the column space, in order.
    std::vector<int> pivot_columns() const;
    /// Basis of the right kernel, one vector per non-pivot column.
    std::vector<Vec> kernel_basis() const;

    std::string str() const;

private:
    int rows_ = 0, cols_ = 0;
    Vec a_;
};

enum class Symmetry { symmetric, skew, none };

std::string symmetry_name(Symmetry s);

/// Bilinear form B(u, v) = u^T G v. The symmetry tag is recomputed from the
/// entries on construction, never declared.
class BilinearForm {
public:
    BilinearForm() = default;
    explicit BilinearForm(Mat gram);

    int dim() const { return gram_.rows(); }
    const Mat& gram() const { return gram_; }
    Symmetry symmetry() const { return symmetry_; }
    /// Entrywise predicates; the zero form satisfies both.
    bool is_symmetric() const { return sym_; }
    bool is_skew() const { return skew_; }
    bool nondegenerate() const { return gram_.invertible(); }

    Rat eval(const Vec& u, const Vec& v) const;
    Rat eval_basis(int i, int j) const { return gram_.at(i, j); }

private:
    Mat gram_;
    Symmetry symmetry_ = Symmetry::symmetric;
    bool sym_ = true, skew_ = true;
};

}  // namespace lq
