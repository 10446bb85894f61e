#include "lq/linalg.hpp"

#include <sstream>

namespace lq {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    int r = int(rows.size());
    int c = r ? int(rows.begin()->size()) : 0;
    Mat m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (int v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

bool Mat::is_zero() const {
    for (const Rat& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Vec Mat::column(int c) const {
    Vec v(static_cast<size_t>(rows_));
    for (int r = 0; r < rows_; ++r) v[size_t(r)] = at(r, c);
    return v;
}

Mat Mat::transposed() const {
    Mat m(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

Mat Mat::scaled(const Rat& c) const {
    Mat m(*this);
    for (Rat& x : m.a_) x *= c;
    return m;
}

Vec Mat::apply(const Vec& x) const {
    if (int(x.size()) != cols_) throw std::invalid_argument("matrix/vector size mismatch");
    Vec y(static_cast<size_t>(rows_));
    for (int r = 0; r < rows_; ++r) {
        Rat acc;
        for (int c = 0; c < cols_; ++c) acc += at(r, c) * x[size_t(c)];
        y[size_t(r)] = acc;
    }
    return y;
}

Mat operator+(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix shape mismatch");
    Mat m(a);
    for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += b.a_[i];
    return m;
}

Mat operator-(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix shape mismatch");
    Mat m(a);
    for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] -= b.a_[i];
    return m;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Mat m(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r)
        for (int k = 0; k < a.cols_; ++k) {
            const Rat& f = a.at(r, k);
            if (f.is_zero()) continue;
            for (int c = 0; c < b.cols_; ++c) m.at(r, c) += f * b.at(k, c);
        }
    return m;
}

bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

namespace {

/// Row echelon reduction used by det/inverse/solve/kernel. Reduces `m` in
/// place, applying the same operations to `rhs` when given. Returns pivot
/// column per row.
std::vector<int> gauss(Mat& m, Mat* rhs) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int r = row; r < m.rows(); ++r)
            if (!m.at(r, col).is_zero()) {
                p = r;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int c = 0; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(row, c));
        if (rhs && p != row)
            for (int c = 0; c < rhs->cols(); ++c) std::swap(rhs->at(p, c), rhs->at(row, c));
        Rat inv = rat_div(Rat(1), m.at(row, col));
        for (int c = 0; c < m.cols(); ++c) m.at(row, c) *= inv;
        if (rhs)
            for (int c = 0; c < rhs->cols(); ++c) rhs->at(row, c) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            Rat f = m.at(r, col);
            for (int c = 0; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
            if (rhs)
                for (int c = 0; c < rhs->cols(); ++c) rhs->at(r, c) -= f * rhs->at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

Rat Mat::det() const {
    if (!is_square()) throw std::invalid_argument("determinant of non-square matrix");
    Mat m(*this);
    Rat d(1);
    for (int col = 0; col < cols_; ++col) {
        int p = -1;
        for (int r = col; r < rows_; ++r)
            if (!m.at(r, col).is_zero()) {
                p = r;
                break;
            }
        if (p < 0) return Rat(0);
        if (p != col) {
            for (int c = 0; c < cols_; ++c) std::swap(m.at(p, c), m.at(col, c));
            d = -d;
        }
        d *= m.at(col, col);
        Rat inv = rat_div(Rat(1), m.at(col, col));
        for (int r = col + 1; r < rows_; ++r) {
            if (m.at(r, col).is_zero()) continue;
            Rat f = m.at(r, col) * inv;
            for (int c = col; c < cols_; ++c) m.at(r, c) -= f * m.at(col, c);
        }
    }
    return d;
}

Mat Mat::inverse() const {
    if (!is_square()) throw std::invalid_argument("inverse of non-square matrix");
    Mat m(*this);
    Mat inv = Mat::identity(rows_);
    auto pivots = gauss(m, &inv);
    if (int(pivots.size()) != rows_) throw std::domain_error("singular matrix has no inverse");
    return inv;
}

std::optional<Vec> Mat::solve(const Vec& b) const {
    if (int(b.size()) != rows_) throw std::invalid_argument("solve size mismatch");
    Mat m(*this);
    Mat rhs(rows_, 1);
    for (int r = 0; r < rows_; ++r) rhs.at(r, 0) = b[size_t(r)];
    auto pivots = gauss(m, &rhs);
    Vec x(static_cast<size_t>(cols_));
    for (size_t i = 0; i < pivots.size(); ++i) x[size_t(pivots[i])] = rhs.at(int(i), 0);
    for (int r = int(pivots.size()); r < rows_; ++r)
        if (!rhs.at(r, 0).is_zero()) return std::nullopt;
    return x;
}

std::vector<int> Mat::pivot_columns() const {
    Mat m(*this);
    return gauss(m, nullptr);
}

std::vector<Vec> Mat::kernel_basis() const {
    Mat m(*this);
    auto pivots = gauss(m, nullptr);
    std::vector<bool> is_pivot(static_cast<size_t>(cols_));
    for (int p : pivots) is_pivot[size_t(p)] = true;
    std::vector<Vec> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[size_t(free)]) continue;
        Vec v(static_cast<size_t>(cols_));
        v[size_t(free)] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[size_t(pivots[r])] = -m.at(int(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::string Mat::str() const {
    std::ostringstream out;
    out << '[';
    for (int r = 0; r < rows_; ++r) {
        if (r) out << "; ";
        for (int c = 0; c < cols_; ++c) {
            if (c) out << ' ';
            out << at(r, c).str();
        }
    }
    out << ']';
    return out.str();
}

std::string symmetry_name(Symmetry s) {
    switch (s) {
        case Symmetry::symmetric: return "symmetric";
        case Symmetry::skew: return "skew";
        case Symmetry::none: return "none";
    }
    return "?";
}

BilinearForm::BilinearForm(Mat gram) : gram_(std::move(gram)) {
    if (!gram_.is_square()) throw std::invalid_argument("bilinear form needs a square matrix");
    for (int i = 0; i < gram_.rows(); ++i)
        for (int j = 0; j < gram_.cols(); ++j) {
            if (gram_.at(i, j) != gram_.at(j, i)) sym_ = false;
            if (gram_.at(i, j) != -gram_.at(j, i)) skew_ = false;
        }
    symmetry_ = sym_ ? Symmetry::symmetric : skew_ ? Symmetry::skew : Symmetry::none;
}

Rat BilinearForm::eval(const Vec& u, const Vec& v) const {
    Rat acc;
    for (int i = 0; i < gram_.rows(); ++i) {
        if (u[size_t(i)].is_zero()) continue;
        for (int j = 0; j < gram_.cols(); ++j) acc += u[size_t(i)] * gram_.at(i, j) * v[size_t(j)];
    }
    return acc;
}

}  // namespace lq
