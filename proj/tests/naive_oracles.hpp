// Test-only reference implementations, deliberately written over different
// data layouts than the library (summand lists, map-based tensors, direct
// index loops) so they can serve as independent cross-checks.
#pragma once

#include <map>
#include <random>
#include <tuple>
#include <vector>

#include "lq/algebra.hpp"
#include "lq/linalg.hpp"
#include "lq/tensor_pair.hpp"

namespace naive {

using lq::Mat;
using lq::MultiAlgebra;
using lq::OpTensor;
using lq::Rat;
using lq::Vec;

/// A two-tensor as an explicit list of summands c * (e_a (x) e_b).
struct Summand {
    Rat coeff;
    int a, b;
};

inline std::vector<Summand> summands(const Mat& entries) {
    std::vector<Summand> out;
    for (int a = 0; a < entries.rows(); ++a)
        for (int b = 0; b < entries.cols(); ++b)
            if (!entries.at(a, b).is_zero()) out.push_back({entries.at(a, b), a, b});
    return out;
}

using Triple = std::map<std::tuple<int, int, int>, Rat>;

inline void add_to(Triple& t, std::tuple<int, int, int> key, const Rat& c) {
    auto it = t.emplace(key, Rat(0)).first;
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
}

/// op applied inside the slot both embeddings share; the paper's three
/// displayed patterns and their mirror images, spelled out one by one.
enum class Pat { p12_13, p13_23, p23_12, p12_23, p13_12, p23_13 };

inline Triple r_product(const Mat& r, const Mat& s, const OpTensor& op, Pat pat) {
    Triple out;
    const int n = op.dim();
    for (const Summand& x : summands(r))
        for (const Summand& y : summands(s)) {
            Rat c = x.coeff * y.coeff;
            for (int k = 0; k < n; ++k) {
                switch (pat) {
                    case Pat::p12_13:
                        add_to(out, {k, x.b, y.b}, c * op.at(x.a, y.a, k));
                        break;
                    case Pat::p13_23:
                        add_to(out, {x.a, y.a, k}, c * op.at(x.b, y.b, k));
                        break;
                    case Pat::p23_12:
                        add_to(out, {y.a, k, x.b}, c * op.at(x.a, y.b, k));
                        break;
                    case Pat::p12_23:
                        add_to(out, {x.a, k, y.b}, c * op.at(x.b, y.a, k));
                        break;
                    case Pat::p13_12:
                        add_to(out, {k, y.b, x.b}, c * op.at(x.a, y.a, k));
                        break;
                    case Pat::p23_13:
                        add_to(out, {y.a, x.a, k}, c * op.at(x.b, y.b, k));
                        break;
                }
            }
        }
    return out;
}

inline Triple from_rank3(const lq::Rank3& t) {
    Triple out;
    for (int i = 0; i < t.dim(); ++i)
        for (int j = 0; j < t.dim(); ++j)
            for (int k = 0; k < t.dim(); ++k)
                if (!t.at(i, j, k).is_zero()) out[{i, j, k}] = t.at(i, j, k);
    return out;
}

/// Product of two arbitrary vectors computed without OpTensor::product.
inline Vec slow_product(const OpTensor& t, const Vec& x, const Vec& y) {
    Vec out(static_cast<size_t>(t.dim()));
    for (int k = 0; k < t.dim(); ++k) {
        Rat acc;
        for (int i = 0; i < t.dim(); ++i)
            for (int j = 0; j < t.dim(); ++j) acc += x[size_t(i)] * y[size_t(j)] * t.at(i, j, k);
        out[size_t(k)] = acc;
    }
    return out;
}

/// Deterministic small rationals for property tests.
struct RatGen {
    std::mt19937 rng;
    explicit RatGen(unsigned seed) : rng(seed) {}
    Rat next() {
        std::uniform_int_distribution<int> num(-12, 12);
        std::uniform_int_distribution<int> den(1, 9);
        return Rat(num(rng), den(rng));
    }
    Vec vec(int n) {
        Vec v(static_cast<size_t>(n));
        for (Rat& x : v) x = next();
        return v;
    }
    OpTensor tensor(int n) {
        OpTensor t(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) t.at(i, j, k) = next();
        return t;
    }
    Mat mat(int rows, int cols) {
        Mat m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) m.at(r, c) = next();
        return m;
    }
};

}  // namespace naive
