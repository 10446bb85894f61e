#pragma once

#include "lq/algebra.hpp"
#include "lq/linalg.hpp"

namespace lq {

/// An element t(i, j, k) of the triple tensor power, used for the products
/// of embedded two-tensors.
class Rank3 {
public:
    Rank3() = default;
    explicit Rank3(int dim) : dim_(dim), c_(size_t(dim) * dim * dim) {}

    int dim() const { return dim_; }
    Rat& at(int i, int j, int k) { return c_[(size_t(i) * dim_ + j) * dim_ + k]; }
    const Rat& at(int i, int j, int k) const { return c_[(size_t(i) * dim_ + j) * dim_ + k]; }

    bool is_zero() const;
    friend Rank3 operator+(const Rank3& a, const Rank3& b);
    friend Rank3 operator-(const Rank3& a, const Rank3& b);
    friend bool operator==(const Rank3& a, const Rank3& b);
    Rank3 scaled(const Rat& c) const;

    /// First nonzero entry in lexicographic order, if any.
    std::optional<std::array<int, 3>> first_nonzero() const;

private:
    int dim_ = 0;
    Vec c_;
};

/// r = sum r(i, j) e_i (x) e_j in A (x) A.
///
/// Identification with a linear map (fixed once, used everywhere): r acts
/// from the dual space to the space, taking the j-th dual basis vector to
/// the j-th column, i.e. matrix_of(r) = the entry matrix itself, domain
/// indexed by dual coordinates. Equivalently <r(v*), u*> picks the entry
/// at (row u, column v).
struct TensorPair {
    Mat entries;

    int dim() const { return entries.rows(); }
    TensorPair swapped() const { return {entries.transposed()}; }
    bool symmetric() const;
    bool skew() const;
    Mat as_map() const { return entries; }
    static TensorPair from_map(const Mat& m) { return {m}; }
};

/// The two-slot embeddings (12, 13, 23) and the six supported pairings.
/// In every pattern the shared slot receives (first factor's element)
/// `op` (second factor's element); pass-through slots keep their index.
enum class SlotPattern { p12_13, p13_23, p23_12, p12_23, p13_12, p23_13 };

std::string slot_pattern_name(SlotPattern p);

Rank3 pairwise_product(const TensorPair& r, const TensorPair& s, const OpTensor& op,
                       SlotPattern pattern);
Rank3 pairwise_product(const MultiAlgebra& alg, const TensorPair& r, const TensorPair& s,
                       const std::string& op, SlotPattern pattern);

/// The nondegenerate form induced by an invertible r: the Gram matrix is
/// the transposed inverse of the map matrix. Mutually inverse with
/// r_from_form; skew maps pair with skew forms.
BilinearForm form_from_r(const TensorPair& r);
TensorPair r_from_form(const BilinearForm& b);

}  // namespace lq
