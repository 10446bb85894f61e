#include "lq/tensor_pair.hpp"

#include <stdexcept>

namespace lq {

bool Rank3::is_zero() const {
    for (const Rat& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

Rank3 operator+(const Rank3& a, const Rank3& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("rank-3 dimension mismatch");
    Rank3 t(a);
    for (size_t i = 0; i < t.c_.size(); ++i) t.c_[i] += b.c_[i];
    return t;
}

Rank3 operator-(const Rank3& a, const Rank3& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("rank-3 dimension mismatch");
    Rank3 t(a);
    for (size_t i = 0; i < t.c_.size(); ++i) t.c_[i] -= b.c_[i];
    return t;
}

bool operator==(const Rank3& a, const Rank3& b) { return a.dim_ == b.dim_ && a.c_ == b.c_; }

Rank3 Rank3::scaled(const Rat& c) const {
    Rank3 t(*this);
    for (Rat& x : t.c_) x *= c;
    return t;
}

std::optional<std::array<int, 3>> Rank3::first_nonzero() const {
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k)
                if (!at(i, j, k).is_zero()) return std::array<int, 3>{i, j, k};
    return std::nullopt;
}

bool TensorPair::symmetric() const {
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
            if (entries.at(i, j) != entries.at(j, i)) return false;
    return true;
}

bool TensorPair::skew() const {
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
            if (entries.at(i, j) != -entries.at(j, i)) return false;
    return true;
}

std::string slot_pattern_name(SlotPattern p) {
    switch (p) {
        case SlotPattern::p12_13: return "12.13";
        case SlotPattern::p13_23: return "13.23";
        case SlotPattern::p23_12: return "23.12";
        case SlotPattern::p12_23: return "12.23";
        case SlotPattern::p13_12: return "13.12";
        case SlotPattern::p23_13: return "23.13";
    }
    return "?";
}

Rank3 pairwise_product(const TensorPair& r, const TensorPair& s, const OpTensor& op,
                       SlotPattern pattern) {
    const int n = r.dim();
    if (s.dim() != n || op.dim() != n)
        throw std::invalid_argument("pairwise product dimension mismatch");
    Rank3 t(n);
    // Each summand of r sits in two slots (a in the first, b in the second),
    // likewise (c, d) for s. The shared slot multiplies (r's element) op
    // (s's element); pass-through slots keep their basis index.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const Rat& rv = r.entries.at(a, b);
            if (rv.is_zero()) continue;
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    const Rat& sv = s.entries.at(c, d);
                    if (sv.is_zero()) continue;
                    Rat f = rv * sv;
                    switch (pattern) {
                        case SlotPattern::p12_13:  // (a.c) (x) b (x) d
                            for (int k = 0; k < n; ++k) t.at(k, b, d) += f * op.at(a, c, k);
                            break;
                        case SlotPattern::p13_23:  // a (x) c (x) (b.d)
                            for (int k = 0; k < n; ++k) t.at(a, c, k) += f * op.at(b, d, k);
                            break;
                        case SlotPattern::p23_12:  // c (x) (a.d) (x) b
                            for (int k = 0; k < n; ++k) t.at(c, k, b) += f * op.at(a, d, k);
                            break;
                        case SlotPattern::p12_23:  // a (x) (b.c) (x) d
                            for (int k = 0; k < n; ++k) t.at(a, k, d) += f * op.at(b, c, k);
                            break;
                        case SlotPattern::p13_12:  // (a.c) (x) d (x) b
                            for (int k = 0; k < n; ++k) t.at(k, d, b) += f * op.at(a, c, k);
                            break;
                        case SlotPattern::p23_13:  // c (x) a (x) (b.d)
                            for (int k = 0; k < n; ++k) t.at(c, a, k) += f * op.at(b, d, k);
                            break;
                    }
                }
        }
    return t;
}

Rank3 pairwise_product(const MultiAlgebra& alg, const TensorPair& r, const TensorPair& s,
                       const std::string& op, SlotPattern pattern) {
    if (r.dim() != alg.dim) throw std::invalid_argument("tensor/algebra dimension mismatch");
    return pairwise_product(r, s, alg.op(op), pattern);
}

BilinearForm form_from_r(const TensorPair& r) {
    if (!r.as_map().invertible()) throw std::invalid_argument("tensor is singular as a map");
    return BilinearForm(r.as_map().inverse().transposed());
}

TensorPair r_from_form(const BilinearForm& b) {
    if (!b.nondegenerate()) throw std::invalid_argument("degenerate form has no tensor");
    return TensorPair::from_map(b.gram().transposed().inverse());
}

}  // namespace lq
