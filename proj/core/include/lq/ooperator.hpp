#pragma once

#include "lq/bimodule.hpp"

namespace lq {

/// A linear map T: module -> base, candidate intertwiner of the bimodule
/// action with the base product. rows = base.dim, cols = module_dim.
struct OOperator {
    Mat map;
    Bimodule context;

    void validate_shape() const;
};

/// The defining equations of an O-operator, per context shape, over all
/// module basis pairs:
///   lie:    [Tu, Tv]    = T(rho(Tu)v - rho(Tv)u)
///   prelie: Tu circ Tv  = T(l(Tu)v + r(Tv)u)
///   ldend:  Tu tri_r Tv = T(l_r(Tu)v + r_r(Tv)u), same with tri_l.
VerificationReport check_o_operator(const OOperator& op);

/// Specializes the O-operator check to the regular/adjoint context of alg
/// (kind must be lie, prelie or ldend; R square of matching size).
VerificationReport check_rota_baxter(const MultiAlgebra& alg, const Mat& R);

/// The structure an O-operator induces on its module space, one level up
/// the tower from the context's class:
///   lie ctx    -> prelie:  u circ v = rho(Tu)v
///   prelie ctx -> ldend:   u tri_r v = l(Tu)v,   u tri_l v = -r(Tu)v
///   ldend ctx  -> lquadri: u se v = l_r(Tu)v, u nw v = -r_r(Tu)v,
///                          u ne v = l_l(Tu)v, u sw v = -r_l(Tu)v.
MultiAlgebra induce(const OOperator& op, bool require_valid = true);

/// The induced structure transported onto a basis of the image subspace
/// T(module) inside the base. basis columns express the image basis in
/// base coordinates. Well-definedness (kernel compatibility) is verified
/// and reported; it can only fail when the O-operator check was skipped.
struct ImageStructure {
    MultiAlgebra algebra;
    Mat basis;
    VerificationReport well_defined;
};
ImageStructure induce_on_image(const OOperator& op, bool require_valid = true);

/// For invertible T: the induced structure conjugated back onto the base
/// space in its standard basis, x P y = T(P_module(T^-1 x, T^-1 y)).
MultiAlgebra transport_structure(const OOperator& op, bool require_valid = true);

/// Climbs the tower with one, two, or three pairwise commuting weight-zero
/// Rota-Baxter maps:
///   lie    + [R]          -> prelie:  x circ y = [Rx, y]
///   prelie + [R]          -> ldend:   x tri_r y = Rx circ y, x tri_l y = -y circ Rx
///   lie    + [R1, R2]     -> ldend:   x tri_r y = [R1R2 x, y], x tri_l y = [R2 x, R1 y]
///   ldend  + [R]          -> lquadri: se = R(x) tri_r y, nw = -y tri_r R(x),
///                                     ne = R(x) tri_l y, sw = -y tri_l R(x)
///   prelie + [R1, R2]     -> lquadri: se = R1R2(x) circ y, nw = -R1(y) circ R2(x),
///                                     ne = -y circ R1R2(x), sw = R2(x) circ R1(y)
///   lie    + [R1, R2, R3] -> lquadri: se = [R1R2R3 x, y], nw = [R3 x, R1R2 y],
///                                     ne = [R2R3 x, R1 y], sw = [R1R3 x, R2 y].
/// Each map must pass check_rota_baxter and all pairs must commute exactly.
MultiAlgebra rb_tower(const MultiAlgebra& alg, const std::vector<Mat>& rs,
                      bool require_valid = true);

/// The one-step ldend -> lquadri lift together with its transpose and four
/// symmetries, via the closed per-entry formulas. Ordered: base, transpose,
/// a, b, c, d.
std::array<MultiAlgebra, 6> rb_lquadri_variants(const MultiAlgebra& ldend, const Mat& R,
                                                bool require_valid = true);

/// Which sign the nw-defining relation of the cocycle lift uses:
/// B(x nw y, z) = sign * B(y, z tri_r x). The two readings circulate; see
/// lift_via_cocycle. plus is the default and is the one under which the
/// lift satisfies the four-product axioms with the input as its horizontal
/// two-product algebra (pinned by tests).
enum class NwSign { plus, minus };

struct CocycleLift {
    MultiAlgebra lquadri;
    /// Companion two-product structures read off from the form:
    ///   depth:    B(x vee y, z) = -B(y, x bullet z), B(y wedge x, z) = B(x, y tri_l z)
    ///   vertical: B(x succ y, z) = -B(y, x circ z),  B(y prec x, z) = -B(x, z tri_l y)
    /// They coincide with the depth/vertical projections of lquadri.
    MultiAlgebra depth_companion;
    MultiAlgebra vertical_companion;
};

/// Lifts a two-product algebra with a skew nondegenerate 2-cocycle B to a
/// four-product algebra whose horizontal projection is the input:
///   B(x se y, z) = -B(y, [x, z])
///   B(x nw y, z) = sign * B(y, z tri_r x)
///   B(x ne y, z) = -B(y, z circ x)
///   B(x sw y, z) = -B(y, z bullet x)
/// Products are solved columnwise through the inverse Gram matrix.
CocycleLift lift_via_cocycle(const MultiAlgebra& ldend, const BilinearForm& B,
                             NwSign sign = NwSign::plus, bool require_valid = true);

struct RBSearchOptions {
    std::vector<Rat> entries{Rat(-1), Rat(0), Rat(1)};
    long cap = 1'000'000;
    bool diagonal_only = false;
    long max_results = -1;  // negative: unbounded
};

/// Exhaustive enumeration of candidate matrices over the entry set,
/// filtered by check_rota_baxter. Cells are enumerated row-major; the
/// digit order is the entry set as given except that 0 (when present) is
/// moved to the front, so the zero matrix is always the first result.
/// Throws std::length_error when the space exceeds the cap.
std::vector<Mat> search_rb(const MultiAlgebra& alg, const RBSearchOptions& opts = {});

}  // namespace lq
