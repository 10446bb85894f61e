#pragma once

#include "lq/ooperator.hpp"
#include "lq/tensor_pair.hpp"

namespace lq {

/// [r12, r13] + [r12, r23] + [r13, r23] = 0 over a one-bracket algebra.
VerificationReport check_cybe(const MultiAlgebra& lie, const TensorPair& r);

/// r23 tri_l r13 = r13 circ r12 + r23 bullet r12 over a two-product
/// algebra, with circ/bullet its derived one-product structures.
VerificationReport check_ld_equation(const MultiAlgebra& ldend, const TensorPair& r);

/// The two-part tensor equation over a four-product algebra:
///   (a) r13 tri_r r23 = -(r12 vee r23 + r12 wedge r23) + r12 nw r13
///   (b) r13 tri_l r23 =   r12 wedge r23 - r12 prec r13
/// The report carries per-part status (witness identities lq-eq.a/.b).
VerificationReport check_lq_equation(const MultiAlgebra& lquadri, const TensorPair& r);

/// B(x tri_l y, z) = -B(y, z circ x) + B(x, z bullet y) over all triples;
/// B must be skew.
VerificationReport check_cocycle_ldend(const MultiAlgebra& ldend, const BilinearForm& B);

/// The four defining relations of the cocycle lift, read as conditions on
/// a skew form over a four-product algebra (derived products on the right):
///   B(x se y, z) = -B(y, [x, z])        B(x nw y, z) = sign * B(y, z tri_r x)
///   B(x ne y, z) = -B(y, z circ x)      B(x sw y, z) = -B(y, z bullet x)
VerificationReport check_invariant_lquadri(const MultiAlgebra& lquadri, const BilinearForm& B,
                                           NwSign sign = NwSign::plus);

/// Symmetric-form conditions over a four-product algebra:
///   (a) B(x sw y, z) = -B(y, z bullet x) - B(x, z vee y)
///   (b) B(x ne y, z) =  B(y, x wedge z - z vee x) - B(x, z succ y)
VerificationReport check_cocycle_lquadri(const MultiAlgebra& lquadri, const BilinearForm& B);

/// The four equivalent characterizations of a symmetric r over a
/// four-product algebra: O-operator w.r.t. the dual bimodules of the
/// horizontal / vertical / depth multiplication bimodules, and the
/// two-part tensor equation. Rejects asymmetric r.
struct EquivalenceSuite {
    bool horizontal_dual;
    bool vertical_dual;
    bool depth_dual;
    bool lq_equation;

    bool all_equal() const {
        return horizontal_dual == vertical_dual && vertical_dual == depth_dual &&
               depth_dual == lq_equation;
    }
};
EquivalenceSuite o_operator_equivalence_suite(const MultiAlgebra& lquadri, const TensorPair& r);

/// One doubled space base + dual with the canonical skew solution and its
/// induced form.
struct CanonicalAmbient {
    MultiAlgebra algebra;  // two-product, dim 2n
    TensorPair r;          // sum_i (e_i (x) e_i^* - e_i^* (x) e_i)
    BilinearForm form;     // B(x + a^*, y + b^*) = -<a^*, y> + <x, b^*>
};

/// The three semidirect doublings of a four-product algebra over the dual
/// multiplication bimodules (horizontal, vertical, depth order). r solves
/// the two-product tensor equation in each; the form is its induced form
/// and a 2-cocycle of each ambient algebra.
std::array<CanonicalAmbient, 3> canonical_r(const MultiAlgebra& lquadri);

/// Embeds an O-operator candidate T of a two-product algebra into the
/// doubled space over the dual bimodule and antisymmetrizes. The resulting
/// tensor solves the two-product equation there if and only if T passes
/// check_o_operator.
struct LiftedTensor {
    MultiAlgebra ambient;
    TensorPair r;
};
LiftedTensor lift_operator_to_r(const OOperator& op);

/// One-dimensional central extension of a four-product algebra along an
/// arbitrary bilinear form, new coordinate last, all products with it zero:
///   x se' y = x se y - B(y,x) c     x nw' y = x nw y - B(x,y) c
///   x ne' y = x ne y + B(y,x) c     x sw' y = x sw y + B(x,y) c
/// The extension satisfies the four-product axioms exactly when the two
/// compatibility conditions on B hold; both the built algebra and the
/// condition report are returned so callers can test the equivalence.
struct CentralExtension {
    MultiAlgebra extended;
    VerificationReport extension_axioms;
    VerificationReport conditions;  // conditions ce.a / ce.b on B
};
CentralExtension central_extension(const MultiAlgebra& lquadri, const Mat& B);

/// The skew-symmetrization w(x, y) = B(x, y) - B(y, x) of an extension
/// form; when the extension conditions hold it is a 2-cocycle of both the
/// vertical and depth two-product projections.
BilinearForm extension_omega(const Mat& B);

/// Evaluates the invariance (skew B) or cocycle (symmetric B) property on
/// the algebra and on its transpose and four symmetries; the six answers
/// coincide.
struct SymmetryTransferReport {
    std::array<bool, 6> holds;  // base, transpose, a, b, c, d
    bool all_equal() const;
};
SymmetryTransferReport transfer_under_symmetry(const MultiAlgebra& lquadri,
                                               const BilinearForm& B);

}  // namespace lq
