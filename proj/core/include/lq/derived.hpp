#pragma once

#include "lq/algebra.hpp"

namespace lq {

/// A functor from one structure class to another given per-target-op
/// recipes over the source operations. apply_functor() is the generic
/// applier; closure (output really satisfies the target class) is enforced
/// by the test suite, not by construction.
struct FunctorRecipe {
    Kind source = Kind::raw;
    Kind target = Kind::raw;
    std::vector<std::pair<std::string, Recipe>> ops;
};

MultiAlgebra apply_functor(const MultiAlgebra& alg, const FunctorRecipe& f);

enum class PreLieFlavor { horizontal, vertical };
enum class LdendFlavor { horizontal, vertical, depth };
enum class PreLieOfQuad { circ, star, bullet };
enum class SymWhich { a, b, c, d };
enum class OctoProjection { depth, vertical, sum, mixed };

/// bracket = circ - circ^op on a one-product algebra.
MultiAlgebra commutator_lie(const MultiAlgebra& prelie);

/// horizontal: circ = tri_r + tri_l; vertical: circ = tri_r - tri_l^op.
MultiAlgebra ldend_to_prelie(const MultiAlgebra& ldend, PreLieFlavor flavor);

/// vertical: (succ, prec) = (se+ne, nw+sw)
/// depth:    (vee, wedge)  = (se+sw, ne+nw)
/// horizontal: tri_r = se - nw^op, tri_l = ne - sw^op.
MultiAlgebra lquadri_to_ldend(const MultiAlgebra& lquadri, LdendFlavor flavor);

/// circ   = se + sw - nw^op - ne^op
/// star   = se + ne + nw + sw
/// bullet = se + ne - nw^op - sw^op.
MultiAlgebra lquadri_to_prelie(const MultiAlgebra& lquadri, PreLieOfQuad flavor);

/// bracket = (se + ne + nw + sw) - same^op.
MultiAlgebra subadjacent_lie(const MultiAlgebra& lquadri);

/// Fixes se and nw, exchanges ne and sw.
MultiAlgebra transpose_lquadri(const MultiAlgebra& lquadri);

/// The four sign-and-swap reshufflings that preserve the four-product
/// class. They carry the labels a..d in order of appearance:
///   a: nw -> -ne^op, ne -> -nw^op            (se, sw fixed)
///   b: nw -> -ne^op, ne -> sw, sw -> -nw^op  (se fixed)
///   c: nw -> -sw^op, ne -> -nw^op, sw -> ne  (se fixed)
///   d: nw -> -sw^op, sw -> -nw^op            (se, ne fixed)
MultiAlgebra symmetry_lquadri(const MultiAlgebra& lquadri, SymWhich which);

/// The four ways an eight-product algebra projects onto a four-product
/// one:
///   depth:    (vee2, wedge2, wedge1, vee1)
///   vertical: (succ2, succ1, prec1, prec2)
///   sum:      (se1+se2, ne1+ne2, nw1+nw2, sw1+sw2)
///   mixed:    (se2 - nw1^op, ne2 - sw1^op, ne1 - sw2^op, se1 - nw2^op)
MultiAlgebra octo_project(const MultiAlgebra& locto, OctoProjection which);

/// Recipes for the auxiliary two-indexed products (vee1, succ12, star2,
/// ...) over the eight primary products; used by octo_project and by the
/// tests that pin the derived-product equalities.
Recipe octo_derived_recipe(const std::string& name);

}  // namespace lq
