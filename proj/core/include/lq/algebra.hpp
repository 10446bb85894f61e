#pragma once

#include <map>
#include <string>
#include <vector>

#include "lq/op_tensor.hpp"

namespace lq {

/// Structure classes carried by an algebra. A tag is a claim, not a
/// certificate; certificates come from verify().
enum class Kind { raw, lie, prelie, dendriform, ldend, quadri, lquadri, octo, locto };

std::string kind_name(Kind k);
Kind parse_kind(const std::string& name);
/// Number of operations the class carries (0 for raw = unconstrained).
int kind_arity(Kind k);
/// The canonical operation names for the class, in display order.
const std::vector<std::string>& kind_ops(Kind k);

/// Canonical ASCII vocabulary for every product symbol used anywhere:
///   se ne nw sw            the four directional products
///   se1..sw2               their two-indexed variants (eight products)
///   tri_r tri_l            the two-product pair
///   succ prec vee wedge    derived two-product pairs
///   circ bullet star       one-product combinations
///   bracket                the antisymmetric product
/// Display order of an operation set follows this table.
int op_display_rank(const std::string& op);

/// Finite-dimensional vector space with a named family of bilinear products.
struct MultiAlgebra {
    int dim = 0;
    Kind kind = Kind::raw;
    std::map<std::string, OpTensor> ops;

    MultiAlgebra() = default;
    MultiAlgebra(int dim, Kind kind);  // zero tensors for the kind's ops

    bool has_op(const std::string& name) const { return ops.count(name) != 0; }
    const OpTensor& op(const std::string& name) const;  // throws on unknown name
    OpTensor& op(const std::string& name);

    /// Checks dims agree and, for kind != raw, that the op-name set is
    /// exactly the kind's canonical set. Throws std::invalid_argument.
    void validate_shape() const;

    /// Names in display order.
    std::vector<std::string> op_names() const;
};

/// x `op` y by bilinear extension of the structure constants.
Vec eval(const MultiAlgebra& alg, const std::string& op, const Vec& x, const Vec& y);

enum class ArgOrder { direct, swapped };

/// One term of a formal combination of existing products.
struct RecipeTerm {
    Rat coeff;
    std::string op;
    ArgOrder order = ArgOrder::direct;
};
using Recipe = std::vector<RecipeTerm>;

/// Structure constants of the formal combination, e.g. the recipe
/// {(+1, se, direct), (-1, nw, swapped)} yields (x, y) -> x se y - y nw x.
OpTensor combine_ops(const MultiAlgebra& alg, const Recipe& recipe);

}  // namespace lq
