#include "lq/derived.hpp"

#include <stdexcept>

namespace lq {

namespace {

Recipe R(std::initializer_list<RecipeTerm> terms) { return Recipe(terms); }
RecipeTerm plus(const char* op) { return {Rat(1), op, ArgOrder::direct}; }
RecipeTerm minus_sw(const char* op) { return {Rat(-1), op, ArgOrder::swapped}; }

void require_ops(const MultiAlgebra& alg, const std::vector<std::string>& names) {
    for (const auto& name : names)
        if (!alg.has_op(name))
            throw std::invalid_argument("functor input lacks operation '" + name + "'");
}

}  // namespace

MultiAlgebra apply_functor(const MultiAlgebra& alg, const FunctorRecipe& f) {
    std::vector<std::string> needed;
    for (const auto& [name, recipe] : f.ops)
        for (const auto& term : recipe) needed.push_back(term.op);
    require_ops(alg, needed);
    MultiAlgebra out;
    out.dim = alg.dim;
    out.kind = f.target;
    for (const auto& [name, recipe] : f.ops) out.ops.emplace(name, combine_ops(alg, recipe));
    out.validate_shape();
    return out;
}

MultiAlgebra commutator_lie(const MultiAlgebra& prelie) {
    FunctorRecipe f{Kind::prelie, Kind::lie, {{"bracket", R({plus("circ"), minus_sw("circ")})}}};
    return apply_functor(prelie, f);
}

MultiAlgebra ldend_to_prelie(const MultiAlgebra& ldend, PreLieFlavor flavor) {
    FunctorRecipe f;
    f.source = Kind::ldend;
    f.target = Kind::prelie;
    if (flavor == PreLieFlavor::horizontal)
        f.ops = {{"circ", R({plus("tri_r"), plus("tri_l")})}};
    else
        f.ops = {{"circ", R({plus("tri_r"), minus_sw("tri_l")})}};
    return apply_functor(ldend, f);
}

MultiAlgebra lquadri_to_ldend(const MultiAlgebra& lquadri, LdendFlavor flavor) {
    FunctorRecipe f;
    f.source = Kind::lquadri;
    f.target = Kind::ldend;
    switch (flavor) {
        case LdendFlavor::vertical:
            f.ops = {{"tri_r", R({plus("se"), plus("ne")})},
                     {"tri_l", R({plus("nw"), plus("sw")})}};
            break;
        case LdendFlavor::depth:
            f.ops = {{"tri_r", R({plus("se"), plus("sw")})},
                     {"tri_l", R({plus("ne"), plus("nw")})}};
            break;
        case LdendFlavor::horizontal:
            f.ops = {{"tri_r", R({plus("se"), minus_sw("nw")})},
                     {"tri_l", R({plus("ne"), minus_sw("sw")})}};
            break;
    }
    return apply_functor(lquadri, f);
}

MultiAlgebra lquadri_to_prelie(const MultiAlgebra& lquadri, PreLieOfQuad flavor) {
    FunctorRecipe f;
    f.source = Kind::lquadri;
    f.target = Kind::prelie;
    switch (flavor) {
        case PreLieOfQuad::circ:
            f.ops = {{"circ", R({plus("se"), plus("sw"), minus_sw("nw"), minus_sw("ne")})}};
            break;
        case PreLieOfQuad::star:
            f.ops = {{"circ", R({plus("se"), plus("ne"), plus("nw"), plus("sw")})}};
            break;
        case PreLieOfQuad::bullet:
            f.ops = {{"circ", R({plus("se"), plus("ne"), minus_sw("nw"), minus_sw("sw")})}};
            break;
    }
    return apply_functor(lquadri, f);
}

MultiAlgebra subadjacent_lie(const MultiAlgebra& lquadri) {
    FunctorRecipe f{Kind::lquadri,
                    Kind::lie,
                    {{"bracket", R({plus("se"), plus("ne"), plus("nw"), plus("sw"),
                                    minus_sw("se"), minus_sw("ne"), minus_sw("nw"),
                                    minus_sw("sw")})}}};
    return apply_functor(lquadri, f);
}

MultiAlgebra transpose_lquadri(const MultiAlgebra& lquadri) {
    FunctorRecipe f{Kind::lquadri,
                    Kind::lquadri,
                    {{"se", R({plus("se")})},
                     {"ne", R({plus("sw")})},
                     {"nw", R({plus("nw")})},
                     {"sw", R({plus("ne")})}}};
    return apply_functor(lquadri, f);
}

MultiAlgebra symmetry_lquadri(const MultiAlgebra& lquadri, SymWhich which) {
    FunctorRecipe f;
    f.source = Kind::lquadri;
    f.target = Kind::lquadri;
    switch (which) {
        case SymWhich::a:
            f.ops = {{"se", R({plus("se")})},
                     {"nw", R({minus_sw("ne")})},
                     {"ne", R({minus_sw("nw")})},
                     {"sw", R({plus("sw")})}};
            break;
        case SymWhich::b:
            f.ops = {{"se", R({plus("se")})},
                     {"nw", R({minus_sw("ne")})},
                     {"ne", R({plus("sw")})},
                     {"sw", R({minus_sw("nw")})}};
            break;
        case SymWhich::c:
            f.ops = {{"se", R({plus("se")})},
                     {"nw", R({minus_sw("sw")})},
                     {"ne", R({minus_sw("nw")})},
                     {"sw", R({plus("ne")})}};
            break;
        case SymWhich::d:
            f.ops = {{"se", R({plus("se")})},
                     {"nw", R({minus_sw("sw")})},
                     {"ne", R({plus("ne")})},
                     {"sw", R({minus_sw("nw")})}};
            break;
    }
    return apply_functor(lquadri, f);
}

Recipe octo_derived_recipe(const std::string& name) {
    static const std::map<std::string, Recipe> table = {
        {"vee1", R({plus("se1"), plus("sw1")})},
        {"vee2", R({plus("se2"), plus("sw2")})},
        {"wedge1", R({plus("ne1"), plus("nw1")})},
        {"wedge2", R({plus("ne2"), plus("nw2")})},
        {"succ1", R({plus("se1"), plus("ne1")})},
        {"succ2", R({plus("se2"), plus("ne2")})},
        {"prec1", R({plus("nw1"), plus("sw1")})},
        {"prec2", R({plus("nw2"), plus("sw2")})},
        {"se12", R({plus("se1"), plus("se2")})},
        {"ne12", R({plus("ne1"), plus("ne2")})},
        {"nw12", R({plus("nw1"), plus("nw2")})},
        {"sw12", R({plus("sw1"), plus("sw2")})},
    };
    auto it = table.find(name);
    if (it == table.end())
        throw std::invalid_argument("unknown eight-product derived operation '" + name + "'");
    return it->second;
}

MultiAlgebra octo_project(const MultiAlgebra& locto, OctoProjection which) {
    FunctorRecipe f;
    f.source = Kind::locto;
    f.target = Kind::lquadri;
    switch (which) {
        case OctoProjection::depth:
            f.ops = {{"se", octo_derived_recipe("vee2")},
                     {"ne", octo_derived_recipe("wedge2")},
                     {"nw", octo_derived_recipe("wedge1")},
                     {"sw", octo_derived_recipe("vee1")}};
            break;
        case OctoProjection::vertical:
            f.ops = {{"se", octo_derived_recipe("succ2")},
                     {"ne", octo_derived_recipe("succ1")},
                     {"nw", octo_derived_recipe("prec1")},
                     {"sw", octo_derived_recipe("prec2")}};
            break;
        case OctoProjection::sum:
            f.ops = {{"se", octo_derived_recipe("se12")},
                     {"ne", octo_derived_recipe("ne12")},
                     {"nw", octo_derived_recipe("nw12")},
                     {"sw", octo_derived_recipe("sw12")}};
            break;
        case OctoProjection::mixed:
            f.ops = {{"se", R({plus("se2"), minus_sw("nw1")})},
                     {"ne", R({plus("ne2"), minus_sw("sw1")})},
                     {"nw", R({plus("ne1"), minus_sw("sw2")})},
                     {"sw", R({plus("se1"), minus_sw("nw2")})}};
            break;
    }
    return apply_functor(locto, f);
}

}  // namespace lq
