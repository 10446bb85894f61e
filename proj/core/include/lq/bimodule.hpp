#pragma once

#include <map>
#include <string>

#include "lq/algebra.hpp"
#include "lq/derived.hpp"
#include "lq/linalg.hpp"
#include "lq/report.hpp"

namespace lq {

enum class BimoduleShape { lie, prelie, ldend };

std::string bimodule_shape_name(BimoduleShape s);
BimoduleShape parse_bimodule_shape(const std::string& name);

/// Action names per shape:
///   lie:    rho
///   prelie: l, r
///   ldend:  l_tri_r, r_tri_r, l_tri_l, r_tri_l
const std::vector<std::string>& bimodule_actions(BimoduleShape s);

/// One action: a linear map base -> End(module), stored as a rank-3 array
/// a(x, v_in, v_out). matrix_of(e_x)[v_out][v_in] = a(x, v_in, v_out).
class ActionTensor {
public:
    ActionTensor() = default;
    ActionTensor(int base_dim, int module_dim)
        : base_(base_dim), mod_(module_dim), a_(size_t(base_dim) * module_dim * module_dim) {}

    int base_dim() const { return base_; }
    int module_dim() const { return mod_; }
    Rat& at(int x, int vin, int vout) { return a_[(size_t(x) * mod_ + vin) * mod_ + vout]; }
    const Rat& at(int x, int vin, int vout) const {
        return a_[(size_t(x) * mod_ + vin) * mod_ + vout];
    }

    Mat matrix_of_basis(int x) const;
    Mat matrix_of(const Vec& x) const;
    Vec apply(const Vec& x, const Vec& v) const;

    ActionTensor scaled(const Rat& c) const;
    friend ActionTensor operator+(const ActionTensor& a, const ActionTensor& b);
    friend ActionTensor operator-(const ActionTensor& a, const ActionTensor& b);
    friend bool operator==(const ActionTensor& a, const ActionTensor& b);

    /// The dual action x -> -A(x)^T on the dual module (same dimension).
    ActionTensor dualized() const;

private:
    int base_ = 0, mod_ = 0;
    Vec a_;
};

/// Left/right multiplication actions of a product on the algebra itself.
ActionTensor left_mult_action(const OpTensor& t);
ActionTensor right_mult_action(const OpTensor& t);

/// A family of named actions over a base algebra. Whether the defining
/// equations hold is decided by check_bimodule(), never assumed.
struct Bimodule {
    MultiAlgebra base;
    int module_dim = 0;
    BimoduleShape shape = BimoduleShape::lie;
    std::map<std::string, ActionTensor> actions;

    const ActionTensor& action(const std::string& name) const;
    void validate_shape() const;
};

/// The regular bimodule of the base on itself (adjoint action for the lie
/// shape, left/right multiplications otherwise).
Bimodule regular_bimodule(const MultiAlgebra& alg);

/// The left-multiplication bimodules that a four-product algebra induces
/// on the underlying space of each of its derived two-product algebras:
///   horizontal: (L_se, -L_nw, L_ne, -L_sw) over (tri_r, tri_l)
///   vertical:   (L_se,  R_ne, L_sw,  R_nw) over (succ, prec)
///   depth:      (L_se,  R_sw, L_ne,  R_nw) over (vee, wedge)
Bimodule lquadri_mult_bimodule(const MultiAlgebra& lquadri, LdendFlavor flavor);

/// Evaluates the defining equations of the shape on all basis pairs of the
/// base, as endomorphism equalities tested columnwise; witnesses carry
/// (x, y, module-basis) indices.
VerificationReport check_bimodule(const Bimodule& m);

/// The dual module V* with actions
///   (l_r* + l_l* - r_r* - r_l*, r_r*, r_r* - l_l*, -(r_r* + r_l*)).
/// Defined for the ldend shape only.
Bimodule dual_bimodule(const Bimodule& m);

/// Semidirect sum on base + module for the ldend shape; module-module
/// products vanish. require_valid re-checks the bimodule equations first
/// (pass false to build anyway, e.g. for negative tests).
MultiAlgebra semidirect_ldend(const Bimodule& m, bool require_valid = true);

}  // namespace lq
