#include "lq/yang_baxter.hpp"

#include <functional>
#include <stdexcept>

#include "lq/axioms.hpp"

namespace lq {

namespace {

void require_four_ops(const MultiAlgebra& alg) {
    for (const char* name : {"se", "ne", "nw", "sw"})
        if (!alg.has_op(name))
            throw std::invalid_argument("four-product algebra required");
}

/// Every derived product of a four-product algebra used by the form and
/// tensor conditions.
struct QuadDerived {
    OpTensor tri_r, tri_l, succ, prec, vee, wedge, circ, bullet, star, bracket;

    explicit QuadDerived(const MultiAlgebra& a) {
        require_four_ops(a);
        const OpTensor& se = a.op("se");
        const OpTensor& ne = a.op("ne");
        const OpTensor& nw = a.op("nw");
        const OpTensor& sw = a.op("sw");
        tri_r = se - opposite(nw);
        tri_l = ne - opposite(sw);
        succ = se + ne;
        prec = nw + sw;
        vee = se + sw;
        wedge = ne + nw;
        circ = se + sw - opposite(nw) - opposite(ne);
        bullet = se + ne - opposite(nw) - opposite(sw);
        star = se + ne + nw + sw;
        bracket = star - opposite(star);
    }
};

void compare_rank3(VerificationReport& report, const std::string& name, const Rank3& lhs,
                   const Rank3& rhs) {
    const int n = lhs.dim();
    report.checked += long(n) * n * n;
    Rank3 diff = lhs - rhs;
    if (auto at = diff.first_nonzero()) {
        report.fail({name, *at, {lhs.at((*at)[0], (*at)[1], (*at)[2])},
                     {rhs.at((*at)[0], (*at)[1], (*at)[2])}});
    }
}

void compare_scalar_triples(VerificationReport& report, const std::string& name, int n,
                            const std::function<Rat(int, int, int)>& lhs,
                            const std::function<Rat(int, int, int)>& rhs) {
    bool failed = false;
    for (int i = 0; i < n && !failed; ++i)
        for (int j = 0; j < n && !failed; ++j)
            for (int k = 0; k < n && !failed; ++k) {
                ++report.checked;
                Rat l = lhs(i, j, k), r = rhs(i, j, k);
                if (l != r) {
                    report.fail({name, {i, j, k}, {l}, {r}});
                    failed = true;
                }
            }
}

}  // namespace

VerificationReport check_cybe(const MultiAlgebra& lie, const TensorPair& r) {
    const OpTensor& br = lie.op("bracket");
    VerificationReport report;
    Rank3 sum = pairwise_product(r, r, br, SlotPattern::p12_13) +
                pairwise_product(r, r, br, SlotPattern::p12_23) +
                pairwise_product(r, r, br, SlotPattern::p13_23);
    compare_rank3(report, "cybe", sum, Rank3(r.dim()));
    return report;
}

VerificationReport check_ld_equation(const MultiAlgebra& ldend, const TensorPair& r) {
    const OpTensor& tri_l = ldend.op("tri_l");
    const OpTensor& tri_r = ldend.op("tri_r");
    OpTensor bullet = tri_r + tri_l;
    OpTensor circ = tri_r - opposite(tri_l);
    VerificationReport report;
    Rank3 lhs = pairwise_product(r, r, tri_l, SlotPattern::p23_13);
    Rank3 rhs = pairwise_product(r, r, circ, SlotPattern::p13_12) +
                pairwise_product(r, r, bullet, SlotPattern::p23_12);
    compare_rank3(report, "ld-eq", lhs, rhs);
    return report;
}

VerificationReport check_lq_equation(const MultiAlgebra& lquadri, const TensorPair& r) {
    QuadDerived d(lquadri);
    const OpTensor& nw = lquadri.op("nw");
    VerificationReport report;
    {
        Rank3 lhs = pairwise_product(r, r, d.tri_r, SlotPattern::p13_23);
        Rank3 rhs = pairwise_product(r, r, nw, SlotPattern::p12_13) -
                    pairwise_product(r, r, d.vee, SlotPattern::p12_23) -
                    pairwise_product(r, r, d.wedge, SlotPattern::p12_23);
        compare_rank3(report, "lq-eq.a", lhs, rhs);
    }
    {
        Rank3 lhs = pairwise_product(r, r, d.tri_l, SlotPattern::p13_23);
        Rank3 rhs = pairwise_product(r, r, d.wedge, SlotPattern::p12_23) -
                    pairwise_product(r, r, d.prec, SlotPattern::p12_13);
        compare_rank3(report, "lq-eq.b", lhs, rhs);
    }
    return report;
}

VerificationReport check_cocycle_ldend(const MultiAlgebra& ldend, const BilinearForm& B) {
    if (!B.is_skew()) throw std::invalid_argument("2-cocycle condition needs a skew form");
    if (B.dim() != ldend.dim) throw std::invalid_argument("form dimension mismatch");
    const OpTensor& tri_l = ldend.op("tri_l");
    const OpTensor& tri_r = ldend.op("tri_r");
    OpTensor bullet = tri_r + tri_l;
    OpTensor circ = tri_r - opposite(tri_l);
    const int n = ldend.dim;
    VerificationReport report;
    compare_scalar_triples(
        report, "ldend-cocycle", n,
        [&](int i, int j, int k) { return B.eval(tri_l.basis_product(i, j), unit_vec(n, k)); },
        [&](int i, int j, int k) {
            return -B.eval(unit_vec(n, j), circ.basis_product(k, i)) +
                   B.eval(unit_vec(n, i), bullet.basis_product(k, j));
        });
    return report;
}

VerificationReport check_invariant_lquadri(const MultiAlgebra& lquadri, const BilinearForm& B,
                                           NwSign sign) {
    if (!B.is_skew()) throw std::invalid_argument("invariance condition needs a skew form");
    if (B.dim() != lquadri.dim) throw std::invalid_argument("form dimension mismatch");
    QuadDerived d(lquadri);
    const int n = lquadri.dim;
    const Rat nw_sign = sign == NwSign::plus ? Rat(1) : Rat(-1);
    VerificationReport report;
    compare_scalar_triples(
        report, "invariant.se", n,
        [&](int i, int j, int k) {
            return B.eval(lquadri.op("se").basis_product(i, j), unit_vec(n, k));
        },
        [&](int i, int j, int k) {
            return -B.eval(unit_vec(n, j), d.bracket.basis_product(i, k));
        });
    compare_scalar_triples(
        report, "invariant.nw", n,
        [&](int i, int j, int k) {
            return B.eval(lquadri.op("nw").basis_product(i, j), unit_vec(n, k));
        },
        [&](int i, int j, int k) {
            return nw_sign * B.eval(unit_vec(n, j), d.tri_r.basis_product(k, i));
        });
    compare_scalar_triples(
        report, "invariant.ne", n,
        [&](int i, int j, int k) {
            return B.eval(lquadri.op("ne").basis_product(i, j), unit_vec(n, k));
        },
        [&](int i, int j, int k) {
            return -B.eval(unit_vec(n, j), d.circ.basis_product(k, i));
        });
    compare_scalar_triples(
        report, "invariant.sw", n,
        [&](int i, int j, int k) {
            return B.eval(lquadri.op("sw").basis_product(i, j), unit_vec(n, k));
        },
        [&](int i, int j, int k) {
            return -B.eval(unit_vec(n, j), d.bullet.basis_product(k, i));
        });
    return report;
}

VerificationReport check_cocycle_lquadri(const MultiAlgebra& lquadri, const BilinearForm& B) {
    if (!B.is_symmetric())
        throw std::invalid_argument("four-product cocycle condition needs a symmetric form");
    if (B.dim() != lquadri.dim) throw std::invalid_argument("form dimension mismatch");
    QuadDerived d(lquadri);
    const int n = lquadri.dim;
    VerificationReport report;
    compare_scalar_triples(
        report, "lq-cocycle.a", n,
        [&](int i, int j, int k) {
            return B.eval(lquadri.op("sw").basis_product(i, j), unit_vec(n, k));
        },
        [&](int i, int j, int k) {
            return -B.eval(unit_vec(n, j), d.bullet.basis_product(k, i)) -
                   B.eval(unit_vec(n, i), d.vee.basis_product(k, j));
        });
    compare_scalar_triples(
        report, "lq-cocycle.b", n,
        [&](int i, int j, int k) {
            return B.eval(lquadri.op("ne").basis_product(i, j), unit_vec(n, k));
        },
        [&](int i, int j, int k) {
            return B.eval(unit_vec(n, j),
                          d.wedge.basis_product(i, k) - d.vee.basis_product(k, i)) -
                   B.eval(unit_vec(n, i), d.succ.basis_product(k, j));
        });
    return report;
}

EquivalenceSuite o_operator_equivalence_suite(const MultiAlgebra& lquadri, const TensorPair& r) {
    if (!r.symmetric())
        throw std::invalid_argument("the equivalence suite requires a symmetric tensor");
    EquivalenceSuite suite{};
    auto condition = [&](LdendFlavor flavor) {
        Bimodule dual = dual_bimodule(lquadri_mult_bimodule(lquadri, flavor));
        return check_o_operator({r.as_map(), dual}).holds;
    };
    suite.horizontal_dual = condition(LdendFlavor::horizontal);
    suite.vertical_dual = condition(LdendFlavor::vertical);
    suite.depth_dual = condition(LdendFlavor::depth);
    suite.lq_equation = check_lq_equation(lquadri, r).holds;
    return suite;
}

std::array<CanonicalAmbient, 3> canonical_r(const MultiAlgebra& lquadri) {
    require_four_ops(lquadri);
    const int n = lquadri.dim;
    std::array<CanonicalAmbient, 3> out;
    const LdendFlavor flavors[3] = {LdendFlavor::horizontal, LdendFlavor::vertical,
                                    LdendFlavor::depth};
    Mat rmat(2 * n, 2 * n);
    Mat gram(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        rmat.at(i, n + i) = 1;
        rmat.at(n + i, i) = -1;
        gram.at(i, n + i) = 1;
        gram.at(n + i, i) = -1;
    }
    for (int f = 0; f < 3; ++f) {
        Bimodule dual = dual_bimodule(lquadri_mult_bimodule(lquadri, flavors[size_t(f)]));
        out[size_t(f)].algebra = semidirect_ldend(dual);
        out[size_t(f)].r = TensorPair{rmat};
        out[size_t(f)].form = BilinearForm(gram);
    }
    return out;
}

LiftedTensor lift_operator_to_r(const OOperator& op) {
    if (op.context.shape != BimoduleShape::ldend)
        throw std::invalid_argument("tensor lift is defined for ldend contexts");
    op.validate_shape();
    const int n = op.context.base.dim;
    const int m = op.context.module_dim;
    LiftedTensor out;
    out.ambient = semidirect_ldend(dual_bimodule(op.context));
    Mat rmat(n + m, n + m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            rmat.at(i, n + j) = op.map.at(i, j);
            rmat.at(n + j, i) = -op.map.at(i, j);
        }
    out.r = TensorPair{rmat};
    return out;
}

CentralExtension central_extension(const MultiAlgebra& lquadri, const Mat& B) {
    require_four_ops(lquadri);
    if (B.rows() != lquadri.dim || B.cols() != lquadri.dim)
        throw std::invalid_argument("extension form dimension mismatch");
    const int n = lquadri.dim;

    CentralExtension out;
    out.extended = MultiAlgebra(n + 1, Kind::lquadri);
    struct Rule {
        const char* op;
        bool swap_args;  // true: the c-coefficient is B(y, x)
        int sign;
    };
    for (const Rule& rule : {Rule{"se", true, -1}, Rule{"nw", false, -1}, Rule{"ne", true, 1},
                             Rule{"sw", false, 1}}) {
        const OpTensor& src = lquadri.op(rule.op);
        OpTensor& dst = out.extended.op(rule.op);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                for (int k = 0; k < n; ++k) dst.at(i, j, k) = src.at(i, j, k);
                Rat coeff = rule.swap_args ? B.at(j, i) : B.at(i, j);
                dst.at(i, j, n) = Rat(rule.sign) * coeff;
            }
    }

    QuadDerived d(lquadri);
    auto pair = [&](const Vec& u, const Vec& v) {
        Rat acc;
        for (int i = 0; i < n; ++i) {
            if (u[size_t(i)].is_zero()) continue;
            for (int j = 0; j < n; ++j) acc += u[size_t(i)] * B.at(i, j) * v[size_t(j)];
        }
        return acc;
    };
    compare_scalar_triples(
        out.conditions, "ce.a", n,
        [&](int i, int j, int k) {
            return pair(lquadri.op("ne").basis_product(i, j), unit_vec(n, k));
        },
        [&](int i, int j, int k) {
            return -pair(unit_vec(n, j),
                         d.vee.basis_product(k, i) - d.wedge.basis_product(i, k)) -
                   pair(d.succ.basis_product(k, j), unit_vec(n, i));
        });
    compare_scalar_triples(
        out.conditions, "ce.b", n,
        [&](int i, int j, int k) {
            return pair(lquadri.op("sw").basis_product(i, j), unit_vec(n, k));
        },
        [&](int i, int j, int k) {
            return -pair(d.bullet.basis_product(k, i), unit_vec(n, j)) -
                   pair(unit_vec(n, i), d.vee.basis_product(k, j));
        });

    out.extension_axioms = verify_kind(out.extended);
    return out;
}

BilinearForm extension_omega(const Mat& B) { return BilinearForm(B - B.transposed()); }

bool SymmetryTransferReport::all_equal() const {
    for (bool b : holds)
        if (b != holds[0]) return false;
    return true;
}

SymmetryTransferReport transfer_under_symmetry(const MultiAlgebra& lquadri,
                                               const BilinearForm& B) {
    const bool invariance_mode = B.is_skew();
    if (!invariance_mode && !B.is_symmetric())
        throw std::invalid_argument("transfer needs a skew or symmetric form");
    auto property = [&](const MultiAlgebra& alg) {
        return invariance_mode ? check_invariant_lquadri(alg, B).holds
                               : check_cocycle_lquadri(alg, B).holds;
    };
    SymmetryTransferReport report{};
    report.holds[0] = property(lquadri);
    report.holds[1] = property(transpose_lquadri(lquadri));
    report.holds[2] = property(symmetry_lquadri(lquadri, SymWhich::a));
    report.holds[3] = property(symmetry_lquadri(lquadri, SymWhich::b));
    report.holds[4] = property(symmetry_lquadri(lquadri, SymWhich::c));
    report.holds[5] = property(symmetry_lquadri(lquadri, SymWhich::d));
    return report;
}

}  // namespace lq
