#include "lq/ooperator.hpp"

#include <functional>
#include <stdexcept>

namespace lq {

void OOperator::validate_shape() const {
    context.validate_shape();
    if (map.rows() != context.base.dim || map.cols() != context.module_dim)
        throw std::invalid_argument("operator map must be base.dim x module_dim");
}

VerificationReport check_o_operator(const OOperator& op) {
    op.validate_shape();
    const Mat& T = op.map;
    const Bimodule& ctx = op.context;
    const int m = ctx.module_dim;
    VerificationReport report;

    auto check_product = [&](const std::string& name, const OpTensor& product,
                             const ActionTensor& left, const ActionTensor& right) {
        bool failed = false;
        for (int u = 0; u < m && !failed; ++u)
            for (int v = 0; v < m && !failed; ++v) {
                ++report.checked;
                Vec Tu = T.column(u), Tv = T.column(v);
                Vec lhs = product.product(Tu, Tv);
                Vec inner = left.apply(Tu, unit_vec(m, v)) + right.apply(Tv, unit_vec(m, u));
                Vec rhs = T.apply(inner);
                if (lhs != rhs) {
                    report.fail({name, {u, v, -1}, lhs, rhs});
                    failed = true;
                }
            }
    };

    switch (ctx.shape) {
        case BimoduleShape::lie: {
            const ActionTensor& rho = ctx.action("rho");
            const OpTensor& br = ctx.base.op("bracket");
            bool failed = false;
            for (int u = 0; u < m && !failed; ++u)
                for (int v = 0; v < m && !failed; ++v) {
                    ++report.checked;
                    Vec Tu = T.column(u), Tv = T.column(v);
                    Vec lhs = br.product(Tu, Tv);
                    Vec inner =
                        rho.apply(Tu, unit_vec(m, v)) - rho.apply(Tv, unit_vec(m, u));
                    Vec rhs = T.apply(inner);
                    if (lhs != rhs) {
                        report.fail({"o-operator.lie", {u, v, -1}, lhs, rhs});
                        failed = true;
                    }
                }
            break;
        }
        case BimoduleShape::prelie:
            check_product("o-operator.prelie", ctx.base.op("circ"), ctx.action("l"),
                          ctx.action("r"));
            break;
        case BimoduleShape::ldend:
            check_product("o-operator.tri_r", ctx.base.op("tri_r"), ctx.action("l_tri_r"),
                          ctx.action("r_tri_r"));
            check_product("o-operator.tri_l", ctx.base.op("tri_l"), ctx.action("l_tri_l"),
                          ctx.action("r_tri_l"));
            break;
    }
    return report;
}

VerificationReport check_rota_baxter(const MultiAlgebra& alg, const Mat& R) {
    if (alg.kind != Kind::lie && alg.kind != Kind::prelie && alg.kind != Kind::ldend &&
        alg.kind != Kind::dendriform)
        throw std::invalid_argument(
            "weight-zero Rota-Baxter maps are defined over lie, prelie and l-dendriform "
            "algebras here");
    if (R.rows() != alg.dim || R.cols() != alg.dim)
        throw std::invalid_argument("Rota-Baxter candidate must be square of the algebra's "
                                    "dimension");
    return check_o_operator({R, regular_bimodule(alg)});
}

MultiAlgebra induce(const OOperator& op, bool require_valid) {
    op.validate_shape();
    if (require_valid) {
        VerificationReport r = check_o_operator(op);
        if (!r.holds)
            throw std::invalid_argument("induce over a failed operator check:\n" + r.str());
    }
    const Mat& T = op.map;
    const Bimodule& ctx = op.context;
    const int m = ctx.module_dim;

    auto fill = [&](OpTensor& t, const ActionTensor& act, const Rat& sign) {
        for (int u = 0; u < m; ++u) {
            Vec Tu = T.column(u);
            for (int v = 0; v < m; ++v) {
                Vec prod = act.apply(Tu, unit_vec(m, v));
                for (int k = 0; k < m; ++k) t.at(u, v, k) = sign * prod[size_t(k)];
            }
        }
    };

    switch (ctx.shape) {
        case BimoduleShape::lie: {
            MultiAlgebra out(m, Kind::prelie);
            fill(out.op("circ"), ctx.action("rho"), Rat(1));
            return out;
        }
        case BimoduleShape::prelie: {
            MultiAlgebra out(m, Kind::ldend);
            fill(out.op("tri_r"), ctx.action("l"), Rat(1));
            fill(out.op("tri_l"), ctx.action("r"), Rat(-1));
            return out;
        }
        case BimoduleShape::ldend: {
            MultiAlgebra out(m, Kind::lquadri);
            fill(out.op("se"), ctx.action("l_tri_r"), Rat(1));
            fill(out.op("nw"), ctx.action("r_tri_r"), Rat(-1));
            fill(out.op("ne"), ctx.action("l_tri_l"), Rat(1));
            fill(out.op("sw"), ctx.action("r_tri_l"), Rat(-1));
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

ImageStructure induce_on_image(const OOperator& op, bool require_valid) {
    MultiAlgebra on_module = induce(op, require_valid);
    const Mat& T = op.map;
    const int m = op.context.module_dim;

    std::vector<int> pivots = T.pivot_columns();
    const int rank = int(pivots.size());
    Mat basis(T.rows(), rank);
    for (int c = 0; c < rank; ++c)
        for (int r = 0; r < T.rows(); ++r) basis.at(r, c) = T.at(r, pivots[size_t(c)]);

    ImageStructure out;
    out.basis = basis;
    out.algebra.dim = rank;
    out.algebra.kind = on_module.kind;

    // Well-definedness: products against the kernel of T must themselves
    // die under T, in both argument positions.
    std::vector<Vec> kernel = T.kernel_basis();
    for (const auto& [name, t] : on_module.ops) {
        bool failed = false;
        for (size_t kv = 0; kv < kernel.size() && !failed; ++kv)
            for (int j = 0; j < m && !failed; ++j) {
                ++out.well_defined.checked;
                Vec left = T.apply(t.product(kernel[kv], unit_vec(m, j)));
                Vec right = T.apply(t.product(unit_vec(m, j), kernel[kv]));
                if (!is_zero(left) || !is_zero(right)) {
                    out.well_defined.fail(
                        {"well-defined." + name, {int(kv), j, -1}, left, right});
                    failed = true;
                }
            }
    }
    if (!out.well_defined.holds) return out;

    for (const auto& [name, t] : on_module.ops) {
        OpTensor img(rank);
        for (int a = 0; a < rank; ++a)
            for (int b = 0; b < rank; ++b) {
                Vec prod =
                    T.apply(t.basis_product(pivots[size_t(a)], pivots[size_t(b)]));
                auto coeffs = basis.solve(prod);
                if (!coeffs) {
                    out.well_defined.fail({"image-closure." + name, {a, b, -1}, prod, {}});
                    return out;
                }
                for (int k = 0; k < rank; ++k) img.at(a, b, k) = (*coeffs)[size_t(k)];
            }
        out.algebra.ops.emplace(name, std::move(img));
    }
    return out;
}

MultiAlgebra transport_structure(const OOperator& op, bool require_valid) {
    if (!op.map.invertible())
        throw std::invalid_argument("transport needs an invertible operator");
    MultiAlgebra on_module = induce(op, require_valid);
    const Mat inv = op.map.inverse();
    const int n = op.map.rows();
    MultiAlgebra out(n, on_module.kind);
    for (const auto& [name, t] : on_module.ops) {
        OpTensor& target = out.op(name);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Vec prod = op.map.apply(t.product(inv.column(i), inv.column(j)));
                for (int k = 0; k < n; ++k) target.at(i, j, k) = prod[size_t(k)];
            }
    }
    return out;
}

namespace {

void require_commuting_rb(const MultiAlgebra& alg, const std::vector<Mat>& rs) {
    for (size_t i = 0; i < rs.size(); ++i) {
        VerificationReport r = check_rota_baxter(alg, rs[size_t(i)]);
        if (!r.holds)
            throw std::invalid_argument("map " + std::to_string(i + 1) +
                                        " fails the Rota-Baxter check:\n" + r.str());
    }
    for (size_t i = 0; i < rs.size(); ++i)
        for (size_t j = i + 1; j < rs.size(); ++j)
            if (!(rs[i] * rs[j] == rs[j] * rs[i]))
                throw std::invalid_argument("maps " + std::to_string(i + 1) + " and " +
                                            std::to_string(j + 1) + " do not commute");
}

OpTensor from_bilinear(int n, const std::function<Vec(int, int)>& f) {
    OpTensor t(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec v = f(i, j);
            for (int k = 0; k < n; ++k) t.at(i, j, k) = v[size_t(k)];
        }
    return t;
}

}  // namespace

MultiAlgebra rb_tower(const MultiAlgebra& alg, const std::vector<Mat>& rs, bool require_valid) {
    if (rs.empty() || rs.size() > 3)
        throw std::invalid_argument("rb_tower takes one, two or three maps");
    if (require_valid) require_commuting_rb(alg, rs);
    const int n = alg.dim;

    if (alg.kind == Kind::lie) {
        const OpTensor& br = alg.op("bracket");
        if (rs.size() == 1) {
            const Mat& R = rs[0];
            MultiAlgebra out(n, Kind::prelie);
            out.op("circ") = from_bilinear(
                n, [&](int i, int j) { return br.product(R.column(i), unit_vec(n, j)); });
            return out;
        }
        if (rs.size() == 2) {
            Mat R12 = rs[0] * rs[1];
            MultiAlgebra out(n, Kind::ldend);
            out.op("tri_r") = from_bilinear(
                n, [&](int i, int j) { return br.product(R12.column(i), unit_vec(n, j)); });
            out.op("tri_l") = from_bilinear(
                n, [&](int i, int j) { return br.product(rs[1].column(i), rs[0].column(j)); });
            return out;
        }
        Mat R12 = rs[0] * rs[1];
        Mat R123 = R12 * rs[2];
        Mat R23 = rs[1] * rs[2];
        Mat R13 = rs[0] * rs[2];
        MultiAlgebra out(n, Kind::lquadri);
        out.op("se") = from_bilinear(
            n, [&](int i, int j) { return br.product(R123.column(i), unit_vec(n, j)); });
        out.op("nw") = from_bilinear(
            n, [&](int i, int j) { return br.product(rs[2].column(i), R12.column(j)); });
        out.op("ne") = from_bilinear(
            n, [&](int i, int j) { return br.product(R23.column(i), rs[0].column(j)); });
        out.op("sw") = from_bilinear(
            n, [&](int i, int j) { return br.product(R13.column(i), rs[1].column(j)); });
        return out;
    }

    if (alg.kind == Kind::prelie) {
        const OpTensor& circ = alg.op("circ");
        if (rs.size() == 1) {
            const Mat& R = rs[0];
            MultiAlgebra out(n, Kind::ldend);
            out.op("tri_r") = from_bilinear(
                n, [&](int i, int j) { return circ.product(R.column(i), unit_vec(n, j)); });
            out.op("tri_l") = from_bilinear(n, [&](int i, int j) {
                return Rat(-1) * circ.product(unit_vec(n, j), R.column(i));
            });
            return out;
        }
        if (rs.size() == 2) {
            Mat R12 = rs[0] * rs[1];
            MultiAlgebra out(n, Kind::lquadri);
            out.op("se") = from_bilinear(
                n, [&](int i, int j) { return circ.product(R12.column(i), unit_vec(n, j)); });
            out.op("nw") = from_bilinear(n, [&](int i, int j) {
                return Rat(-1) * circ.product(rs[0].column(j), rs[1].column(i));
            });
            out.op("ne") = from_bilinear(n, [&](int i, int j) {
                return Rat(-1) * circ.product(unit_vec(n, j), R12.column(i));
            });
            out.op("sw") = from_bilinear(n, [&](int i, int j) {
                return circ.product(rs[1].column(i), rs[0].column(j));
            });
            return out;
        }
        throw std::invalid_argument("three maps climb from a lie algebra, not a prelie one");
    }

    if (alg.kind == Kind::ldend || alg.kind == Kind::dendriform) {
        if (rs.size() != 1)
            throw std::invalid_argument("exactly one map climbs from an l-dendriform algebra");
        const Mat& R = rs[0];
        const OpTensor& tr = alg.op("tri_r");
        const OpTensor& tl = alg.op("tri_l");
        MultiAlgebra out(n, Kind::lquadri);
        out.op("se") = from_bilinear(
            n, [&](int i, int j) { return tr.product(R.column(i), unit_vec(n, j)); });
        out.op("nw") = from_bilinear(n, [&](int i, int j) {
            return Rat(-1) * tr.product(unit_vec(n, j), R.column(i));
        });
        out.op("ne") = from_bilinear(
            n, [&](int i, int j) { return tl.product(R.column(i), unit_vec(n, j)); });
        out.op("sw") = from_bilinear(n, [&](int i, int j) {
            return Rat(-1) * tl.product(unit_vec(n, j), R.column(i));
        });
        return out;
    }

    throw std::invalid_argument("rb_tower starts from a lie, prelie or l-dendriform algebra");
}

std::array<MultiAlgebra, 6> rb_lquadri_variants(const MultiAlgebra& ldend, const Mat& R,
                                                bool require_valid) {
    if (ldend.kind != Kind::ldend && ldend.kind != Kind::dendriform)
        throw std::invalid_argument("variants start from an l-dendriform algebra");
    if (require_valid) require_commuting_rb(ldend, {R});
    const int n = ldend.dim;
    const OpTensor& tr = ldend.op("tri_r");
    const OpTensor& tl = ldend.op("tri_l");

    auto lV = [&](const OpTensor& t) {
        return from_bilinear(n, [&](int i, int j) { return t.product(R.column(i), unit_vec(n, j)); });
    };
    auto mVr = [&](const OpTensor& t) {  // -(y op R(x))
        return from_bilinear(
            n, [&](int i, int j) { return Rat(-1) * t.product(unit_vec(n, j), R.column(i)); });
    };
    auto mRl = [&](const OpTensor& t) {  // -(R(y) op x)
        return from_bilinear(
            n, [&](int i, int j) { return Rat(-1) * t.product(R.column(j), unit_vec(n, i)); });
    };
    auto rV = [&](const OpTensor& t) {  // x op R(y)
        return from_bilinear(n, [&](int i, int j) { return t.product(unit_vec(n, i), R.column(j)); });
    };

    std::array<MultiAlgebra, 6> out;
    for (auto& a : out) a = MultiAlgebra(n, Kind::lquadri);
    // base
    out[0].op("se") = lV(tr);
    out[0].op("nw") = mVr(tr);
    out[0].op("ne") = lV(tl);
    out[0].op("sw") = mVr(tl);
    // transpose
    out[1].op("se") = lV(tr);
    out[1].op("nw") = mVr(tr);
    out[1].op("ne") = mVr(tl);
    out[1].op("sw") = lV(tl);
    // a
    out[2].op("se") = lV(tr);
    out[2].op("nw") = mRl(tl);
    out[2].op("ne") = rV(tr);
    out[2].op("sw") = mVr(tl);
    // b
    out[3].op("se") = lV(tr);
    out[3].op("nw") = mRl(tl);
    out[3].op("ne") = mVr(tl);
    out[3].op("sw") = rV(tr);
    // c
    out[4].op("se") = lV(tr);
    out[4].op("nw") = rV(tl);
    out[4].op("ne") = rV(tr);
    out[4].op("sw") = lV(tl);
    // d
    out[5].op("se") = lV(tr);
    out[5].op("nw") = rV(tl);
    out[5].op("ne") = lV(tl);
    out[5].op("sw") = rV(tr);
    return out;
}

CocycleLift lift_via_cocycle(const MultiAlgebra& ldend, const BilinearForm& B, NwSign sign,
                             bool require_valid) {
    if (ldend.kind != Kind::ldend && ldend.kind != Kind::dendriform)
        throw std::invalid_argument("cocycle lift starts from an l-dendriform algebra");
    if (!B.is_skew()) throw std::invalid_argument("cocycle lift needs a skew form");
    if (!B.nondegenerate()) throw std::invalid_argument("cocycle lift needs a nondegenerate form");
    if (B.dim() != ldend.dim) throw std::invalid_argument("form dimension mismatch");

    const int n = ldend.dim;
    const OpTensor& tr = ldend.op("tri_r");
    const OpTensor& tl = ldend.op("tri_l");
    OpTensor bullet = tr + tl;
    OpTensor circ = tr - opposite(tl);
    OpTensor bracket = bullet - opposite(bullet);
    const Rat nw_sign = sign == NwSign::plus ? Rat(1) : Rat(-1);

    // B(x P y, -) is a known covector w for each basis pair; the product
    // coefficients solve G^T c = w through the inverse Gram matrix.
    Mat gt_inv = B.gram().transposed().inverse();
    auto solve_product = [&](const std::function<Rat(int, int, int)>& rhs) {
        OpTensor t(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Vec w(static_cast<size_t>(n));
                for (int k = 0; k < n; ++k) w[size_t(k)] = rhs(i, j, k);
                Vec c = gt_inv.apply(w);
                for (int k = 0; k < n; ++k) t.at(i, j, k) = c[size_t(k)];
            }
        return t;
    };

    auto pair_with = [&](const Vec& u, const Vec& v) { return B.eval(u, v); };

    CocycleLift lift;
    lift.lquadri.dim = n;
    lift.lquadri.kind = Kind::lquadri;
    lift.lquadri.ops.emplace("se", solve_product([&](int i, int j, int k) {
        return -pair_with(unit_vec(n, j), bracket.basis_product(i, k));
    }));
    lift.lquadri.ops.emplace("nw", solve_product([&](int i, int j, int k) {
        return nw_sign * pair_with(unit_vec(n, j), tr.basis_product(k, i));
    }));
    lift.lquadri.ops.emplace("ne", solve_product([&](int i, int j, int k) {
        return -pair_with(unit_vec(n, j), circ.basis_product(k, i));
    }));
    lift.lquadri.ops.emplace("sw", solve_product([&](int i, int j, int k) {
        return -pair_with(unit_vec(n, j), bullet.basis_product(k, i));
    }));

    // Companions read off from the form directly.
    lift.depth_companion.dim = n;
    lift.depth_companion.kind = Kind::ldend;
    lift.depth_companion.ops.emplace("tri_r", solve_product([&](int i, int j, int k) {
        return -pair_with(unit_vec(n, j), bullet.basis_product(i, k));
    }));
    // B(y wedge x, z) = B(x, y tri_l z): solve with (i, j) as (y, x).
    {
        OpTensor wedge_rev = solve_product([&](int i, int j, int k) {
            return pair_with(unit_vec(n, j), tl.basis_product(i, k));
        });
        lift.depth_companion.ops.emplace("tri_l", opposite(wedge_rev));
    }
    lift.vertical_companion.dim = n;
    lift.vertical_companion.kind = Kind::ldend;
    lift.vertical_companion.ops.emplace("tri_r", solve_product([&](int i, int j, int k) {
        return -pair_with(unit_vec(n, j), circ.basis_product(i, k));
    }));
    {
        OpTensor prec_rev = solve_product([&](int i, int j, int k) {
            return -pair_with(unit_vec(n, j), tl.basis_product(k, i));
        });
        lift.vertical_companion.ops.emplace("tri_l", opposite(prec_rev));
    }

    if (require_valid) {
        // The lift is only offered for genuine 2-cocycles; the caller can
        // check separately when probing invalid data.
        OpTensor lhs(n);
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                for (int k = 0; k < n && ok; ++k) {
                    Rat l = pair_with(tl.basis_product(i, j), unit_vec(n, k));
                    Rat r = -pair_with(unit_vec(n, j), circ.basis_product(k, i)) +
                            pair_with(unit_vec(n, i), bullet.basis_product(k, j));
                    ok = l == r;
                }
        if (!ok) throw std::invalid_argument("form is not a 2-cocycle of the algebra");
    }
    return lift;
}

std::vector<Mat> search_rb(const MultiAlgebra& alg, const RBSearchOptions& opts) {
    if (alg.kind != Kind::lie && alg.kind != Kind::prelie && alg.kind != Kind::ldend &&
        alg.kind != Kind::dendriform)
        throw std::invalid_argument("search domain must be lie, prelie or l-dendriform");
    if (opts.entries.empty()) throw std::invalid_argument("empty entry set");

    // Digit order: zero first when present, then the set as given. This
    // pins the zero matrix as the first result.
    std::vector<Rat> digits;
    for (const Rat& e : opts.entries)
        if (e.is_zero()) {
            digits.push_back(e);
            break;
        }
    for (const Rat& e : opts.entries)
        if (!e.is_zero()) digits.push_back(e);

    const int n = alg.dim;
    const int cells = opts.diagonal_only ? n : n * n;
    double space = 1;
    for (int i = 0; i < cells; ++i) space *= double(digits.size());
    if (space > double(opts.cap))
        throw std::length_error("search space of size " + std::to_string((long long)space) +
                                " exceeds the cap of " + std::to_string(opts.cap));

    std::vector<Mat> found;
    std::vector<size_t> odo(size_t(cells), 0);
    while (true) {
        Mat R(n, n);
        for (int c = 0; c < cells; ++c) {
            const Rat& v = digits[odo[size_t(c)]];
            if (opts.diagonal_only)
                R.at(c, c) = v;
            else
                R.at(c / n, c % n) = v;
        }
        if (check_rota_baxter(alg, R).holds) {
            found.push_back(std::move(R));
            if (opts.max_results >= 0 && long(found.size()) >= opts.max_results) return found;
        }
        int pos = cells - 1;
        while (pos >= 0) {
            if (++odo[size_t(pos)] < digits.size()) break;
            odo[size_t(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return found;
}

}  // namespace lq
