#include "lq/bimodule.hpp"

#include <stdexcept>

namespace lq {

namespace {

struct ShapeInfo {
    BimoduleShape shape;
    const char* name;
    std::vector<std::string> actions;
};

const std::vector<ShapeInfo>& shape_table() {
    static const std::vector<ShapeInfo> table = {
        {BimoduleShape::lie, "lie", {"rho"}},
        {BimoduleShape::prelie, "prelie", {"l", "r"}},
        {BimoduleShape::ldend, "ldend", {"l_tri_r", "r_tri_r", "l_tri_l", "r_tri_l"}},
    };
    return table;
}

const ShapeInfo& shape_info(BimoduleShape s) {
    for (const auto& e : shape_table())
        if (e.shape == s) return e;
    throw std::logic_error("unknown bimodule shape");
}

}  // namespace

std::string bimodule_shape_name(BimoduleShape s) { return shape_info(s).name; }

BimoduleShape parse_bimodule_shape(const std::string& name) {
    for (const auto& e : shape_table())
        if (name == e.name) return e.shape;
    throw std::invalid_argument("unknown bimodule shape '" + name + "'");
}

const std::vector<std::string>& bimodule_actions(BimoduleShape s) { return shape_info(s).actions; }

Mat ActionTensor::matrix_of_basis(int x) const {
    Mat m(mod_, mod_);
    for (int vin = 0; vin < mod_; ++vin)
        for (int vout = 0; vout < mod_; ++vout) m.at(vout, vin) = at(x, vin, vout);
    return m;
}

Mat ActionTensor::matrix_of(const Vec& x) const {
    Mat m(mod_, mod_);
    for (int i = 0; i < base_; ++i) {
        if (x[size_t(i)].is_zero()) continue;
        for (int vin = 0; vin < mod_; ++vin)
            for (int vout = 0; vout < mod_; ++vout)
                m.at(vout, vin) += x[size_t(i)] * at(i, vin, vout);
    }
    return m;
}

Vec ActionTensor::apply(const Vec& x, const Vec& v) const {
    Vec out(static_cast<size_t>(mod_));
    for (int i = 0; i < base_; ++i) {
        if (x[size_t(i)].is_zero()) continue;
        for (int vin = 0; vin < mod_; ++vin) {
            if (v[size_t(vin)].is_zero()) continue;
            Rat f = x[size_t(i)] * v[size_t(vin)];
            for (int vout = 0; vout < mod_; ++vout) out[size_t(vout)] += f * at(i, vin, vout);
        }
    }
    return out;
}

ActionTensor ActionTensor::scaled(const Rat& c) const {
    ActionTensor t(*this);
    for (Rat& x : t.a_) x *= c;
    return t;
}

ActionTensor operator+(const ActionTensor& a, const ActionTensor& b) {
    if (a.base_ != b.base_ || a.mod_ != b.mod_)
        throw std::invalid_argument("action tensor shape mismatch");
    ActionTensor t(a);
    for (size_t i = 0; i < t.a_.size(); ++i) t.a_[i] += b.a_[i];
    return t;
}

ActionTensor operator-(const ActionTensor& a, const ActionTensor& b) {
    if (a.base_ != b.base_ || a.mod_ != b.mod_)
        throw std::invalid_argument("action tensor shape mismatch");
    ActionTensor t(a);
    for (size_t i = 0; i < t.a_.size(); ++i) t.a_[i] -= b.a_[i];
    return t;
}

bool operator==(const ActionTensor& a, const ActionTensor& b) {
    return a.base_ == b.base_ && a.mod_ == b.mod_ && a.a_ == b.a_;
}

ActionTensor ActionTensor::dualized() const {
    ActionTensor d(base_, mod_);
    for (int x = 0; x < base_; ++x)
        for (int vin = 0; vin < mod_; ++vin)
            for (int vout = 0; vout < mod_; ++vout) d.at(x, vin, vout) = -at(x, vout, vin);
    return d;
}

ActionTensor left_mult_action(const OpTensor& t) {
    ActionTensor a(t.dim(), t.dim());
    for (int x = 0; x < t.dim(); ++x)
        for (int vin = 0; vin < t.dim(); ++vin)
            for (int vout = 0; vout < t.dim(); ++vout) a.at(x, vin, vout) = t.at(x, vin, vout);
    return a;
}

ActionTensor right_mult_action(const OpTensor& t) {
    ActionTensor a(t.dim(), t.dim());
    for (int x = 0; x < t.dim(); ++x)
        for (int vin = 0; vin < t.dim(); ++vin)
            for (int vout = 0; vout < t.dim(); ++vout) a.at(x, vin, vout) = t.at(vin, x, vout);
    return a;
}

const ActionTensor& Bimodule::action(const std::string& name) const {
    auto it = actions.find(name);
    if (it == actions.end()) throw std::invalid_argument("unknown action '" + name + "'");
    return it->second;
}

void Bimodule::validate_shape() const {
    base.validate_shape();
    const auto& expected = bimodule_actions(shape);
    if (actions.size() != expected.size())
        throw std::invalid_argument("bimodule shape '" + bimodule_shape_name(shape) +
                                    "' expects " + std::to_string(expected.size()) + " actions");
    for (const auto& name : expected) {
        auto it = actions.find(name);
        if (it == actions.end())
            throw std::invalid_argument("bimodule is missing action '" + name + "'");
        if (it->second.base_dim() != base.dim || it->second.module_dim() != module_dim)
            throw std::invalid_argument("action '" + name + "' has wrong dimensions");
    }
}

Bimodule regular_bimodule(const MultiAlgebra& alg) {
    Bimodule m;
    m.base = alg;
    m.module_dim = alg.dim;
    switch (alg.kind) {
        case Kind::lie: {
            m.shape = BimoduleShape::lie;
            m.actions.emplace("rho", left_mult_action(alg.op("bracket")));
            break;
        }
        case Kind::prelie: {
            m.shape = BimoduleShape::prelie;
            m.actions.emplace("l", left_mult_action(alg.op("circ")));
            m.actions.emplace("r", right_mult_action(alg.op("circ")));
            break;
        }
        case Kind::dendriform:
        case Kind::ldend: {
            m.shape = BimoduleShape::ldend;
            m.actions.emplace("l_tri_r", left_mult_action(alg.op("tri_r")));
            m.actions.emplace("r_tri_r", right_mult_action(alg.op("tri_r")));
            m.actions.emplace("l_tri_l", left_mult_action(alg.op("tri_l")));
            m.actions.emplace("r_tri_l", right_mult_action(alg.op("tri_l")));
            break;
        }
        default:
            throw std::invalid_argument("regular bimodule needs a lie, prelie or l-dendriform algebra");
    }
    return m;
}

Bimodule lquadri_mult_bimodule(const MultiAlgebra& lquadri, LdendFlavor flavor) {
    for (const char* name : {"se", "ne", "nw", "sw"})
        if (!lquadri.has_op(name))
            throw std::invalid_argument("four-product algebra required");
    Bimodule m;
    m.base = lquadri_to_ldend(lquadri, flavor);
    m.module_dim = lquadri.dim;
    m.shape = BimoduleShape::ldend;
    switch (flavor) {
        case LdendFlavor::horizontal:
            m.actions.emplace("l_tri_r", left_mult_action(lquadri.op("se")));
            m.actions.emplace("r_tri_r", left_mult_action(lquadri.op("nw")).scaled(Rat(-1)));
            m.actions.emplace("l_tri_l", left_mult_action(lquadri.op("ne")));
            m.actions.emplace("r_tri_l", left_mult_action(lquadri.op("sw")).scaled(Rat(-1)));
            break;
        case LdendFlavor::vertical:
            m.actions.emplace("l_tri_r", left_mult_action(lquadri.op("se")));
            m.actions.emplace("r_tri_r", right_mult_action(lquadri.op("ne")));
            m.actions.emplace("l_tri_l", left_mult_action(lquadri.op("sw")));
            m.actions.emplace("r_tri_l", right_mult_action(lquadri.op("nw")));
            break;
        case LdendFlavor::depth:
            m.actions.emplace("l_tri_r", left_mult_action(lquadri.op("se")));
            m.actions.emplace("r_tri_r", right_mult_action(lquadri.op("sw")));
            m.actions.emplace("l_tri_l", left_mult_action(lquadri.op("ne")));
            m.actions.emplace("r_tri_l", right_mult_action(lquadri.op("nw")));
            break;
    }
    return m;
}

namespace {

Mat comm(const Mat& a, const Mat& b) { return a * b - b * a; }

/// Compares two endomorphisms columnwise, recording the first differing
/// module basis vector.
void check_equal(VerificationReport& report, const std::string& name, int i, int j, const Mat& lhs,
                 const Mat& rhs, bool& failed) {
    for (int v = 0; v < lhs.cols(); ++v) {
        ++report.checked;
        Vec lcol = lhs.column(v), rcol = rhs.column(v);
        if (lcol != rcol) {
            report.fail({name, {i, j, v}, lcol, rcol});
            failed = true;
            return;
        }
    }
}

}  // namespace

VerificationReport check_bimodule(const Bimodule& m) {
    m.validate_shape();
    VerificationReport report;
    const int n = m.base.dim;

    if (m.shape == BimoduleShape::lie) {
        const ActionTensor& rho = m.action("rho");
        const OpTensor& br = m.base.op("bracket");
        bool failed = false;
        for (int i = 0; i < n && !failed; ++i)
            for (int j = 0; j < n && !failed; ++j) {
                Mat lhs = rho.matrix_of(br.basis_product(i, j));
                Mat rhs = comm(rho.matrix_of_basis(i), rho.matrix_of_basis(j));
                check_equal(report, "lie-representation.1", i, j, lhs, rhs, failed);
            }
        return report;
    }

    if (m.shape == BimoduleShape::prelie) {
        const ActionTensor& l = m.action("l");
        const ActionTensor& r = m.action("r");
        const OpTensor& circ = m.base.op("circ");
        bool failed1 = false, failed2 = false;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Mat li = l.matrix_of_basis(i), lj = l.matrix_of_basis(j);
                Mat ri = r.matrix_of_basis(i), rj = r.matrix_of_basis(j);
                Mat lij = l.matrix_of(circ.basis_product(i, j));
                Mat lji = l.matrix_of(circ.basis_product(j, i));
                Mat rij = r.matrix_of(circ.basis_product(i, j));
                if (!failed1)
                    check_equal(report, "prelie-bimodule.1", i, j, li * lj - lij, lj * li - lji,
                                failed1);
                if (!failed2)
                    check_equal(report, "prelie-bimodule.2", i, j, li * rj - rj * li,
                                rij - rj * ri, failed2);
            }
        return report;
    }

    const ActionTensor& lr = m.action("l_tri_r");
    const ActionTensor& rr = m.action("r_tri_r");
    const ActionTensor& ll = m.action("l_tri_l");
    const ActionTensor& rl = m.action("r_tri_l");
    const OpTensor& tri_r = m.base.op("tri_r");
    const OpTensor& tri_l = m.base.op("tri_l");
    OpTensor bullet = tri_r + tri_l;                      // horizontal one-product
    OpTensor circ = tri_r - opposite(tri_l);              // vertical one-product
    OpTensor bracket = bullet - opposite(bullet);         // sub-adjacent bracket
    bool failed[5] = {false, false, false, false, false};
    static const char* names[5] = {"ldend-bimodule.1", "ldend-bimodule.2", "ldend-bimodule.3",
                                   "ldend-bimodule.4", "ldend-bimodule.5"};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Mat lri = lr.matrix_of_basis(i), lrj = lr.matrix_of_basis(j);
            Mat rri = rr.matrix_of_basis(i), rrj = rr.matrix_of_basis(j);
            Mat lli = ll.matrix_of_basis(i), llj = ll.matrix_of_basis(j);
            Mat rli = rl.matrix_of_basis(i), rlj = rl.matrix_of_basis(j);
            if (!failed[0])
                check_equal(report, names[0], i, j, comm(lri, lrj),
                            lr.matrix_of(bracket.basis_product(i, j)), failed[0]);
            if (!failed[1])
                check_equal(report, names[1], i, j, comm(lri, llj),
                            ll.matrix_of(circ.basis_product(i, j)) + llj * lli, failed[1]);
            if (!failed[2])
                check_equal(report, names[2], i, j, rr.matrix_of(tri_r.basis_product(i, j)),
                            rrj * rri + rrj * rli + comm(lri, rrj) - rrj * lli, failed[2]);
            if (!failed[3])
                check_equal(report, names[3], i, j, rr.matrix_of(tri_l.basis_product(i, j)),
                            rlj * rri + lli * rrj + comm(lli, rlj), failed[3]);
            if (!failed[4])
                check_equal(report, names[4], i, j, comm(lri, rlj),
                            rl.matrix_of(bullet.basis_product(i, j)) - rlj * rli, failed[4]);
        }
    return report;
}

Bimodule dual_bimodule(const Bimodule& m) {
    if (m.shape != BimoduleShape::ldend)
        throw std::invalid_argument("dual bimodule is defined for the ldend shape");
    m.validate_shape();
    const ActionTensor& lr = m.action("l_tri_r");
    const ActionTensor& rr = m.action("r_tri_r");
    const ActionTensor& ll = m.action("l_tri_l");
    const ActionTensor& rl = m.action("r_tri_l");
    Bimodule d;
    d.base = m.base;
    d.module_dim = m.module_dim;
    d.shape = BimoduleShape::ldend;
    d.actions.emplace("l_tri_r", (lr + ll - rr - rl).dualized());
    d.actions.emplace("r_tri_r", rr.dualized());
    d.actions.emplace("l_tri_l", (rr - ll).dualized());
    d.actions.emplace("r_tri_l", (rr + rl).dualized().scaled(Rat(-1)));
    return d;
}

MultiAlgebra semidirect_ldend(const Bimodule& m, bool require_valid) {
    if (m.shape != BimoduleShape::ldend)
        throw std::invalid_argument("semidirect sum is defined for the ldend shape");
    m.validate_shape();
    if (require_valid) {
        VerificationReport r = check_bimodule(m);
        if (!r.holds)
            throw std::invalid_argument("semidirect sum over an invalid bimodule:\n" + r.str());
    }
    const int n = m.base.dim, k = m.module_dim;
    MultiAlgebra out(n + k, Kind::ldend);
    for (const char* name : {"tri_r", "tri_l"}) {
        OpTensor& t = out.op(name);
        const OpTensor& base = m.base.op(name);
        const ActionTensor& left = m.action(std::string("l_") + name);
        const ActionTensor& right = m.action(std::string("r_") + name);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int c = 0; c < n; ++c) t.at(i, j, c) = base.at(i, j, c);
        for (int i = 0; i < n; ++i)
            for (int v = 0; v < k; ++v)
                for (int w = 0; w < k; ++w) {
                    t.at(i, n + v, n + w) = left.at(i, v, w);   // x * v = l(x) v
                    t.at(n + v, i, n + w) = right.at(i, v, w);  // u * y = r(y) u
                }
    }
    return out;
}

}  // namespace lq
