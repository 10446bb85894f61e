#include "lq/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace lq {

namespace {

struct KindInfo {
    Kind kind;
    const char* name;
    std::vector<std::string> ops;
};

const std::vector<KindInfo>& kind_table() {
    static const std::vector<KindInfo> table = {
        {Kind::raw, "raw", {}},
        {Kind::lie, "lie", {"bracket"}},
        {Kind::prelie, "prelie", {"circ"}},
        {Kind::dendriform, "dendriform", {"tri_r", "tri_l"}},
        {Kind::ldend, "l-dendriform", {"tri_r", "tri_l"}},
        {Kind::quadri, "quadri", {"se", "ne", "nw", "sw"}},
        {Kind::lquadri, "l-quadri", {"se", "ne", "nw", "sw"}},
        {Kind::octo, "octo",
         {"se1", "se2", "ne1", "ne2", "nw1", "nw2", "sw1", "sw2"}},
        {Kind::locto, "l-octo",
         {"se1", "se2", "ne1", "ne2", "nw1", "nw2", "sw1", "sw2"}},
    };
    return table;
}

const KindInfo& info(Kind k) {
    for (const auto& e : kind_table())
        if (e.kind == k) return e;
    throw std::logic_error("unknown kind");
}

}  // namespace

std::string kind_name(Kind k) { return info(k).name; }

Kind parse_kind(const std::string& name) {
    for (const auto& e : kind_table())
        if (name == e.name) return e.kind;
    throw std::invalid_argument("unknown structure kind '" + name + "'");
}

int kind_arity(Kind k) { return int(info(k).ops.size()); }

const std::vector<std::string>& kind_ops(Kind k) { return info(k).ops; }

int op_display_rank(const std::string& op) {
    static const std::vector<std::string> order = {
        "se",  "ne",  "nw",  "sw",  "se1",  "se2",   "ne1",  "ne2",
        "nw1", "nw2", "sw1", "sw2", "tri_r", "tri_l", "succ", "prec",
        "vee", "wedge", "circ", "bullet", "star", "bracket"};
    auto it = std::find(order.begin(), order.end(), op);
    return it == order.end() ? int(order.size()) : int(it - order.begin());
}

MultiAlgebra::MultiAlgebra(int dim_, Kind kind_) : dim(dim_), kind(kind_) {
    for (const std::string& name : kind_ops(kind_)) ops.emplace(name, OpTensor(dim_));
}

const OpTensor& MultiAlgebra::op(const std::string& name) const {
    auto it = ops.find(name);
    if (it == ops.end()) throw std::invalid_argument("unknown operation '" + name + "'");
    return it->second;
}

OpTensor& MultiAlgebra::op(const std::string& name) {
    auto it = ops.find(name);
    if (it == ops.end()) throw std::invalid_argument("unknown operation '" + name + "'");
    return it->second;
}

void MultiAlgebra::validate_shape() const {
    if (dim < 0) throw std::invalid_argument("negative dimension");
    for (const auto& [name, t] : ops)
        if (t.dim() != dim)
            throw std::invalid_argument("operation '" + name + "' dimension mismatch");
    if (kind == Kind::raw) return;
    const auto& expected = kind_ops(kind);
    if (ops.size() != expected.size())
        throw std::invalid_argument("kind '" + kind_name(kind) + "' expects " +
                                    std::to_string(expected.size()) + " operations, got " +
                                    std::to_string(ops.size()));
    for (const std::string& name : expected)
        if (!has_op(name))
            throw std::invalid_argument("kind '" + kind_name(kind) + "' is missing operation '" +
                                        name + "'");
}

std::vector<std::string> MultiAlgebra::op_names() const {
    std::vector<std::string> names;
    names.reserve(ops.size());
    for (const auto& [name, t] : ops) names.push_back(name);
    std::sort(names.begin(), names.end(), [](const std::string& a, const std::string& b) {
        int ra = op_display_rank(a), rb = op_display_rank(b);
        return ra != rb ? ra < rb : a < b;
    });
    return names;
}

Vec eval(const MultiAlgebra& alg, const std::string& op, const Vec& x, const Vec& y) {
    if (int(x.size()) != alg.dim || int(y.size()) != alg.dim)
        throw std::invalid_argument("eval operand length does not match algebra dimension");
    return alg.op(op).product(x, y);
}

OpTensor combine_ops(const MultiAlgebra& alg, const Recipe& recipe) {
    OpTensor out(alg.dim);
    for (const RecipeTerm& term : recipe) {
        const OpTensor& t = alg.op(term.op);
        OpTensor part = term.order == ArgOrder::direct ? t : opposite(t);
        out = out + part.scaled(term.coeff);
    }
    return out;
}

}  // namespace lq
