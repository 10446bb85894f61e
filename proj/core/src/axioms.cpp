#include "lq/axioms.hpp"

#include <mutex>
#include <stdexcept>

#include "json.hpp"

namespace lq {

namespace {

struct EmbeddedTable {
    const char* name;
    const char* text;
};

#include "axiom_tables.inc"

using json = nlohmann::json;

Rat parse_sign(const std::string& s) {
    if (s == "+") return Rat(1);
    if (s == "-") return Rat(-1);
    return parse_rat(s);
}

std::array<int, 3> parse_vars3(const std::string& s) {
    if (s.size() != 3) throw std::invalid_argument("identity term needs 3 variables");
    std::array<int, 3> vars{};
    bool seen[3] = {false, false, false};
    for (int i = 0; i < 3; ++i) {
        int v = s[size_t(i)] - 'x';
        if (v < 0 || v > 2 || seen[v])
            throw std::invalid_argument("identity variables must be a permutation of xyz");
        vars[size_t(i)] = v;
        seen[v] = true;
    }
    return vars;
}

std::array<int, 2> parse_vars2(const std::string& s) {
    if (s.size() != 2) throw std::invalid_argument("pair term needs 2 variables");
    std::array<int, 2> vars{};
    for (int i = 0; i < 2; ++i) {
        int v = s[size_t(i)] - 'x';
        if (v < 0 || v > 1) throw std::invalid_argument("pair variables must come from xy");
        vars[size_t(i)] = v;
    }
    if (vars[0] == vars[1]) throw std::invalid_argument("pair variables must differ");
    return vars;
}

std::vector<IdentityTerm> parse_terms(const json& arr) {
    std::vector<IdentityTerm> terms;
    for (const auto& t : arr) {
        IdentityTerm term;
        term.coeff = parse_sign(t.at(0).get<std::string>());
        term.outer = t.at(1).get<std::string>();
        std::string nest = t.at(2).get<std::string>();
        if (nest != "L" && nest != "R")
            throw std::invalid_argument("term nesting must be L or R");
        term.right_nested = nest == "R";
        term.inner = t.at(3).get<std::string>();
        term.vars = parse_vars3(t.at(4).get<std::string>());
        terms.push_back(std::move(term));
    }
    return terms;
}

std::vector<PairTerm> parse_pair_terms(const json& arr) {
    std::vector<PairTerm> terms;
    for (const auto& t : arr) {
        PairTerm term;
        term.coeff = parse_sign(t.at(0).get<std::string>());
        term.op = t.at(1).get<std::string>();
        term.vars = parse_vars2(t.at(2).get<std::string>());
        terms.push_back(std::move(term));
    }
    return terms;
}

AxiomSystem parse_system_table(const char* text) {
    json doc = json::parse(text);
    AxiomSystem sys;
    sys.name = doc.at("system").get<std::string>();
    sys.ops = doc.at("ops").get<std::vector<std::string>>();
    for (const auto& [name, recipe] : doc.at("derived").items()) {
        Recipe r;
        for (const auto& term : recipe) {
            RecipeTerm rt;
            rt.coeff = parse_sign(term.at(0).get<std::string>());
            rt.op = term.at(1).get<std::string>();
            std::string ord = term.at(2).get<std::string>();
            if (ord != "d" && ord != "s")
                throw std::invalid_argument("recipe order must be d or s");
            rt.order = ord == "d" ? ArgOrder::direct : ArgOrder::swapped;
            r.push_back(std::move(rt));
        }
        sys.derived_ops.emplace_back(name, std::move(r));
    }
    for (const auto& ident : doc.at("pair_identities")) {
        PairIdentity pi;
        pi.name = ident.at("name").get<std::string>();
        pi.lhs = parse_pair_terms(ident.at("lhs"));
        pi.rhs = parse_pair_terms(ident.at("rhs"));
        sys.pair_identities.push_back(std::move(pi));
    }
    for (const auto& ident : doc.at("identities")) {
        Identity id;
        id.name = ident.at("name").get<std::string>();
        id.lhs = parse_terms(ident.at("lhs"));
        id.rhs = parse_terms(ident.at("rhs"));
        sys.identities.push_back(std::move(id));
    }
    if (doc.contains("note")) sys.note = doc.at("note").get<std::string>();

    // Every symbol inside an identity must be a primary op or a derived one.
    auto known = [&sys](const std::string& op) {
        for (const auto& o : sys.ops)
            if (o == op) return true;
        for (const auto& [name, r] : sys.derived_ops)
            if (name == op) return true;
        return false;
    };
    for (const auto& id : sys.identities)
        for (const auto* side : {&id.lhs, &id.rhs})
            for (const auto& t : *side)
                if (!known(t.outer) || !known(t.inner))
                    throw std::invalid_argument("identity '" + id.name +
                                                "' uses an undeclared operation");
    return sys;
}

struct SystemEntry {
    SystemId id;
    const char* name;
};

constexpr SystemEntry k_systems[] = {
    {SystemId::lie, "lie"},
    {SystemId::associative, "associative"},
    {SystemId::prelie, "prelie"},
    {SystemId::dendriform, "dendriform"},
    {SystemId::ldend, "l-dendriform"},
    {SystemId::quadri, "quadri"},
    {SystemId::lquadri, "l-quadri"},
    {SystemId::octo, "octo"},
    {SystemId::locto, "l-octo"},
};

}  // namespace

std::string system_name(SystemId id) {
    for (const auto& e : k_systems)
        if (e.id == id) return e.name;
    throw std::logic_error("unknown system id");
}

SystemId parse_system(const std::string& name) {
    for (const auto& e : k_systems)
        if (name == e.name) return e.id;
    throw std::invalid_argument("unknown axiom system '" + name + "'");
}

SystemId system_for_kind(Kind k) {
    switch (k) {
        case Kind::lie: return SystemId::lie;
        case Kind::prelie: return SystemId::prelie;
        case Kind::dendriform: return SystemId::dendriform;
        case Kind::ldend: return SystemId::ldend;
        case Kind::quadri: return SystemId::quadri;
        case Kind::lquadri: return SystemId::lquadri;
        case Kind::octo: return SystemId::octo;
        case Kind::locto: return SystemId::locto;
        case Kind::raw: break;
    }
    throw std::invalid_argument("no axiom system for kind 'raw'");
}

const AxiomSystem& builtin_system(SystemId id) {
    static std::map<std::string, AxiomSystem> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    std::string name = system_name(id);
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    for (const auto& table : k_axiom_tables)
        if (name == table.name)
            return cache.emplace(name, parse_system_table(table.text)).first->second;
    throw std::logic_error("no embedded table for system '" + name + "'");
}

namespace {

/// Evaluates a signed sum of depth-2 terms at the basis triple (i, j, k).
Vec eval_side(const std::vector<IdentityTerm>& side,
              const std::map<std::string, const OpTensor*>& ops, int dim,
              const std::array<int, 3>& xyz) {
    Vec acc = zero_vec(dim);
    for (const IdentityTerm& term : side) {
        const OpTensor& outer = *ops.at(term.outer);
        const OpTensor& inner = *ops.at(term.inner);
        int a = xyz[size_t(term.vars[0])];
        int b = xyz[size_t(term.vars[1])];
        int c = xyz[size_t(term.vars[2])];
        Vec value;
        if (term.right_nested)
            value = outer.left_basis_product(a, inner.basis_product(b, c));
        else
            value = outer.right_basis_product(inner.basis_product(a, b), c);
        add_scaled(acc, term.coeff, value);
    }
    return acc;
}

Vec eval_pair_side(const std::vector<PairTerm>& side,
                   const std::map<std::string, const OpTensor*>& ops, int dim,
                   const std::array<int, 2>& xy) {
    Vec acc = zero_vec(dim);
    for (const PairTerm& term : side) {
        const OpTensor& op = *ops.at(term.op);
        add_scaled(acc, term.coeff,
                   op.basis_product(xy[size_t(term.vars[0])], xy[size_t(term.vars[1])]));
    }
    return acc;
}

}  // namespace

VerificationReport verify(const MultiAlgebra& alg, const AxiomSystem& system) {
    alg.validate_shape();
    for (const std::string& op : system.ops)
        if (!alg.has_op(op))
            throw std::invalid_argument("algebra lacks operation '" + op +
                                        "' required by system '" + system.name + "'");
    if (int(alg.ops.size()) != system.arity())
        throw std::invalid_argument("algebra arity does not match system '" + system.name + "'");

    // Materialize derived products once.
    std::map<std::string, OpTensor> derived;
    for (const auto& [name, recipe] : system.derived_ops) derived[name] = combine_ops(alg, recipe);
    std::map<std::string, const OpTensor*> ops;
    for (const auto& [name, t] : alg.ops) ops[name] = &t;
    for (const auto& [name, t] : derived) ops[name] = &t;

    VerificationReport report;
    const int n = alg.dim;
    for (const PairIdentity& ident : system.pair_identities) {
        bool failed = false;
        for (int i = 0; i < n && !failed; ++i)
            for (int j = 0; j < n && !failed; ++j) {
                ++report.checked;
                Vec lhs = eval_pair_side(ident.lhs, ops, n, {i, j});
                Vec rhs = eval_pair_side(ident.rhs, ops, n, {i, j});
                if (lhs != rhs) {
                    report.fail({ident.name, {i, j, -1}, lhs, rhs});
                    failed = true;
                }
            }
    }
    for (const Identity& ident : system.identities) {
        bool failed = false;
        for (int i = 0; i < n && !failed; ++i)
            for (int j = 0; j < n && !failed; ++j)
                for (int k = 0; k < n && !failed; ++k) {
                    ++report.checked;
                    Vec lhs = eval_side(ident.lhs, ops, n, {i, j, k});
                    Vec rhs = eval_side(ident.rhs, ops, n, {i, j, k});
                    if (lhs != rhs) {
                        report.fail({ident.name, {i, j, k}, lhs, rhs});
                        failed = true;
                    }
                }
    }
    return report;
}

VerificationReport verify_kind(const MultiAlgebra& alg) {
    return verify(alg, builtin_system(system_for_kind(alg.kind)));
}

}  // namespace lq
