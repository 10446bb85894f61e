#pragma once

#include <map>
#include <string>
#include <vector>

#include "lq/algebra.hpp"
#include "lq/report.hpp"

namespace lq {

/// A trilinear term outer(a, inner(b, c)) or outer(inner(a, b), c), where
/// (a, b, c) is a permutation of the variables (x, y, z).
struct IdentityTerm {
    Rat coeff;             // +1 or -1 in every shipped table
    std::string outer;
    std::string inner;
    bool right_nested;     // true: outer(a, inner(b, c)); false: outer(inner(a, b), c)
    std::array<int, 3> vars;  // slot -> variable index (0 = x, 1 = y, 2 = z)
};

/// lhs == rhs, evaluated on every ordered basis triple. An empty rhs means
/// the lhs has to vanish.
struct Identity {
    std::string name;
    std::vector<IdentityTerm> lhs, rhs;
};

/// A bilinear term op(a, b) over the variables (x, y); used for the
/// antisymmetry equation, which is a pair identity.
struct PairTerm {
    Rat coeff;
    std::string op;
    std::array<int, 2> vars;
};

struct PairIdentity {
    std::string name;
    std::vector<PairTerm> lhs, rhs;
};

/// A full axiom system: the primary operation names, recipes for auxiliary
/// products appearing inside identities, and the identity tables. The
/// tables ship as data files under core/data/axioms/ and are embedded at
/// build time; see builtin_system().
struct AxiomSystem {
    std::string name;
    std::vector<std::string> ops;
    std::vector<std::pair<std::string, Recipe>> derived_ops;
    std::vector<PairIdentity> pair_identities;
    std::vector<Identity> identities;
    std::string note;

    int arity() const { return int(ops.size()); }
};

enum class SystemId { lie, associative, prelie, dendriform, ldend, quadri, lquadri, octo, locto };

std::string system_name(SystemId id);
SystemId parse_system(const std::string& name);
SystemId system_for_kind(Kind k);  // throws for raw

/// The shipped system for a class, parsed once from the embedded tables.
const AxiomSystem& builtin_system(SystemId id);

/// Decides whether alg satisfies the system, exactly, over all ordered
/// basis triples (pairs for pair identities). Trilinearity makes this a
/// complete decision procedure. One witness per violated identity, at the
/// lexicographically first failing tuple.
VerificationReport verify(const MultiAlgebra& alg, const AxiomSystem& system);

/// verify() against the system of alg.kind; throws for raw.
VerificationReport verify_kind(const MultiAlgebra& alg);

}  // namespace lq
