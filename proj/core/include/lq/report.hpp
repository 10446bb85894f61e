#pragma once

#include <array>
#include <string>
#include <vector>

#include "lq/rational.hpp"

namespace lq {

/// One failed equation: the first basis tuple violating it, with both
/// evaluated sides. Pair equations use index -1 in the unused slot.
struct Witness {
    std::string identity;
    std::array<int, 3> at{-1, -1, -1};
    Vec lhs, rhs;

    std::string str() const;
};

struct VerificationReport {
    bool holds = true;
    std::vector<Witness> failures;  // at most one per equation, lexicographic first
    long checked = 0;

    void merge(const VerificationReport& other);
    void fail(Witness w);
    std::string str() const;
};

}  // namespace lq
