#include "lq/report.hpp"

#include <sstream>

namespace lq {

std::string Witness::str() const {
    std::ostringstream out;
    out << identity << " violated at (";
    bool first = true;
    for (int idx : at) {
        if (idx < 0) continue;
        if (!first) out << ", ";
        out << idx + 1;
        first = false;
    }
    out << "): lhs = " << vec_str(lhs) << ", rhs = " << vec_str(rhs);
    return out.str();
}

void VerificationReport::merge(const VerificationReport& other) {
    holds = holds && other.holds;
    checked += other.checked;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

void VerificationReport::fail(Witness w) {
    holds = false;
    failures.push_back(std::move(w));
}

std::string VerificationReport::str() const {
    std::ostringstream out;
    for (const Witness& w : failures) out << w.str() << '\n';
    out << "checked: " << checked << '\n';
    out << "holds: " << (holds ? "true" : "false");
    return out.str();
}

}  // namespace lq
