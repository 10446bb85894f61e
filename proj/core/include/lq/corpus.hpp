#pragma once

#include <vector>

#include "lq/serialize.hpp"

namespace lq {

/// Bundled examples, each constructed in code and carrying a provenance
/// note describing how it was produced and how it was checked.
struct CorpusEntry {
    std::string name;
    AlgebraFile file;
};

const std::vector<CorpusEntry>& corpus();
const CorpusEntry& corpus_entry(const std::string& name);  // throws on unknown name
std::vector<std::string> corpus_names();

}  // namespace lq
