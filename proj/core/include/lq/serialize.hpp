#pragma once

#include <map>
#include <string>

#include "lq/algebra.hpp"
#include "lq/bimodule.hpp"
#include "lq/linalg.hpp"

namespace lq {

/// Thrown on malformed input files; message carries field-level context.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// On-disk document: an algebra plus optional named matrices. JSON with
/// every scalar a rational string "p" or "p/q". Unknown fields are
/// rejected. See README for the schema.
struct AlgebraFile {
    static constexpr const char* format_tag = "lq-algebra/1";

    MultiAlgebra algebra;
    std::map<std::string, Mat> maps;     // square, dim x dim
    std::map<std::string, Mat> forms;    // square, dim x dim
    std::map<std::string, Mat> tensors;  // square, dim x dim
    std::string provenance;              // optional free text

    std::string dump() const;
    static AlgebraFile parse(const std::string& text);

    const Mat& named(const std::map<std::string, Mat>& table, const std::string& name,
                     const char* what) const;
};

/// On-disk document for a bimodule over an inline base algebra.
struct BimoduleFile {
    static constexpr const char* format_tag = "lq-bimodule/1";

    Bimodule bimodule;
    std::map<std::string, Mat> maps;  // base.dim x module_dim candidates

    std::string dump() const;
    static BimoduleFile parse(const std::string& text);
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace lq
