#include "lq/serialize.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace lq {

namespace {

using json = nlohmann::ordered_json;

json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(rat_str(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat mat_from_json(const json& rows, const std::string& where) {
    if (!rows.is_array() || rows.empty())
        throw FormatError(where + ": expected a non-empty array of rows");
    int nr = int(rows.size());
    int nc = int(rows.at(0).size());
    Mat m(nr, nc);
    for (int r = 0; r < nr; ++r) {
        const json& row = rows.at(size_t(r));
        if (!row.is_array() || int(row.size()) != nc)
            throw FormatError(where + ": ragged matrix rows");
        for (int c = 0; c < nc; ++c) {
            const json& cell = row.at(size_t(c));
            if (!cell.is_string())
                throw FormatError(where + ": entries must be rational strings");
            try {
                m.at(r, c) = parse_rat(cell.get<std::string>());
            } catch (const std::exception& e) {
                throw FormatError(where + "[" + std::to_string(r) + "][" + std::to_string(c) +
                                  "]: " + e.what());
            }
        }
    }
    return m;
}

json op_to_json(const OpTensor& t) {
    json planes = json::array();
    for (int i = 0; i < t.dim(); ++i) {
        json plane = json::array();
        for (int j = 0; j < t.dim(); ++j) {
            json row = json::array();
            for (int k = 0; k < t.dim(); ++k) row.push_back(rat_str(t.at(i, j, k)));
            plane.push_back(std::move(row));
        }
        planes.push_back(std::move(plane));
    }
    return planes;
}

OpTensor op_from_json(const json& planes, int dim, const std::string& where) {
    if (!planes.is_array() || int(planes.size()) != dim)
        throw FormatError(where + ": expected " + std::to_string(dim) + " coefficient planes");
    OpTensor t(dim);
    for (int i = 0; i < dim; ++i) {
        const json& plane = planes.at(size_t(i));
        if (!plane.is_array() || int(plane.size()) != dim)
            throw FormatError(where + ": plane " + std::to_string(i) + " has wrong size");
        for (int j = 0; j < dim; ++j) {
            const json& row = plane.at(size_t(j));
            if (!row.is_array() || int(row.size()) != dim)
                throw FormatError(where + ": row (" + std::to_string(i) + "," +
                                  std::to_string(j) + ") has wrong size");
            for (int k = 0; k < dim; ++k) {
                const json& cell = row.at(size_t(k));
                if (!cell.is_string())
                    throw FormatError(where + ": entries must be rational strings");
                try {
                    t.at(i, j, k) = parse_rat(cell.get<std::string>());
                } catch (const std::exception& e) {
                    throw FormatError(where + "(" + std::to_string(i) + "," + std::to_string(j) +
                                      "," + std::to_string(k) + "): " + e.what());
                }
            }
        }
    }
    return t;
}

void reject_unknown_fields(const json& doc, const std::set<std::string>& known,
                           const std::string& where) {
    for (const auto& [key, value] : doc.items())
        if (!known.count(key)) throw FormatError(where + ": unknown field '" + key + "'");
}

json named_mats_to_json(const std::map<std::string, Mat>& table) {
    json out = json::object();
    for (const auto& [name, m] : table) out[name] = mat_to_json(m);
    return out;
}

std::map<std::string, Mat> named_mats_from_json(const json& doc, const std::string& where) {
    std::map<std::string, Mat> out;
    if (!doc.is_object()) throw FormatError(where + ": expected an object");
    for (const auto& [name, value] : doc.items())
        out.emplace(name, mat_from_json(value, where + "." + name));
    return out;
}

}  // namespace

std::string AlgebraFile::dump() const {
    algebra.validate_shape();
    json doc;
    doc["format"] = format_tag;
    doc["dim"] = algebra.dim;
    doc["kind"] = kind_name(algebra.kind);
    json ops = json::object();
    for (const std::string& name : algebra.op_names()) ops[name] = op_to_json(algebra.op(name));
    doc["ops"] = std::move(ops);
    if (!maps.empty()) doc["maps"] = named_mats_to_json(maps);
    if (!forms.empty()) doc["forms"] = named_mats_to_json(forms);
    if (!tensors.empty()) doc["tensors"] = named_mats_to_json(tensors);
    if (!provenance.empty()) doc["provenance"] = provenance;
    return doc.dump(2) + "\n";
}

AlgebraFile AlgebraFile::parse(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const std::exception& e) {
        throw FormatError(std::string("not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw FormatError("top level must be an object");
    reject_unknown_fields(doc, {"format", "dim", "kind", "ops", "maps", "forms", "tensors",
                                "provenance"},
                          "document");
    for (const char* field : {"format", "dim", "kind", "ops"})
        if (!doc.contains(field))
            throw FormatError(std::string("missing required field '") + field + "'");
    if (doc.at("format").get<std::string>() != format_tag)
        throw FormatError("unsupported format tag '" + doc.at("format").get<std::string>() + "'");

    AlgebraFile file;
    if (!doc.at("dim").is_number_integer() || doc.at("dim").get<int>() < 0)
        throw FormatError("dim must be a non-negative integer");
    file.algebra.dim = doc.at("dim").get<int>();
    try {
        file.algebra.kind = parse_kind(doc.at("kind").get<std::string>());
    } catch (const std::exception& e) {
        throw FormatError(e.what());
    }
    if (!doc.at("ops").is_object()) throw FormatError("ops must be an object");
    for (const auto& [name, value] : doc.at("ops").items())
        file.algebra.ops.emplace(name, op_from_json(value, file.algebra.dim, "ops." + name));
    try {
        file.algebra.validate_shape();
    } catch (const std::exception& e) {
        throw FormatError(e.what());
    }
    auto check_square = [&](std::map<std::string, Mat>& table, const char* what) {
        for (const auto& [name, m] : table)
            if (m.rows() != file.algebra.dim || m.cols() != file.algebra.dim)
                throw FormatError(std::string(what) + "." + name + ": expected a " +
                                  std::to_string(file.algebra.dim) + "x" +
                                  std::to_string(file.algebra.dim) + " matrix");
    };
    if (doc.contains("maps")) {
        file.maps = named_mats_from_json(doc.at("maps"), "maps");
        check_square(file.maps, "maps");
    }
    if (doc.contains("forms")) {
        file.forms = named_mats_from_json(doc.at("forms"), "forms");
        check_square(file.forms, "forms");
    }
    if (doc.contains("tensors")) {
        file.tensors = named_mats_from_json(doc.at("tensors"), "tensors");
        check_square(file.tensors, "tensors");
    }
    if (doc.contains("provenance")) {
        if (!doc.at("provenance").is_string()) throw FormatError("provenance must be a string");
        file.provenance = doc.at("provenance").get<std::string>();
    }
    return file;
}

const Mat& AlgebraFile::named(const std::map<std::string, Mat>& table, const std::string& name,
                              const char* what) const {
    auto it = table.find(name);
    if (it == table.end())
        throw FormatError(std::string("no ") + what + " named '" + name + "' in the file");
    return it->second;
}

std::string BimoduleFile::dump() const {
    bimodule.validate_shape();
    json doc;
    doc["format"] = format_tag;
    doc["shape"] = bimodule_shape_name(bimodule.shape);
    doc["module_dim"] = bimodule.module_dim;
    {
        AlgebraFile base;
        base.algebra = bimodule.base;
        doc["base"] = json::parse(base.dump());
    }
    json actions = json::object();
    for (const auto& name : bimodule_actions(bimodule.shape)) {
        const ActionTensor& a = bimodule.action(name);
        json planes = json::array();
        for (int x = 0; x < a.base_dim(); ++x) {
            json plane = json::array();
            for (int vin = 0; vin < a.module_dim(); ++vin) {
                json row = json::array();
                for (int vout = 0; vout < a.module_dim(); ++vout)
                    row.push_back(rat_str(a.at(x, vin, vout)));
                plane.push_back(std::move(row));
            }
            planes.push_back(std::move(plane));
        }
        actions[name] = std::move(planes);
    }
    doc["actions"] = std::move(actions);
    if (!maps.empty()) {
        json ms = json::object();
        for (const auto& [name, m] : maps) ms[name] = mat_to_json(m);
        doc["maps"] = std::move(ms);
    }
    return doc.dump(2) + "\n";
}

BimoduleFile BimoduleFile::parse(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const std::exception& e) {
        throw FormatError(std::string("not valid JSON: ") + e.what());
    }
    reject_unknown_fields(doc, {"format", "shape", "module_dim", "base", "actions", "maps"},
                          "document");
    for (const char* field : {"format", "shape", "module_dim", "base", "actions"})
        if (!doc.contains(field))
            throw FormatError(std::string("missing required field '") + field + "'");
    if (doc.at("format").get<std::string>() != format_tag)
        throw FormatError("unsupported format tag '" + doc.at("format").get<std::string>() + "'");

    BimoduleFile file;
    try {
        file.bimodule.shape = parse_bimodule_shape(doc.at("shape").get<std::string>());
    } catch (const std::exception& e) {
        throw FormatError(e.what());
    }
    file.bimodule.module_dim = doc.at("module_dim").get<int>();
    file.bimodule.base = AlgebraFile::parse(doc.at("base").dump()).algebra;
    const int m = file.bimodule.module_dim;
    for (const auto& [name, planes] : doc.at("actions").items()) {
        if (!planes.is_array() || int(planes.size()) != file.bimodule.base.dim)
            throw FormatError("actions." + name + ": expected one plane per base basis vector");
        ActionTensor a(file.bimodule.base.dim, m);
        for (int x = 0; x < file.bimodule.base.dim; ++x) {
            Mat plane = mat_from_json(planes.at(size_t(x)),
                                      "actions." + name + "[" + std::to_string(x) + "]");
            if (plane.rows() != m || plane.cols() != m)
                throw FormatError("actions." + name + ": plane " + std::to_string(x) +
                                  " must be module_dim x module_dim");
            for (int vin = 0; vin < m; ++vin)
                for (int vout = 0; vout < m; ++vout) a.at(x, vin, vout) = plane.at(vin, vout);
        }
        file.bimodule.actions.emplace(name, std::move(a));
    }
    try {
        file.bimodule.validate_shape();
    } catch (const std::exception& e) {
        throw FormatError(e.what());
    }
    if (doc.contains("maps")) {
        for (const auto& [name, value] : doc.at("maps").items()) {
            Mat mat = mat_from_json(value, "maps." + name);
            if (mat.rows() != file.bimodule.base.dim || mat.cols() != m)
                throw FormatError("maps." + name + ": expected base.dim x module_dim");
            file.maps.emplace(name, std::move(mat));
        }
    }
    return file;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write '" + path + "'");
    out << text;
}

}  // namespace lq
