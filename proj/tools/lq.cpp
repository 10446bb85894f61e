// Batch front end: verification, derived structures, constructions and
// tensor/form checks over algebra files. Exit codes: 0 = verified/holds,
// 1 = verified false (witnesses on stdout), 2 = usage or format error.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lq/axioms.hpp"
#include "lq/corpus.hpp"
#include "lq/derived.hpp"
#include "lq/ooperator.hpp"
#include "lq/serialize.hpp"
#include "lq/yang_baxter.hpp"

namespace {

using namespace lq;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;

AlgebraFile load_algebra(const std::string& spec) {
    if (spec.rfind("corpus:", 0) == 0) return corpus_entry(spec.substr(7)).file;
    return AlgebraFile::parse(read_file(spec));
}

void emit(const AlgebraFile& file, const std::string& out_path) {
    if (out_path.empty())
        std::cout << file.dump();
    else
        std::cout << "wrote " << out_path << "\n", write_file(out_path, file.dump());
}

int report_exit(const VerificationReport& report) {
    std::cout << report.str() << "\n";
    return report.holds ? kExitHolds : kExitFails;
}

int run_verify(const std::string& path, const std::string& as) {
    AlgebraFile file = load_algebra(path);
    SystemId id = as.empty() ? system_for_kind(file.algebra.kind) : parse_system(as);
    const AxiomSystem& system = builtin_system(id);
    std::cout << "system: " << system.name << " (" << system.identities.size() << " identities";
    if (!system.pair_identities.empty())
        std::cout << " + " << system.pair_identities.size() << " pair identities";
    std::cout << ")\n";
    return report_exit(verify(file.algebra, system));
}

int run_derive(const std::string& path, const std::string& functor, const std::string& flavor,
               const std::string& out) {
    AlgebraFile file = load_algebra(path);
    const MultiAlgebra& a = file.algebra;
    MultiAlgebra result;
    auto need = [&](std::initializer_list<const char*> allowed) {
        for (const char* opt : allowed)
            if (flavor == opt) return;
        std::string msg = "functor '" + functor + "' needs --flavor from {";
        for (const char* opt : allowed) msg += std::string(opt) + " ";
        throw CLI::ValidationError(msg + "}");
    };
    if (functor == "commutator_lie") {
        result = commutator_lie(a);
    } else if (functor == "ldend_to_prelie") {
        need({"horizontal", "vertical"});
        result = ldend_to_prelie(
            a, flavor == "horizontal" ? PreLieFlavor::horizontal : PreLieFlavor::vertical);
    } else if (functor == "lquadri_to_ldend") {
        need({"horizontal", "vertical", "depth"});
        result = lquadri_to_ldend(a, flavor == "horizontal" ? LdendFlavor::horizontal
                                     : flavor == "vertical" ? LdendFlavor::vertical
                                                            : LdendFlavor::depth);
    } else if (functor == "lquadri_to_prelie") {
        need({"circ", "star", "bullet"});
        result = lquadri_to_prelie(a, flavor == "circ"   ? PreLieOfQuad::circ
                                      : flavor == "star" ? PreLieOfQuad::star
                                                         : PreLieOfQuad::bullet);
    } else if (functor == "subadjacent_lie") {
        result = subadjacent_lie(a);
    } else if (functor == "transpose") {
        result = transpose_lquadri(a);
    } else if (functor == "symmetry") {
        need({"a", "b", "c", "d"});
        result = symmetry_lquadri(a, flavor == "a"   ? SymWhich::a
                                     : flavor == "b" ? SymWhich::b
                                     : flavor == "c" ? SymWhich::c
                                                     : SymWhich::d);
    } else if (functor == "octo_project") {
        need({"depth", "vertical", "sum", "mixed"});
        result = octo_project(a, flavor == "depth"      ? OctoProjection::depth
                                 : flavor == "vertical" ? OctoProjection::vertical
                                 : flavor == "sum"      ? OctoProjection::sum
                                                        : OctoProjection::mixed);
    } else {
        throw CLI::ValidationError("unknown functor '" + functor + "'");
    }
    AlgebraFile out_file;
    out_file.algebra = result;
    out_file.provenance = functor + (flavor.empty() ? "" : "(" + flavor + ")") + " of " + path;
    emit(out_file, out);
    return kExitHolds;
}

std::vector<Mat> named_maps(const AlgebraFile& file, const std::string& csv) {
    std::vector<Mat> maps;
    std::string rest = csv;
    while (!rest.empty()) {
        auto comma = rest.find(',');
        std::string name = rest.substr(0, comma);
        rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
        maps.push_back(file.named(file.maps, name, "map"));
    }
    return maps;
}

int run_rb_tower(const std::string& path, const std::string& maps_csv, const std::string& out) {
    AlgebraFile file = load_algebra(path);
    std::vector<Mat> rs = named_maps(file, maps_csv);
    for (size_t i = 0; i < rs.size(); ++i) {
        VerificationReport r = check_rota_baxter(file.algebra, rs[i]);
        if (!r.holds) {
            std::cout << "map " << i + 1 << " is not a Rota-Baxter map\n";
            return report_exit(r);
        }
    }
    for (size_t i = 0; i < rs.size(); ++i)
        for (size_t j = i + 1; j < rs.size(); ++j)
            if (!(rs[i] * rs[j] == rs[j] * rs[i])) {
                std::cout << "maps " << i + 1 << " and " << j + 1 << " do not commute\n";
                return kExitFails;
            }
    AlgebraFile out_file;
    out_file.algebra = rb_tower(file.algebra, rs, false);
    out_file.provenance = "rb-tower over " + path + " with maps " + maps_csv;
    emit(out_file, out);
    return kExitHolds;
}

int run_induce(const std::string& path, const std::string& bimodule_path,
               const std::string& map_name, const std::string& out) {
    AlgebraFile file = load_algebra(path);
    BimoduleFile bf = BimoduleFile::parse(read_file(bimodule_path));
    if (!(bf.bimodule.base.ops == file.algebra.ops) || bf.bimodule.base.dim != file.algebra.dim)
        throw FormatError("bimodule base does not match the algebra file");
    auto it = bf.maps.find(map_name);
    if (it == bf.maps.end())
        throw FormatError("no map named '" + map_name + "' in the bimodule file");
    OOperator op{it->second, bf.bimodule};
    VerificationReport r = check_o_operator(op);
    if (!r.holds) {
        std::cout << "map '" << map_name << "' fails the operator check\n";
        return report_exit(r);
    }
    AlgebraFile out_file;
    out_file.algebra = induce(op, false);
    out_file.provenance = "structure induced on the module by '" + map_name + "'";
    emit(out_file, out);
    return kExitHolds;
}

int run_cocycle_lift(const std::string& path, const std::string& form_name,
                     const std::string& out) {
    AlgebraFile file = load_algebra(path);
    BilinearForm B(file.named(file.forms, form_name, "form"));
    if (!B.is_skew() || !B.nondegenerate()) {
        std::cout << "form '" << form_name << "' must be skew and nondegenerate (symmetry: "
                  << symmetry_name(B.symmetry()) << ", det "
                  << (B.nondegenerate() ? "nonzero" : "zero") << ")\n";
        return kExitFails;
    }
    VerificationReport cocycle = check_cocycle_ldend(file.algebra, B);
    if (!cocycle.holds) {
        std::cout << "form '" << form_name << "' is not a 2-cocycle\n";
        return report_exit(cocycle);
    }
    CocycleLift lift = lift_via_cocycle(file.algebra, B, NwSign::plus, false);
    AlgebraFile out_file;
    out_file.algebra = lift.lquadri;
    out_file.forms.emplace("B", B.gram());
    out_file.provenance = "cocycle lift of " + path + " along form '" + form_name + "'";
    emit(out_file, out);
    return kExitHolds;
}

int run_central_ext(const std::string& path, const std::string& form_name,
                    const std::string& out) {
    AlgebraFile file = load_algebra(path);
    CentralExtension ce = central_extension(file.algebra, file.named(file.forms, form_name, "form"));
    std::cout << "extension conditions:\n" << ce.conditions.str() << "\n";
    std::cout << "extension axioms:\n" << ce.extension_axioms.str() << "\n";
    if (!ce.conditions.holds || !ce.extension_axioms.holds) return kExitFails;
    AlgebraFile out_file;
    out_file.algebra = ce.extended;
    out_file.provenance = "one-dimensional central extension of " + path + " along '" +
                          form_name + "'; the new coordinate is last";
    emit(out_file, out);
    return kExitHolds;
}

int run_canonical_r(const std::string& path, int ambient, const std::string& out) {
    AlgebraFile file = load_algebra(path);
    if (ambient < 1 || ambient > 3) throw CLI::ValidationError("--ambient must be 1, 2 or 3");
    CanonicalAmbient amb = canonical_r(file.algebra)[size_t(ambient - 1)];
    AlgebraFile out_file;
    out_file.algebra = amb.algebra;
    out_file.tensors.emplace("r", amb.r.entries);
    out_file.forms.emplace("B", amb.form.gram());
    static const char* kNames[3] = {"horizontal", "vertical", "depth"};
    out_file.provenance = std::string("doubled algebra of ") + path + " over the dual " +
                          kNames[ambient - 1] +
                          " multiplication bimodule, with the canonical skew tensor r and its "
                          "induced form B";
    emit(out_file, out);
    return kExitHolds;
}

int run_check_r(const std::string& path, const std::string& tensor_name,
                const std::string& equation) {
    AlgebraFile file = load_algebra(path);
    TensorPair r{file.named(file.tensors, tensor_name, "tensor")};
    if (equation == "cybe") return report_exit(check_cybe(file.algebra, r));
    if (equation == "ld") return report_exit(check_ld_equation(file.algebra, r));
    if (equation == "lq") return report_exit(check_lq_equation(file.algebra, r));
    throw CLI::ValidationError("--equation must be cybe, ld or lq");
}

int run_check_form(const std::string& path, const std::string& form_name,
                   const std::string& condition) {
    AlgebraFile file = load_algebra(path);
    BilinearForm B(file.named(file.forms, form_name, "form"));
    const MultiAlgebra& a = file.algebra;
    if (condition == "cocycle") {
        if (a.has_op("se")) return report_exit(check_cocycle_lquadri(a, B));
        return report_exit(check_cocycle_ldend(a, B));
    }
    if (condition == "invariant") return report_exit(check_invariant_lquadri(a, B));
    throw CLI::ValidationError("--condition must be cocycle or invariant");
}

int run_search_rb(const std::string& path, const std::string& entries_csv, long cap,
                  bool diagonal, long max_results) {
    AlgebraFile file = load_algebra(path);
    RBSearchOptions opts;
    opts.cap = cap;
    opts.diagonal_only = diagonal;
    opts.max_results = max_results;
    if (!entries_csv.empty()) {
        opts.entries.clear();
        std::string rest = entries_csv;
        while (!rest.empty()) {
            auto comma = rest.find(',');
            opts.entries.push_back(parse_rat(rest.substr(0, comma)));
            rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
        }
    }
    std::vector<Mat> found = search_rb(file.algebra, opts);
    std::cout << "found " << found.size() << " Rota-Baxter maps\n";
    for (const Mat& m : found) std::cout << m.str() << "\n";
    return kExitHolds;
}

int run_corpus_list() {
    for (const auto& e : corpus())
        std::cout << e.name << "  dim " << e.file.algebra.dim << "  "
                  << kind_name(e.file.algebra.kind) << "\n";
    return kExitHolds;
}

int run_corpus_show(const std::string& name) {
    const CorpusEntry& e = corpus_entry(name);
    std::cout << "name: " << e.name << "\n";
    std::cout << "provenance: " << e.file.provenance << "\n";
    std::cout << e.file.dump();
    return kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification and construction for layered Loday-type algebras"};
    app.require_subcommand(1);

    std::string path, as_kind, functor, flavor, out, maps_csv, bimodule_path, map_name;
    std::string form_name, tensor_name, equation, condition, entries_csv, corpus_name;
    int ambient = 1;
    long cap = 1'000'000, max_results = -1;
    bool diagonal = false;

    auto* verify_cmd = app.add_subcommand("verify", "decide an axiom system");
    verify_cmd->add_option("file", path)->required();
    verify_cmd->add_option("--as", as_kind, "system to check instead of the declared kind");

    auto* derive_cmd = app.add_subcommand("derive", "apply a derived-structure functor");
    derive_cmd->add_option("file", path)->required();
    derive_cmd->add_option("--functor", functor)->required();
    derive_cmd->add_option("--flavor,--which", flavor);
    derive_cmd->add_option("-o,--out", out);

    auto* construct = app.add_subcommand("construct", "build a new structure");
    construct->require_subcommand(1);
    auto* rb = construct->add_subcommand("rb-tower", "climb with commuting Rota-Baxter maps");
    rb->add_option("file", path)->required();
    rb->add_option("--maps", maps_csv)->required();
    rb->add_option("-o,--out", out);
    auto* ind = construct->add_subcommand("induce", "structure induced by an operator");
    ind->add_option("file", path)->required();
    ind->add_option("--bimodule", bimodule_path)->required();
    ind->add_option("--map", map_name)->required();
    ind->add_option("-o,--out", out);
    auto* lift = construct->add_subcommand("cocycle-lift", "lift along a skew 2-cocycle");
    lift->add_option("file", path)->required();
    lift->add_option("--form", form_name)->required();
    lift->add_option("-o,--out", out);
    auto* ce = construct->add_subcommand("central-ext", "one-dimensional central extension");
    ce->add_option("file", path)->required();
    ce->add_option("--form", form_name)->required();
    ce->add_option("-o,--out", out);
    auto* canon = construct->add_subcommand("canonical-r", "doubled algebra with canonical tensor");
    canon->add_option("file", path)->required();
    canon->add_option("--ambient", ambient, "1 horizontal, 2 vertical, 3 depth");
    canon->add_option("-o,--out", out);

    auto* checkr = app.add_subcommand("check-r", "tensor equation check");
    checkr->add_option("file", path)->required();
    checkr->add_option("--tensor", tensor_name)->required();
    checkr->add_option("--equation", equation)->required();

    auto* checkf = app.add_subcommand("check-form", "bilinear form condition check");
    checkf->add_option("file", path)->required();
    checkf->add_option("--form", form_name)->required();
    checkf->add_option("--condition", condition)->required();

    auto* search = app.add_subcommand("search-rb", "enumerate Rota-Baxter maps");
    search->add_option("file", path)->required();
    search->add_option("--entries", entries_csv, "comma-separated entry set (default -1,0,1)");
    search->add_option("--cap", cap, "refuse larger search spaces");
    search->add_flag("--diagonal", diagonal, "diagonal matrices only");
    search->add_option("--max", max_results, "stop after this many results");

    auto* corpus_cmd = app.add_subcommand("corpus", "bundled examples");
    corpus_cmd->require_subcommand(1);
    corpus_cmd->add_subcommand("list", "list names");
    auto* show = corpus_cmd->add_subcommand("show", "print one example");
    show->add_option("name", corpus_name)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*verify_cmd) return run_verify(path, as_kind);
        if (*derive_cmd) return run_derive(path, functor, flavor, out);
        if (*rb) return run_rb_tower(path, maps_csv, out);
        if (*ind) return run_induce(path, bimodule_path, map_name, out);
        if (*lift) return run_cocycle_lift(path, form_name, out);
        if (*ce) return run_central_ext(path, form_name, out);
        if (*canon) return run_canonical_r(path, ambient, out);
        if (*checkr) return run_check_r(path, tensor_name, equation);
        if (*checkf) return run_check_form(path, form_name, condition);
        if (*search) return run_search_rb(path, entries_csv, cap, diagonal, max_results);
        if (*corpus_cmd) {
            if (corpus_cmd->get_subcommand("show")->parsed()) return run_corpus_show(corpus_name);
            return run_corpus_list();
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
