#include "pbck/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pbck/algebra.hpp"
#include "pbck/axioms.hpp"
#include "pbck/commutativity.hpp"
#include "pbck/deduction.hpp"
#include "pbck/error.hpp"
#include "pbck/hoops.hpp"
#include "pbck/io.hpp"
#include "pbck/morphisms.hpp"
#include "pbck/search.hpp"
#include "pbck/states.hpp"

namespace pbck {
namespace {

using nlohmann::json;

int exit_code_for(errc code) {
    switch (code) {
        case errc::parse_error:
        case errc::invalid_structure:
        case errc::invalid_point:
        case errc::size_limit:
        case errc::budget_exceeded:
            return 2;
        default:
            return 1;
    }
}

std::vector<std::string> witness_names(const finite_algebra& a, const std::vector<element>& w) {
    std::vector<std::string> out;
    out.reserve(w.size());
    for (element x : w) out.push_back(a.name_of(x));
    return out;
}

json json_clauses(const finite_algebra& a, const check_report& rep) {
    json arr = json::array();
    for (const auto& c : rep.clauses) {
        json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        if (!c.pass) {
            jc["detail"] = c.detail;
            json ws = json::array();
            for (const auto& w : c.witnesses) ws.push_back(witness_names(a, w));
            jc["witnesses"] = ws;
        }
        arr.push_back(jc);
    }
    return arr;
}

json json_report(const finite_algebra& a, const check_report& rep) {
    json j;
    j["suite"] = rep.suite;
    j["pass"] = rep.pass();
    j["clauses"] = json_clauses(a, rep);
    return j;
}

json json_algebra(const finite_algebra& a) {
    const int n = a.size();
    json j;
    j["size"] = n;
    json names = json::array();
    for (element x = 0; x < n; ++x) names.push_back(a.name_of(x));
    j["elements"] = names;
    j["top"] = a.name_of(a.top());
    json ar = json::array();
    json sq = json::array();
    for (element x = 0; x < n; ++x) {
        json r1 = json::array();
        json r2 = json::array();
        for (element y = 0; y < n; ++y) {
            r1.push_back(a.name_of(a.arrow(x, y)));
            r2.push_back(a.name_of(a.squiggle(x, y)));
        }
        ar.push_back(r1);
        sq.push_back(r2);
    }
    j["arrow"] = ar;
    j["squiggle"] = sq;
    return j;
}

json json_subset(const finite_algebra& a, subset s) {
    json arr = json::array();
    for (element x : s.members(a.size())) arr.push_back(a.name_of(x));
    return arr;
}

json json_map(const finite_algebra& a, const unary_map& mu) {
    json arr = json::array();
    for (element x = 0; x < a.size(); ++x) arr.push_back(a.name_of(mu(x)));
    return arr;
}

void emit(std::ostream& out, bool as_json, const json& j, const std::string& text) {
    if (as_json)
        out << j.dump(2) << "\n";
    else
        out << text;
}

subset parse_element_list(const finite_algebra& a, const std::string& csv) {
    subset s{};
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        const auto e = item.find_last_not_of(" \t");
        const auto x = a.element_named(item.substr(b, e - b + 1));
        if (!x)
            throw error(errc::invalid_point, "unknown element '" + item.substr(b, e - b + 1) + "'");
        s = s.with(*x);
    }
    return s;
}

axiom_system system_named(const std::string& name) {
    if (name == "relational") return axiom_system::relational;
    if (name == "equational") return axiom_system::equational;
    if (name == "pseudo-bci") return axiom_system::pseudo_bci;
    return axiom_system::pseudo_be;
}

// ---- subcommand bodies ------------------------------------------------

int run_check(std::ostream& out, bool as_json, const std::string& path, const std::string& system) {
    const auto file = load_algebra(path);
    const auto& a = file.algebra;
    const auto rep = check_axiom_system(a, system_named(system), witness_mode::first);
    json j = json_report(a, rep);
    j["command"] = "check";
    j["system"] = system;
    emit(out, as_json, j, to_text(rep));
    return rep.pass() ? 0 : 1;
}

int run_classify(std::ostream& out, bool as_json, const std::string& path) {
    static constexpr commutativity_method methods[] = {
        commutativity_method::def,          commutativity_method::one_sided,
        commutativity_method::yutani_kuhr,  commutativity_method::kuhr_k,
        commutativity_method::palasinski_p, commutativity_method::cornish_c,
        commutativity_method::char_b,       commutativity_method::char_c,
        commutativity_method::char_d,
    };
    const auto file = load_algebra(path);
    const auto& a = file.algebra;
    const bool pbck = is_pbck(a);
    bool all_pass = pbck;
    json jm = json::array();
    std::string text;
    text += std::string("equational: ") + (pbck ? "PASS" : "FAIL") + "\n";
    for (const auto m : methods) {
        json entry;
        entry["method"] = method_name(m);
        if (!pbck && method_needs_pbck(m)) {
            entry["applicable"] = false;
            text += std::string(method_name(m)) + ": n/a (requires the equational axioms)\n";
        } else {
            const auto rep = check_commutative(a, m, witness_mode::first);
            entry["applicable"] = true;
            entry["report"] = json_report(a, rep);
            all_pass = all_pass && rep.pass();
            text += std::string(method_name(m)) + ": " + (rep.pass() ? "PASS" : "FAIL") + "\n";
            if (!rep.pass()) {
                for (const auto& c : rep.clauses)
                    if (!c.pass) {
                        text += "  " + c.name + ": " + c.detail + "\n";
                        break;
                    }
            }
        }
        jm.push_back(entry);
    }
    json j;
    j["command"] = "classify";
    j["pbck"] = pbck;
    j["methods"] = jm;
    j["pass"] = all_pass;
    emit(out, as_json, j, text);
    return all_pass ? 0 : 1;
}

int run_ds(std::ostream& out, bool as_json, const std::string& path, bool normal, bool commutative,
           const std::string& generated) {
    const auto file = load_algebra(path);
    const auto& a = file.algebra;
    json j;
    j["command"] = "ds";
    std::string text;
    if (!generated.empty()) {
        const auto seed = parse_element_list(a, generated);
        const auto d = generated_ds(a, seed);
        j["generated"] = json_subset(a, d);
        text = subset_to_string(a, d) + "\n";
    } else {
        auto filter = ds_filter::all;
        if (normal) filter = ds_filter::normal;
        if (commutative) filter = ds_filter::commutative;
        const auto systems = enumerate_ds(a, filter);
        json arr = json::array();
        for (const auto& d : systems) {
            arr.push_back(json_subset(a, d));
            text += subset_to_string(a, d) + "\n";
        }
        j["systems"] = arr;
        j["count"] = systems.size();
        text += "total: " + std::to_string(systems.size()) + "\n";
    }
    emit(out, as_json, j, text);
    return 0;
}

int run_quotient(std::ostream& out, bool as_json, const std::string& path, const std::string& ds_csv) {
    const auto file = load_algebra(path);
    const auto& a = file.algebra;
    const auto h = parse_element_list(a, ds_csv);
    const auto q = quotient(a, h);
    json j;
    j["command"] = "quotient";
    j["algebra"] = json_algebra(q.algebra);
    json proj;
    for (element x = 0; x < a.size(); ++x) proj[a.name_of(x)] = q.algebra.name_of(q.projection[x]);
    j["projection"] = proj;
    json blocks = json::array();
    for (const auto& b : q.blocks) blocks.push_back(json_subset(a, b));
    j["blocks"] = blocks;
    std::string text = serialize_algebra(q.algebra);
    text += "# projection\n";
    for (element x = 0; x < a.size(); ++x)
        text += "#   " + a.name_of(x) + " -> " + q.algebra.name_of(q.projection[x]) + "\n";
    emit(out, as_json, j, text);
    return 0;
}

int run_states(std::ostream& out, bool as_json, const std::string& path, const std::string& map_path,
               bool enumerate, const std::string& kind, long long budget) {
    const auto file = load_algebra(path);
    const auto& a = file.algebra;
    json j;
    j["command"] = "states";
    if (!map_path.empty()) {
        const auto mu = load_map(a, map_path);
        if (!kind.empty()) {
            check_report rep;
            if (kind == "sm") {
                const auto m = is_state_morphism(a, mu, witness_mode::first);
                rep = m.detail;
            } else {
                rep = check_state(a, mu, kind == "type1" ? state_kind::type1 : state_kind::type2,
                                  witness_mode::first);
            }
            j["map"] = json_map(a, mu);
            j["kind"] = kind;
            j["report"] = json_report(a, rep);
            emit(out, as_json, j, to_text(rep));
            return rep.pass() ? 0 : 1;
        }
        const auto cls = classify_map(a, mu);
        const auto m = is_state_morphism(a, mu, witness_mode::first);
        j["map"] = json_map(a, mu);
        j["type1"] = cls.is_type1;
        j["type2"] = cls.is_type2;
        j["normal_type1"] = cls.is_normal1;
        j["normal_type2"] = cls.is_normal2;
        j["state_morphism"] = m.is_sm;
        if (cls.satisfies_is4) j["is4"] = *cls.satisfies_is4;
        j["kernel"] = json_subset(a, cls.kernel);
        j["image"] = json_subset(a, cls.image_set);
        std::string text;
        auto yn = [](bool b) { return b ? "yes" : "no"; };
        text += std::string("type1: ") + yn(cls.is_type1) + "\n";
        text += std::string("type2: ") + yn(cls.is_type2) + "\n";
        text += std::string("normal type1: ") + yn(cls.is_normal1) + "\n";
        text += std::string("normal type2: ") + yn(cls.is_normal2) + "\n";
        text += std::string("state morphism: ") + yn(m.is_sm) + "\n";
        if (cls.satisfies_is4)
            text += std::string("IS4: ") + yn(*cls.satisfies_is4) + "\n";
        else
            text += "IS4: n/a (no meet semilattice order)\n";
        text += "kernel: " + subset_to_string(a, cls.kernel) + "\n";
        text += "image: " + subset_to_string(a, cls.image_set) + "\n";
        emit(out, as_json, j, text);
        return 0;
    }
    // enumeration is the default action when no map is supplied.
    (void)enumerate;
    map_kind mk = map_kind::type1;
    if (kind == "type2") mk = map_kind::type2;
    if (kind == "sm") mk = map_kind::morphism;
    const auto maps = enumerate_states(a, mk, budget);
    json arr = json::array();
    std::string text;
    for (const auto& mu : maps) {
        arr.push_back(json_map(a, mu));
        std::string row;
        for (element x = 0; x < a.size(); ++x) {
            if (x) row += ' ';
            row += a.name_of(mu(x));
        }
        text += row + "\n";
    }
    j["kind"] = kind.empty() ? "type1" : kind;
    j["maps"] = arr;
    j["count"] = maps.size();
    text += "total: " + std::to_string(maps.size()) + "\n";
    emit(out, as_json, j, text);
    return 0;
}

int run_measure(std::ostream& out, bool as_json, const std::string& path, const std::string& m_path) {
    const auto file = load_algebra(path);
    const auto& a = file.algebra;
    const auto m = load_measure(a, m_path);
    std::vector<element> violation;
    json j;
    j["command"] = "measure";
    if (!is_measure(a, m, &violation)) {
        j["measure"] = false;
        j["witness"] = witness_names(a, violation);
        std::string text = "not a measure: violation at (" + a.name_of(violation[0]) + ", " +
                           a.name_of(violation[1]) + ")\n";
        emit(out, as_json, j, text);
        return 1;
    }
    const auto ker = measure_kernel(a, m);
    const auto cls = classify_subset(a, ker);
    const auto q = quotient(a, ker);
    j["measure"] = true;
    j["kernel"] = json_subset(a, ker);
    j["kernel_normal"] = cls.is_normal;
    j["kernel_commutative"] = cls.is_commutative;
    j["quotient_size"] = q.algebra.size();
    j["quotient_commutative"] = is_commutative(q.algebra);
    std::string text;
    text += "measure: yes\n";
    text += "kernel: " + subset_to_string(a, ker) + "\n";
    text += std::string("kernel normal: ") + (cls.is_normal ? "yes" : "no") + "\n";
    text += std::string("kernel commutative: ") + (cls.is_commutative ? "yes" : "no") + "\n";
    text += "quotient size: " + std::to_string(q.algebra.size()) + "\n";
    emit(out, as_json, j, text);
    return 0;
}

int run_hoop(std::ostream& out, bool as_json, const std::string& path, const std::string& level_str) {
    const auto file = load_algebra(path);
    if (!file.prod)
        throw error(errc::invalid_structure, "'" + path + "' has no prod section");
    const hoop_algebra h(file.algebra, *file.prod);
    auto level = hoop_level::hoop;
    if (level_str == "wajsberg") level = hoop_level::wajsberg;
    if (level_str == "basic") level = hoop_level::basic;
    const auto rep = check_hoop(h, level, witness_mode::first);
    json j = json_report(h.base, rep);
    j["command"] = "hoop";
    j["level"] = level_str;
    emit(out, as_json, j, to_text(rep));
    return rep.pass() ? 0 : 1;
}

int run_product(std::ostream& out, bool as_json, const std::string& path1, const std::string& path2,
                const std::string& out_path) {
    const auto f1 = load_algebra(path1);
    const auto f2 = load_algebra(path2);
    const auto p = direct_product(f1.algebra, f2.algebra);
    const auto text = serialize_algebra(p);
    if (!out_path.empty()) {
        std::ofstream os(out_path);
        if (!os) throw error(errc::invalid_structure, "cannot write '" + out_path + "'");
        os << text;
        json j;
        j["command"] = "product";
        j["written"] = out_path;
        j["size"] = p.size();
        emit(out, as_json, j, "wrote " + out_path + " (size " + std::to_string(p.size()) + ")\n");
        return 0;
    }
    json j;
    j["command"] = "product";
    j["algebra"] = json_algebra(p);
    emit(out, as_json, j, text);
    return 0;
}

int run_enumerate(std::ostream& out, bool as_json, int size, bool commutative, bool up_to_iso,
                  bool count_only, long long budget, bool serial) {
    search_config cfg;
    cfg.size = size;
    cfg.commutative_only = commutative;
    cfg.up_to_iso = up_to_iso;
    cfg.node_budget = budget;
    const auto models = serial ? enumerate_models(cfg) : enumerate_models_parallel(cfg);
    json j;
    j["command"] = "enumerate";
    j["size"] = size;
    j["count"] = models.size();
    std::string text;
    if (!count_only) {
        json arr = json::array();
        for (const auto& m : models) {
            arr.push_back(json_algebra(m));
            text += serialize_algebra(m) + "\n";
        }
        j["models"] = arr;
    }
    text += "total: " + std::to_string(models.size()) + "\n";
    emit(out, as_json, j, text);
    return 0;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite-model workbench for pseudo BCK-algebras"};
    app.name("pbck");
    bool as_json = false;
    app.add_flag("--json", as_json, "emit machine-readable reports");
    app.require_subcommand(1);
    // subcommands inherit this, so --json works on either side of the verb
    app.fallthrough();

    std::string path, path2, map_path, out_path;
    std::string system = "equational";
    std::string kind, level = "hoop", ds_csv, generated;
    bool normal = false, commutative = false, enumerate_flag = false;
    bool up_to_iso = false, count_only = false, serial = false;
    int size = 2;
    long long budget = default_state_budget;
    long long search_budget = search_config{}.node_budget;

    auto* check = app.add_subcommand("check", "verify an axiom suite against a table file");
    check->add_option("file", path, "algebra file")->required();
    check->add_option("--system", system, "axiom suite to verify")
        ->check(CLI::IsMember({"relational", "equational", "pseudo-bci", "pseudo-be"}));

    auto* classify = app.add_subcommand("classify", "run every commutativity characterization");
    classify->add_option("file", path, "algebra file")->required();

    auto* ds = app.add_subcommand("ds", "enumerate deductive systems");
    ds->add_option("file", path, "algebra file")->required();
    ds->add_flag("--normal", normal, "keep only normal systems");
    ds->add_flag("--commutative", commutative, "keep only commutative systems");
    ds->add_option("--generated", generated, "comma-separated seed elements; print the generated system");

    auto* quot = app.add_subcommand("quotient", "factor by a normal deductive system");
    quot->add_option("file", path, "algebra file")->required();
    quot->add_option("--ds", ds_csv, "comma-separated members of the system")->required();

    auto* states = app.add_subcommand("states", "enumerate or classify state operators");
    states->add_option("file", path, "algebra file")->required();
    states->add_flag("--enumerate", enumerate_flag, "enumerate all state operators (default)");
    states->add_option("--kind", kind, "type1 | type2 | sm")
        ->check(CLI::IsMember({"type1", "type2", "sm"}));
    states->add_option("--map", map_path, "classify one map instead of enumerating");
    states->add_option("--budget", budget, "search-node budget for enumeration");

    auto* measure_cmd = app.add_subcommand("measure", "verify a measure and inspect its kernel");
    measure_cmd->add_option("file", path, "algebra file")->required();
    measure_cmd->add_option("values", map_path, "measure file")->required();

    auto* hoop_cmd = app.add_subcommand("hoop", "verify hoop identities on a table file with prod");
    hoop_cmd->add_option("file", path, "algebra file with a prod section")->required();
    hoop_cmd->add_option("--level", level, "hoop | wajsberg | basic")
        ->check(CLI::IsMember({"hoop", "wajsberg", "basic"}));

    auto* product = app.add_subcommand("product", "build the direct product of two algebras");
    product->add_option("first", path, "left factor")->required();
    product->add_option("second", path2, "right factor")->required();
    product->add_option("-o,--out", out_path, "write the product to this file");

    auto* enumerate = app.add_subcommand("enumerate", "search all models of a given size");
    enumerate->add_option("--size", size, "carrier size (1..5)")->required();
    enumerate->add_flag("--commutative", commutative, "keep only commutative models");
    enumerate->add_flag("--up-to-iso", up_to_iso, "keep canonical representatives only");
    enumerate->add_flag("--count-only", count_only, "print the count, not the tables");
    enumerate->add_option("--budget", search_budget, "search-node budget");
    enumerate->add_flag("--serial", serial, "use the serial reference search");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
        if (check->parsed()) return run_check(out, as_json, path, system);
        if (classify->parsed()) return run_classify(out, as_json, path);
        if (ds->parsed()) return run_ds(out, as_json, path, normal, commutative, generated);
        if (quot->parsed()) return run_quotient(out, as_json, path, ds_csv);
        if (states->parsed())
            return run_states(out, as_json, path, map_path, enumerate_flag, kind, budget);
        if (measure_cmd->parsed()) return run_measure(out, as_json, path, map_path);
        if (hoop_cmd->parsed()) return run_hoop(out, as_json, path, level);
        if (product->parsed()) return run_product(out, as_json, path, path2, out_path);
        if (enumerate->parsed())
            return run_enumerate(out, as_json, size, commutative, up_to_iso, count_only,
                                 search_budget, serial);
        err << "error: no subcommand given\n";
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const error& e) {
        if (as_json) {
            json j;
            j["error"] = {{"code", errc_name(e.code())}, {"message", e.what()}};
            out << j.dump(2) << "\n";
        }
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    }
}

}  // namespace pbck
