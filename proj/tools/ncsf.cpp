#include <algorithm>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "ncsf/ncsf.hpp"
#include "ncsf/io.hpp"

namespace {

using namespace ncsf;

struct Options {
    std::string format = "text";
    int degree_bound = 8;
    bool no_cache = false;
};

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

/// Seeds the transition-matrix memo from the on-disk cache, or fills the cache.
void prepare_matrix(const Options& opt, int n) {
    if (opt.no_cache) return;
    const auto dir = default_cache_dir();
    try {
        if (auto m = load_cached_matrix(dir, n)) {
            seed_transition_matrix(n, std::move(*m));
            return;
        }
    } catch (const std::exception& e) {
        std::cerr << "warning: ignoring cache file " << cache_file(dir, n).string() << ": " << e.what() << '\n';
    }
    try {
        store_cached_matrix(dir, transition_matrix(n));
    } catch (const std::exception& e) {
        std::cerr << "warning: could not write cache in " << dir.string() << ": " << e.what() << '\n';
    }
}

int cmd_stat(const Options& opt, const std::string& perm_text, const std::string& name) {
    const Permutation p = parse_permutation(perm_text);
    std::string value;
    json jv;
    auto set_comp = [&](const Composition& c) {
        value = comma_separated(c);
        jv = c.parts();
    };
    auto set_int = [&](int x) {
        value = std::to_string(x);
        jv = x;
    };
    if (name == "sc")
        set_comp(saillance_composition(p));
    else if (name == "rc")
        set_comp(recoil_composition(p));
    else if (name == "octype")
        set_comp(ordered_cycle_type(p));
    else if (name == "ctype")
        set_comp(carlitz_cycle_type(p));
    else if (name == "inv")
        set_int(inversions(p));
    else if (name == "invc")
        set_int(invc(p));
    else if (name == "foata") {
        value = to_string(foata_first(p));
        jv = value;
    } else
        throw std::invalid_argument("unknown statistic '" + name + "' (expected sc, rc, octype, ctype, inv, invc, foata)");

    if (opt.format == "json")
        print_json({{"permutation", to_string(p)}, {"statistic", name}, {"value", jv}});
    else if (opt.format == "csv")
        std::cout << "permutation,statistic,value\n" << to_string(p) << ',' << name << ",\"" << value << "\"\n";
    else
        std::cout << value << '\n';
    return 0;
}

int cmd_table(const Options& opt, int n, const std::string& which) {
    if (n < 1) throw std::invalid_argument("table: n must be positive");
    check_degree_bound("table", n, opt.degree_bound);
    if (which == "M" || which == "Minv") {
        prepare_matrix(opt, n);
        const IntMatrix m = which == "M" ? transition_matrix(n) : transition_matrix_inverse(n);
        if (opt.format == "json") {
            json j = matrix_to_json(m);
            j["table"] = which;
            print_json(j);
        } else if (opt.format == "csv") {
            std::cout << render_matrix_csv(m);
        } else {
            std::cout << render_matrix(m);
        }
        return 0;
    }
    if (which == "Z") {
        const ZSeries z = z_series(n);
        if (opt.format == "text") {
            std::cout << render_z(z);
            return 0;
        }
        json rows = json::array();
        if (opt.format == "csv") std::cout << "y,perm,coeff\n";
        for (const auto& y : z_rows(z)) {
            json terms = json::array();
            for (const auto& [p, c] : z.coefficients.at(y).terms) {
                terms.push_back({{"perm", to_string(p)}, {"coeff", bigint_to_json(c)}});
                if (opt.format == "csv") std::cout << compact(y) << ',' << to_string(p) << ',' << c << '\n';
            }
            rows.push_back({{"y", y.parts()}, {"basis", "G"}, {"terms", terms}});
        }
        if (opt.format == "json") print_json({{"table", "Z"}, {"n", n}, {"rows", rows}});
        return 0;
    }

    std::string lhs = "V", symbol;
    std::function<CompositionSum<>(const Composition&)> row;
    if (which == "U") {
        lhs = "U";
        symbol = "F";
        row = [](const Composition& c) { return u_basis(c).terms; };
    } else if (which == "VR") {
        prepare_matrix(opt, n);
        symbol = "R";
        row = [](const Composition& c) { return v_in_ribbon(c); };
    } else if (which == "VL") {
        prepare_matrix(opt, n);
        symbol = "L";
        row = [](const Composition& c) { return ribbon_to_lambda(v_in_ribbon(c)); };
    } else {
        throw std::invalid_argument("unknown table '" + which + "' (expected U, M, Minv, VR, VL, Z)");
    }
    json rows = json::array();
    if (opt.format == "csv") std::cout << "row,term,coeff\n";
    for (const auto& c : table_rows(n)) {
        const auto x = row(c);
        if (opt.format == "text")
            std::cout << lhs << '_' << compact(c) << " = " << render_expansion(x, symbol) << '\n';
        else if (opt.format == "csv")
            for (const auto& [k, coeff] : x) std::cout << compact(c) << ',' << compact(k) << ',' << coeff << '\n';
        else
            rows.push_back({{"index", c.parts()}, {"expansion", expansion_to_json(x, symbol)}});
    }
    if (opt.format == "json") print_json({{"table", which}, {"n", n}, {"rows", rows}});
    return 0;
}

void print_expansion(const Options& opt, const CompositionSum<>& x, const std::string& symbol) {
    if (opt.format == "json") {
        print_json(expansion_to_json(x, symbol));
    } else if (opt.format == "csv") {
        std::vector<std::pair<Composition, BigInt>> sorted(x.begin(), x.end());
        std::stable_sort(sorted.begin(), sorted.end(),
                         [](const auto& a, const auto& b) { return LengthLexLess{}(a.first, b.first); });
        std::cout << "index,coeff\n";
        for (const auto& [c, coeff] : sorted) std::cout << '"' << comma_separated(c) << "\"," << coeff << '\n';
    } else {
        std::cout << render_expansion_ordered(x, symbol) << '\n';
    }
}

int cmd_product(const Options& opt, const std::string& a_text, const std::string& b_text, const std::string& basis,
                bool oracle) {
    const Composition a = parse_composition(a_text);
    const Composition b = parse_composition(b_text);
    CompositionSum<> x;
    if (basis == "vprime") {
        x = oracle ? vprime_product_oracle(a, b) : vprime_product(a, b);
        print_expansion(opt, x, "V'");
    } else if (basis == "v") {
        x = oracle ? complement_keys(vprime_product_oracle(complement(a), complement(b))) : v_product(a, b);
        print_expansion(opt, x, "V");
    } else {
        throw std::invalid_argument("unknown basis '" + basis + "' (expected v or vprime)");
    }
    return 0;
}

int cmd_qcoeff(const Options& opt, const std::string& text, const std::string& variant) {
    const Composition c = parse_composition(text);
    QPoly p;
    if (variant == "plain")
        p = c_q(c);
    else if (variant == "tilde")
        p = c_q_tilde(c);
    else
        throw std::invalid_argument("unknown variant '" + variant + "' (expected plain or tilde)");
    if (opt.format == "json") {
        json coeffs = json::object();
        for (const auto& [e, k] : p.coefficients()) coeffs[std::to_string(e)] = bigint_to_json(k);
        print_json({{"composition", c.parts()}, {"variant", variant}, {"text", p.to_string()}, {"coefficients", coeffs}});
    } else if (opt.format == "csv") {
        std::cout << "exponent,coeff\n";
        for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it)
            std::cout << it->first << ',' << it->second << '\n';
    } else {
        std::cout << p.to_string() << '\n';
    }
    return 0;
}

int cmd_classes(const Options& opt, int n, const std::string& rel_name, bool sizes, const std::string& method) {
    const auto rel = PatternRelation::by_name(rel_name);
    CensusMethod m;
    if (method == "bfs")
        m = CensusMethod::BFS;
    else if (method == "insertion")
        m = CensusMethod::Insertion;
    else if (method == "auto")
        m = n <= 8 ? CensusMethod::BFS : CensusMethod::Insertion;
    else
        throw std::invalid_argument("unknown method '" + method + "' (expected auto, bfs, insertion)");
    const Census c = class_census(n, rel, m);
    if (opt.format == "json") {
        print_json(census_to_json(c));
    } else if (opt.format == "csv") {
        std::cout << census_to_csv(c);
    } else {
        std::cout << "classes " << c.count() << '\n';
        if (sizes)
            for (const auto& k : c.classes) std::cout << to_string(k.minimum) << ' ' << k.size << '\n';
    }
    return 0;
}

int cmd_insert(const Options& opt, const std::string& perm_text, const std::string& rel_name) {
    const Permutation p = parse_permutation(perm_text);
    InsertionPair ins;
    if (rel_name == "eq1")
        ins = insert_eq1(p);
    else if (rel_name == "eq2")
        ins = insert_eq2(p);
    else
        throw std::invalid_argument("insert: relation must be eq1 or eq2");
    if (opt.format == "json") {
        print_json({{"permutation", to_string(p)}, {"relation", rel_name}, {"P", forest_to_json(ins.P)},
                    {"Q", forest_to_json(ins.Q)}});
    } else if (opt.format == "csv") {
        std::cout << "symbol,node,parent\n";
        for (const auto& [name, f] : {std::pair{"P", &ins.P}, std::pair{"Q", &ins.Q}})
            for (const auto& [v, parent] : f->parent_map())
                std::cout << name << ',' << v << ',' << (parent ? std::to_string(*parent) : "") << '\n';
    } else {
        std::cout << "P: " << ins.P.to_parenthesized() << '\n' << "Q: " << ins.Q.to_parenthesized() << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Saillance bases, q-analogues and pattern classes"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--degree-bound", opt.degree_bound, "Largest degree to compute")->check(CLI::PositiveNumber);
    app.add_flag("--no-cache", opt.no_cache, "Do not read or write the matrix cache");

    std::string perm, stat_name, which, a, b, basis = "vprime", comp, variant = "plain", rel, method = "auto";
    int n = 0;
    bool sizes = false, oracle = false;

    auto* stat = app.add_subcommand("stat", "Permutation statistic (sc, rc, octype, ctype, inv, invc, foata)");
    stat->add_option("perm", perm)->required();
    stat->add_option("statistic", stat_name)->required();

    auto* table = app.add_subcommand("table", "Tables U, M, Minv, VR, VL, Z of degree n");
    table->add_option("n", n)->required();
    table->add_option("which", which)->required();

    auto* product = app.add_subcommand("product", "Product of two V or V' basis elements");
    product->add_option("I", a)->required();
    product->add_option("J", b)->required();
    product->add_option("--basis", basis)->check(CLI::IsMember({"v", "vprime"}));
    product->add_flag("--oracle", oracle, "Count shuffles instead of using the closed formula");

    auto* qcoeff = app.add_subcommand("qcoeff", "The q-coefficient c_I(q)");
    qcoeff->add_option("I", comp)->required();
    qcoeff->add_option("--variant", variant)->check(CLI::IsMember({"plain", "tilde"}));

    auto* classes = app.add_subcommand("classes", "Pattern-replacement classes of S_n");
    classes->add_option("n", n)->required();
    classes->add_option("relation", rel)->required()->check(CLI::IsMember({"eq1", "eq2", "mirror"}));
    classes->add_flag("--sizes", sizes, "List every class with its size");
    classes->add_option("--method", method)->check(CLI::IsMember({"auto", "bfs", "insertion"}));

    auto* insert = app.add_subcommand("insert", "P and Q symbols of a permutation");
    insert->add_option("perm", perm)->required();
    insert->add_option("relation", rel)->required()->check(CLI::IsMember({"eq1", "eq2"}));

    for (auto* sub : {stat, table, product, qcoeff, classes, insert}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*stat) return cmd_stat(opt, perm, stat_name);
        if (*table) return cmd_table(opt, n, which);
        if (*product) return cmd_product(opt, a, b, basis, oracle);
        if (*qcoeff) return cmd_qcoeff(opt, comp, variant);
        if (*classes) return cmd_classes(opt, n, rel, sizes, method);
        if (*insert) return cmd_insert(opt, perm, rel);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
