// Command-line front end: build the complexes, run the domination
// recursion, verify with the homology oracle, print traces.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include <grapes/grapes.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNotCertified = 2;
constexpr int kExitVerifyMismatch = 3;
constexpr int kExitResource = 4;
constexpr int kExitInternal = 70;

using Input = std::variant<grapes::Graph, grapes::Multidigraph, grapes::IntervalSet>;

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Input load_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw grapes::input_error("cannot open '" + path + "'");
    if (ends_with(path, ".ug")) return grapes::parse_graph(in);
    if (ends_with(path, ".dg")) return grapes::parse_multidigraph(in);
    if (ends_with(path, ".iv")) return grapes::parse_intervals(in);
    throw grapes::input_error("unknown input extension (expected .ug, .dg or .iv): '" + path + "'");
}

grapes::Instance make_instance_for(grapes::ComplexKind kind, const Input& input) {
    if (const auto* g = std::get_if<grapes::Graph>(&input)) return grapes::make_instance(kind, *g);
    if (const auto* m = std::get_if<grapes::Multidigraph>(&input))
        return grapes::make_instance(kind, *m);
    return grapes::make_instance(kind, std::get<grapes::IntervalSet>(input));
}

grapes::ComplexKind parse_kind(const std::string& s) {
    auto k = grapes::kind_from_string(s);
    if (!k)
        throw grapes::input_error("unknown kind '" + s +
                                  "' (expected of|ind|dom|match|ec|ed|io)");
    return *k;
}

int run_build(const std::string& kind_str, const std::string& input_path,
              const std::string& out_path) {
    auto inst = make_instance_for(parse_kind(kind_str), load_input(input_path));
    std::ostringstream text;
    grapes::write_facets(text, inst.complex);
    if (out_path.empty()) {
        std::cout << text.str();
    } else {
        std::ofstream out(out_path);
        if (!out) throw grapes::input_error("cannot write '" + out_path + "'");
        out << text.str();
    }
    return kExitOk;
}

int run_homotopy(const std::string& kind_str, const std::string& input_path,
                 const std::string& strategy, bool trace, bool do_verify) {
    auto inst = make_instance_for(parse_kind(kind_str), load_input(input_path));
    grapes::Strategy strat = inst.family;
    if (strategy == "exhaustive")
        strat = grapes::Strategy::Exhaustive();
    else if (strategy != "family")
        throw grapes::input_error("unknown strategy '" + strategy + "'");

    auto result = grapes::homotopy_type(inst.complex, strat);
    if (!result.certified()) {
        std::cerr << "error: " << result.failure << "\n";
        if (trace) std::cout << grapes::serialize_trace(result.trace);
        return kExitNotCertified;
    }
    std::cout << "homotopy: " << result.type->str() << "\n";
    if (trace) std::cout << grapes::serialize_trace(result.trace);
    if (do_verify) {
        bool ok = grapes::verify(inst.complex, *result.type);
        std::cout << "verified: " << (ok ? "yes" : "no") << "\n";
        if (!ok) return kExitVerifyMismatch;
    }
    return kExitOk;
}

int run_homology(const std::string& facets_path) {
    std::ifstream in(facets_path);
    if (!in) throw grapes::input_error("cannot open '" + facets_path + "'");
    auto complex = grapes::parse_facets(in);
    auto profile = grapes::reduced_homology(complex);
    for (const auto& [k, b] : profile.reduced_betti)
        std::cout << "betti[" << k << "]: " << b << "\n";
    std::cout << "torsion: " << (profile.torsion_present() ? "present" : "none") << "\n";
    return kExitOk;
}

int run_invariants(const std::string& input_path) {
    auto input = load_input(input_path);
    const auto* g = std::get_if<grapes::Graph>(&input);
    if (!g) throw grapes::input_error("invariants expects an undirected graph (.ug)");
    auto inv = grapes::graph_invariants(*g);
    std::cout << "gamma: " << inv.gamma << "\n";
    std::cout << "i: " << inv.i_dom << "\n";
    std::cout << "alpha0: " << inv.alpha0 << "\n";
    std::cout << "beta1: " << inv.beta1 << "\n";
    std::cout << "kappa: " << inv.kappa << "\n";
    return kExitOk;
}

int run_reduce(const std::string& input_path, const std::string& rule) {
    auto input = load_input(input_path);
    const auto* g = std::get_if<grapes::Graph>(&input);
    if (!g) throw grapes::input_error("reduce expects an undirected graph (.ug)");
    if (rule == "scremo") {
        auto res = grapes::reduce_scremo(*g);
        for (const auto& s : res.steps)
            std::cout << "remove vertex " << s.removed << " (distance two from leaf " << s.leaf
                      << ")\n";
        grapes::write_graph(std::cout, res.reduced);
    } else if (rule == "doscremo") {
        auto res = grapes::reduce_doscremo(*g);
        for (const auto& s : res.steps)
            std::cout << "remove edge " << grapes::edge_label(s.hub, s.other) << " (leaf "
                      << s.leaf << " attached to " << s.hub << ")\n";
        grapes::write_graph(std::cout, res.reduced);
        std::cout << "r: " << res.edge_count << "\n";
    } else {
        throw grapes::input_error("unknown rule '" + rule + "' (expected scremo|doscremo)");
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"homotopy types of graph, forest and interval complexes"};
    app.require_subcommand(1);

    std::string kind, input, out, strategy = "family", facets, rule;
    bool trace = false, do_verify = false;

    auto* build = app.add_subcommand("build", "construct a complex and print its facet file");
    build->add_option("--kind", kind, "of|ind|dom|match|ec|ed|io")->required();
    build->add_option("--input", input, "input file (.ug, .dg or .iv)")->required();
    build->add_option("--out", out, "write the facet file here instead of stdout");

    auto* homotopy = app.add_subcommand("homotopy", "compute the homotopy type");
    homotopy->add_option("--kind", kind, "of|ind|dom|match|ec|ed|io")->required();
    homotopy->add_option("--input", input, "input file (.ug, .dg or .iv)")->required();
    homotopy->add_option("--strategy", strategy, "family|exhaustive (default family)");
    homotopy->add_flag("--trace", trace, "print the decomposition trace");
    homotopy->add_flag("--verify", do_verify, "check the answer against the homology oracle");

    auto* homology = app.add_subcommand("homology", "reduced Betti numbers of a facet file");
    homology->add_option("--facets", facets, "facet file")->required();

    auto* invariants = app.add_subcommand("invariants", "brute-force graph invariants");
    invariants->add_option("--input", input, "undirected graph file (.ug)")->required();

    auto* reduce = app.add_subcommand("reduce", "forest reductions with a removal log");
    reduce->add_option("--input", input, "undirected graph file (.ug)")->required();
    reduce->add_option("--rule", rule, "scremo|doscremo")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) return run_build(kind, input, out);
        if (homotopy->parsed()) return run_homotopy(kind, input, strategy, trace, do_verify);
        if (homology->parsed()) return run_homology(facets);
        if (invariants->parsed()) return run_invariants(input);
        if (reduce->parsed()) return run_reduce(input, rule);
    } catch (const grapes::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const grapes::resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const grapes::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInput;
}
