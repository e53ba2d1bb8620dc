// Command-line frontend: graph analysis, normal forms, socle reports.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "lpa/algebra.hpp"
#include "lpa/closure.hpp"
#include "lpa/desing.hpp"
#include "lpa/errors.hpp"
#include "lpa/format.hpp"
#include "lpa/reduce.hpp"
#include "lpa/socle.hpp"

using json = nlohmann::ordered_json;
using namespace lpa;

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json size_json(const ExtendedNat& n) {
    if (n.is_omega()) return "omega";
    const Integer& v = n.value();
    if (v.fits_ulong_p() && v.get_ui() <= (1ull << 53)) return v.get_ui();
    return v.get_str();
}

json vertex_list(const Graph& g, const std::vector<VertexId>& vs) {
    json a = json::array();
    for (VertexId v : vs) a.push_back(g.vertex_name(v));
    return a;
}

json vertex_set_json(const Graph& g, const VertexSet& s) {
    json a = json::array();
    for (VertexId v : s) a.push_back(g.vertex_name(v));
    return a;
}

json token_list(const Graph& g, const std::vector<GeneratorToken>& ts) {
    json a = json::array();
    for (const auto& t : ts) a.push_back(token_name(g, t));
    return a;
}

const char* class_name(VertexClass c) {
    switch (c) {
        case VertexClass::Sink: return "sink";
        case VertexClass::Regular: return "regular";
        case VertexClass::InfiniteEmitter: return "infinite_emitter";
    }
    return "?";
}

const char* corner_name(CornerClass c) {
    switch (c) {
        case CornerClass::Field: return "field";
        case CornerClass::Laurent: return "laurent";
        case CornerClass::Other: return "other";
    }
    return "?";
}

void emit(const json& j, bool as_json, const std::string& human) {
    if (as_json)
        std::cout << j.dump(2) << '\n';
    else
        std::cout << human;
}

VertexId lookup_vertex(const Graph& g, const std::string& name) { return g.vertex(name); }

int cmd_analyze(const Graph& g, bool as_json) {
    auto cl = condition_L(g);
    auto cycles = cycles_without_exits(g);
    auto lps = line_points(g);
    bool semiprime = path_algebra_semiprime(g);

    json j;
    j["schema"] = "analyze/1";
    json classes = json::object();
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        classes[g.vertex_name(v)] = class_name(g.classify(v));
    j["vertex_classes"] = classes;
    j["condition_L"] = cl.holds;
    json cyc = json::array();
    for (const auto& c : cycles)
        cyc.push_back(json{{"base", g.vertex_name(c.base)}, {"cycle", print_path(g, c.cycle)}});
    j["cycles_without_exits"] = cyc;
    j["line_points"] = vertex_list(g, lps);
    j["path_algebra_semiprime"] = semiprime;

    std::ostringstream os;
    os << "vertex classes:";
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        os << ' ' << g.vertex_name(v) << '=' << class_name(g.classify(v));
    os << '\n';
    os << "condition (L): " << (cl.holds ? "holds" : "fails") << '\n';
    for (const auto& c : cycles)
        os << "cycle without exits at " << g.vertex_name(c.base) << ": " << print_path(g, c.cycle)
           << '\n';
    os << "line points:";
    for (VertexId v : lps) os << ' ' << g.vertex_name(v);
    os << '\n';
    os << "path algebra semiprime: " << (semiprime ? "yes" : "no") << '\n';
    emit(j, as_json, os.str());
    return 0;
}

int cmd_closure(const Graph& g, const std::string& set_arg, bool as_json) {
    VertexSet s;
    std::stringstream ss(set_arg);
    std::string name;
    while (std::getline(ss, name, ',')) {
        if (!name.empty()) s.insert(lookup_vertex(g, name));
    }
    VertexSet h = hereditary_saturated_closure(g, s);
    bool fixed = (h == s);

    json j;
    j["schema"] = "closure/1";
    j["input"] = vertex_set_json(g, s);
    j["closure"] = vertex_set_json(g, h);
    j["input_is_hereditary_saturated"] = fixed;

    std::ostringstream os;
    os << "closure:";
    for (VertexId v : h) os << ' ' << g.vertex_name(v);
    os << '\n' << "input is hereditary and saturated: " << (fixed ? "yes" : "no") << '\n';
    emit(j, as_json, os.str());
    return 0;
}

int cmd_simple(const Graph& g, bool as_json) {
    SimplicityReport r = is_simple(g);
    json j;
    j["schema"] = "simple/1";
    j["simple"] = r.simple;
    if (!r.simple) {
        j["reason"] = r.reason;
        if (r.cycle_witness)
            j["witness"] = json{{"base", g.vertex_name(r.cycle_witness->base)},
                                {"cycle", print_path(g, r.cycle_witness->cycle)}};
        if (r.vertex_witness) j["witness"] = g.vertex_name(*r.vertex_witness);
    }
    std::ostringstream os;
    if (r.simple)
        os << "simple: yes\n";
    else
        os << "simple: no (" << r.reason << ")\n";
    emit(j, as_json, os.str());
    return 0;
}

int cmd_socle(const Graph& g, bool as_json) {
    SocleReport r = socle_report(g);
    json j;
    j["schema"] = "socle/1";
    j["line_points"] = vertex_list(g, r.line_points);
    j["closure_H"] = vertex_set_json(g, r.closure_H);
    json comps = json::array();
    for (const auto& c : r.components)
        comps.push_back(json{{"sink", g.vertex_name(c.terminal_sink)},
                             {"size", size_json(c.size)},
                             {"line_class", vertex_list(g, c.line_class)}});
    j["components"] = comps;
    j["socle_is_zero"] = r.socle_is_zero;
    j["socle_is_everything"] = r.socle_is_everything;

    std::ostringstream os;
    if (r.socle_is_zero) {
        os << "socle is zero (no line points)\n";
    } else {
        os << "line points:";
        for (VertexId v : r.line_points) os << ' ' << g.vertex_name(v);
        os << "\nclosure H:";
        for (VertexId v : r.closure_H) os << ' ' << g.vertex_name(v);
        os << '\n';
        for (const auto& c : r.components) {
            os << "component: M_" << c.size.str() << "(Q), sink " << g.vertex_name(c.terminal_sink)
               << ", line class {";
            for (std::size_t i = 0; i < c.line_class.size(); ++i)
                os << (i ? " " : "") << g.vertex_name(c.line_class[i]);
            os << "}\n";
        }
        os << "socle is everything: " << (r.socle_is_everything ? "yes" : "no") << '\n';
    }
    emit(j, as_json, os.str());
    return 0;
}

int cmd_desing(const Graph& g, int depth, bool as_json) {
    DesingGraph d = desingularize(g);
    SymbolicLinePoints sym = line_points_desing(d);
    bool lemma = verify_desing_lemma(g);

    json j;
    j["schema"] = "desing/1";
    json tails = json::array();
    for (const auto& t : d.tails) {
        json tj;
        tj["base"] = d.core.vertex_name(t.base);
        tj["kind"] = t.kind == TailDescriptor::Kind::SinkTail ? "sink_tail" : "emitter_tail";
        if (t.kind == TailDescriptor::Kind::EmitterTail) {
            json prefix = json::array();
            for (const auto& e : t.enumeration_prefix) prefix.push_back(g.edge_ref_name(e));
            tj["enumeration_prefix"] = prefix;
            json cyc = json::array();
            for (VertexId v : t.cycle_ranges) cyc.push_back(g.vertex_name(v));
            tj["periodic_ranges"] = cyc;
        }
        tails.push_back(tj);
    }
    j["tails"] = tails;
    j["line_points_core"] = vertex_list(d.core, sym.core_points);
    j["sink_tail_families"] = vertex_list(d.core, sym.sink_tail_bases);
    j["lemma_holds"] = lemma;

    std::ostringstream os;
    os << "tails: " << d.tails.size() << '\n';
    for (const auto& t : d.tails)
        os << "  " << (t.kind == TailDescriptor::Kind::SinkTail ? "sink tail" : "emitter tail")
           << " at " << d.core.vertex_name(t.base) << '\n';
    os << "P_l(F) core vertices:";
    for (VertexId v : sym.core_points) os << ' ' << d.core.vertex_name(v);
    os << '\n' << "sink tail families (all line points):";
    for (VertexId v : sym.sink_tail_bases) os << ' ' << d.core.vertex_name(v);
    os << '\n' << "P_l(E) = P_l(F) /\\ E^0: " << (lemma ? "verified" : "VIOLATED") << '\n';

    if (depth > 0) {
        TruncatedGraph t = truncate(d, static_cast<std::size_t>(depth));
        std::ostringstream header;
        header << "# truncated desingularization, depth " << depth << "\n";
        header << "# generated names:";
        for (const auto& n : t.generated_vertices) header << ' ' << n;
        header << "\n# artificial sinks (cut vertices):";
        for (const auto& n : t.cut_vertices) header << ' ' << n;
        header << "\n# not a faithful model of F: analyses on it treat cuts as real sinks\n";
        std::string lpg = header.str() + print_graph(t.graph);
        j["truncation"] =
            json{{"depth", depth},
                 {"cut_vertices", t.cut_vertices},
                 {"faithful", false},
                 {"graph", lpg}};
        os << lpg;
    }
    emit(j, as_json, os.str());
    if (!lemma) throw InternalError("desingularization lemma violated");
    return 0;
}

int cmd_eval(const Graph& g, const std::string& expr, bool as_json) {
    Element x = parse_element(g, expr);
    json j;
    j["schema"] = "eval/1";
    j["input"] = expr;
    j["normal_form"] = print_element(g, x);
    json terms = json::array();
    for (const auto& [m, c] : x.terms())
        terms.push_back(json{{"coefficient", to_string(c)}, {"monomial", print_monomial(g, m)}});
    j["terms"] = terms;
    json degrees = json::object();
    for (const auto& [d, comp] : homogeneous_components(x))
        degrees[std::to_string(d)] = print_element(g, comp);
    j["degree_components"] = degrees;
    emit(j, as_json, print_element(g, x) + "\n");
    return 0;
}

int cmd_corner(const Graph& g, const std::string& vname, int degree, int bundle_index,
               bool as_json) {
    VertexId v = lookup_vertex(g, vname);
    auto basis = corner_basis(g, v, static_cast<std::size_t>(degree),
                              static_cast<std::uint32_t>(bundle_index));
    CornerClass cls = classify_corner(g, v, static_cast<std::size_t>(degree),
                                      static_cast<std::uint32_t>(bundle_index));
    json j;
    j["schema"] = "corner/1";
    j["vertex"] = vname;
    j["max_degree"] = degree;
    json b = json::array();
    for (const auto& m : basis) b.push_back(print_monomial(g, m));
    j["basis"] = b;
    j["classification"] = corner_name(cls);

    std::ostringstream os;
    os << "corner basis (" << basis.size() << "):";
    for (const auto& m : basis) os << "  " << print_monomial(g, m);
    os << '\n' << "classification: " << corner_name(cls) << '\n';
    emit(j, as_json, os.str());
    return 0;
}

int cmd_minimal(const Graph& g, const std::string& vname, int degree, bool as_json) {
    VertexId v = lookup_vertex(g, vname);
    MinimalIdealVerdict r = minimal_vertex_ideal(g, v, static_cast<std::size_t>(degree));
    json j;
    j["schema"] = "minimal/1";
    j["vertex"] = vname;
    j["graph_verdict"] = r.graph_verdict;
    j["corner_classification"] = corner_name(r.corner);
    j["algebra_verdict"] = r.algebra_verdict;
    j["agree"] = r.agree;
    j["minimal"] = r.graph_verdict;

    std::ostringstream os;
    os << "line point: " << (r.graph_verdict ? "yes" : "no") << '\n'
       << "corner probe: " << corner_name(r.corner) << '\n'
       << "minimal left ideal: " << (r.graph_verdict ? "yes" : "no") << '\n';
    emit(j, as_json, os.str());
    if (!r.agree)
        throw InternalError("graph verdict and corner cross-check disagree at " + vname);
    return 0;
}

int cmd_reduce(const Graph& g, const std::string& expr, int bound, bool as_json) {
    Element x = parse_element(g, expr);
    ReductionWitness w = reduce(g, x, static_cast<std::size_t>(bound));
    json j;
    j["schema"] = "reduce/1";
    j["input"] = expr;
    j["bound"] = bound;
    j["kind"] = w.kind == WitnessKind::Vertex ? "vertex" : "cycle_corner";
    j["left"] = token_list(g, w.left);
    j["right"] = token_list(g, w.right);
    j["result"] = print_element(g, w.result);

    std::ostringstream os;
    os << "kind: " << (w.kind == WitnessKind::Vertex ? "vertex" : "cycle_corner") << '\n';
    os << "left:";
    for (const auto& t : w.left) os << ' ' << token_name(g, t);
    os << '\n' << "right:";
    for (const auto& t : w.right) os << ' ' << token_name(g, t);
    os << '\n' << "result: " << print_element(g, w.result) << '\n';
    emit(j, as_json, os.str());
    return 0;
}

int cmd_semiprime(const Graph& g, const std::string& expr, int bound, bool as_json) {
    Element x = parse_element(g, expr);
    SpotCheck s = semiprime_spotcheck(g, x, static_cast<std::size_t>(bound));
    json j;
    j["schema"] = "semiprime/1";
    j["input"] = expr;
    j["bound"] = bound;
    j["witness"] = print_monomial(g, s.witness);
    j["product"] = print_element(g, s.product);

    std::ostringstream os;
    os << "witness m: " << print_monomial(g, s.witness) << '\n'
       << "x m x = " << print_element(g, s.product) << '\n';
    emit(j, as_json, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Leavitt path algebra toolkit: normal forms, line points, socle"};
    app.require_subcommand(1);

    std::string file;
    std::string expr;
    std::string set_arg;
    std::string vertex_arg;
    int degree = 8;
    int bound = 8;
    int depth = 0;
    int bundle_index = 3;
    bool as_json = false;

    auto add_common = [&](CLI::App* sub, bool needs_file = true) {
        if (needs_file)
            sub->add_option("file", file, "graph file (.lpg), or - for stdin")->required();
        sub->add_flag("--json", as_json, "machine-readable output");
    };

    auto* analyze = app.add_subcommand("analyze", "vertex classes, Condition (L), line points");
    add_common(analyze);
    auto* closure = app.add_subcommand("closure", "hereditary saturated closure of a vertex set");
    add_common(closure);
    closure->add_option("--set", set_arg, "comma-separated vertex list")->required();
    auto* simple = app.add_subcommand("simple", "simplicity of L_Q(E)");
    add_common(simple);
    auto* socle = app.add_subcommand("socle", "socle decomposition");
    add_common(socle);
    auto* desing = app.add_subcommand("desing", "desingularization report");
    add_common(desing);
    desing->add_option("--depth", depth, "also emit a depth-N truncation");
    auto* eval = app.add_subcommand("eval", "normal form of an expression");
    add_common(eval);
    eval->add_option("-e,--expr", expr, "element expression")->required();
    auto* corner = app.add_subcommand("corner", "bounded corner basis at a vertex");
    add_common(corner);
    corner->add_option("-v,--vertex", vertex_arg, "vertex id")->required();
    corner->add_option("--degree", degree, "degree bound")->required();
    corner->add_option("--bundle-index", bundle_index, "bundle member truncation");
    auto* minimal = app.add_subcommand("minimal", "minimality of the left ideal of a vertex");
    add_common(minimal);
    minimal->add_option("-v,--vertex", vertex_arg, "vertex id")->required();
    minimal->add_option("--degree", degree, "corner probe degree bound");
    auto* reduce_cmd = app.add_subcommand("reduce", "link an element to a vertex or cycle corner");
    add_common(reduce_cmd);
    reduce_cmd->add_option("-e,--expr", expr, "element expression")->required();
    reduce_cmd->add_option("--bound", bound, "token budget");
    auto* semiprime = app.add_subcommand("semiprime", "find m with x m x != 0");
    add_common(semiprime);
    semiprime->add_option("-e,--expr", expr, "element expression")->required();
    semiprime->add_option("--bound", bound, "monomial length bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        Graph g = parse_graph(read_input(file));
        if (analyze->parsed()) return cmd_analyze(g, as_json);
        if (closure->parsed()) return cmd_closure(g, set_arg, as_json);
        if (simple->parsed()) return cmd_simple(g, as_json);
        if (socle->parsed()) return cmd_socle(g, as_json);
        if (desing->parsed()) return cmd_desing(g, depth, as_json);
        if (eval->parsed()) return cmd_eval(g, expr, as_json);
        if (corner->parsed()) return cmd_corner(g, vertex_arg, degree, bundle_index, as_json);
        if (minimal->parsed()) return cmd_minimal(g, vertex_arg, degree, as_json);
        if (reduce_cmd->parsed()) return cmd_reduce(g, expr, bound, as_json);
        if (semiprime->parsed()) return cmd_semiprime(g, expr, bound, as_json);
        std::cerr << "no subcommand\n";
        return 1;
    } catch (const BoundExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
