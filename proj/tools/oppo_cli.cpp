// oppo: recognize opposition, generalized opposition and coalition graphs.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "oppo/constraints.hpp"
#include "oppo/detectors.hpp"
#include "oppo/generators.hpp"
#include "oppo/oracle.hpp"
#include "oppo/recognize.hpp"
#include "oppo/report.hpp"
#include "oppo/verify.hpp"

using namespace oppo;

namespace {

enum Exit { kMember = 0, kNonMember = 1, kUndecided = 2, kDisagree = 3, kUsage = 10 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string input = "-";
    std::string format = "auto";
    std::string klass = "opposition";
    std::string kind = "opposition";
    std::string output = "human";
    std::string orient_output = "dot";
    std::string method = "auto";
    std::string sweep_class = "all";
    std::string generator = "stdin";
    std::uint64_t flip_cap = kDefaultFlipCap;
    std::uint64_t seed = 1;
    std::size_t max_n = 9;
    std::size_t count = 100;
    bool witness = false;
    bool oracle = false;
    bool check_bipartite = false;
    bool all = false;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), {}};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot open " + path);
    }
    return {std::istreambuf_iterator<char>(in), {}};
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string first_line(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (!line.empty() && line[0] != '#') {
            return line;
        }
    }
    return {};
}

bool looks_like_graph6(const std::string& line) {
    if (line.rfind(">>graph6<<", 0) == 0) {
        return true;
    }
    if (line.empty()) {
        return false;
    }
    for (unsigned char ch : line) {
        if (ch < 63 || ch > 126) {
            return false;
        }
    }
    return true;
}

std::string detect_format(const Config& cfg, const std::string& text) {
    if (cfg.format != "auto") {
        return cfg.format;
    }
    const auto& p = cfg.input;
    if (ends_with(p, ".g6") || ends_with(p, ".graph6")) {
        return "graph6";
    }
    if (ends_with(p, ".el") || ends_with(p, ".edges") || ends_with(p, ".txt")) {
        return "edgelist";
    }
    return looks_like_graph6(first_line(text)) ? "graph6" : "edgelist";
}

Graph load_graph(const Config& cfg) {
    const std::string text = read_input(cfg.input);
    if (detect_format(cfg, text) == "graph6") {
        return parse_graph6(first_line(text));
    }
    return parse_edge_list(text);
}

GraphClass class_of(const std::string& s) {
    if (auto c = parse_graph_class(s)) {
        return *c;
    }
    throw UsageError("unknown class " + s);
}

int exit_for(Decision d) {
    switch (d) {
        case Decision::member:
            return kMember;
        case Decision::non_member:
            return kNonMember;
        case Decision::undecided:
            return kUndecided;
    }
    return kUndecided;
}

std::vector<Vertex> highlight_of(const Verdict& v) {
    if (const auto* m = std::get_if<PatternMatch>(&v.certificate)) {
        return m->embedding;
    }
    if (v.witness) {
        return v.witness->embedding;
    }
    return {};
}

void print_verdict(const Graph& g, const Verdict& v, const Config& cfg) {
    if (cfg.output == "json") {
        std::cout << verdict_to_json(g, v).dump(2) << "\n";
    } else if (cfg.output == "dot") {
        DotOptions opts;
        opts.orientation = std::get_if<Orientation>(&v.certificate);
        auto marked = highlight_of(v);
        opts.highlight = marked;
        std::cout << emit_dot(g, opts);
    } else {
        std::cout << verdict_to_text(g, v);
    }
}

std::optional<bool> oracle_decision(const Graph& g, GraphClass c) {
    try {
        switch (c) {
            case GraphClass::opposition:
                return oracle::opposition(g).member;
            case GraphClass::coalition:
                return oracle::coalition(g).member;
            case GraphClass::generalized_opposition:
                return oracle::generalized_opposition(g).member;
        }
    } catch (const oracle::CapExceeded&) {
    }
    return std::nullopt;
}

int cmd_recognize(const Config& cfg) {
    const Graph g = load_graph(cfg);
    const GraphClass c = class_of(cfg.klass);
    Verdict v = recognize(g, c, {cfg.flip_cap, cfg.witness});
    print_verdict(g, v, cfg);
    if (cfg.oracle) {
        auto o = oracle_decision(g, c);
        std::cerr << "oracle: "
                  << (o ? (*o ? "member" : "non-member") : "over cap") << "\n";
        if (o && v.decision != Decision::undecided && *o != (v.decision == Decision::member)) {
            return kDisagree;
        }
    }
    return exit_for(v.decision);
}

int cmd_orient(const Config& cfg) {
    const Graph g = load_graph(cfg);
    const GraphClass c = class_of(cfg.klass);
    std::optional<Orientation> o;
    if (cfg.method == "ptolemaic") {
        if (c != GraphClass::opposition) {
            throw UsageError("--method ptolemaic applies to --class opposition only");
        }
        if (!is_ptolemaic(g).member) {
            throw UsageError("--method ptolemaic needs a ptolemaic graph");
        }
        try {
            o = ptolemaic_opposition_orient(g);
        } catch (const ConstructionError& e) {
            std::cerr << "construction failed: " << e.what() << "\n";
        }
    } else if (cfg.method == "transitive") {
        if (c != GraphClass::coalition) {
            throw UsageError("--method transitive applies to --class coalition only");
        }
        o = transitive_orient(g);
    } else if (cfg.method != "auto") {
        throw UsageError("unknown method " + cfg.method);
    }
    if (!o) {
        Verdict v = recognize(g, c, {cfg.flip_cap, true});
        if (v.decision != Decision::member) {
            Config human = cfg;
            human.output = cfg.orient_output == "json" ? "json" : "human";
            print_verdict(g, v, human);
            return exit_for(v.decision);
        }
        o = std::get<Orientation>(v.certificate);
    }
    if (cfg.orient_output == "json") {
        nlohmann::json arcs = nlohmann::json::array();
        for (const Arc& a : o->arcs()) {
            arcs.push_back({g.label(a.tail), g.label(a.head)});
        }
        std::cout << nlohmann::json{{"class", to_string(c)}, {"arcs", arcs}}.dump(2) << "\n";
    } else if (cfg.orient_output == "human") {
        for (const Arc& a : o->arcs()) {
            std::cout << g.label(a.tail) << " -> " << g.label(a.head) << "\n";
        }
    } else {
        DotOptions opts;
        opts.orientation = &*o;
        std::cout << emit_dot(g, opts);
    }
    return kMember;
}

int cmd_aux(const Config& cfg) {
    const Graph g = load_graph(cfg);
    ConstraintKind kind;
    if (cfg.kind == "opposition") {
        kind = ConstraintKind::opposition;
    } else if (cfg.kind == "coalition") {
        kind = ConstraintKind::coalition;
    } else {
        throw UsageError("unknown kind " + cfg.kind);
    }
    const auto cg = build_constraint_graph(g, kind);
    if (!cfg.check_bipartite) {
        std::cout << constraint_graph_dot(cg);
        return 0;
    }
    auto split = bipartition_or_odd_walk(cg);
    if (const auto* b = std::get_if<Bipartition>(&split)) {
        std::cout << constraint_graph_dot(cg, b);
        return 0;
    }
    const auto& w = std::get<OddWalk>(split);
    std::cout << constraint_graph_dot(cg);
    std::cerr << "not bipartite; odd closed walk of length " << w.length() << ":";
    for (const ArcVar& v : w.walk) {
        std::cerr << " " << g.label(v.x) << g.label(v.y);
    }
    std::cerr << "\n";
    return 1;
}

int cmd_oracle(const Config& cfg) {
    const Graph g = load_graph(cfg);
    const GraphClass c = class_of(cfg.klass);
    oracle::OracleResult r;
    try {
        switch (c) {
            case GraphClass::opposition:
                r = oracle::opposition(g, cfg.all);
                break;
            case GraphClass::coalition:
                r = oracle::coalition(g, cfg.all);
                break;
            case GraphClass::generalized_opposition:
                r = oracle::generalized_opposition(g);
                break;
        }
    } catch (const oracle::CapExceeded& e) {
        std::cerr << e.what() << "\n";
        return kUndecided;
    }
    std::cout << "class:    " << to_string(c) << "\n";
    std::cout << "decision: " << (r.member ? "member" : "non-member") << "\n";
    if (r.witness_order) {
        std::cout << "order:   ";
        for (Vertex v : *r.witness_order) {
            std::cout << " " << g.label(v);
        }
        std::cout << "\n";
    }
    if (r.witness_assignment) {
        std::cout << "assignment:";
        for (const Arc& a : *r.witness_assignment) {
            std::cout << " " << g.label(a.tail) << "->" << g.label(a.head);
        }
        std::cout << "\n";
    }
    if (cfg.all) {
        std::cout << "solutions: " << r.all_solutions.size() << "\n";
        for (const auto& sol : r.all_solutions) {
            std::cout << " ";
            for (const Arc& a : sol) {
                std::cout << " " << g.label(a.tail) << "->" << g.label(a.head);
            }
            std::cout << "\n";
        }
    }
    return r.member ? kMember : kNonMember;
}

// ------------------------------------------------------------------ sweep

struct Tally {
    std::size_t graphs = 0;
    std::size_t agree = 0;
    std::size_t disagree = 0;
    std::size_t undecided = 0;
    std::size_t unchecked = 0;
};

struct Sweep {
    std::map<std::string, Tally> rows;
    std::vector<std::string> offending;

    void record(const std::string& row, const Graph& g, std::optional<bool> lhs,
                std::optional<bool> rhs) {
        Tally& t = rows[row];
        ++t.graphs;
        if (!lhs || !rhs) {
            ++t.unchecked;
        } else if (*lhs == *rhs) {
            ++t.agree;
        } else {
            ++t.disagree;
            offending.push_back(row + " " + to_graph6(g));
        }
    }
};

std::optional<bool> verdict_bool(const Verdict& v) {
    if (v.decision == Decision::undecided) {
        return std::nullopt;
    }
    return v.decision == Decision::member;
}

bool aux_bipartite(const Graph& g, ConstraintKind kind) {
    auto cg = build_constraint_graph(g, kind);
    return std::holds_alternative<Bipartition>(bipartition_or_odd_walk(cg));
}

bool opposition_obstruction_free(const Graph& g) {
    if (find_tk_violation(g)) {
        return false;
    }
    for (const Pattern& p : {patterns::a(), patterns::g1(), patterns::g2()}) {
        if (find_induced(g, p)) {
            return false;
        }
    }
    return true;
}

void sweep_oracle(Sweep& s, const Graph& g, const std::vector<GraphClass>& classes,
                  const Config& cfg) {
    for (GraphClass c : classes) {
        Verdict v = recognize(g, c, {cfg.flip_cap, false});
        if (v.decision == Decision::undecided) {
            ++s.rows[to_string(c) + " vs oracle"].undecided;
        }
        if (!verify::verdict(g, v)) {
            s.record(to_string(c) + " certificate", g, true, false);
        }
        s.record(to_string(c) + " vs oracle", g, verdict_bool(v), oracle_decision(g, c));
    }
}

void sweep_distance_hereditary(Sweep& s, const Graph& g, const Config& cfg) {
    const bool small = g.order() <= oracle::kMaxOrderVertices;
    const bool o_bip = aux_bipartite(g, ConstraintKind::opposition);
    s.record("O(G) bipartite <=> obstruction-free", g, o_bip, opposition_obstruction_free(g));
    s.record("O(G) bipartite <=> opposition verdict", g, o_bip,
             verdict_bool(recognize_opposition(g, {cfg.flip_cap, false})));
    if (small) {
        s.record("O(G) bipartite <=> oracle opposition", g, o_bip, oracle::opposition(g).member);
    }
    const bool c_bip = aux_bipartite(g, ConstraintKind::coalition);
    const bool n_free = !find_induced(g, patterns::n());
    s.record("C(G) bipartite <=> N-free", g, c_bip, n_free);
    s.record("N-free <=> transitive orientation", g, n_free, transitive_orient(g).has_value());
    if (small) {
        s.record("C(G) bipartite <=> oracle coalition", g, c_bip, oracle::coalition(g).member);
    }
}

void sweep_tree(Sweep& s, const Graph& g, const Config& cfg) {
    const bool tk_free = !find_tk_violation(g);
    s.record("opposition verdict <=> T_k-free", g,
             verdict_bool(recognize_opposition(g, {cfg.flip_cap, false})), tk_free);
    if (g.order() <= oracle::kMaxOrderVertices) {
        s.record("oracle opposition <=> T_k-free", g, oracle::opposition(g).member, tk_free);
    }
}

int cmd_sweep(const Config& cfg) {
    Sweep s;
    std::vector<GraphClass> classes;
    if (cfg.sweep_class == "all") {
        classes = {GraphClass::opposition, GraphClass::generalized_opposition,
                   GraphClass::coalition};
    } else {
        classes = {class_of(cfg.sweep_class)};
    }
    gen::Rng rng(cfg.seed);
    std::size_t total = 0;
    if (cfg.generator == "stdin") {
        std::istringstream in(read_input(cfg.input));
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') {
                line.pop_back();
            }
            if (line.empty() || line[0] == '#') {
                continue;
            }
            Graph g = parse_graph6(line);
            if (g.order() > cfg.max_n) {
                continue;
            }
            ++total;
            sweep_oracle(s, g, classes, cfg);
        }
    } else if (cfg.generator == "trees") {
        for (std::size_t n = 1; n <= cfg.max_n; ++n) {
            for (const Graph& t : gen::all_trees(n)) {
                ++total;
                sweep_tree(s, t, cfg);
            }
        }
    } else if (cfg.generator == "dh" || cfg.generator == "ptolemaic") {
        std::uniform_int_distribution<std::size_t> size(1, std::max<std::size_t>(cfg.max_n, 1));
        for (std::size_t i = 0; i < cfg.count; ++i) {
            const std::size_t n = size(rng);
            Graph g = cfg.generator == "dh" ? gen::random_distance_hereditary(n, rng)
                                            : gen::random_ptolemaic(n, rng);
            ++total;
            sweep_distance_hereditary(s, g, cfg);
            if (g.order() <= oracle::kMaxOrderVertices) {
                sweep_oracle(s, g, classes, cfg);
            }
        }
    } else {
        throw UsageError("unknown generator " + cfg.generator);
    }

    std::size_t disagreements = 0;
    std::cout << "graphs: " << total << "\n";
    for (const auto& [row, t] : s.rows) {
        std::cout << row << ": " << t.agree << " agree, " << t.disagree << " disagree";
        if (t.undecided) {
            std::cout << ", " << t.undecided << " undecided";
        }
        if (t.unchecked) {
            std::cout << ", " << t.unchecked << " unchecked";
        }
        std::cout << "\n";
        disagreements += t.disagree;
    }
    for (const auto& o : s.offending) {
        std::cout << "DISAGREE " << o << "\n";
    }
    return disagreements == 0 ? 0 : kDisagree;
}

std::uint64_t default_cap() {
    if (const char* env = std::getenv("OPPO_FLIP_CAP")) {
        try {
            auto cap = std::stoull(env);
            if (cap >= 1) {
                return cap;
            }
        } catch (const std::exception&) {
        }
        std::cerr << "ignoring invalid OPPO_FLIP_CAP=" << env << "\n";
    }
    return kDefaultFlipCap;
}

}  // namespace

int main(int argc, char** argv) {
    Config cfg;
    cfg.flip_cap = default_cap();

    CLI::App app{"Recognize opposition, generalized opposition and coalition graphs."};
    app.require_subcommand(1);
    const std::vector<std::string> classes{"opposition", "generalized-opposition", "coalition"};
    const std::vector<std::string> formats{"auto", "edgelist", "graph6"};

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", cfg.input, "graph file, '-' for stdin")->capture_default_str();
        sub->add_option("--format", cfg.format, "input format")
            ->check(CLI::IsMember(formats))
            ->capture_default_str();
        sub->add_option("--flip-cap", cfg.flip_cap, "flip-search prefix budget")
            ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()))
            ->capture_default_str();
    };

    auto* rec = app.add_subcommand("recognize", "decide class membership with a certificate");
    add_common(rec);
    rec->add_option("--class", cfg.klass)->check(CLI::IsMember(classes))->capture_default_str();
    rec->add_option("--output", cfg.output)
        ->check(CLI::IsMember({"human", "json", "dot"}))
        ->capture_default_str();
    rec->add_flag("--witness", cfg.witness, "locate a forbidden pattern on rejection");
    rec->add_flag("--oracle", cfg.oracle, "cross-check with brute force (exit 3 on mismatch)");

    auto* ori = app.add_subcommand("orient", "print a verified orientation");
    add_common(ori);
    ori->add_option("--class", cfg.klass)->check(CLI::IsMember(classes))->capture_default_str();
    ori->add_option("--output", cfg.orient_output)
        ->check(CLI::IsMember({"human", "json", "dot"}))
        ->capture_default_str();
    ori->add_option("--method", cfg.method, "auto, ptolemaic or transitive")
        ->check(CLI::IsMember({"auto", "ptolemaic", "transitive"}))
        ->capture_default_str();

    auto* aux = app.add_subcommand("aux", "DOT of the constraint graph O(G) or C(G)");
    add_common(aux);
    aux->add_option("--kind", cfg.kind)
        ->check(CLI::IsMember({"opposition", "coalition"}))
        ->capture_default_str();
    aux->add_flag("--check-bipartite", cfg.check_bipartite, "mark sides or report an odd walk");

    auto* swp = app.add_subcommand("sweep", "compare recognizers with oracles and characterizations");
    add_common(swp);
    swp->add_option("--class", cfg.sweep_class, "class or 'all'")
        ->check(CLI::IsMember({"all", "opposition", "generalized-opposition", "coalition"}))
        ->capture_default_str();
    swp->add_option("--generator", cfg.generator, "stdin (graph6 lines), trees, dh, ptolemaic")
        ->check(CLI::IsMember({"stdin", "trees", "dh", "ptolemaic"}))
        ->capture_default_str();
    swp->add_option("-n,--max-n", cfg.max_n, "largest order")->capture_default_str();
    swp->add_option("--count", cfg.count, "random graphs to draw")->capture_default_str();
    swp->add_option("--seed", cfg.seed)->capture_default_str();

    auto* orc = app.add_subcommand("oracle", "brute-force decision");
    add_common(orc);
    orc->add_option("--class", cfg.klass)->check(CLI::IsMember(classes))->capture_default_str();
    orc->add_flag("--all", cfg.all, "list every end-edge solution");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    try {
        if (rec->parsed()) {
            return cmd_recognize(cfg);
        }
        if (ori->parsed()) {
            return cmd_orient(cfg);
        }
        if (aux->parsed()) {
            return cmd_aux(cfg);
        }
        if (swp->parsed()) {
            return cmd_sweep(cfg);
        }
        return cmd_oracle(cfg);
    } catch (const ParseError& e) {
        std::cerr << "parse error at " << e.position() << ": " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const GraphError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    }
}
