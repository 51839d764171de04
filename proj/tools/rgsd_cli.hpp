#pragma once

// Command-line front end. run_cli() takes the arguments after the program
// name and writes to the given streams, so tests can drive it in-process.
//
// Exit codes: 0 affirmative, 1 negative, 2 input error.

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "rgsd/io.hpp"
#include "rgsd/rgsd.hpp"

namespace rgsd::cli {

using json = nlohmann::json;

enum Exit : int { affirmative = 0, negative = 1, input_error = 2 };

/// Input problems detected after argument parsing.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

struct Options {
    bool json = false;
    std::string graph;
    std::string graph2;
    std::string steps_file;
    std::vector<std::string> sigmas;
    std::string word;
    std::string word2;
    std::string orbit;
    std::string side = "plus";
    std::string alignment = "units";
    std::size_t length = 1;
    std::size_t horizon = 1;
    std::optional<std::size_t> omega;
    std::size_t max_length = 3;
    std::size_t max_period = 3;
    std::size_t n = 1;
    std::size_t k = 2;
    std::size_t g = 2;
    std::optional<std::size_t> h;
    std::optional<std::size_t> horizons;
    std::size_t limit = 100;
    int which = 0;
    bool literal_c = false;
    bool reverse_plus_paths = false;
};

inline RGraph load_graph(const std::string& path) {
    try {
        return RGraph(io::read_graph(path));
    } catch (const InvalidGraph& e) {
        throw InputError(path + ": " + e.what());
    }
}

inline ShiftPresentation load_presentation(const Options& o, const std::vector<std::string>& sigmas) {
    std::vector<StepRequest> steps;
    if (!o.steps_file.empty()) steps = io::steps_from_json(io::read_json_file(o.steps_file));
    for (const auto& s : sigmas) steps.push_back({s, std::nullopt});
    try {
        return apply_expansion_sequence(load_graph(o.graph), steps);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

inline Word parse_nonempty(const ShiftPresentation& p, const std::string& text, const char* what) {
    auto w = p.parse_word(text);
    if (w.empty()) throw InputError(std::string(what) + " is empty");
    return w;
}

inline json words_json(const ShiftPresentation& p, const std::vector<Word>& ws) {
    json a = json::array();
    for (const auto& w : ws) a.push_back(p.format(w));
    return a;
}

inline std::string edge_list(const RGraph& g, std::span<const EdgeRef> es) {
    std::string s;
    for (auto e : es) s += (s.empty() ? "" : " ") + g.edge_id(e);
    return s;
}

inline std::string describe(const RGraph& g, const ConditionResult& r) {
    return std::visit(
        [&](const auto& w) -> std::string {
            using W = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<W, std::monostate>) {
                return {};
            } else if constexpr (std::is_same_v<W, EdgePairWitness>) {
                return "edges " + g.edge_id(w.first) + " and " + g.edge_id(w.second) + " have equal omega sets";
            } else if constexpr (std::is_same_v<W, CycleWitness>) {
                return "cycle " + edge_list(g, w.edges);
            } else if constexpr (std::is_same_v<W, VertexWitness>) {
                return "vertex " + g.vertex_name(w.vertex);
            } else {
                return "vertices " + g.vertex_name(w.from) + " -> " + g.vertex_name(w.to) + ", minus path [" +
                       edge_list(g, w.minus_path) + "], plus path [" + edge_list(g, w.plus_path) + "]";
            }
        },
        r.witness);
}

inline json conditions_json(const RGraph& g, const ConditionReport& rep) {
    json a = json::array();
    for (const auto& r : rep.results) {
        json item{{"condition", std::string(to_string(r.condition))}, {"holds", r.holds}};
        if (!r.holds) item["witness"] = describe(g, r);
        a.push_back(std::move(item));
    }
    return a;
}

inline void print_report(std::ostream& out, const LemmaReport& r) {
    out << "lemma " << r.lemma;
    for (const auto& [k, v] : r.params) out << ' ' << k << '=' << v;
    out << '\n';
    for (const auto& c : r.counterexamples) out << "counterexample: " << c << '\n';
    out << r.checked << " checked";
    if (r.skipped) out << ", " << r.skipped << " skipped (precondition)";
    out << '\n' << r.counterexamples.size() << " counterexamples\n";
}

inline HorizonAlignment parse_alignment(const std::string& s) {
    return s == "shifted" ? HorizonAlignment::shifted : HorizonAlignment::units;
}

// --- subcommands -----------------------------------------------------------

inline int cmd_validate(const Options& o, std::ostream& out) {
    auto data = io::read_graph(o.graph);
    auto v = validate(data);
    if (o.json) {
        json a = json::array();
        for (const auto& x : v.violations) a.push_back({{"kind", std::string(to_string(x.kind))}, {"message", x.detail}});
        out << json{{"valid", v.ok()}, {"violations", a}}.dump(2) << '\n';
    } else if (v.ok()) {
        out << "ok\n";
    } else {
        for (const auto& x : v.violations) out << "violation: " << to_string(x.kind) << ": " << x.detail << '\n';
    }
    return v.ok() ? affirmative : negative;
}

inline int cmd_conditions(const Options& o, std::ostream& out, std::ostream& err) {
    auto data = io::read_graph(o.graph);
    if (auto v = validate(data); !v.ok()) {
        err << "error: " << o.graph << " is not a valid R-graph\n";
        for (const auto& x : v.violations) err << "  " << to_string(x.kind) << ": " << x.detail << '\n';
        return negative;
    }
    RGraph g(std::move(data));
    auto rep = check_conditions(g, {o.literal_c, o.reverse_plus_paths});
    if (o.json) {
        out << json{{"all_hold", rep.all_hold()}, {"conditions", conditions_json(g, rep)}}.dump(2) << '\n';
    } else {
        for (const auto& r : rep.results) {
            out << to_string(r.condition) << (r.holds ? " holds" : " fails");
            if (!r.holds) out << ": " << describe(g, r);
            out << '\n';
        }
    }
    return rep.all_hold() ? affirmative : negative;
}

inline std::string format_iso(const RGraph& a, const RGraph& b, const GraphIso& iso) {
    std::string s;
    for (auto v : a.vertices()) s += (s.empty() ? "" : " ") + a.vertex_name(v) + "->" + b.vertex_name(iso.vertex_map[index_of(v)]);
    s += ";";
    for (auto e : a.edges()) s += " " + a.edge_id(e) + "->" + b.edge_id(iso.edge_map[index_of(e)]);
    return s;
}

inline int cmd_pipeline(const Options& o, std::ostream& out) {
    auto a = load_graph(o.graph);
    auto b = load_graph(o.graph2);
    auto ca = check_conditions(a);
    auto cb = check_conditions(b);
    auto failing = [](const ConditionReport& r) {
        std::string s;
        for (const auto& x : r.results)
            if (!x.holds) s += (s.empty() ? "" : " ") + std::string(to_string(x.condition));
        return s;
    };
    std::vector<std::string> warnings;
    for (auto [name, rep] : {std::pair{&o.graph, &ca}, std::pair{&o.graph2, &cb}}) {
        if (!rep->all_hold())
            warnings.push_back("conditions " + failing(*rep) + " fail for " + *name +
                               "; flow equivalence is not known to force isomorphism for this graph");
    }

    auto fa = fingerprint(a);
    auto fb = fingerprint(b);
    auto diff = first_difference(fa, fb);
    IsoSearchResult search;
    if (diff.empty()) search = find_isomorphisms(a, b, o.limit);

    std::string verdict;
    int rc = negative;
    if (!diff.empty()) {
        verdict = "not isomorphic (invariant " + diff + " differs)";
    } else if (!search.isomorphisms.empty()) {
        verdict = "isomorphic (" + std::to_string(search.isomorphisms.size()) + " maps listed" +
                  (search.status == SearchStatus::limit_reached ? ", limit reached" : "") + ")";
        rc = affirmative;
    } else if (search.status == SearchStatus::exhaustive) {
        verdict = "no isomorphism found (exhaustive)";
    } else {
        verdict = "search aborted after " + std::to_string(search.nodes) + " nodes (no isomorphism found so far)";
    }

    if (o.json) {
        json maps = json::array();
        for (const auto& iso : search.isomorphisms) {
            json vm = json::object(), em = json::object();
            for (auto v : a.vertices()) vm[a.vertex_name(v)] = b.vertex_name(iso.vertex_map[index_of(v)]);
            for (auto e : a.edges()) em[a.edge_id(e)] = b.edge_id(iso.edge_map[index_of(e)]);
            maps.push_back({{"vertex_map", vm}, {"edge_map", em}});
        }
        out << json{{"conditions", {{"first", conditions_json(a, ca)}, {"second", conditions_json(b, cb)}}},
                    {"warnings", warnings},
                    {"fingerprints_equal", diff.empty()},
                    {"differing_invariant", diff},
                    {"search_status", diff.empty() ? std::string(to_string(search.status)) : "skipped"},
                    {"isomorphisms", maps},
                    {"verdict", verdict}}
                   .dump(2)
            << '\n';
        return rc;
    }
    out << o.graph << ": conditions " << (ca.all_hold() ? "hold" : "fail: " + failing(ca)) << '\n';
    out << o.graph2 << ": conditions " << (cb.all_hold() ? "hold" : "fail: " + failing(cb)) << '\n';
    for (const auto& w : warnings) out << "warning: " << w << '\n';
    out << "fingerprints " << (diff.empty() ? "agree" : "differ") << '\n';
    out << verdict << '\n';
    for (std::size_t i = 0; i < search.isomorphisms.size(); ++i)
        out << "map " << i + 1 << ": " << format_iso(a, b, search.isomorphisms[i]) << '\n';
    return rc;
}

inline int cmd_enumerate(const Options& o, std::ostream& out) {
    auto p = load_presentation(o, o.sigmas);
    if (o.length == 0) throw InputError("--length must be at least 1");
    auto ws = enumerate_words(p, o.length);
    if (o.json) {
        out << json{{"length", o.length}, {"count", ws.size()}, {"words", words_json(p, ws)}}.dump(2) << '\n';
    } else {
        for (const auto& w : ws) out << p.format(w) << '\n';
    }
    return affirmative;
}

inline int cmd_admissible(const Options& o, std::ostream& out) {
    auto p = load_presentation(o, o.sigmas);
    auto w = parse_nonempty(p, o.word, "--word");
    bool ok = is_admissible(p, w);
    if (o.json) out << json{{"word", p.format(w)}, {"admissible", ok}}.dump(2) << '\n';
    else out << (ok ? "yes" : "no") << '\n';
    return ok ? affirmative : negative;
}

inline int cmd_gamma(const Options& o, std::ostream& out) {
    auto p = load_presentation(o, o.sigmas);
    auto w = parse_nonempty(p, o.word, "--word");
    if (o.horizon == 0) throw InputError("--horizon must be at least 1");
    if (!is_admissible(p, w)) throw InputError("word '" + p.format(w) + "' is not admissible");
    bool plus = o.side == "plus";
    HorizonSet set;
    if (o.omega) {
        if (*o.omega == 0) throw InputError("--omega must be at least 1");
        set = plus ? omega_plus_truncated(p, w, o.horizon, *o.omega) : omega_minus_truncated(p, w, o.horizon, *o.omega);
    } else {
        set = plus ? follower_set(p, w, o.horizon) : predecessor_set(p, w, o.horizon);
    }
    if (o.json) {
        json j{{"word", p.format(w)}, {"side", o.side}, {"horizon", o.horizon}, {"members", words_json(p, set.members)}};
        if (o.omega) j["omega"] = *o.omega;
        out << j.dump(2) << '\n';
    } else {
        for (const auto& m : set.members) out << p.format(m) << '\n';
    }
    return affirmative;
}

inline int cmd_contexts(const Options& o, std::ostream& out) {
    auto p = load_presentation(o, o.sigmas);
    if (o.max_length == 0 || o.horizon == 0) throw InputError("--maxlen and --horizon must be at least 1");
    auto classes = context_classes(p, o.max_length, o.horizon);
    if (o.json) {
        json a = json::array();
        for (const auto& c : classes) a.push_back(words_json(p, c));
        out << json{{"max_length", o.max_length}, {"horizon", o.horizon}, {"classes", a}}.dump(2) << '\n';
    } else {
        for (std::size_t i = 0; i < classes.size(); ++i) {
            out << "class " << i + 1 << ":";
            for (const auto& w : classes[i]) out << " [" << p.format(w) << "]";
            out << '\n';
        }
    }
    return affirmative;
}

inline int cmd_orbits(const Options& o, std::ostream& out) {
    auto p = load_presentation(o, o.sigmas);
    if (o.max_period == 0) throw InputError("--max-period must be at least 1");
    auto e = enumerate_periodic_orbits(p, o.max_period);
    if (o.json) {
        json a = json::array();
        for (const auto& orb : e.orbits) a.push_back({{"period", orb.period()}, {"word", p.format(orb.period_word)}});
        out << json{{"orbits", a}, {"inconclusive", words_json(p, e.inconclusive)}}.dump(2) << '\n';
    } else {
        for (const auto& orb : e.orbits) out << "period " << orb.period() << ": " << p.format(orb.period_word) << '\n';
        for (const auto& w : e.inconclusive) out << "inconclusive: " << p.format(w) << '\n';
    }
    return affirmative;
}

inline PeriodicOrbit parse_orbit(const ShiftPresentation& p, const std::string& text) {
    auto w = parse_nonempty(p, text, "--orbit");
    w = primitive_root(w);
    try {
        return make_orbit(p, w);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

inline int cmd_anwindow(const Options& o, std::ostream& out) {
    auto p = load_presentation(o, o.sigmas);
    auto orbit = parse_orbit(p, o.orbit);
    auto k = o.horizons.value_or(o.k);
    auto g = o.horizons.value_or(o.g);
    if (o.n == 0 || k == 0 || g == 0) throw InputError("--n and the horizons must be at least 1");
    auto r = an_window_check_detailed(p, orbit, o.n, k, g);
    const char* side = r.side == WindowSide::forward ? "forward" : "backward";
    if (o.json) {
        json j{{"orbit", p.format(orbit.period_word)}, {"n", o.n}, {"k", k}, {"g", g}, {"passed", r.passed}};
        if (!r.passed) {
            j["failing_phase"] = r.failing_phase;
            j["side"] = side;
        }
        out << j.dump(2) << '\n';
    } else if (r.passed) {
        out << "pass\n";
    } else {
        out << "fail at phase " << r.failing_phase << " (" << side << ")\n";
    }
    return r.passed ? affirmative : negative;
}

inline int cmd_expand(const Options& o, std::ostream& out) {
    ShiftPresentation base(load_graph(o.graph));
    auto p = load_presentation(o, o.sigmas);
    std::optional<Word> image;
    if (!o.word.empty()) {
        Word w = parse_nonempty(base, o.word, "--word");
        for (const auto& step : p.steps()) w = expand_word(w, step);
        image = std::move(w);
    }
    Word alphabet(p.alphabet().begin(), p.alphabet().end());
    if (o.json) {
        json steps = json::array();
        for (const auto& s : p.steps()) steps.push_back({{"sigma", p.name(s.sigma)}, {"bullet", p.name(s.bullet)}});
        json j{{"steps", steps}, {"alphabet", p.format(alphabet)}};
        if (image) j["image"] = p.format(*image);
        out << j.dump(2) << '\n';
        return affirmative;
    }
    for (std::size_t i = 0; i < p.steps().size(); ++i) {
        const auto& s = p.steps()[i];
        out << "step " << i + 1 << ": " << p.name(s.sigma) << " -> " << p.name(s.sigma) << ' ' << p.name(s.bullet) << '\n';
    }
    out << "alphabet: " << p.format(alphabet) << '\n';
    if (image) out << "image: " << p.format(*image) << '\n';
    return affirmative;
}

inline int cmd_lemma(const Options& o, std::ostream& out) {
    auto p = load_presentation(o, {});
    if (o.sigmas.size() != 1) throw InputError("lemma needs exactly one --sigma");
    auto sigma = p.find(o.sigmas.front());
    if (!sigma) throw InputError("unknown sigma '" + o.sigmas.front() + "'");
    auto align = parse_alignment(o.alignment);
    auto [q, step] = with_expansion(p, *sigma);

    LemmaReport r;
    switch (o.which) {
    case 21:
        if (o.k == 0 || o.g == 0) throw InputError("--k and --g must be at least 1");
        if (!o.word.empty()) {
            auto a = parse_nonempty(p, o.word, "--word");
            if (!is_admissible(p, a)) throw InputError("anchor word is not admissible");
            auto t = verify_omega_transport(p, *sigma, a, o.k, o.g, align);
            r = {"21",
                 {{"sigma", p.name(*sigma)},
                  {"word", p.format(a)},
                  {"k", std::to_string(o.k)},
                  {"g", std::to_string(o.g)},
                  {"alignment", std::string(to_string(align))}},
                 1,
                 0,
                 {}};
            if (!t.equal)
                r.counterexamples.push_back(std::string(t.witness_in_image ? "image-only" : "expanded-only") + " member [" +
                                            q.format(*t.witness) + "]");
        } else {
            r = verify_omega_transport_batch(p, *sigma, o.max_length, o.k, o.g, align);
        }
        break;
    case 22: {
        auto h = o.h.value_or(1);
        if (h == 0) throw InputError("--h must be at least 1");
        if (!o.word.empty() || !o.word2.empty()) {
            auto b = parse_nonempty(p, o.word, "--word");
            auto b2 = parse_nonempty(p, o.word2, "--word2");
            if (!is_admissible(p, b) || !is_admissible(p, b2)) throw InputError("both words must be admissible");
            auto t = verify_context_transport(p, *sigma, b, b2, h, align);
            r = {"22",
                 {{"sigma", p.name(*sigma)},
                  {"word", p.format(b)},
                  {"word2", p.format(b2)},
                  {"h", std::to_string(h)},
                  {"alignment", std::string(to_string(align))},
                  {"base", t.base_equal ? "equal" : "unequal"},
                  {"expanded", t.expanded_equal ? "equal" : "unequal"}},
                 1,
                 0,
                 {}};
            if (!t.agree())
                r.counterexamples.push_back(std::string("base ") + (t.base_equal ? "equal" : "unequal") + ", expanded " +
                                            (t.expanded_equal ? "equal" : "unequal"));
        } else {
            r = verify_context_transport_batch(p, *sigma, o.max_length, h, align);
        }
        break;
    }
    case 31:
        if (o.n == 0 || o.k == 0 || o.g == 0) throw InputError("--n, --k and --g must be at least 1");
        if (!o.orbit.empty()) {
            auto orbit = parse_orbit(p, o.orbit);
            auto t = verify_window_inclusion(p, *sigma, orbit, o.n, o.k, o.g);
            r = {"31",
                 {{"sigma", p.name(*sigma)},
                  {"orbit", p.format(orbit.period_word)},
                  {"image", q.format(t.image.period_word)},
                  {"n", std::to_string(o.n)},
                  {"k", std::to_string(o.k)},
                  {"g", std::to_string(o.g)}},
                 0,
                 0,
                 {}};
            if (t.status == InclusionStatus::precondition_failed) {
                r.skipped = 1;
            } else {
                r.checked = 1;
                if (t.status == InclusionStatus::failed)
                    r.counterexamples.push_back("image fails at phase " + std::to_string(t.window.failing_phase));
            }
        } else {
            if (o.max_period == 0) throw InputError("--max-period must be at least 1");
            r = verify_window_inclusion_batch(p, *sigma, o.max_period, o.n, o.k, o.g);
        }
        break;
    default: throw InputError("--which must be 21, 22 or 31");
    }

    if (o.json) out << io::report_to_json(r).dump(2) << '\n';
    else print_report(out, r);
    return r.passed() ? affirmative : negative;
}

inline int cmd_fingerprint(const Options& o, std::ostream& out) {
    auto g = load_graph(o.graph);
    auto f = fingerprint(g);
    auto degrees = [](const std::vector<std::size_t>& d) {
        std::string s = "{";
        for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
        return s + "}";
    };
    if (o.json) {
        json pairs = json::array();
        for (const auto& pp : f.pairs)
            pairs.push_back({{"minus_edges", pp.minus_edges},
                             {"plus_edges", pp.plus_edges},
                             {"related", pp.related},
                             {"minus_degrees", pp.minus_degrees},
                             {"plus_degrees", pp.plus_degrees}});
        out << json{{"vertices", f.vertices},
                    {"pairs", pairs},
                    {"minus_R", f.minus_R},
                    {"plus_R", f.plus_R},
                    {"single_predecessor", f.single_predecessor},
                    {"single_predecessor_full", f.single_predecessor_full}}
                   .dump(2)
            << '\n';
        return affirmative;
    }
    out << "vertices: " << f.vertices << '\n';
    for (const auto& pp : f.pairs)
        out << "pair: minus " << pp.minus_edges << ", plus " << pp.plus_edges << ", related " << pp.related
            << ", degrees " << degrees(pp.minus_degrees) << ' ' << degrees(pp.plus_degrees) << '\n';
    out << "E-_R: " << f.minus_R << "\nE+_R: " << f.plus_R << "\nP(1): " << f.single_predecessor
        << "\nP(1)_R: " << f.single_predecessor_full << '\n';
    return affirmative;
}

} // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using namespace detail;
    Options o;
    CLI::App app{"R-graph semigroups, shift languages and symbol expansion"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.name("rgsd");
    app.require_subcommand(1);
    app.add_flag("--json", o.json, "Emit JSON instead of text");

    auto graph_arg = [&](CLI::App* c) { c->add_option("graph", o.graph, "R-graph JSON file")->required(); };
    auto language_opts = [&](CLI::App* c) {
        graph_arg(c);
        c->add_option("--steps", o.steps_file, "JSON file of expansion steps");
        c->add_option("--sigma", o.sigmas, "Expand this symbol (repeatable, applied after --steps)");
    };

    std::function<int()> action;
    auto on = [&](CLI::App* c, auto fn) { c->callback([&action, fn] { action = fn; }); };

    auto* validate_cmd = app.add_subcommand("validate", "Check the structural invariants of a graph file");
    graph_arg(validate_cmd);
    on(validate_cmd, [&] { return cmd_validate(o, out); });

    auto* cond = app.add_subcommand("conditions", "Evaluate conditions (a-), (a+), (b-), (b+), (c), (d)");
    graph_arg(cond);
    cond->add_flag("--literal-c", o.literal_c, "Evaluate (c) as literally written (E- tested twice)");
    cond->add_flag("--reverse-plus-paths", o.reverse_plus_paths, "In (d), look for the plus path from r to q");
    on(cond, [&] { return cmd_conditions(o, out, err); });

    auto* pipe = app.add_subcommand("pipeline", "Conditions, fingerprints and isomorphism search for two graphs");
    pipe->add_option("graph1", o.graph, "First R-graph file")->required();
    pipe->add_option("graph2", o.graph2, "Second R-graph file")->required();
    pipe->add_option("--limit", o.limit, "Maximum number of isomorphisms to list")->check(CLI::PositiveNumber);
    on(pipe, [&] { return cmd_pipeline(o, out); });

    auto* en = app.add_subcommand("enumerate", "List the admissible words of one length");
    language_opts(en);
    en->add_option("--length", o.length, "Word length")->required();
    on(en, [&] { return cmd_enumerate(o, out); });

    auto* adm = app.add_subcommand("admissible", "Decide whether a word is admissible");
    language_opts(adm);
    adm->add_option("--word", o.word, "Whitespace-separated symbols")->required();
    on(adm, [&] { return cmd_admissible(o, out); });

    auto* gam = app.add_subcommand("gamma", "Follower or predecessor set of a word, or its omega set");
    language_opts(gam);
    gam->add_option("--word", o.word, "Anchor word")->required();
    gam->add_option("--horizon", o.horizon, "Length of the listed extensions")->required();
    gam->add_option("--side", o.side, "plus (followers) or minus (predecessors)")
        ->check(CLI::IsMember({"plus", "minus"}));
    gam->add_option("--omega", o.omega, "Opposite-side horizon; lists the omega set instead");
    on(gam, [&] { return cmd_gamma(o, out); });

    auto* ctx = app.add_subcommand("contexts", "Group admissible words by their context sets");
    language_opts(ctx);
    ctx->add_option("--maxlen", o.max_length, "Maximum word length")->required();
    ctx->add_option("--horizon", o.horizon, "Context length on each side")->required();
    on(ctx, [&] { return cmd_contexts(o, out); });

    auto* orb = app.add_subcommand("orbits", "List periodic orbits by period");
    language_opts(orb);
    orb->add_option("--max-period", o.max_period, "Maximum period")->required();
    on(orb, [&] { return cmd_orbits(o, out); });

    auto* anw = app.add_subcommand("anwindow", "Finite-window A_n test for a periodic orbit");
    language_opts(anw);
    anw->add_option("--orbit", o.orbit, "Period word")->required();
    anw->add_option("--n", o.n, "Block length n");
    anw->add_option("--k", o.k, "Follower horizon");
    anw->add_option("--g", o.g, "Predecessor horizon");
    anw->add_option("--horizons", o.horizons, "Sets both --k and --g");
    on(anw, [&] { return cmd_anwindow(o, out); });

    auto* exp = app.add_subcommand("expand", "Apply symbol expansions; optionally map a word");
    language_opts(exp);
    exp->add_option("--word", o.word, "Word over the original alphabet to map through every step");
    on(exp, [&] { return cmd_expand(o, out); });

    auto* lem = app.add_subcommand("lemma", "Finite-horizon transport checks under one expansion");
    graph_arg(lem);
    lem->add_option("--steps", o.steps_file, "Expansions applied before the checked one");
    lem->add_option("--which", o.which, "21 (omega sets), 22 (context sets) or 31 (A_n windows)")
        ->required()
        ->check(CLI::IsMember({21, 22, 31}));
    lem->add_option("--sigma", o.sigmas, "Symbol to expand")->required()->expected(1);
    lem->add_option("--word", o.word, "Single anchor (21) or first word (22)");
    lem->add_option("--word2", o.word2, "Second word (22)");
    lem->add_option("--orbit", o.orbit, "Single period word (31)");
    lem->add_option("--maxlen", o.max_length, "Maximum word length in batch mode (21, 22)");
    lem->add_option("--max-period", o.max_period, "Maximum period in batch mode (31)");
    lem->add_option("--k", o.k, "Follower horizon (21, 31)");
    lem->add_option("--g", o.g, "Predecessor horizon (21, 31)");
    lem->add_option("--h", o.h, "Context horizon (22)");
    lem->add_option("--n", o.n, "Block length (31)");
    lem->add_option("--alignment", o.alignment, "Expanded-side horizons: units or shifted (21, 22)")
        ->check(CLI::IsMember({"units", "shifted"}));
    on(lem, [&] { return cmd_lemma(o, out); });

    auto* fp = app.add_subcommand("fingerprint", "Print the isomorphism-invariant fingerprint");
    graph_arg(fp);
    on(fp, [&] { return cmd_fingerprint(o, out); });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? affirmative : input_error;
    }

    try {
        return action();
    } catch (const io::ParseError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const UnknownSymbol& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
    }
    return input_error;
}

} // namespace rgsd::cli
