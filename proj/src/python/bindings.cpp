#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gcn/analysis.hpp"
#include "gcn/arranger.hpp"
#include "gcn/ballsbins.hpp"
#include "gcn/boxgame.hpp"
#include "gcn/estimate.hpp"
#include "gcn/exact.hpp"
#include "gcn/experiment.hpp"
#include "gcn/game.hpp"
#include "gcn/graph.hpp"
#include "gcn/monitors.hpp"
#include "gcn/strategies.hpp"

namespace py = pybind11;
using namespace gcn;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

nlohmann::json py_to_json(const py::object& o) {
    return nlohmann::json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

py::dict trace_dict(const GameTrace& t) {
    py::list moves;
    for (const auto& m : t.moves) moves.append(py::make_tuple(m.t, m.player == Player::Maker ? "M" : "B", m.v, m.c));
    py::list levels, mins;
    for (const auto& s : t.snapshots) {
        levels.append(s.level);
        mins.append(s.min_avail);
    }
    py::dict d;
    d["k"] = t.header.k;
    d["maker"] = t.header.maker;
    d["breaker"] = t.header.breaker;
    d["seed"] = t.header.seed;
    d["moves"] = moves;
    d["levels"] = levels;
    d["min_avail"] = mins;
    d["outcome"] = to_string(t.outcome);
    d["witness"] = t.witness;
    d["diagnostic"] = t.diagnostic;
    return d;
}

std::unique_ptr<BinsAdversary> adversary_by_name(const std::string& name, int a, double removal_prob,
                                                 int max_removals, const std::string& script) {
    if (name == "random") return make_random_adversary(removal_prob, max_removals);
    if (name == "stacker") return make_stacker_adversary(a);
    if (name == "just-above") return make_just_above_adversary(a);
    if (name == "removal-heavy") return make_removal_heavy_adversary(removal_prob, max_removals, a);
    if (name == "leveler") return make_leveler_adversary();
    if (name == "custom-script") return make_scripted_adversary(script);
    throw std::invalid_argument("unknown adversary '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Coloring-game simulation lab";

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>())
        .def_property_readonly("n", &Graph::n)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("max_degree", &Graph::max_degree)
        .def("neighbors", &Graph::neighbors)
        .def("edges", &Graph::edges)
        .def("add_edge", &Graph::add_edge)
        .def("to_json", &serialize_graph)
        .def(py::self == py::self)
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.n()) + " edges=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("gen_gnp", &gen_gnp, py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("bipartite_minus_matching", [](int n) {
        auto b = bipartite_minus_matching(n);
        return py::make_tuple(std::move(b.graph), b.partner);
    });
    m.def("parse_graph", [](const std::string& s) { return parse_graph(s); });
    m.def("serialize_graph", &serialize_graph);
    m.def("mix", &mix, py::arg("master"), py::arg("index"));

    m.def(
        "play_game",
        [](const Graph& g, int k, const std::string& maker, const std::string& breaker, std::uint64_t seed,
           std::optional<std::vector<Vertex>> partner, int max_moves) {
            auto mk = make_strategy(maker);
            auto br = make_strategy(breaker, partner ? &*partner : nullptr);
            PlayOptions opt;
            opt.max_moves = max_moves;
            return trace_dict(play_game(g, k, *mk, *br, seed, opt));
        },
        py::arg("graph"), py::arg("k"), py::arg("maker"), py::arg("breaker"), py::arg("seed"),
        py::arg("partner") = py::none(), py::arg("max_moves") = -1);
    m.def(
        "play_game_jsonl",
        [](const Graph& g, int k, const std::string& maker, const std::string& breaker, std::uint64_t seed) {
            auto mk = make_strategy(maker);
            auto br = make_strategy(breaker);
            std::ostringstream s;
            write_trace_jsonl(s, play_game(g, k, *mk, *br, seed));
            return s.str();
        },
        py::arg("graph"), py::arg("k"), py::arg("maker"), py::arg("breaker"), py::arg("seed"));
    m.def(
        "solve_exact",
        [](const Graph& g, int k, int budget) {
            auto r = solve_exact(g, k, budget);
            return py::make_tuple(r.winner == Winner::Maker ? "MakerWon" : "BreakerWon", r.states);
        },
        py::arg("graph"), py::arg("k"), py::arg("vertex_budget") = 12);
    m.def(
        "available_colors",
        [](const Graph& g, int k, const std::vector<std::pair<Vertex, Color>>& moves, Vertex v) {
            GameState s(g, k);
            for (auto [u, c] : moves) s.apply(u, c);
            return available_colors(s, v);
        },
        py::arg("graph"), py::arg("k"), py::arg("moves"), py::arg("v"));

    m.def(
        "f_bound",
        [](int mm, int q, int d, int z) {
            auto f = f_bound(mm, q, d, z);
            auto fractions = py::module_::import("fractions");
            return fractions.attr("Fraction")(py::int_(py::str(boost::multiprecision::numerator(f).str())),
                                              py::int_(py::str(boost::multiprecision::denominator(f).str())));
        },
        py::arg("m"), py::arg("q"), py::arg("d"), py::arg("z"));
    m.def(
        "criterion_holds",
        [](const std::vector<std::int64_t>& sizes, int q, int d, int z) {
            auto r = criterion_holds(sizes, q, d, z);
            return py::make_tuple(r.holds, r.witness_m);
        },
        py::arg("sizes"), py::arg("q"), py::arg("d"), py::arg("z"));
    m.def(
        "play_boxgame",
        [](const std::vector<std::int64_t>& sizes, int q, int d, int z, const std::string& breaker,
           const std::string& claim, const std::string& steal, std::uint64_t seed) {
            BoxInstance inst{sizes, q, z, d};
            BoxBreakerPolicy pol;
            pol.elimination = parse_elimination_policy(breaker);
            pol.claim = parse_claim_policy(claim);
            pol.steal = parse_steal_schedule(steal);
            auto r = play_boxgame(inst, pol, seed);
            return r.winner == Winner::Maker ? "Maker" : "Breaker";
        },
        py::arg("sizes"), py::arg("q"), py::arg("d"), py::arg("z"), py::arg("breaker") = "smallest",
        py::arg("claim") = "largest", py::arg("steal") = "maximal", py::arg("seed") = 0);
    m.def(
        "solve_boxgame_exact",
        [](const std::vector<std::int64_t>& sizes, int q, int d, int z) {
            auto r = solve_boxgame_exact(BoxInstance{sizes, q, z, d});
            return r.winner == Winner::Maker ? "Maker" : "Breaker";
        },
        py::arg("sizes"), py::arg("q"), py::arg("d"), py::arg("z"));

    m.def(
        "play_ballsbins",
        [](int k, int N, const std::string& adversary, long balls, std::uint64_t seed, int a, double removal_prob,
           int max_removals, const std::string& script) {
            auto adv = adversary_by_name(adversary, a, removal_prob, max_removals, script);
            auto tr = play_ballsbins(k, N, *adv, balls, seed);
            py::list rows;
            for (const auto& b : tr.balls) rows.append(py::make_tuple(b.t, b.by_m ? "M" : "B", b.bin, b.load_after, b.stolen));
            py::dict d;
            d["balls"] = rows;
            d["levels"] = tr.level_at;
            d["final_loads"] = tr.final_loads;
            d["removed"] = tr.removals.size();
            py::list viol;
            if (a >= 2)
                for (const auto& v : check_level_loads(tr, a)) viol.append(py::make_tuple(v.level, v.c, v.bound));
            d["level_load_violations"] = viol;
            return d;
        },
        py::arg("k"), py::arg("N"), py::arg("adversary") = "random", py::arg("balls") = 1000, py::arg("seed") = 0,
        py::arg("a") = 4, py::arg("removal_prob") = 0.01, py::arg("max_removals") = 0, py::arg("script") = "");

    m.def(
        "color_arranging",
        [](const std::vector<Vertex>& U, const std::vector<std::vector<Color>>& avail, int q) {
            ArrangementInput in;
            in.U = U;
            in.avail = avail;
            in.q = q;
            auto r = color_arranging(in);
            auto rep = verify_arrangement(in, r);
            py::dict d;
            d["S"] = r.S;
            d["residual"] = r.residual;
            d["max_s"] = r.max_s;
            d["residual_ok"] = rep.residual_ok;
            d["size_ok"] = rep.size_ok;
            return d;
        },
        py::arg("U"), py::arg("avail"), py::arg("q"));

    m.def("constants", [](double alpha) {
        auto c = constants(alpha);
        py::dict d;
        d["alpha"] = c.alpha;
        d["xi"] = c.xi;
        d["N"] = c.N;
        py::list hs;
        for (const auto& ph : c.phases) hs.append(py::make_tuple(ph.h, ph.L, ph.c));
        d["H"] = hs;
        return d;
    });
    m.def(
        "rate_functions",
        [](int n, double p, double alpha, double h) {
            auto r = rate_functions(n, p, alpha, h);
            py::dict d;
            d["b"] = r.b;
            d["log_b_np"] = r.log_b_np;
            d["k_real"] = r.k_real;
            d["k"] = r.k;
            d["beta"] = r.beta;
            d["gamma"] = r.gamma;
            d["q"] = r.q;
            return d;
        },
        py::arg("n"), py::arg("p"), py::arg("alpha"), py::arg("h"));
    m.def("greedy_chromatic", &greedy_chromatic, py::arg("graph"), py::arg("seed"));
    m.def(
        "trace_monitors",
        [](const Graph& g, const std::string& jsonl, double p, double alpha) {
            std::istringstream in(jsonl);
            return json_to_py(trace_monitors(g, read_trace_jsonl(in), p, alpha).to_json());
        },
        py::arg("graph"), py::arg("trace_jsonl"), py::arg("p"), py::arg("alpha"));

    m.def(
        "estimate_chi_g",
        [](int n, double p, const std::string& maker, const std::vector<std::string>& breakers, int playouts,
           std::uint64_t seed, std::vector<int> grid, double threshold, unsigned workers) {
            EstimateConfig c;
            c.n = n;
            c.p = p;
            c.maker = maker;
            c.breakers = breakers;
            c.playouts = playouts;
            c.seed = seed;
            c.grid = std::move(grid);
            c.threshold = threshold;
            c.workers = workers;
            EstimateResult r;
            {
                py::gil_scoped_release release;
                r = estimate_chi_g(c);
            }
            std::ostringstream csv;
            write_cells_csv(csv, r.cells);
            py::dict d;
            d["csv"] = csv.str();
            d["k_star"] = r.k_star ? py::object(py::int_(*r.k_star)) : py::object(py::none());
            d["anchor_game"] = r.anchor_game;
            d["anchor_chromatic"] = r.anchor_chromatic;
            return d;
        },
        py::arg("n"), py::arg("p"), py::arg("maker") = "paper:auto",
        py::arg("breakers") = std::vector<std::string>{"random", "colorhog", "minavail"}, py::arg("playouts") = 100,
        py::arg("seed") = 0, py::arg("grid") = std::vector<int>{}, py::arg("threshold") = 0.95,
        py::arg("workers") = 0);

    m.def(
        "run",
        [](const py::dict& config) {
            auto cfg = ExperimentConfig::from_json(py_to_json(config));
            std::ostringstream out, err;
            int code = 0;
            {
                py::gil_scoped_release release;
                code = gcn::run(cfg, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("config"));
    m.def("config_hash", [](const py::dict& config) { return config_hash(ExperimentConfig::from_json(py_to_json(config))); });
}
