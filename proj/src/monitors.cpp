#include "gcn/monitors.hpp"

#include <cmath>
#include <stdexcept>

#include "gcn/strategies.hpp"

namespace gcn {

namespace {

int near_level_count(const GameState& s, int lvl, double slack) {
    int count = 0;
    for (Color c = 1; c <= s.k(); ++c)
        if (s.is_active(c) && s.class_size(c) <= lvl + slack) ++count;
    return count;
}

}  // namespace

MonitorReport trace_monitors(const Graph& graph, const GameTrace& trace, double p, double alpha, bool keep_steps) {
    if (!(p > 0 && p < 1)) throw std::invalid_argument("trace_monitors: edge probability p in (0,1) required");
    if (graph.n() != trace.header.n) throw std::invalid_argument("trace_monitors: graph does not match the trace");
    const Constants cst = constants(alpha);
    MonitorReport r;
    r.n = graph.n();
    r.p = p;
    r.alpha = alpha;
    r.k = trace.header.k;
    r.xi = cst.xi;
    r.log_b_np = log_b_np(r.n, p);
    const double np = r.n * p;
    r.gate = std::pow(np, 1 - 4 * cst.xi);
    r.level_threshold = (1 / alpha + cst.xi) * r.log_b_np;
    r.near_threshold_8 = cst.xi * r.k / 8;
    r.near_threshold_10 = cst.xi * r.k / 10;
    r.elimination_budget = static_cast<int>(std::ceil(r.gate));
    std::vector<RateValues> rates;
    for (const auto& ph : cst.phases) {
        r.phases.push_back(ph.h);
        rates.push_back(rate_functions(r.n, p, alpha, ph.h));
    }

    GameState state(graph, r.k);
    std::vector<char> was_active(static_cast<std::size_t>(r.k) + 1, 1);
    int eliminated_low = 0;
    std::vector<long> below(static_cast<std::size_t>(r.k) + 2, 0);

    for (std::size_t s = 0;; ++s) {
        if (state.uncolored_count() < r.gate) break;
        const int t = state.t();
        MonitorStep step;
        step.t = t;
        const auto lvl = level(state);
        step.level = lvl.value_or(-1);

        for (Color c = 1; c <= r.k; ++c) {
            if (was_active[c] && !state.is_active(c)) {
                was_active[c] = 0;
                if (state.class_size(c) <= r.level_threshold) ++eliminated_low;
            }
        }
        step.eliminated_low = eliminated_low;
        r.max_eliminated_low = std::max(r.max_eliminated_low, eliminated_low);
        if (eliminated_low > r.elimination_budget)
            r.violations.push_back({"elimination", t, static_cast<double>(eliminated_low),
                                    static_cast<double>(r.elimination_budget), step.level, state.uncolored_count()});
        if (eliminated_low > r.elimination_budget) ++r.elimination_violations;

        if (lvl) {
            if (*lvl >= r.level_threshold) {
                ++r.level_violations;
                r.violations.push_back({"level", t, static_cast<double>(*lvl), r.level_threshold, *lvl,
                                        state.uncolored_count()});
            }
            step.near_level = near_level_count(state, *lvl, cst.xi * r.log_b_np);
            if (r.min_near_level < 0 || step.near_level < r.min_near_level) r.min_near_level = step.near_level;
            if (step.near_level < r.near_threshold_8) ++r.near_below_8;
            if (step.near_level < r.near_threshold_10) ++r.near_below_10;

            // below[x] = uncolored vertices with a(v) < x
            below[0] = 0;
            for (int x = 0; x <= r.k; ++x) below[x + 1] = below[x] + state.count_with_availability(x);
            for (std::size_t j = 0; j < rates.size(); ++j) {
                const double h = cst.phases[j].h;
                const bool pre = *lvl <= (h - cst.xi) * r.log_b_np && step.near_level >= r.near_threshold_10;
                if (!pre) {
                    step.dangerous.push_back(-1);
                    continue;
                }
                const double half_beta = rates[j].beta / 2;
                // a(v) < beta/2  <=>  a(v) <= ceil(beta/2) - 1
                const int cutoff = std::clamp(static_cast<int>(std::ceil(half_beta)), 0, r.k + 1);
                const auto dangerous = static_cast<int>(below[cutoff]);
                step.dangerous.push_back(dangerous);
                ++r.dangerous_checks;
                if (dangerous >= rates[j].gamma) {
                    ++r.dangerous_violations;
                    r.violations.push_back({"dangerous:h=" + std::to_string(h), t, static_cast<double>(dangerous),
                                            rates[j].gamma, *lvl, state.uncolored_count()});
                }
            }
        }
        ++r.steps;
        if (keep_steps) r.step_log.push_back(std::move(step));
        if (s >= trace.moves.size()) break;
        state.apply(trace.moves[s].v, trace.moves[s].c);
    }
    if (r.near_below_10 > 0)
        r.binding_near_threshold = "both";
    else if (r.near_below_8 > 0)
        r.binding_near_threshold = "xi*k/8";
    else
        r.binding_near_threshold = "none";
    return r;
}

nlohmann::json MonitorReport::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["p"] = p;
    j["alpha"] = alpha;
    j["k"] = k;
    j["xi"] = xi;
    j["log_b_np"] = log_b_np;
    j["gate"] = gate;
    j["level_threshold"] = level_threshold;
    j["near_threshold_8"] = near_threshold_8;
    j["near_threshold_10"] = near_threshold_10;
    j["elimination_budget"] = elimination_budget;
    j["phases"] = phases;
    j["steps"] = steps;
    j["level_violations"] = level_violations;
    j["elimination_violations"] = elimination_violations;
    j["max_eliminated_low"] = max_eliminated_low;
    j["near_below_8"] = near_below_8;
    j["near_below_10"] = near_below_10;
    j["min_near_level"] = min_near_level;
    j["binding_near_threshold"] = binding_near_threshold;
    j["dangerous_checks"] = dangerous_checks;
    j["dangerous_violations"] = dangerous_violations;
    auto& vs = j["violations"] = nlohmann::json::array();
    for (const auto& v : violations)
        vs.push_back({{"monitor", v.monitor}, {"t", v.t}, {"value", v.value}, {"threshold", v.threshold},
                      {"level", v.level}, {"uncolored", v.uncolored}});
    if (!step_log.empty()) {
        auto& st = j["step_log"] = nlohmann::json::array();
        for (const auto& s : step_log)
            st.push_back({{"t", s.t}, {"level", s.level}, {"near_level", s.near_level},
                          {"eliminated_low", s.eliminated_low}, {"dangerous", s.dangerous}});
    }
    return j;
}

std::optional<int> maker_period_from_descriptor(const std::string& descriptor) {
    if (descriptor == "greedy") return 1;
    try {
        auto strategy = make_strategy(descriptor);
        if (auto* phased = dynamic_cast<const PhasedMakerStrategy*>(strategy.get())) return phased->config().N;
    } catch (const std::invalid_argument&) {
    }
    return std::nullopt;
}

DecompositionReport endgame_decomposition(const Graph& graph, const GameTrace& trace, double p, double alpha,
                                          const DecompositionOptions& options) {
    if (trace.outcome != Outcome::BreakerWon && !options.cut_time)
        throw std::invalid_argument("endgame_decomposition: trace is not a Breaker win and no cut time was given");
    if (!(p > 0 && p < 1)) throw std::invalid_argument("endgame_decomposition: p must lie in (0,1)");
    const auto N = options.N ? options.N : maker_period_from_descriptor(trace.header.maker);
    if (!N || *N < 1) throw std::invalid_argument("endgame_decomposition: unknown Maker period N");

    const Constants cst = constants(alpha);
    const int n = graph.n();
    const double lbn = log_b_np(n, p);
    const int d0 = static_cast<int>(std::ceil(std::pow(n * p, 1 - 4 * cst.xi)));

    DecompositionReport rep;
    rep.N = *N;
    rep.t = options.cut_time ? *options.cut_time : static_cast<int>(trace.moves.size()) + 1;
    if (rep.t < 1 || rep.t > static_cast<int>(trace.moves.size()) + 1)
        throw std::invalid_argument("endgame_decomposition: cut time outside the trace");

    // a(v) before each move, and the level after each prefix.
    std::vector<int> avail_before(trace.moves.size());
    std::vector<int> level_after(trace.moves.size() + 1);
    {
        GameState s(graph, trace.header.k);
        level_after[0] = level(s).value_or(-1);
        for (std::size_t i = 0; i < trace.moves.size(); ++i) {
            avail_before[i] = s.avail_count(trace.moves[i].v);
            s.apply(trace.moves[i].v, trace.moves[i].c);
            level_after[i + 1] = level(s).value_or(-1);
        }
    }

    const GameState at_loss = replay(graph, trace, rep.t - 1);
    if (trace.outcome == Outcome::BreakerWon && !options.cut_time) {
        rep.v0 = trace.witness;
    } else {
        const int m = at_loss.min_availability();
        if (m < 0) throw std::invalid_argument("endgame_decomposition: no uncolored vertex at the cut time");
        rep.v0 = static_cast<Vertex>(at_loss.with_availability(m).find_first());
    }

    int phase_prefix = rep.t - 1;
    if (at_loss.uncolored_count() < d0) {
        rep.padded = true;
        phase_prefix = std::max(0, n - d0);
    }
    rep.phase_level = level_after[phase_prefix];
    rep.t_hat = std::min(rep.t, n - d0);
    auto fail = [&](std::string why) {
        if (rep.first_failure.empty()) rep.first_failure = std::move(why);
    };
    if (rep.phase_level < 0) {
        fail("no active color in the phase-defining coloring");
        return rep;
    }
    for (const auto& ph : cst.phases)
        if (ph.h * lbn > rep.phase_level + cst.xi * lbn) {
            rep.h = ph.h;
            break;
        }
    if (!rep.h) {
        fail("level exceeds the phase grid H");
        return rep;
    }
    const auto rates = rate_functions(n, p, alpha, *rep.h);
    rep.beta = rates.beta;
    rep.gamma = rates.gamma;
    rep.q_real = rates.q;

    for (std::size_t i = 0; i < trace.moves.size(); ++i) {
        const auto& m = trace.moves[i];
        if (m.t >= rep.t) break;
        if (m.player == Player::Maker && is_first_type(m.t, *N) && avail_before[i] >= rep.beta / 2) rep.t_prime = m.t;
    }
    const double star_level = (*rep.h - 4 * cst.xi) * lbn;
    for (std::size_t i = 0; i < level_after.size(); ++i)
        if (level_after[i] >= 0 && level_after[i] >= star_level) {
            rep.t_star = static_cast<int>(i) + 1;
            break;
        }
    if (!rep.t_prime) {
        fail("no first-type Maker move with a(v) >= beta(h)/2 before t");
        return rep;
    }
    rep.cond_i = true;

    const GameState before = replay(graph, trace, *rep.t_prime - 1);
    for (int s = *rep.t_prime; s < rep.t; ++s) rep.U.push_back(trace.moves[static_cast<std::size_t>(s - 1)].v);
    rep.U.push_back(rep.v0);

    rep.cond_ii = true;
    for (Vertex v : rep.U)
        if (before.avail_count(v) < rep.beta / 2) {
            rep.cond_ii = false;
            rep.cond_ii_failure = v;
            break;
        }
    if (!rep.cond_ii) fail("condition (ii): a(v,C') < beta(h)/2 for some v in U");
    rep.endgame_bound_ok = rep.t - *rep.t_prime + 1 <= 2.0 * *N * rep.gamma + 1;
    if (!rep.endgame_bound_ok) fail("endgame length exceeds 2 N gamma(h) + 1");

    rep.q_used = options.q_override ? *options.q_override : static_cast<int>(std::floor(rep.q_real));
    if (rep.q_used < 1) {
        fail("condition (iii): q(h) < 1, no arrangement possible");
        return rep;
    }
    ArrangementInput input;
    input.U = rep.U;
    input.k = trace.header.k;
    input.q = rep.q_used;
    for (Vertex v : rep.U) input.avail.push_back(available_colors(before, v));
    const auto arrangement = color_arranging(input);
    rep.arrangement = verify_arrangement(input, arrangement);
    rep.max_s = arrangement.max_s;
    rep.cascade = wk_cascade(arrangement, static_cast<double>(rep.q_used), *rep.h, cst.xi);
    if (!rep.arrangement->size_ok) fail("condition (iii): some |S(v)| exceeds q");

    rep.box = from_coloring_endgame(before, rep.U, arrangement.S, rep.q_used, 2 * *N, rep.q_used);
    rep.criterion = criterion_holds(rep.box->sizes, rep.box->q, rep.box->d, rep.box->z);
    if (!rep.criterion->holds) fail("box-game criterion fails at m=" + std::to_string(rep.criterion->witness_m));
    return rep;
}

nlohmann::json DecompositionReport::to_json() const {
    nlohmann::json j;
    j["t"] = t;
    j["v0"] = v0;
    j["padded"] = padded;
    j["phase_level"] = phase_level;
    j["h"] = h ? nlohmann::json(*h) : nlohmann::json(nullptr);
    j["beta"] = beta;
    j["gamma"] = gamma;
    j["q"] = q_real;
    j["N"] = N;
    j["t_prime"] = t_prime ? nlohmann::json(*t_prime) : nlohmann::json(nullptr);
    j["U_size"] = U.size();
    j["cond_i"] = cond_i;
    j["cond_ii"] = cond_ii;
    j["endgame_bound_ok"] = endgame_bound_ok;
    j["q_used"] = q_used;
    if (arrangement) {
        j["residual_ok"] = arrangement->residual_ok;
        j["size_ok"] = arrangement->size_ok;
        j["max_s"] = max_s;
    }
    if (cascade) {
        auto& c = j["cascade"];
        c["L"] = cascade->L;
        c["c"] = cascade->c;
        c["K_floor"] = cascade->K_floor;
        c["K_ceil"] = cascade->K_ceil;
        for (auto [K, w] : cascade->sizes) c["W"].push_back({K, w});
    }
    if (box) j["box_sizes"] = box->sizes;
    if (criterion) {
        j["criterion_holds"] = criterion->holds;
        j["criterion_witness_m"] = criterion->witness_m;
    }
    j["t_hat"] = t_hat;
    j["t_star"] = t_star ? nlohmann::json(*t_star) : nlohmann::json(nullptr);
    j["first_failure"] = first_failure;
    return j;
}

}  // namespace gcn
