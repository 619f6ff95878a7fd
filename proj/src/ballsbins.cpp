#include "gcn/ballsbins.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <sstream>

namespace gcn {

std::optional<long> BinsTrace::time_of_level(int level) const {
    for (const auto& s : first_hits)
        if (s.level == level) return s.time;
    return std::nullopt;
}

BinsTrace play_ballsbins(int k, int N, BinsAdversary& adversary, long horizon, std::uint64_t seed, StealMode steal_mode) {
    if (k < 1) throw std::invalid_argument("ballsbins: k must be at least 1");
    if (N < 2) throw std::invalid_argument("ballsbins: N must be at least 2");
    if (horizon < 0) throw std::invalid_argument("ballsbins: negative horizon");
    Rng rng(seed);
    BinsTrace trace;
    trace.k = k;
    trace.N = N;
    std::vector<int> loads(static_cast<std::size_t>(k), 0);
    std::vector<char> removed(static_cast<std::size_t>(k), 0);
    std::set<std::pair<int, int>> order;  // (load, bin) over non-removed bins
    for (int i = 0; i < k; ++i) order.emplace(0, i);
    std::vector<long> thrown_at(1, 0);
    int removed_count = 0;
    long t = 0;

    auto current_level = [&] { return order.empty() ? -1 : order.begin()->first; };
    auto view = [&] { return BinsView{loads, removed, t, current_level(), removed_count}; };
    auto do_removals = [&] {
        for (int b : adversary.removals(view(), rng)) {
            if (b < 0 || b >= k || removed[b]) throw BinsError("adversary removed an invalid or already removed bin");
            removed[b] = 1;
            ++removed_count;
            order.erase({loads[b], b});
            trace.removals.push_back({t, b, loads[b]});
        }
    };
    auto record_level = [&] {
        const int lvl = current_level();
        trace.level_at.push_back(lvl);
        if (lvl >= 0 && (trace.first_hits.empty() || lvl > trace.first_hits.back().level))
            trace.first_hits.push_back({lvl, t, thrown_at});
    };

    do_removals();
    record_level();
    long m_turns = 0;
    long since_steal = N - 1;
    for (long ball = 1; ball <= horizon; ++ball) {
        if (order.empty()) break;
        BallRecord rec;
        rec.t = ball;
        bool b_plays = true;
        if (ball % 2 == 1) {
            ++m_turns;
            bool stolen = false;
            if (steal_mode == StealMode::Fixed)
                stolen = m_turns % N == 0;
            else if (since_steal >= N - 1)
                stolen = adversary.steal(view(), rng);
            since_steal = stolen ? 0 : since_steal + 1;
            rec.stolen = stolen;
            rec.by_m = !stolen;
            b_plays = stolen;
        }
        if (b_plays) {
            rec.bin = adversary.choose_bin(view(), rng);
            if (rec.bin < 0 || rec.bin >= k || removed[rec.bin]) throw BinsError("adversary targeted a removed or invalid bin");
        } else {
            rec.bin = order.begin()->second;
        }
        order.erase({loads[rec.bin], rec.bin});
        rec.load_after = ++loads[rec.bin];
        order.emplace(loads[rec.bin], rec.bin);
        if (static_cast<std::size_t>(rec.load_after) >= thrown_at.size()) thrown_at.resize(rec.load_after + 1, 0);
        ++thrown_at[rec.load_after];
        trace.balls.push_back(rec);
        t = ball;
        do_removals();
        record_level();
    }
    if (order.empty()) trace.all_removed = true;
    trace.final_loads = loads;
    trace.final_removed = removed;
    return trace;
}

long c_of_level(const BinsTrace& trace, int level, int a) {
    if (level >= a) throw std::invalid_argument("c_of_level: need level < a");
    for (const auto& s : trace.first_hits) {
        if (s.level != level) continue;
        long c = 0;
        for (int x = level + 1; x <= a && x < static_cast<int>(s.thrown_at.size()); ++x) c += s.thrown_at[x];
        return c;
    }
    throw std::out_of_range("c_of_level: level " + std::to_string(level) + " never reached");
}

long c_of_level_from_records(const BinsTrace& trace, int level, int a) {
    if (level >= a) throw std::invalid_argument("c_of_level: need level < a");
    const auto when = trace.time_of_level(level);
    if (!when) throw std::out_of_range("c_of_level: level " + std::to_string(level) + " never reached");
    long c = 0;
    for (const auto& b : trace.balls) {
        if (b.t > *when) break;
        if (b.load_after > level && b.load_after <= a) ++c;
    }
    return c;
}

double level_load_bound(int k, int N, int level, int a) {
    return static_cast<double>(k) * level * (N + 1) * (a - level) / (static_cast<double>(N - 1) * (a - 1));
}

std::vector<LevelLoadViolation> check_level_loads(const BinsTrace& trace, int a) {
    if (a < 2) throw std::invalid_argument("check_level_loads: a must be at least 2");
    std::vector<LevelLoadViolation> out;
    for (const auto& s : trace.first_hits) {
        if (s.level >= a) break;
        const long c = c_of_level(trace, s.level, a);
        // Exact: c (N-1)(a-1) <= k l (N+1)(a-l).
        const __int128 lhs = static_cast<__int128>(c) * (trace.N - 1) * (a - 1);
        const __int128 rhs = static_cast<__int128>(trace.k) * s.level * (trace.N + 1) * (a - s.level);
        if (lhs > rhs) out.push_back({s.level, c, level_load_bound(trace.k, trace.N, s.level, a)});
    }
    return out;
}

BinsSnapshot bins_at(const BinsTrace& trace, long t) {
    BinsSnapshot snap;
    snap.loads.assign(static_cast<std::size_t>(trace.k), 0);
    snap.removed.assign(static_cast<std::size_t>(trace.k), 0);
    snap.removed_load.assign(static_cast<std::size_t>(trace.k), -1);
    for (const auto& b : trace.balls) {
        if (b.t > t) break;
        ++snap.loads[b.bin];
    }
    for (const auto& r : trace.removals) {
        if (r.time > t) break;
        snap.removed[r.bin] = 1;
        snap.removed_load[r.bin] = r.load;
    }
    return snap;
}

LowBinsResult check_low_bins(const BinsTrace& trace, double xi, int a, int N, long t) {
    LowBinsResult res;
    res.threshold = xi * trace.k / 8.0;
    auto na = [&](std::string why) {
        res.applicable = false;
        res.reason = std::move(why);
        return res;
    };
    if (N != trace.N) throw std::invalid_argument("check_low_bins: N does not match the trace");
    if (!(xi > 0 && xi < 1)) return na("xi outside (0,1)");
    if (t < 0 || t >= static_cast<long>(trace.level_at.size())) return na("time outside the trace");
    if (static_cast<double>(N) < 8.0 / xi - 1e-9) return na("N < 8/xi");
    if (a < 2 || (1 - xi) * a + 1 > (1 - xi / 2) * (a - 1) + 1e-9) return na("a too small");
    const auto snap = bins_at(trace, t);
    int removed_low = 0;
    for (int b = 0; b < trace.k; ++b)
        if (snap.removed[b] && snap.removed_load[b] < a) ++removed_low;
    if (removed_low > res.threshold) return na("adversary removed more than xi*k/8 bins with load < a");
    const int lvl = trace.level_at[t];
    if (lvl < 0) return na("every bin removed");
    if (lvl > a * (1 - xi)) return na("level above a(1-xi)");
    res.applicable = true;
    for (int b = 0; b < trace.k; ++b)
        if (!snap.removed[b] && snap.loads[b] <= a) ++res.count;
    res.holds = res.count >= res.threshold;
    return res;
}

namespace {

int min_load_bin(const BinsView& v) {
    int best = -1;
    for (int i = 0; i < static_cast<int>(v.loads.size()); ++i)
        if (!v.removed[i] && (best < 0 || v.loads[i] < v.loads[best])) best = i;
    return best;
}

int random_live_bin(const BinsView& v, Rng& rng) {
    const auto live = static_cast<long>(v.loads.size()) - v.removed_count;
    auto r = static_cast<long>(rng.below(static_cast<std::uint64_t>(live)));
    for (int i = 0; i < static_cast<int>(v.loads.size()); ++i)
        if (!v.removed[i] && r-- == 0) return i;
    return -1;
}

class RandomAdversary final : public BinsAdversary {
public:
    RandomAdversary(double p, int max) : p_(p), max_(max) {}
    int choose_bin(const BinsView& v, Rng& rng) override { return random_live_bin(v, rng); }
    std::vector<int> removals(const BinsView& v, Rng& rng) override {
        if (v.removed_count >= max_ || v.removed_count + 1 >= static_cast<int>(v.loads.size())) return {};
        if (!rng.bernoulli(p_)) return {};
        return {random_live_bin(v, rng)};
    }
    bool steal(const BinsView&, Rng& rng) override { return rng.below(2) == 1; }
    std::string name() const override { return "random"; }

private:
    double p_;
    int max_;
};

class StackerAdversary : public BinsAdversary {
public:
    explicit StackerAdversary(int a) : a_(a) {}
    int choose_bin(const BinsView& v, Rng&) override {
        if (target_ < 0 || v.removed[target_] || v.loads[target_] >= a_) {
            target_ = -1;
            for (int i = 0; i < static_cast<int>(v.loads.size()); ++i)
                if (!v.removed[i] && v.loads[i] < a_) {
                    target_ = i;
                    break;
                }
            if (target_ < 0) return min_load_bin(v);
        }
        return target_;
    }
    std::string name() const override { return "stacker"; }

protected:
    int a_;
    int target_ = -1;
};

class JustAboveAdversary final : public BinsAdversary {
public:
    explicit JustAboveAdversary(int a) : a_(a) {}
    int choose_bin(const BinsView& v, Rng&) override {
        int best = -1;
        for (int i = 0; i < static_cast<int>(v.loads.size()); ++i) {
            if (v.removed[i] || v.loads[i] <= v.level || v.loads[i] >= a_) continue;
            if (best < 0 || v.loads[i] < v.loads[best]) best = i;
        }
        return best >= 0 ? best : min_load_bin(v);
    }
    std::string name() const override { return "justabove"; }

private:
    int a_;
};

class RemovalHeavyAdversary final : public StackerAdversary {
public:
    RemovalHeavyAdversary(double p, int max, int a) : StackerAdversary(a), p_(p), max_(max) {}
    std::vector<int> removals(const BinsView& v, Rng& rng) override {
        if (v.removed_count >= max_ || v.removed_count + 1 >= static_cast<int>(v.loads.size())) return {};
        if (!rng.bernoulli(p_)) return {};
        return {min_load_bin(v)};
    }
    std::string name() const override { return "removalheavy"; }

private:
    double p_;
    int max_;
};

class LevelerAdversary final : public BinsAdversary {
public:
    int choose_bin(const BinsView& v, Rng&) override { return min_load_bin(v); }
    std::string name() const override { return "leveler"; }
};

class ScriptedAdversary final : public BinsAdversary {
public:
    explicit ScriptedAdversary(const std::string& script) {
        std::istringstream in(script);
        std::string word;
        int bin = 0;
        int line = 0;
        std::string text;
        while (std::getline(in, text)) {
            ++line;
            if (text.empty() || text[0] == '#') continue;
            std::istringstream ls(text);
            if (!(ls >> word >> bin) || (word != "ball" && word != "remove"))
                throw std::invalid_argument("adversary script line " + std::to_string(line) + ": expected 'ball <bin>' or 'remove <bin>'");
            actions_.push_back({word == "remove", bin});
        }
    }
    int choose_bin(const BinsView& v, Rng& rng) override {
        if (!actions_.empty() && !actions_.front().remove) {
            const int b = actions_.front().bin;
            actions_.pop_front();
            return b;
        }
        return random_live_bin(v, rng);
    }
    std::vector<int> removals(const BinsView&, Rng&) override {
        std::vector<int> out;
        while (!actions_.empty() && actions_.front().remove) {
            out.push_back(actions_.front().bin);
            actions_.pop_front();
        }
        return out;
    }
    std::string name() const override { return "script"; }

private:
    struct Action {
        bool remove;
        int bin;
    };
    std::deque<Action> actions_;
};

}  // namespace

std::unique_ptr<BinsAdversary> make_random_adversary(double removal_prob, int max_removals) {
    return std::make_unique<RandomAdversary>(removal_prob, max_removals);
}
std::unique_ptr<BinsAdversary> make_stacker_adversary(int a) { return std::make_unique<StackerAdversary>(a); }
std::unique_ptr<BinsAdversary> make_just_above_adversary(int a) { return std::make_unique<JustAboveAdversary>(a); }
std::unique_ptr<BinsAdversary> make_removal_heavy_adversary(double removal_prob, int max_removals, int a) {
    return std::make_unique<RemovalHeavyAdversary>(removal_prob, max_removals, a);
}
std::unique_ptr<BinsAdversary> make_leveler_adversary() { return std::make_unique<LevelerAdversary>(); }
std::unique_ptr<BinsAdversary> make_scripted_adversary(const std::string& script) {
    return std::make_unique<ScriptedAdversary>(script);
}

}  // namespace gcn
