#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcn/exact.hpp"
#include "gcn/game.hpp"

namespace gcn {

using Rational = boost::multiprecision::cpp_rational;

// Generalised box game B(A_1..A_k; q, z) with Maker greed slack d. Elements
// are anonymous; only set sizes matter.
struct BoxInstance {
    std::vector<std::int64_t> sizes;
    int q = 1;  // Breaker eliminations per move
    int z = 1;  // at least one of every z consecutive Maker turns is real
    int d = 0;  // Maker claims from a set at most d larger than the smallest
};

void validate(const BoxInstance& instance);

// f(m,q,d) = (zq+d) * m * (1 + H_{m-1}); f(1) = zq+d.
Rational f_bound(int m, int q, int d, int z);

struct CriterionResult {
    bool holds = true;
    int witness_m = 0;  // smallest violating subset size when !holds
};

// Sum over every non-empty index set I of |A_i| must exceed f(|I|). Since f
// depends only on |I|, checking the m smallest sets for each m suffices.
CriterionResult criterion_holds(std::span<const std::int64_t> sizes, int q, int d, int z);

// Where Breaker spends his (up to q) eliminations.
enum class EliminationPolicy {
    Smallest,  // one at a time into the currently smallest live set
    Dodge,     // into the smallest set other than the current minimum
    Random,
    Largest,
};
// Which set Breaker claims on a stolen Maker turn.
enum class ClaimPolicy { Largest, Smallest, Random };
// When Breaker steals. Maker's first turn is always real.
enum class StealSchedule {
    Maximal,  // real, z-1 stolen, real, ...
    Random,   // steal with probability 1/2 whenever the window allows
    Never,
};
// Which set Maker takes among those within d of the minimum.
enum class SlackChoice { Largest, Smallest };

struct BoxBreakerPolicy {
    EliminationPolicy elimination = EliminationPolicy::Smallest;
    ClaimPolicy claim = ClaimPolicy::Largest;
    StealSchedule steal = StealSchedule::Maximal;
    SlackChoice slack = SlackChoice::Largest;
};

struct BoxEvent {
    enum class Kind { MakerClaim, StolenClaim, Eliminate } kind;
    int set = -1;
    int amount = 1;
};

struct BoxPlayResult {
    Winner winner = Winner::Maker;
    int emptied_set = -1;  // the set Breaker emptied
    std::vector<BoxEvent> events;
};

class BoxPolicyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

BoxPlayResult play_boxgame(const BoxInstance& instance, const BoxBreakerPolicy& policy, std::uint64_t seed);

struct BoxExactResult {
    Winner winner = Winner::Maker;
    std::size_t states = 0;
};

// Exhaustive search over Breaker's eliminations, steal decisions, stolen
// claims and, for d > 0, Maker's choice among the sets within the slack.
// Winner::Maker means every d-greedy play survives every Breaker.
// Throws BudgetExceeded if the total number of elements exceeds max_elements.
BoxExactResult solve_boxgame_exact(const BoxInstance& instance, int max_elements = 18);

// Box instance induced by an endgame: one set A(v,C') \ S(v) per v in U,
// with Breaker power q and steal period z (2N in the coloring translation).
BoxInstance from_coloring_endgame(const GameState& before, std::span<const Vertex> U,
                                  const std::vector<std::vector<Color>>& S, int q, int z, int d = 0);
// As above, replaying the first t'-1 moves of `trace` to obtain C'.
BoxInstance from_coloring_endgame(const Graph& graph, const GameTrace& trace, int t_prime,
                                  std::span<const Vertex> U, const std::vector<std::vector<Color>>& S, int q,
                                  int z, int d = 0);

std::string to_string(EliminationPolicy p);
std::string to_string(ClaimPolicy p);
std::string to_string(StealSchedule s);
EliminationPolicy parse_elimination_policy(const std::string& s);
ClaimPolicy parse_claim_policy(const std::string& s);
StealSchedule parse_steal_schedule(const std::string& s);

}  // namespace gcn
