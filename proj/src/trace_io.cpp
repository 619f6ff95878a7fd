#include <istream>
#include <nlohmann/json.hpp>
#include <ostream>

#include "gcn/game.hpp"

namespace gcn {

using ojson = nlohmann::ordered_json;

void write_trace_jsonl(std::ostream& out, const GameTrace& trace) {
    ojson header;
    header["type"] = "header";
    header["graph"] = trace.header.graph_id;
    header["n"] = trace.header.n;
    header["k"] = trace.header.k;
    header["maker"] = trace.header.maker;
    header["breaker"] = trace.header.breaker;
    header["seed"] = trace.header.seed;
    out << header.dump() << '\n';
    for (const auto& m : trace.moves) {
        ojson line;
        line["t"] = m.t;
        line["player"] = m.player == Player::Maker ? "M" : "B";
        line["v"] = m.v;
        line["c"] = m.c;
        out << line.dump() << '\n';
    }
    ojson footer;
    footer["type"] = "footer";
    footer["outcome"] = to_string(trace.outcome);
    footer["witness"] = trace.witness;
    footer["moves"] = trace.moves.size();
    if (!trace.diagnostic.empty()) footer["diagnostic"] = trace.diagnostic;
    out << footer.dump() << '\n';
}

namespace {

Outcome outcome_from(const std::string& s) {
    if (s == "MakerWon") return Outcome::MakerWon;
    if (s == "BreakerWon") return Outcome::BreakerWon;
    if (s == "Truncated") return Outcome::Truncated;
    if (s == "Aborted") return Outcome::Aborted;
    throw std::runtime_error("trace: unknown outcome '" + s + "'");
}

}  // namespace

GameTrace read_trace_jsonl(std::istream& in) {
    GameTrace trace;
    std::string line;
    int line_no = 0;
    bool have_header = false, have_footer = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (have_footer) throw std::runtime_error("trace line " + std::to_string(line_no) + ": content after footer");
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw std::runtime_error("trace line " + std::to_string(line_no) + ": " + e.what());
        }
        if (j.contains("type") && j["type"] == "header") {
            trace.header.graph_id = j.value("graph", "");
            trace.header.n = j.at("n").get<int>();
            trace.header.k = j.at("k").get<int>();
            trace.header.maker = j.value("maker", "");
            trace.header.breaker = j.value("breaker", "");
            trace.header.seed = j.value("seed", std::uint64_t{0});
            have_header = true;
        } else if (j.contains("type") && j["type"] == "footer") {
            trace.outcome = outcome_from(j.at("outcome").get<std::string>());
            trace.witness = j.value("witness", -1);
            trace.diagnostic = j.value("diagnostic", "");
            have_footer = true;
        } else {
            if (!have_header) throw std::runtime_error("trace line " + std::to_string(line_no) + ": move before header");
            TraceMove m;
            m.t = j.at("t").get<int>();
            const auto p = j.at("player").get<std::string>();
            if (p != "M" && p != "B") throw std::runtime_error("trace line " + std::to_string(line_no) + ": bad player");
            m.player = p == "M" ? Player::Maker : Player::Breaker;
            m.v = j.at("v").get<int>();
            m.c = j.at("c").get<int>();
            trace.moves.push_back(m);
        }
    }
    if (!have_header || !have_footer) throw std::runtime_error("trace: missing header or footer");
    return trace;
}

}  // namespace gcn
