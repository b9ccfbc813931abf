#pragma once

#include "makergame/board.hpp"
#include "makergame/maker.hpp"

#include <optional>
#include <string>
#include <vector>

namespace makergame {

// Flat key=value run description. Flags override config-file entries.
struct RunConfig {
    std::string graph_spec = "c6"; // named | file:PATH | random:N,D,SEED
    std::string leveling_mode = "greedy"; // greedy | lll
    std::uint64_t level_seed = 0;
    std::string s_mode = "guarantee"; // paper | guarantee | custom
    std::int64_t s_value = 0;         // input for custom, resolved value echoed
    std::string breaker = "random";
    std::uint64_t breaker_seed = 0;
    std::string script_path;
    std::uint64_t round_cap = 0; // resolved cap echoed in transcripts
    int repetitions = 1;
    std::string out_path;
};

TargetGraph graph_from_spec(const std::string& spec);
Leveling leveling_from_config(const TargetGraph& g, const RunConfig& cfg);
GameBoard board_from_config(const RunConfig& cfg);

// Text format "makergame-transcript v1": header (config echo, the resolved
// graph, leveling, block sizes, edge counts), one line per move, readiness
// audits, outcome footer. Replaying the recorded Breaker moves reproduces
// the file byte for byte.
std::string write_transcript(const RunConfig& cfg, const GameBoard& board, const Outcome& outcome);

struct ParsedTranscript {
    RunConfig cfg;
    int graph_n = 0;
    std::vector<std::pair<Vertex, Vertex>> gedges;
    std::vector<int> levels;
    int leveling_r = 0;
    std::vector<std::optional<StarEdge>> breaker_moves;
    std::string outcome_status;
};

ParsedTranscript parse_transcript(const std::string& text);

struct VerifyResult {
    bool ok = false;
    bool byte_identical = false;
    std::string first_divergence; // empty when identical
    Outcome outcome;
};

// Re-runs the game against the recorded Breaker moves and compares the
// regenerated transcript byte for byte; re-verifies the scheme and
// re-extracts the embedding along the way.
VerifyResult verify_transcript(const std::string& text);

} // namespace makergame
