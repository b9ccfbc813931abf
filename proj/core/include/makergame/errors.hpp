#pragma once

#include <stdexcept>
#include <string>

namespace makergame {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

struct GraphError : Error {
    using Error::Error;
};

struct LevelingError : Error {
    using Error::Error;
};

struct BoardError : Error {
    using Error::Error;
};

// claim() on an edge some player already holds
struct AlreadyClaimedError : Error {
    using Error::Error;
};

// claim() on a pair that is not an edge of H
struct NotABoardEdgeError : Error {
    using Error::Error;
};

// B-set selection found fewer than s untouched vertices
struct InvariantViolationError : Error {
    using Error::Error;
};

// subgame creation found a hyperedge below the candidate bound
struct HyperedgeTooSmallError : Error {
    using Error::Error;
};

// B sets required by a candidate check are not determined yet
struct BUndeterminedError : Error {
    using Error::Error;
};

// embedding extraction found no admissible image; indicates a scheme bug
struct NoValidImageError : Error {
    using Error::Error;
};

struct OracleCapError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct ScriptError : Error {
    using Error::Error;
};

// raised when an interactive adversary types "quit"
struct BreakerQuit : Error {
    BreakerQuit() : Error("breaker quit") {}
};

} // namespace makergame
