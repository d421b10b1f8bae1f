#pragma once

#include <stdexcept>
#include <string>

namespace kcut {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DisconnectedError : Error {
    DisconnectedError() : Error("graph is disconnected") {}
    explicit DisconnectedError(const std::string& what) : Error(what) {}
};

struct TooFewVerticesError : Error {
    explicit TooFewVerticesError(const std::string& what = "too few vertices") : Error(what) {}
};

struct EdgeNotFoundError : Error {
    EdgeNotFoundError() : Error("edge not found") {}
};

struct FullDeletionError : Error {
    FullDeletionError() : Error("cannot delete the entire vertex set") {}
};

struct OverlappingPartsError : Error {
    OverlappingPartsError() : Error("partition parts overlap") {}
};

struct IncompleteCoverError : Error {
    IncompleteCoverError() : Error("partition does not cover the vertex set") {}
};

struct InvalidBudgetError : Error {
    explicit InvalidBudgetError(const std::string& what = "invalid (s, k) budget for forest") : Error(what) {}
};

struct OverflowError : Error {
    explicit OverflowError(const std::string& what = "64-bit weight overflow") : Error(what) {}
};

struct NegativeWeightError : Error {
    explicit NegativeWeightError(const std::string& what = "negative edge weight") : Error(what) {}
};

struct SelfLoopError : Error {
    explicit SelfLoopError(const std::string& what = "self-loop rejected") : Error(what) {}
};

struct ParseError : Error {
    long line;
    ParseError(long line_, const std::string& what)
        : Error("parse error at line " + std::to_string(line_) + ": " + what), line(line_) {}
};

}  // namespace kcut
