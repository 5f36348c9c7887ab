#pragma once

#include <stdexcept>
#include <string>

namespace fpp {

enum class Err {
    Parse,
    Invariant,
    MissingDatum,
    NonSquarefree,
    AmbiguousAttribution,
    ReconstructionUncertain,
    NoCandidate,
    MultipleCandidates,
    Domain,
};

class Error : public std::runtime_error {
public:
    Error(Err kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    Err kind() const { return kind_; }

private:
    Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& msg) {
    throw Error(kind, msg);
}

} // namespace fpp
