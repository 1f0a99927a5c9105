#pragma once

#include <stdexcept>
#include <string>

namespace sdpcert {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error("dimension mismatch: " + msg) {}
};

struct NotPositiveDefinite : Error {
    explicit NotPositiveDefinite(const std::string& msg) : Error("matrix not positive definite: " + msg) {}
};

struct NoConvergence : Error {
    explicit NoConvergence(const std::string& msg) : Error("iteration did not converge: " + msg) {}
};

struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& msg) : Error("singular system: " + msg) {}
};

struct SingularSystem : Error {
    explicit SingularSystem(const std::string& msg) : Error("direction system singular: " + msg) {}
};

struct MTooSmall : Error {
    explicit MTooSmall(const std::string& msg) : Error("big-M bound too small: " + msg) {}
};

struct LineSearchStall : Error {
    explicit LineSearchStall(const std::string& msg) : Error("plane search stalled: " + msg) {}
};

struct RankMismatch : Error {
    explicit RankMismatch(const std::string& msg) : Error("rank mismatch: " + msg) {}
};

struct EmptySupport : Error {
    explicit EmptySupport(const std::string& msg) : Error("empty support: " + msg) {}
};

struct BasisIncomplete : Error {
    explicit BasisIncomplete(const std::string& msg) : Error("monomial basis incomplete: " + msg) {}
};

struct DegenerateConstraints : Error {
    explicit DegenerateConstraints(const std::string& msg) : Error("degenerate constraints: " + msg) {}
};

struct InvalidCase : Error {
    explicit InvalidCase(const std::string& msg) : Error("invalid symmetry case: " + msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

}  // namespace sdpcert
