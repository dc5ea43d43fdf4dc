#pragma once

#include <stdexcept>
#include <string>

namespace mqrot {

// Base class for every error the solver raises on bad physics or numerics.
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidParams : SolverError {
    using SolverError::SolverError;
};

// delta^2 = m^2 w^2/4 + m^2 Omega w <= 0: no decaying bound-state scale.
struct NonPositiveRadicand : SolverError {
    using SolverError::SolverError;
};

struct NonPositiveDelta : SolverError {
    using SolverError::SolverError;
};

struct ZeroTheta : SolverError {
    using SolverError::SolverError;
};

struct NoPositiveRoot : SolverError {
    using SolverError::SolverError;
};

struct NegativeRadius : SolverError {
    using SolverError::SolverError;
};

struct TailNotDecayed : SolverError {
    using SolverError::SolverError;
};

struct GridTooCoarse : SolverError {
    using SolverError::SolverError;
};

struct ThetaNotZero : SolverError {
    using SolverError::SolverError;
};

struct NoMatchingEigenvalue : SolverError {
    using SolverError::SolverError;
};

struct ConvergenceFailure : SolverError {
    using SolverError::SolverError;
};

}  // namespace mqrot
