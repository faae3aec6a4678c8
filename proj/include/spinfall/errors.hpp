// Error taxonomy shared by all spinfall modules.
#pragma once

#include <stdexcept>
#include <string>

namespace spinfall {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A point or parameter lies outside the chart/operation domain.
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// An iterative solve exhausted its iteration budget.
struct ConvergenceError : Error {
    explicit ConvergenceError(const std::string& msg) : Error(msg) {}
};

// A worldline sample left the validity region of the integration.
struct StepError : Error {
    explicit StepError(const std::string& msg) : Error(msg) {}
};

// A denominator required by the spin-step formula vanished.
struct SingularInputError : Error {
    explicit SingularInputError(const std::string& msg) : Error(msg) {}
};

// A spinor map could not be decomposed into the radial {I, sigma1} span.
struct DecompositionError : Error {
    explicit DecompositionError(const std::string& msg) : Error(msg) {}
};

// Invalid or inconsistent run configuration.
struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace spinfall
