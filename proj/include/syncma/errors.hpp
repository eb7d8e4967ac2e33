#pragma once

#include <stdexcept>
#include <string>

namespace syncma {

struct NotPositiveDefinite : std::runtime_error {
    explicit NotPositiveDefinite(const std::string& what) : std::runtime_error(what) {}
};

struct CovarianceDegenerate : std::runtime_error {
    explicit CovarianceDegenerate(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct NonFiniteValue : std::invalid_argument {
    explicit NonFiniteValue(const std::string& what) : std::invalid_argument(what) {}
};

struct BudgetExhausted : std::runtime_error {
    explicit BudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::invalid_argument {
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace syncma
