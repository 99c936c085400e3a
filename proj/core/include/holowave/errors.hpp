#pragma once

#include <stdexcept>
#include <string>

namespace holowave {

// Categories map onto CLI exit codes: config errors exit 2, degeneracies
// (delta violations, zero-mode rejections, branch failures) exit 3,
// convergence failures exit 4.
enum class ErrorCategory { config, degeneracy, convergence, internal };

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}
  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

// Invalid numeric parameter: non-positive depth, odd grid, unsupported
// Besov index, off-grid wavenumber, ...
class ParameterError : public Error {
 public:
  explicit ParameterError(const std::string& what)
      : Error(ErrorCategory::config, what) {}
};

// Malformed or inconsistent run configuration.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what)
      : Error(ErrorCategory::config, what) {}
};

// An operation was invoked outside its stated contract (g != 0 where the
// pure-capillary form is required, too few scan radii, ...).
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what)
      : Error(ErrorCategory::config, what) {}
};

// Multiplier symbol is non-finite at a grid wavenumber.
class SymbolDomainError : public Error {
 public:
  explicit SymbolDomainError(const std::string& what)
      : Error(ErrorCategory::degeneracy, what) {}
};

// The inverse Tilbert transform (and anything built on it) is undefined on
// data with a non-negligible mean; the ambiguity is surfaced as this error
// instead of being silently resolved.
class ZeroModeError : public Error {
 public:
  explicit ZeroModeError(const std::string& what)
      : Error(ErrorCategory::degeneracy, what) {}
};

// |1 + W_alpha| dipped below the recorded delta bound.
class DegenerateProfileError : public Error {
 public:
  explicit DegenerateProfileError(const std::string& what)
      : Error(ErrorCategory::degeneracy, what) {}
};

// No continuous single-valued logarithm of 1 + W_alpha exists on the grid
// (nonzero winding about the origin).
class LogBranchError : public Error {
 public:
  explicit LogBranchError(const std::string& what)
      : Error(ErrorCategory::degeneracy, what) {}
};

// Input magnitude exceeds the range of the transcendental being evaluated.
class MagnitudeError : public Error {
 public:
  explicit MagnitudeError(const std::string& what)
      : Error(ErrorCategory::degeneracy, what) {}
};

}  // namespace holowave
