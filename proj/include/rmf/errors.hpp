#ifndef RMF_ERRORS_HPP
#define RMF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rmf {

// A request exceeded a configured capacity (sieve range, block budget).
// The CLI maps this to exit code 2.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid run configuration (bad flag combination, sample count too small).
// The CLI maps this to exit code 1.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rmf

#endif
