#ifndef NETSIR_ERRORS_HPP
#define NETSIR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace netsir {

/// Scenario files or run configurations that fail validation.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem trouble: missing inputs, unwritable output directories.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace netsir

#endif
