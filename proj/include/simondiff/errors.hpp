#ifndef SIMONDIFF_ERRORS_HPP
#define SIMONDIFF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace simondiff {

// Violated precondition or call contract (caller bug).
class ContractError : public std::logic_error {
public:
    explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

// Invalid run configuration (flag values, ranges).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem-level failure (open/read/write).
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or corrupted file contents.
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// A stage produced no usable rows (reported, then surfaced as nonzero exit).
class EmptyResultError : public std::runtime_error {
public:
    explicit EmptyResultError(const std::string& what) : std::runtime_error(what) {}
};

// Process exit codes used by the CLI.
enum ExitCode : int {
    kExitOk = 0,
    kExitInternal = 1,
    kExitConfig = 2,
    kExitIo = 3,
    kExitFormat = 4,
    kExitEmptyResult = 5,
};

} // namespace simondiff

#endif
