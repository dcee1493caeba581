#ifndef NCODE_ERRORS_HPP
#define NCODE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ncode {

/// Malformed or inconsistent input (bad dimensions, bad bit strings, ...).
class input_error : public std::invalid_argument {
  public:
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A resource cap was hit (enumeration or table size limits).
class cap_error : public std::runtime_error {
  public:
    explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ncode

#endif
