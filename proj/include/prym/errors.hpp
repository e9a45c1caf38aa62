#pragma once

#include <stdexcept>
#include <string>

namespace prym {

/// Arguments outside an operation's documented domain.
class invalid_input : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// An enumeration was requested beyond the configured degree bound.
class resource_limit : public std::runtime_error {
  public:
    resource_limit(const std::string& what, int bound)
        : std::runtime_error(what), bound_(bound) {}
    int bound() const noexcept { return bound_; }

  private:
    int bound_;
};

/// A four-point count (or similar tabulated constant) outside the known families.
class missing_constant : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An identity label not present in the catalog.
class missing_identity : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// The assembled intersection system lost full rank; indicates a transcription bug.
class singular_system : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace prym
