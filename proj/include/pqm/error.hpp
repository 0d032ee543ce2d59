#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace pqm {

/// Domain-rule violation. `name()` is a stable machine-readable tag
/// (e.g. "OverlappingBlocks", "UniverseMismatch") used by the CLI and tests;
/// what() carries the human-readable detail.
class DomainError : public std::runtime_error {
  public:
    DomainError(std::string name, const std::string& message)
        : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

  private:
    std::string name_;
};

[[noreturn]] inline void fail(std::string name, const std::string& message) {
    throw DomainError(std::move(name), message);
}

inline void require(bool cond, const char* name, const std::string& message) {
    if (!cond) throw DomainError(name, message);
}

}  // namespace pqm
