#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace kloo {

// Bad parameters or an unusable run configuration (CLI exit code 2).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside an operation's domain: inv(0), zero Kloosterman argument,
// the trivial character, a dual spectrum with the wrong total, ...
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Work refused because an enumeration or memory guard would be exceeded.
struct SizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exact identity that must hold did not; both sides are kept verbatim.
struct IdentityViolation : std::runtime_error {
    IdentityViolation(const std::string& what, std::string lhs_, std::string rhs_)
        : std::runtime_error(what + " (lhs=" + lhs_ + ", rhs=" + rhs_ + ")"),
          lhs(std::move(lhs_)),
          rhs(std::move(rhs_)) {}

    std::string lhs;
    std::string rhs;
};

}  // namespace kloo
