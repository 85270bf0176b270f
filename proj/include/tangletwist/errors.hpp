#pragma once

#include <stdexcept>
#include <string>

namespace tangletwist {

// Malformed PD text, block grammar, or an input diagram that fails validation.
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// An operation was asked to exceed a hard resource bound (e.g. 2^n state sums).
struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Precondition violation detected at runtime (caller bug, not input data).
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Invariant that should be unbreakable was broken (library bug).
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace tangletwist
