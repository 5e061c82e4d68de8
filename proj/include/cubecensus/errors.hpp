#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cubecensus {

struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(std::string msg, std::size_t off)
      : std::runtime_error(msg + " (at byte " + std::to_string(off) + ")"),
        offset(off) {}
};

struct MalformedPairing : std::runtime_error {
  explicit MalformedPairing(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotPseudomanifold : std::runtime_error {
  explicit NotPseudomanifold(const std::string& msg)
      : std::runtime_error(msg) {}
};

struct NotAManifold : std::runtime_error {
  explicit NotAManifold(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotFilling : std::runtime_error {
  std::string failing_flag;
  explicit NotFilling(const std::string& flag)
      : std::runtime_error("surface is not filling: " + flag),
        failing_flag(flag) {}
};

struct InvalidSite : std::runtime_error {
  explicit InvalidSite(const std::string& msg) : std::runtime_error(msg) {}
};

struct MalformedComplex : std::runtime_error {
  explicit MalformedComplex(const std::string& msg)
      : std::runtime_error(msg) {}
};

struct InvalidCounts : std::runtime_error {
  explicit InvalidCounts(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnsupportedBase : std::runtime_error {
  explicit UnsupportedBase(const std::string& msg)
      : std::runtime_error(msg) {}
};

}  // namespace cubecensus
