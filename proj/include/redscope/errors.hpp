#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace redscope {

enum class ErrorKind {
  Modulus,         // modulus is not a usable prime
  Domain,          // argument outside an operation's domain
  Consistency,     // internal invariant or cross-check violated
  ExcludedPrime,   // ramified / bad-reduction / excluded prime
  InvalidPolygon,  // polygon fails an operation's shape requirements
  DegenerateInput, // too little data to build the requested object
  Config,          // malformed configuration or input file
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace redscope
