#pragma once

#include <stdexcept>
#include <string>

namespace ezeta {

enum class ErrorKind {
  domain,
  pole,
  nonconvergence,
  index_out_of_range,
  precision_unreachable,
  zero_crossing,
  budget,
  ladder_order,
  infeasible_box,
  fixture,
  usage,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base of every exception thrown by the library. Condition failures of a
/// bound are never reported through exceptions; they live in ConditionReport.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

inline void require(bool ok, ErrorKind kind, const std::string& what) {
  if (!ok) raise(kind, what);
}

}  // namespace ezeta
