#include "ezeta/error.hpp"

namespace ezeta {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::pole: return "pole";
    case ErrorKind::nonconvergence: return "nonconvergence";
    case ErrorKind::index_out_of_range: return "index-out-of-range";
    case ErrorKind::precision_unreachable: return "precision-unreachable";
    case ErrorKind::zero_crossing: return "zero-crossing";
    case ErrorKind::budget: return "budget";
    case ErrorKind::ladder_order: return "ladder-order";
    case ErrorKind::infeasible_box: return "infeasible-box";
    case ErrorKind::fixture: return "fixture";
    case ErrorKind::usage: return "usage";
  }
  return "unknown";
}

void raise(ErrorKind kind, const std::string& what) {
  throw Error(kind, std::string(to_string(kind)) + " error: " + what);
}

}  // namespace ezeta
