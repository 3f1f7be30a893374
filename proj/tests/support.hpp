#pragma once

#include <optional>

#include "ksym/error.hpp"

namespace support {

/// Code of the ksym::Error thrown by fn, or nullopt when nothing is thrown.
template <class F>
std::optional<ksym::ErrorCode> error_code_of(F&& fn) {
  try {
    fn();
  } catch (const ksym::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace support
