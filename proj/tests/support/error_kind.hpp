#pragma once

#include "genusgrid/error.hpp"

#include <optional>

/// Kind of the genusgrid::Error thrown by f, or nullopt when f returns.
template <class F>
std::optional<genusgrid::ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (const genusgrid::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}
