#pragma once

#include <cstddef>
#include <sstream>
#include <string>

#include "afq/error.hpp"

namespace afq::detail {

inline std::string grid_prefix(std::size_t index, double tau) {
  std::ostringstream os;
  os << "grid index " << index << " (tau = " << tau << "): ";
  return os.str();
}

// Runs fn and re-raises afq errors with the grid position prepended.
template <class Fn>
void with_grid_index(std::size_t index, double tau, Fn&& fn) {
  try {
    fn();
  } catch (const QuadratureError& e) {
    throw QuadratureError(grid_prefix(index, tau) + e.what(), e.value(),
                          e.abs_error(), e.intervals());
  } catch (const DomainError& e) {
    throw DomainError(grid_prefix(index, tau) + e.what(), e.code());
  } catch (const Error& e) {
    throw Error(e.code(), grid_prefix(index, tau) + e.what());
  }
}

}  // namespace afq::detail
