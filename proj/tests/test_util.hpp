#pragma once

#include <stdexcept>
#include <utility>

#include "domcube/errors.hpp"

namespace test_util {

// Runs f, which must throw domcube::Error, and hands back the code.
template <typename F>
domcube::Errc error_code_of(F&& f) {
  try {
    std::forward<F>(f)();
  } catch (const domcube::Error& e) {
    return e.code();
  }
  throw std::logic_error("expected a domcube::Error");
}

}  // namespace test_util
