#ifndef EPIWORD_TESTS_SUPPORT_HPP
#define EPIWORD_TESTS_SUPPORT_HPP

#include <doctest.h>

#include <functional>

#include "epiword/error.hpp"

/// Kind of the epiword::Error raised by f; fails the test when none is.
inline epiword::ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const epiword::Error& e) {
    return e.kind();
  }
  FAIL("expected an epiword::Error");
  return epiword::ErrorKind::InvalidArgument;
}

#endif  // EPIWORD_TESTS_SUPPORT_HPP
