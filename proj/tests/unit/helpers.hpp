#pragma once

#include <doctest.h>

#include "gsh/error.hpp"

/// Checks that `expr` throws gsh::Error with the given code.
#define CHECK_ERRC(expr, errc)                                   \
  do {                                                           \
    bool thrown_ = false;                                        \
    try {                                                        \
      (void)(expr);                                              \
    } catch (const gsh::Error& e_) {                             \
      thrown_ = true;                                            \
      CHECK_MESSAGE(e_.code() == (errc), e_.what());             \
    }                                                            \
    CHECK_MESSAGE(thrown_, "no gsh::Error thrown by " #expr);    \
  } while (0)
