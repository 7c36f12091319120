#pragma once

#include <doctest.h>

#include "island/core.hpp"

// Runs `expr` and checks it throws island::Error with the given code.
#define CHECK_ERROR(expr, expected)                                    \
    do {                                                               \
        bool thrown_ = false;                                          \
        try {                                                          \
            (void)(expr);                                              \
        } catch (const island::Error& e_) {                            \
            thrown_ = true;                                            \
            CHECK(e_.code() == island::ErrorCode::expected);           \
        }                                                              \
        CHECK_MESSAGE(thrown_, "expected error " #expected);           \
    } while (0)
