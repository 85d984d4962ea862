#pragma once

#include <stdexcept>

namespace symres {

/* Bad user-supplied data: parse errors, malformed files, violated data preconditions. */
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/* Well-formed input that fails a mathematical contract (not a complex, a false
 * minimality claim, a shape mismatch); carries a located witness. */
class ValidationError : public InputError {
public:
    using InputError::InputError;
};

/* A configurable resource guard tripped. Always an explicit error, never a wrong answer. */
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace symres
