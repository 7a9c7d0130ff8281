#pragma once

#include <stdexcept>
#include <string>

namespace wsadist {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed cost-model document.
class ParseError : public Error {
public:
    using Error::Error;
};

// Well-formed document whose contents break a CostModel invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Input exceeds a configured cell or length limit of a distance routine.
class SizeLimitError : public Error {
public:
    using Error::Error;
};

} // namespace wsadist
