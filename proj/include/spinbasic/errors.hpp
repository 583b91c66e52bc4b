#pragma once

#include <stdexcept>
#include <string>

namespace spinbasic {

// p not an odd prime, or similar bad numeric parameter.
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A core passed to a reconstruction routine still has a removable p-bar.
class InvalidCore : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Values for the target side of an isometry are not available
// (local groups are handled purely through labels).
class UnsupportedTarget : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Indicates an arithmetic or bookkeeping bug, never bad user input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace spinbasic
