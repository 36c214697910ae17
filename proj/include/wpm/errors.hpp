#pragma once

#include <stdexcept>

namespace wpm {

struct InvalidParams : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Divergent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WeightsNotDominant : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InconsistentOrientation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace wpm
