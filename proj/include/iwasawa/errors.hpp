#pragma once

#include <stdexcept>

namespace iwasawa {

// Input outside an operation's domain or a theorem hypothesis. CLI exit code 2.
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Two independent computation routes disagreed, or a checked identity failed.
// CLI exit code 3.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Work refused because it exceeds a configured cap. CLI exit code 4.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace iwasawa
