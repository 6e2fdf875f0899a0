#ifndef LTCERT_ERRORS_HPP
#define LTCERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ltcert {

// Degree/structure beyond the configured caps (exit code 3 at the CLI).
struct unsupported_degree_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Working precision exhausted after escalation up to the hard cap.
struct precision_exhausted_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A theorem hypothesis violated by the inputs (e.g. i = 2r).
struct hypothesis_violated_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Hensel hypothesis not satisfied by the seed.
struct not_liftable_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}

#endif
