#pragma once

#include <stdexcept>
#include <string>

namespace pinchuk {

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// mixing operands that live over different variable universes
struct universe_mismatch : error {
    explicit universe_mismatch(const std::string& msg) : error(msg) {}
};

// violated precondition: bad argument value, unknown variable, zero divisor, ...
struct domain_error : error {
    explicit domain_error(const std::string& msg) : error(msg) {}
};

// a symbolic identity that must hold failed to verify
struct identity_failure : error {
    explicit identity_failure(const std::string& msg) : error(msg) {}
};

// a bounded search ended without finding what it was required to find
struct search_exhausted : error {
    explicit search_exhausted(const std::string& msg) : error(msg) {}
};

} // namespace pinchuk
