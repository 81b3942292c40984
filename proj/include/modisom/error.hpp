#pragma once

#include <stdexcept>
#include <string>

namespace modisom {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Mixed ambient dimensions or mixed primes.
struct dimension_mismatch : error {
    explicit dimension_mismatch(const std::string& what) : error(what) {}
};

// An input or an intermediate object exceeded a configured size cap.
// Operations refuse oversized inputs instead of degrading silently.
struct cap_exceeded : error {
    explicit cap_exceeded(const std::string& what) : error(what) {}
};

// Group presentation text that cannot be parsed.
struct parse_error : error {
    explicit parse_error(const std::string& what) : error(what) {}
};

// An end-to-end verification pipeline hit a failing check.
struct verification_error : error {
    explicit verification_error(const std::string& what) : error(what) {}
};

} // namespace modisom
