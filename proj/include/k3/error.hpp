#pragma once

#include <stdexcept>
#include <string>

namespace k3 {

// Library errors carry a stable machine-readable code ("ZeroPolynomial",
// "PrecisionExhausted", ...) next to the human-readable message. The CLI
// maps codes to exit statuses.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

} // namespace k3
