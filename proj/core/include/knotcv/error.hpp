#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace knotcv {

// Error taxonomy mirrored by CLI exit codes: input -> 3, numeric -> 4,
// verification -> 2.
enum class ErrorKind { input, numeric, verification };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    int exit_code() const noexcept {
        switch (kind_) {
            case ErrorKind::verification: return 2;
            case ErrorKind::input: return 3;
            case ErrorKind::numeric: return 4;
        }
        return 4;
    }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void throw_input(std::string msg) {
    throw Error(ErrorKind::input, std::move(msg));
}
[[noreturn]] inline void throw_numeric(std::string msg) {
    throw Error(ErrorKind::numeric, std::move(msg));
}
[[noreturn]] inline void throw_verification(std::string msg) {
    throw Error(ErrorKind::verification, std::move(msg));
}

}  // namespace knotcv
