#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace lensfib {

// Domain error with a stable machine-readable name ("GeneratorOutOfRange",
// "NotCoprime", ...). The CLI maps these to exit code 1 and a one-line record.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& message)
        : std::runtime_error(message), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

[[noreturn]] inline void fail(const char* name, const std::string& message) {
    throw Error(name, message);
}

} // namespace lensfib
