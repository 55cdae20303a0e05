#pragma once

#include <stdexcept>
#include <string>

namespace repfn {

// Single exception type for the whole core; the code survives the trip
// through the C boundary as a status value.
class Error : public std::runtime_error {
public:
    enum class Code {
        InvalidArgument,
        OutOfRange,
        Parse,
        Io,
        BudgetExceeded,
        Capacity,
        Internal,
    };

    Error(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Code code() const noexcept { return code_; }

private:
    Code code_;
};

[[noreturn]] inline void raise(Error::Code code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace repfn
