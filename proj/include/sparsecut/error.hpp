#pragma once

#include <stdexcept>
#include <string>

namespace sparsecut {

// Failure categories. The CLI maps these one-to-one onto exit codes.
enum class ErrorKind {
    InvalidInput,     // malformed graph, bad argument
    Precondition,     // a theorem's hypothesis does not hold for this input
    BudgetExhausted,  // an exhaustive search hit its configured cap
    Invariant,        // internal consistency check failed: a bug
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
    if (!cond) fail(kind, what);
}

// Internal invariant check; never compiled out.
inline void ensure(bool cond, const std::string& what) {
    if (!cond) fail(ErrorKind::Invariant, "invariant violated: " + what);
}

}  // namespace sparsecut
