#pragma once

#include <string>

#include "sparsecut/error.hpp"

namespace sparsecut::detail {

inline void precondition(const char* method, bool cond, const std::string& what) {
    if (!cond) fail(ErrorKind::Precondition, std::string(method) + " precondition violated: " + what);
}

}  // namespace sparsecut::detail
