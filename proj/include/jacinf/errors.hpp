#pragma once

#include <stdexcept>
#include <string>

namespace jacinf {

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg + " at " + std::to_string(line_) + ":" + std::to_string(col_)),
          line(line_), col(col_) {}
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace jacinf
