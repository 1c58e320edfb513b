#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ell {

/// Base error; carries a short machine-readable code next to the message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

/// Malformed input text. Line/column are 1-based; column 0 means "whole line".
class ParseError : public Error {
public:
    ParseError(std::string code, const std::string& msg, int line, int col = 0)
        : Error(std::move(code), msg), line_(line), col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

/// Greedy pruning got stuck; `residual` holds the vertices still alive.
class NotDistanceHereditaryError : public Error {
public:
    NotDistanceHereditaryError(const std::string& msg, std::vector<int> residual)
        : Error("not-distance-hereditary", msg), residual_(std::move(residual)) {}
    const std::vector<int>& residual() const { return residual_; }

private:
    std::vector<int> residual_;
};

} // namespace ell
