#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hamfan {

enum class Errc {
    parse,
    out_of_range,
    invalid_argument,
    precondition,
    threshold_missing,
    too_large,
    io,
    internal,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

// Each malformed-input condition gets its own kind so callers (and tests) can
// tell a bad header from a truncated bit stream.
enum class ParseErrc {
    empty_input,
    bad_header,
    byte_out_of_range,
    truncated,
    trailing_data,
    too_many_vertices,
    non_integer,
    self_loop,
    vertex_out_of_range,
};

std::string_view parse_errc_name(ParseErrc kind) noexcept;

class ParseError : public Error {
public:
    ParseError(ParseErrc kind, const std::string& what)
        : Error(Errc::parse, std::string(parse_errc_name(kind)) + ": " + what), kind_(kind) {}

    ParseErrc kind() const noexcept { return kind_; }

private:
    ParseErrc kind_;
};

/// Raised when an operation's input does not meet a documented precondition.
/// `check()` names the failing test, e.g. "edge v1-v_l".
class PreconditionError : public Error {
public:
    PreconditionError(std::string check, const std::string& what)
        : Error(Errc::precondition, what), check_(std::move(check)) {}

    const std::string& check() const noexcept { return check_; }

private:
    std::string check_;
};

} // namespace hamfan
