#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rcp {

enum class Errc {
    NonConvergence,
    PoleMismatch,
    RadiusCollision,
    BaseLocusCollision,
    ParseError,
    BranchError,
    DimensionMismatch,
    DegenerateMap,
    IndexError,
    DegreeError,
    UnsupportedShape,
    ReferenceZero,
    ConfigError,
    InputError,
};

const char* errc_name(Errc code) noexcept;

// All library failures are reported through this type; code() is stable and
// what() carries the context (pair, site, field path...).
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message);

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& message);

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace rcp
