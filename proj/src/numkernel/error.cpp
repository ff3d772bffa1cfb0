#include "rcperiod/error.hpp"

namespace rcp {

const char* errc_name(Errc code) noexcept
{
    switch (code) {
    case Errc::NonConvergence: return "NON_CONVERGENCE";
    case Errc::PoleMismatch: return "POLE_MISMATCH";
    case Errc::RadiusCollision: return "RADIUS_COLLISION";
    case Errc::BaseLocusCollision: return "BASE_LOCUS_COLLISION";
    case Errc::ParseError: return "PARSE_ERROR";
    case Errc::BranchError: return "BRANCH_ERROR";
    case Errc::DimensionMismatch: return "DIMENSION_MISMATCH";
    case Errc::DegenerateMap: return "DEGENERATE_MAP";
    case Errc::IndexError: return "INDEX_ERROR";
    case Errc::DegreeError: return "DEGREE_ERROR";
    case Errc::UnsupportedShape: return "UNSUPPORTED_SHAPE";
    case Errc::ReferenceZero: return "REFERENCE_ZERO";
    case Errc::ConfigError: return "CONFIG_ERROR";
    case Errc::InputError: return "INPUT_ERROR";
    }
    return "UNKNOWN";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code)
{
}

ParseError::ParseError(std::size_t offset, const std::string& message)
    : Error(Errc::ParseError, message + " at offset " + std::to_string(offset)), offset_(offset)
{
}

} // namespace rcp
