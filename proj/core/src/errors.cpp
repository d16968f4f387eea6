#include "p2lsg/errors.hpp"

namespace p2lsg {

ParseError::ParseError(const std::string& what, std::size_t offset)
    : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

}  // namespace p2lsg
