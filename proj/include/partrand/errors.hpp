#pragma once

#include <stdexcept>
#include <string>

namespace partrand {

// Thrown when a configured resource cap (table size, enumeration cap,
// rejection-trial budget) would be exceeded. Maps to CLI exit code 3.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace partrand
