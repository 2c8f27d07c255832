#pragma once

#include <stdexcept>
#include <string>

namespace dyckstat {

// Thrown when an input is valid in principle but exceeds a documented
// enumeration/search ceiling. Distinct from std::domain_error so callers
// can map the two to different exit codes.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace dyckstat
