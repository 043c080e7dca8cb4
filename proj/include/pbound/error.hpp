#pragma once

#include <stdexcept>
#include <string>

namespace pbound {

// Input and domain errors. The CLI maps these to exit code 1; usage
// errors are reported by the argument parser with exit code 2.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pbound
