#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace burau {

// Input is well-formed but outside the domain of the operation
// (singleton orbit, point outside the principal orbit, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::invalid_argument(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace burau
