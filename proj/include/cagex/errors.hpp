#pragma once

#include <stdexcept>
#include <string>

namespace cagex {

// Malformed input: unreadable files, bad graph encodings, invalid edge lists.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical precondition does not hold for the given graph or parameters
// (wrong regularity, wrong girth parity, parameter out of range, ...).
class hypothesis_error : public std::runtime_error {
public:
    explicit hypothesis_error(const std::string& what) : std::runtime_error(what) {}
};

// An exhaustive enumeration was requested beyond the configured size cap.
class cap_error : public std::runtime_error {
public:
    explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cagex
