#pragma once

#include <stdexcept>
#include <string>

namespace pathcover {

// Bad argument: out-of-range vertex, invalid family parameter, empty graph
// where an order >= 1 is required, over-budget exact solve, ...
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Malformed textual input (graph6 or family-spec syntax). Carries the byte
// offset of the first offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// A structural fact that the constructive pipeline relies on failed on the
// given input. This normally means the input violates the freeness
// hypothesis; `predicate` names the failed check and `instance` is the
// graph6 encoding of the offending graph.
class HypothesisViolation : public std::runtime_error {
public:
    HypothesisViolation(const std::string& predicate, const std::string& instance,
                        const std::string& detail)
        : std::runtime_error(predicate + " failed on " + instance + ": " + detail),
          predicate_(predicate),
          instance_(instance),
          detail_(detail) {}

    const std::string& predicate() const noexcept { return predicate_; }
    const std::string& instance() const noexcept { return instance_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string predicate_;
    std::string instance_;
    std::string detail_;
};

}  // namespace pathcover
