#ifndef PWT_ERRORS_HPP
#define PWT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pwt {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A file could not be read or written.
class IoError : public Error {
 public:
    explicit IoError(const std::string& what) : Error(what) {}
};

// Malformed input text (instance files, tour files, config files, plan JSON).
class ParseError : public Error {
 public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

// Structurally well-formed input that violates a domain invariant.
class ValidationError : public Error {
 public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

// Objective evaluation hit a nonpositive segment speed; carries the
// 0-based tour position of the offending segment.
class EvalError : public Error {
 public:
    EvalError(const std::string& what, int tour_position)
        : Error(what), tour_position_(tour_position) {}
    int tour_position() const { return tour_position_; }

 private:
    int tour_position_;
};

// A reward function was asked to score an item whose hypothetical load
// makes the vehicle speed nonpositive.
class ScoreError : public Error {
 public:
    explicit ScoreError(const std::string& what) : Error(what) {}
};

// Illegal algorithm/reward pairing, bad option combination, or an
// out-of-contract request (e.g. oracle beyond its item cap).
class ConfigError : public Error {
 public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace pwt

#endif  // PWT_ERRORS_HPP
