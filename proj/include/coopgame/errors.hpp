#ifndef COOPGAME_ERRORS_HPP
#define COOPGAME_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coopgame {

// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument outside an operation's domain (player in coalition, non-simple
// game passed to a simple-game routine, mismatched graph, ...).
struct domain_error : error {
    explicit domain_error(const std::string& msg) : error(msg) {}
};

// An enumeration-guarded operation was asked to run past its size cap.
struct size_guard_error : error {
    explicit size_guard_error(const std::string& msg) : error(msg) {}
};

// A game description violates a backend invariant (negative weight,
// non-antichain MWC list, v(empty) != 0, ...).
struct validation_error : error {
    explicit validation_error(const std::string& msg) : error(msg) {}
};

// Malformed game file. `where` carries a location hint when available.
struct parse_error : validation_error {
    parse_error(const std::string& msg, const std::string& where = "")
        : validation_error(where.empty() ? msg : msg + " (at " + where + ")") {}
};

}  // namespace coopgame

#endif
