#ifndef GERMINV_ERRORS_HPP
#define GERMINV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace germinv {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Syntax or semantic error in an instance file; carries a location.
struct ParseError : Error {
    int line;
    int column;
    ParseError(int ln, int col, const std::string& msg)
        : Error("line " + std::to_string(ln) + ":" + std::to_string(col) + ": " + msg),
          line(ln),
          column(col)
    {
    }
};

// Two independently computed values that a theorem forces to be equal differ.
// This is fatal by design: the tool is a verification instrument.
struct FormulaMismatch : Error {
    long lhs;
    long rhs;
    FormulaMismatch(const std::string& what_differs, long a, long b)
        : Error(what_differs + ": " + std::to_string(a) + " != " + std::to_string(b)),
          lhs(a),
          rhs(b)
    {
    }
};

} // namespace germinv

#endif
