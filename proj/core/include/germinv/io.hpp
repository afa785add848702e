#ifndef GERMINV_IO_HPP
#define GERMINV_IO_HPP

#include <string>

#include "germinv/errors.hpp"
#include "germinv/parametrization.hpp"
#include "germinv/pipeline.hpp"

namespace germinv {

// Parses an instance file.  Line oriented:
//   # comment to end of line
//   n = <int>
//   branch <name> (<param>): x1 = <poly>, ..., xn = <poly>
//   ideal: <name> = <poly in x1..xn>
// Polynomials are signed sums of <rational> <var>^<int> terms; rationals are
// p/q or integers.  Throws ParseError with a location on any failure.
ProblemInstance parse_instance(const std::string& text);

// Canonical serialization; parse(render(parse(x))) is the identity on the
// parametrization and ideal.
std::string render_instance(const ProblemInstance& instance);

// Deterministic report; identical outcomes render byte-identically.
std::string render_report(const RunOutcome& outcome, ReportFormat format);

} // namespace germinv

#endif
