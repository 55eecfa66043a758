#ifndef SSG_ERRORS_HPP
#define SSG_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace ssg {

// A single violated axiom or malformed field, with a concrete witness.
struct Violation {
  std::string axiom;    // e.g. "cocycle-identity", "automorphism-range"
  std::string witness;  // human-readable instance, e.g. "(g=s, h=s, a=e0)"
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string str() const;
};

class ParseError : public std::runtime_error {
public:
  ParseError(std::string msg, int line = -1, int column = -1)
      : std::runtime_error(std::move(msg)), line(line), column(column) {}
  int line;
  int column;
};

class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(ValidationReport report);
  ValidationReport report;
};

// Precondition of an operation does not hold (e.g. tightness analysis on a
// triple with sources). Distinct from validation failure of the input data.
class PreconditionError : public std::runtime_error {
public:
  explicit PreconditionError(const std::string& msg)
      : std::runtime_error(msg) {}
};

// Raised by desingularization when a stabilizer element permutes the
// canonical incoming enumeration of a singular vertex. The construction's
// step "h e_i = e_i and h f_i = f_i" is only coherent when the enumeration
// is fixed elementwise, so this is surfaced rather than repaired.
class IncompatibleStabilizerError : public std::runtime_error {
public:
  IncompatibleStabilizerError(std::string vertex, std::string element,
                              int index);
  std::string vertex;
  std::string element;
  int index;
};

}  // namespace ssg

#endif
