#pragma once

#include <string>
#include <vector>

#include "schurthom/numbers.hpp"
#include "schurthom/schur.hpp"
#include "schurthom/thom.hpp"
#include "schurthom/verify.hpp"

namespace schurthom {

struct OutputTerm {
  std::vector<int> partition;
  Integer coefficient;
  friend bool operator==(const OutputTerm&, const OutputTerm&) = default;
};

/// The machine-readable result of `compute`. Terms follow the canonical
/// partition order.
struct OutputDocument {
  SingularityParams singularity;
  int codimension = 0;
  std::string basis = "schur";
  std::vector<OutputTerm> terms;
  std::string route;

  static OutputDocument make(const SchurExpr& x, const SingularityParams& params, Route route);
  SchurExpr expression() const;

  friend bool operator==(const OutputDocument&, const OutputDocument&) = default;
};

/// Pretty-printed JSON; coefficients are decimal strings.
std::string render_json(const OutputDocument& doc);

/// Inverse of render_json. Throws std::invalid_argument on malformed input.
OutputDocument parse_json(const std::string& text);

/// "s[2] + 2*s[1,1]".
std::string render_text(const SchurExpr& x);

/// "s_{5} + 3s_{4,1}"; a coefficient of 1 is omitted and s of the empty
/// partition prints as 1.
std::string render_latex(const SchurExpr& x);

std::string render_reports_text(const std::vector<VerificationReport>& reports);
std::string render_reports_json(const std::vector<VerificationReport>& reports);

/// One row per gamma: the sequence and c_gamma.
std::string render_series_text(const ThomSeriesExpr& series);

}  // namespace schurthom
