#pragma once

#include <stdexcept>
#include <string>

namespace hexdn {

// Exit-code taxonomy used by the CLI: validation 2, numeric 3, coverage 4.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// lambda within an active edge potential's Dirichlet spectrum
struct EdgeSpectrumHit : NumericFailure {
  using NumericFailure::NumericFailure;
};

// interior pencil singular / condition gate tripped
struct InteriorSpectrumHit : NumericFailure {
  using NumericFailure::NumericFailure;
};

// vertex<->edge model conversion degenerate (background s vanishes)
struct ConversionDegenerate : NumericFailure {
  using NumericFailure::NumericFailure;
};

// partial-data system rank deficient
struct UniquenessViolation : NumericFailure {
  using NumericFailure::NumericFailure;
};

// residual gate breached on an overdetermined solve
struct Inconsistency : NumericFailure {
  using NumericFailure::NumericFailure;
};

struct DescentUnderdetermined : NumericFailure {
  using NumericFailure::NumericFailure;
};

// a line-trace quotient hit the underflow guard
struct RatioSingular : NumericFailure {
  using NumericFailure::NumericFailure;
};

// a recovery chain has no background anchor to start from
struct AnchorMissing : NumericFailure {
  using NumericFailure::NumericFailure;
};

// dataset-mode oracle cannot serve a required (domain, lambda) query
struct CoverageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hexdn
