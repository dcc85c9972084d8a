#pragma once

// The parallel-serial switch as a classical process and as a diagonal
// process matrix over the basis x1..xn a1..an.

#include "causalpoly/process.hpp"

#include <vector>

namespace causalpoly {

/// x1 = a2 | !a3 | !a4, x2 = a1 | a3 | a4, x3 = x4 = 0.
DetProcess parser_process();

struct ConditionalSignaling {
  int control = 0;  // joint value of the control outputs, first control most significant
  bool forward = false;   // first target -> second target
  bool backward = false;  // second target -> first target
};

/// Restricted flip test between `targets` for every joint value of `controls`
/// (0-based parties).
std::vector<ConditionalSignaling> conditional_signaling_report(const DetProcess& f, std::pair<int, int> targets = {0, 1},
                                                               std::pair<int, int> controls = {2, 3});

/// coefficient * (product of sigma_z on x parties in x_mask) (x) (same on a parties in a_mask).
struct PauliZTerm {
  Rational coefficient;
  int x_mask = 0;
  int a_mask = 0;
};

struct DiagonalProcessMatrix {
  int n = 1;
  RationalVector diag;  // index x * 2^n + a

  Rational trace() const { return diag.sum(); }
  const Rational& at(int x, int a) const { return diag(x * string_count(n) + a); }
};

/// The expansion of the switch matrix as printed, term by term.
std::vector<PauliZTerm> parser_terms();
DiagonalProcessMatrix diagonal_from_terms(int n, const std::vector<PauliZTerm>& terms);
DiagonalProcessMatrix build_w_parser();
DiagonalProcessMatrix diagonal_from_process(const DetProcess& f);

struct WValidation {
  bool nonnegative = false;
  bool contractions_ok = false;
  int failing_operation = -1;  // ordinal of the first contraction that is not 1
  bool proportional = false;   // diag(x, a) = c * M(a|x) for one constant c
  bool ok() const { return nonnegative && contractions_ok && proportional; }
};

WValidation validate_w_report(const DiagonalProcessMatrix& w, const DetProcess& f);
bool validate_w(const DiagonalProcessMatrix& w, const DetProcess& f);

}  // namespace causalpoly
