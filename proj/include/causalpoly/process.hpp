#pragma once

// Deterministic classical processes f: A -> X and the fixed-point semantics
// of logical consistency.

#include "causalpoly/bitcore.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace causalpoly {

struct DetProcess {
  int n = 1;
  std::vector<int> x_of_a;  // entry a holds f(a)

  DetProcess() = default;
  DetProcess(int parties, std::vector<int> table);

  int operator()(int a) const { return x_of_a[static_cast<std::size_t>(a)]; }
  /// f_i(a), the input bit delivered to `party` (0-based).
  int coordinate(int party, int a) const { return bit_of((*this)(a), n, party); }

  /// Builds the table from per-party Boolean functions of the output string.
  template <typename Fn>
  static DetProcess from_function(int parties, Fn&& fn) {
    std::vector<int> table(static_cast<std::size_t>(string_count(parties)));
    for (int a = 0; a < string_count(parties); ++a) table[static_cast<std::size_t>(a)] = fn(a);
    return DetProcess(parties, std::move(table));
  }

  friend bool operator==(const DetProcess&, const DetProcess&) = default;
  friend auto operator<=>(const DetProcess&, const DetProcess&) = default;
};

DetProcess constant_process(int n, int x0);

/// M(a|x) = 1 iff x = f(a).
RationalMatrix to_matrix(const DetProcess& f);

std::vector<int> fixed_points(const DetProcess& f, const ProductOp& d);

bool is_consistent(const DetProcess& f);

/// Exhaustive scan of all (2^n)^(2^n) candidate functions; sorted output.
/// Throws std::invalid_argument for n outside {1, 2, 3}. `threads` <= 0 uses
/// the CF_THREADS cap.
std::vector<DetProcess> enumerate_det(int n, int threads = 0);

/// Number of parties whose input is constant.
int dk_class(const DetProcess& f);

/// Nonnegativity plus inner(m, D) = 1 for every product operation.
bool validate_vector(const RationalMatrix& m);

/// 2^n rows (a) by 2^n columns (x) of exact rationals, comma separated.
/// Throws std::invalid_argument on ragged rows or a non-power-of-two size.
RationalMatrix read_matrix_csv(std::istream& in);
void write_matrix_csv(std::ostream& out, const RationalMatrix& m);

/// Worker cap from the CF_THREADS environment variable (default: hardware concurrency).
int thread_cap();

}  // namespace causalpoly
