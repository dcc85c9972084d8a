#include "causalpoly/switchlab.hpp"

#include <initializer_list>

namespace causalpoly {

DetProcess parser_process() {
  return DetProcess::from_function(4, [](int a) {
    const int a1 = bit_of(a, 4, 0), a2 = bit_of(a, 4, 1), a3 = bit_of(a, 4, 2), a4 = bit_of(a, 4, 3);
    const int x1 = a2 || !a3 || !a4;
    const int x2 = a1 || a3 || a4;
    return (x1 << 3) | (x2 << 2);
  });
}

std::vector<ConditionalSignaling> conditional_signaling_report(const DetProcess& f, std::pair<int, int> targets,
                                                               std::pair<int, int> controls) {
  const int n = f.n;
  std::vector<ConditionalSignaling> out;
  for (int c = 0; c < 4; ++c) {
    ConditionalSignaling r;
    r.control = c;
    for (int a = 0; a < string_count(n); ++a) {
      if (bit_of(a, n, controls.first) != (c >> 1) || bit_of(a, n, controls.second) != (c & 1)) continue;
      const int flip1 = f(a) ^ f(a ^ party_mask(n, targets.first));
      const int flip2 = f(a) ^ f(a ^ party_mask(n, targets.second));
      r.forward = r.forward || (flip1 & party_mask(n, targets.second));
      r.backward = r.backward || (flip2 & party_mask(n, targets.first));
    }
    out.push_back(r);
  }
  return out;
}

namespace {

// Party masks for four parties, party 1 most significant.
constexpr int P1 = 8, P2 = 4, P3 = 2, P4 = 1;

void expand(std::vector<PauliZTerm>& out, Rational scale, std::initializer_list<int> x_masks,
            std::initializer_list<std::pair<int, int>> a_poly) {
  for (int xm : x_masks)
    for (auto [coef, am] : a_poly) out.push_back(PauliZTerm{scale * coef, xm, am});
}

}  // namespace

std::vector<PauliZTerm> parser_terms() {
  std::vector<PauliZTerm> t;
  const Rational whole(1, 16), quarter(1, 64);
  expand(t, whole, {0, P3, P4, P3 | P4}, {{1, 0}});
  expand(t, quarter, {P1, P1 | P3, P1 | P4, P1 | P3 | P4},
         {{-3, 0}, {1, P2}, {-1, P3}, {-1, P4}, {-1, P2 | P3}, {-1, P2 | P4}, {1, P3 | P4}, {1, P2 | P3 | P4}});
  expand(t, quarter, {P2, P2 | P3, P2 | P4, P2 | P3 | P4},
         {{-3, 0}, {1, P1}, {1, P3}, {1, P4}, {1, P1 | P3}, {1, P1 | P4}, {1, P3 | P4}, {1, P1 | P3 | P4}});
  expand(t, quarter, {P1 | P2, P1 | P2 | P3, P1 | P2 | P4, P1 | P2 | P3 | P4},
         {{2, 0}, {-1, P1}, {-1, P2}, {-2, P3 | P4}, {1, P2 | P3}, {1, P2 | P4}, {-1, P1 | P3}, {-1, P1 | P4},
          {-1, P1 | P3 | P4}, {-1, P2 | P3 | P4}});
  return t;
}

DiagonalProcessMatrix diagonal_from_terms(int n, const std::vector<PauliZTerm>& terms) {
  const int s = string_count(n);
  DiagonalProcessMatrix w{n, RationalVector::Zero(s * s)};
  for (int x = 0; x < s; ++x)
    for (int a = 0; a < s; ++a) {
      Rational v = 0;
      for (const PauliZTerm& t : terms) {
        const int parity = __builtin_popcount(static_cast<unsigned>(x & t.x_mask)) +
                           __builtin_popcount(static_cast<unsigned>(a & t.a_mask));
        v += (parity % 2) ? Rational(-t.coefficient) : t.coefficient;
      }
      w.diag(x * s + a) = v;
    }
  return w;
}

DiagonalProcessMatrix build_w_parser() { return diagonal_from_terms(4, parser_terms()); }

DiagonalProcessMatrix diagonal_from_process(const DetProcess& f) {
  const int s = string_count(f.n);
  DiagonalProcessMatrix w{f.n, RationalVector::Zero(s * s)};
  for (int a = 0; a < s; ++a) w.diag(f(a) * s + a) = 1;
  return w;
}

WValidation validate_w_report(const DiagonalProcessMatrix& w, const DetProcess& f) {
  if (w.n != f.n) throw std::invalid_argument("validate_w: party count mismatch");
  const int s = string_count(w.n);
  WValidation r;
  r.nonnegative = true;
  for (Eigen::Index i = 0; i < w.diag.size(); ++i) r.nonnegative = r.nonnegative && w.diag(i) >= 0;
  r.contractions_ok = true;
  for (const ProductOp& d : product_op(w.n)) {
    Rational sum = 0;
    for (int x = 0; x < s; ++x) sum += w.at(x, d.apply(x));
    if (sum != 1) {
      r.contractions_ok = false;
      r.failing_operation = d.ordinal();
      break;
    }
  }
  const Rational c = w.at(f(0), 0);
  r.proportional = c != 0;
  for (int x = 0; x < s && r.proportional; ++x)
    for (int a = 0; a < s; ++a)
      if (w.at(x, a) != (f(a) == x ? c : Rational(0))) {
        r.proportional = false;
        break;
      }
  return r;
}

bool validate_w(const DiagonalProcessMatrix& w, const DetProcess& f) { return validate_w_report(w, f).ok(); }

}  // namespace causalpoly
