#pragma once

#include "causalpoly/process.hpp"

namespace fixtures {

using causalpoly::DetProcess;

inline int bit(int a, int n, int party) { return causalpoly::bit_of(a, n, party); }

inline int pack3(int x1, int x2, int x3) { return (x1 << 2) | (x2 << 1) | x3; }
inline int pack4(int x1, int x2, int x3, int x4) { return (x1 << 3) | (x2 << 2) | (x3 << 1) | x4; }

/// Three-party self-circle: x1 = !a2 & !a3, x2 = a1 & a3, x3 = !a1 & a2.
inline DetProcess self_circle() {
  return DetProcess::from_function(3, [](int a) {
    const int a1 = bit(a, 3, 0), a2 = bit(a, 3, 1), a3 = bit(a, 3, 2);
    return pack3(!a2 && !a3, a1 && a3, !a1 && a2);
  });
}

/// The printed 8x8 matrix of the self-circle, rows a, columns x.
inline const int kSelfCircleMatrix[8][8] = {
    {0, 0, 0, 0, 1, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0, 0},
    {0, 1, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 0, 0},
    {1, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 0, 0}};

/// Unidirectional three-cycle x1 = a3, x2 = a1, x3 = a2.
inline DetProcess three_cycle() {
  return DetProcess::from_function(3, [](int a) {
    return pack3(bit(a, 3, 2), bit(a, 3, 0), bit(a, 3, 1));
  });
}

/// Fixed order: x1 = 1, x2 = !a1, x3 = !a2, x4 = a1 ^ a3.
inline DetProcess fixed_four() {
  return DetProcess::from_function(4, [](int a) {
    const int a1 = bit(a, 4, 0), a2 = bit(a, 4, 1), a3 = bit(a, 4, 2);
    return pack4(1, !a1, !a2, a1 ^ a3);
  });
}

/// Adaptive order: x1 = 1, x2 = !a1 | !a3, x3 = a1 | !a4, x4 = !a2.
inline DetProcess adaptive_four() {
  return DetProcess::from_function(4, [](int a) {
    const int a1 = bit(a, 4, 0), a2 = bit(a, 4, 1), a3 = bit(a, 4, 2), a4 = bit(a, 4, 3);
    return pack4(1, !a1 || !a3, a1 || !a4, !a2);
  });
}

/// Complete-graph indefinite order.
inline DetProcess complete_four() {
  return DetProcess::from_function(4, [](int a) {
    const int a1 = bit(a, 4, 0), a2 = bit(a, 4, 1), a3 = bit(a, 4, 2), a4 = bit(a, 4, 3);
    return pack4(!a2 || !a3 || !a4, !a1 || !a3 || a4, !a1 || !a4 || a2, !a1 || !a2 || a3);
  });
}

}  // namespace fixtures
