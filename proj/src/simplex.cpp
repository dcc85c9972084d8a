#include "causalpoly/simplex.hpp"

namespace causalpoly {

const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
    default: return "pivot_limit";
  }
}

}  // namespace causalpoly
