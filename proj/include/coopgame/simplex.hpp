#ifndef COOPGAME_SIMPLEX_HPP
#define COOPGAME_SIMPLEX_HPP

#include <vector>

#include "coopgame/rational.hpp"

namespace coopgame {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Rat objective;
    std::vector<Rat> x;       // structural variable values
    std::vector<Rat> prices;  // simplex multipliers, one per constraint row
};

// Minimizes c.x subject to A x = b, x >= 0, by the two-phase primal
// simplex method with Bland's anti-cycling rule, entirely in exact
// rationals. The returned prices pi satisfy pi.b = objective and are the
// optimal solution of the dual program.
LpSolution solve_standard_lp(std::vector<std::vector<Rat>> A, std::vector<Rat> b,
                             std::vector<Rat> c);

}  // namespace coopgame

#endif
