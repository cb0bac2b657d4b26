#pragma once

#include "cayley/algebra.hpp"
#include "cayley/enumerate.hpp"

namespace cayley {

// System f_t = x_t * G_t(f_1, ..., f_d). The series live in the Axis
// variables y_1..y_d; an optional (d+1)-th series is the observable whose
// coefficients the inversion formula extracts.
struct FunctionalSystem {
    int d = 1;
    std::vector<PowerSeries> G;  // size d, or d+1 with the observable last
    int order = 1;

    bool has_observable() const { return static_cast<int>(G.size()) == d + 1; }
};

void check_system(const FunctionalSystem& system, bool need_observable);

enum class SolveSchedule { WholeSeries, DegreeByDegree };

// Unique truncated solution of the fixed-point system, to the system order.
std::vector<PowerSeries> solve_functional_system(
    const FunctionalSystem& system,
    SolveSchedule schedule = SolveSchedule::WholeSeries);

// [x^n] f_rho through the combinatorial tree sum.
Rat tree_sum_coefficient(const FunctionalSystem& system, int root_type,
                         const std::vector<int>& n, const EnumBounds& bounds = {});

// [x^n] G_{d+1}(f_1,...,f_d) through the derivative-operator skeleton sum;
// n must be strictly positive coordinate-wise.
Rat lagrange_rhs_coefficient(const FunctionalSystem& system,
                             const std::vector<int>& n);

// [x^n] G_{d+1}(f_1,...,f_d) by direct substitution of the solved series.
Rat observable_coefficient(const FunctionalSystem& system,
                           const std::vector<int>& n);

Monomial axis_monomial(const std::vector<int>& n);

}  // namespace cayley
