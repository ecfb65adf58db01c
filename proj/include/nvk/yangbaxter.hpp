#pragma once

#include <tuple>

#include "nvk/bialgebra.hpp"
#include "nvk/representations.hpp"

namespace nvk {

bool is_skewsymmetric(const Ten2& r);

// r13.r23 + r12*r23 + r13.r12; zero iff r solves the NYBE.
Ten3 nybe_residual(const Algebra& a, const Ten2& r);
Report check_nybe(const Algebra& a, const Ten2& r);

// T(f) = sum <f, x_a> y_a as a matrix from A* to A.
Mat t_map(const Ten2& r);
Report check_t_identity(const Algebra& a, const Ten2& r);

// T : V -> A, an n x m matrix.
struct OOperator {
    Representation rep;
    Mat T;
};

Report check_o_operator(const OOperator& o);
PreNovikovAlgebra o_operator_to_pre_novikov(const OOperator& o);
// Semidirect algebra A x| V* for the dual representation and r = r_T - t r_T.
std::pair<Algebra, Ten2> o_operator_lift(const OOperator& o);

// (A, L_right, R_left) for the associated Novikov algebra of p.
Representation pre_novikov_representation(const PreNovikovAlgebra& p);

struct CanonicalSolution {
    Algebra algebra;
    Ten2 r;
    BilinearForm omega;
};
CanonicalSolution pre_novikov_canonical_solution(const PreNovikovAlgebra& p);

enum class FormFlavor { novikov, right_novikov };
Report check_invariant_form(const Algebra& a, const BilinearForm& b, FormFlavor flavor);
Report check_quasi_frobenius(const Algebra& a, const BilinearForm& omega);

// r = sum e_a (x) f_a with omega(e_a, f_b) = delta_ab; inverse via r_to_form.
Ten2 form_to_r(const Algebra& a, const BilinearForm& omega);
BilinearForm r_to_form(const Algebra& a, const Ten2& r);

}  // namespace nvk
