#pragma once

#include "nvk/algebras.hpp"

namespace nvk {

// Delta(e_g) = sum d[g][a][b] e_a (x) e_b.
struct Coalgebra {
    Basis basis;
    Ten3 d;

    std::size_t dim() const { return basis.size(); }
    const Field& field() const { return d.field(); }
    Ten2 delta(std::size_t g) const { return slice0(d, g); }
    Ten2 delta(const Vec& x) const;

    static Coalgebra zero(const Basis& b, const Field& f);
    friend bool operator==(const Coalgebra& x, const Coalgebra& y) { return x.basis == y.basis && x.d == y.d; }
};

Report check_novikov_coalgebra(const Coalgebra& c);

// e_a* . e_b* = sum_g d[g][a][b] e_g*. Basis names are kept as given.
Algebra dualize_coproduct(const Coalgebra& c);
Coalgebra dualize_product(const Algebra& a);

Report check_novikov_bialgebra(const Algebra& a, const Coalgebra& c);

// Delta_r(x) = (L(x) (x) id + id (x) Lstar(x)) r
Coalgebra coboundary_coproduct(const Algebra& a, const Ten2& r);

Ten2 flip(const Ten2& r);

// Triple-tensor placements of two 2-tensors, named after the subscripts:
// r12.r'13, r12.r'23, r13.r'23, r13.r'12, r23.r'13 (all with the algebra's
// product) and the star versions r12*r'23, r13*r'23.
enum class Placement { p12_13, p12_23, p13_23, p13_12, p23_13 };
Ten3 place(const Ten3& product, const Ten2& r, const Ten2& s, Placement p);

// r13.r23 + r12*r23 + r13.r12
Ten3 nybe_tensor(const Algebra& a, const Ten2& r);

// Per-condition verdicts for the coboundary coproduct, plus the consistency
// check against check_novikov_bialgebra(a, Delta_r).
Report check_cob_conditions(const Algebra& a, const Ten2& r);

}  // namespace nvk
