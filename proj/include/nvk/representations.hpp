#pragma once

#include "nvk/algebras.hpp"

namespace nvk {

// (V, l, r): l[a], r[a] are m x m matrices for each basis element a of the algebra.
struct Representation {
    Algebra algebra;
    Basis module_basis;
    std::vector<Mat> l;
    std::vector<Mat> r;

    std::size_t module_dim() const { return module_basis.size(); }
    Mat l_of(const Vec& a) const { return combine(l, a); }
    Mat r_of(const Vec& a) const { return combine(r, a); }
};

Report check_representation(const Representation& rho);

// (A, L, R)
Representation adjoint_representation(const Algebra& a);

// phi* = -phi^T on the literal dual basis.
Mat dual_map(const Mat& m);

// (V*, l* + r*, -r*)
Representation dual_representation(const Representation& rho);

// Basis order: algebra basis then module basis (module names get a prime on a clash).
Algebra semidirect_product(const Representation& rho);
// Same product without the representation precondition (for converse probes).
Algebra semidirect_product_unchecked(const Representation& rho);

}  // namespace nvk
