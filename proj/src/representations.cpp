#include "nvk/representations.hpp"

namespace nvk {

namespace {

void require_shapes(const Representation& rho) {
    const std::size_t n = rho.algebra.dim(), m = rho.module_dim();
    if (rho.l.size() != n || rho.r.size() != n)
        throw Error(ErrorKind::ShapeMismatch, "representation needs one l and one r matrix per algebra basis element");
    for (std::size_t a = 0; a < n; ++a)
        if (rho.l[a].shape() != Mat::Shape{m, m} || rho.r[a].shape() != Mat::Shape{m, m})
            throw Error(ErrorKind::ShapeMismatch, "representation matrices must be m x m");
}

}  // namespace

Report check_representation(const Representation& rho) {
    require_shapes(rho);
    const Algebra& A = rho.algebra;
    const std::size_t n = A.dim();
    Report rep("representation");
    Report r1("l_commutator"), r2("lr_mixed"), r3("l_product"), r4("r_commute");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const std::vector<std::size_t> w{a, b};
            const std::string lab = witness_label(A.basis(), w);
            const Mat &la = rho.l[a], &lb = rho.l[b], &ra = rho.r[a], &rb = rho.r[b];
            const Vec ab = A.product(a, b), ba = A.product(b, a);
            r1.expect_zero("l(ab-ba)-[l(a),l(b)]", w, lab, rho.l_of(ab - ba) - (matmul(la, lb) - matmul(lb, la)));
            r2.expect_zero("l(a)r(b)-r(b)l(a)-r(ab)+r(b)r(a)", w, lab,
                           matmul(la, rb) - matmul(rb, la) - rho.r_of(ab) + matmul(rb, ra));
            r3.expect_zero("l(ab)-r(b)l(a)", w, lab, rho.l_of(ab) - matmul(rb, la));
            r4.expect_zero("r(a)r(b)-r(b)r(a)", w, lab, matmul(ra, rb) - matmul(rb, ra));
        }
    rep.add_part(std::move(r1));
    rep.add_part(std::move(r2));
    rep.add_part(std::move(r3));
    rep.add_part(std::move(r4));
    return rep;
}

Representation adjoint_representation(const Algebra& a) {
    auto ops = multiplication_operators(a);
    return {a, a.basis(), std::move(ops.L), std::move(ops.R)};
}

Mat dual_map(const Mat& m) { return -transpose(m); }

Representation dual_representation(const Representation& rho) {
    require(check_representation(rho), ErrorKind::NotRepresentation, "input is not a representation");
    Representation d{rho.algebra, rho.module_basis.decorated("*"), {}, {}};
    for (std::size_t a = 0; a < rho.algebra.dim(); ++a) {
        d.l.push_back(dual_map(rho.l[a]) + dual_map(rho.r[a]));
        d.r.push_back(-dual_map(rho.r[a]));
    }
    require(check_representation(d), ErrorKind::NotRepresentation, "dual is not a representation");
    return d;
}

Algebra semidirect_product_unchecked(const Representation& rho) {
    require_shapes(rho);
    const Algebra& A = rho.algebra;
    const std::size_t n = A.dim(), m = rho.module_dim(), N = n + m;
    Ten3 c(A.field(), {N, N, N});
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t g = 0; g < n; ++g) c(a, b, g) = A.constants()(a, b, g);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t i = 0; i < m; ++i) {
                c(a, n + j, n + i) = rho.l[a](i, j);  // a . v_j = l(a) v_j
                c(n + j, a, n + i) = rho.r[a](i, j);  // v_j . a = r(a) v_j
            }
    Basis module = rho.module_basis;
    // the adjoint module reuses the algebra's names
    auto clashes = [&](const Basis& b) {
        for (std::size_t i = 0; i < b.size(); ++i)
            if (A.basis().contains(b.name(i))) return true;
        return false;
    };
    while (clashes(module)) module = module.decorated("'");
    return Algebra(A.basis() + module, std::move(c));
}

Algebra semidirect_product(const Representation& rho) {
    require(check_representation(rho), ErrorKind::NotRepresentation, "input is not a representation");
    Algebra out = semidirect_product_unchecked(rho);
    require(check_novikov(out), ErrorKind::NotNovikov, "semidirect product is not Novikov");
    return out;
}

}  // namespace nvk
