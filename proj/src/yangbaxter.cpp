#include "nvk/yangbaxter.hpp"

namespace nvk {

bool is_skewsymmetric(const Ten2& r) { return (r + flip(r)).is_zero(); }

Ten3 nybe_residual(const Algebra& A, const Ten2& r) {
    require(check_novikov(A), ErrorKind::NotNovikov, "NYBE needs a Novikov algebra");
    if (r.shape() != Ten2::Shape{A.dim(), A.dim()}) throw Error(ErrorKind::ShapeMismatch, "r must live in A (x) A");
    return nybe_tensor(A, r);
}

Report check_nybe(const Algebra& A, const Ten2& r) {
    Report rep("nybe");
    rep.expect_zero("r13.r23+r12*r23+r13.r12", {}, "r", nybe_residual(A, r));
    return rep;
}

Mat t_map(const Ten2& r) { return transpose(r); }

Report check_t_identity(const Algebra& A, const Ten2& r) {
    const std::size_t n = A.dim();
    const auto ops = multiplication_operators(A);
    const Mat T = t_map(r);
    Report rep("t_identity");
    for (std::size_t f = 0; f < n; ++f)
        for (std::size_t g = 0; g < n; ++g) {
            const Vec vf = unit_vec(A.field(), n, f), vg = unit_vec(A.field(), n, g);
            const Vec Tf = matvec(T, vf), Tg = matvec(T, vg);
            const Vec lhs = A.product(Tf, Tg);
            const Vec rhs = matvec(T, matvec(dual_map(combine(ops.Lstar, Tf)), vg)) -
                            matvec(T, matvec(dual_map(combine(ops.R, Tg)), vf));
            rep.expect_zero("T(f)T(g)-T(L*^*(Tf)g)+T(R^*(Tg)f)", {f, g},
                            "(" + A.basis().name(f) + "*," + A.basis().name(g) + "*)", lhs - rhs);
        }
    return rep;
}

namespace {

void require_o_shapes(const OOperator& o) {
    if (o.T.shape() != Mat::Shape{o.rep.algebra.dim(), o.rep.module_dim()})
        throw Error(ErrorKind::ShapeMismatch, "T must be dim(A) x dim(V)");
}

}  // namespace

Report check_o_operator(const OOperator& o) {
    require_o_shapes(o);
    require(check_representation(o.rep), ErrorKind::NotRepresentation, "O-operator needs a representation");
    const Algebra& A = o.rep.algebra;
    const std::size_t m = o.rep.module_dim();
    Report rep("o_operator");
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < m; ++v) {
            const Vec eu = unit_vec(A.field(), m, u), ev = unit_vec(A.field(), m, v);
            const Vec Tu = matvec(o.T, eu), Tv = matvec(o.T, ev);
            const Vec res = A.product(Tu, Tv) - matvec(o.T, matvec(o.rep.l_of(Tu), ev)) -
                            matvec(o.T, matvec(o.rep.r_of(Tv), eu));
            rep.expect_zero("T(u)T(v)-T(l(Tu)v)-T(r(Tv)u)", {u, v}, witness_label(o.rep.module_basis, {u, v}), res);
        }
    return rep;
}

PreNovikovAlgebra o_operator_to_pre_novikov(const OOperator& o) {
    require(check_o_operator(o), ErrorKind::NotOOperator, "T is not an O-operator");
    const std::size_t m = o.rep.module_dim();
    const Field& F = o.rep.algebra.field();
    PreNovikovAlgebra p{o.rep.module_basis, Ten3(F, {m, m, m}), Ten3(F, {m, m, m})};
    for (std::size_t u = 0; u < m; ++u) {
        const Mat lu = o.rep.l_of(matvec(o.T, unit_vec(F, m, u)));
        const Mat ru = o.rep.r_of(matvec(o.T, unit_vec(F, m, u)));
        for (std::size_t v = 0; v < m; ++v)
            for (std::size_t k = 0; k < m; ++k) {
                p.right(u, v, k) = lu(k, v);  // u |> v = l(Tu) v
                p.left(v, u, k) = ru(k, v);   // v <| u = r(Tu) v
            }
    }
    require(check_pre_novikov(p), ErrorKind::NotPreNovikov, "induced structure is not pre-Novikov");
    return p;
}

std::pair<Algebra, Ten2> o_operator_lift(const OOperator& o) {
    require_o_shapes(o);
    const Representation dual = dual_representation(o.rep);
    Algebra big = semidirect_product(dual);
    const std::size_t n = o.rep.algebra.dim(), m = o.rep.module_dim(), N = n + m;
    Ten2 r(big.field(), {N, N});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            r(i, n + j) += o.T(i, j);
            r(n + j, i) -= o.T(i, j);
        }
    return {std::move(big), std::move(r)};
}

Representation pre_novikov_representation(const PreNovikovAlgebra& p) {
    Algebra A = associated_novikov(p);
    const std::size_t n = p.dim();
    Representation rho{A, p.basis, {}, {}};
    for (std::size_t a = 0; a < n; ++a) {
        Mat l(p.field(), {n, n}), r(p.field(), {n, n});
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t g = 0; g < n; ++g) {
                l(g, b) = p.right(a, b, g);  // a |> b
                r(g, b) = p.left(b, a, g);   // b <| a
            }
        rho.l.push_back(std::move(l));
        rho.r.push_back(std::move(r));
    }
    return rho;
}

CanonicalSolution pre_novikov_canonical_solution(const PreNovikovAlgebra& p) {
    const std::size_t n = p.dim();
    OOperator o{pre_novikov_representation(p), identity_mat(p.field(), n)};
    auto [big, r] = o_operator_lift(o);
    Mat w(p.field(), {2 * n, 2 * n});
    for (std::size_t i = 0; i < n; ++i) {
        w(i, n + i) = p.field().one();
        w(n + i, i) = -p.field().one();
    }
    CanonicalSolution sol{std::move(big), std::move(r), BilinearForm(std::move(w))};
    if (!is_skewsymmetric(sol.r) || !nybe_residual(sol.algebra, sol.r).is_zero())
        throw Error(ErrorKind::NotPreNovikov, "canonical r failed to solve the NYBE");
    require(check_quasi_frobenius(sol.algebra, sol.omega), ErrorKind::NotPreNovikov,
            "canonical form is not quasi-Frobenius");
    return sol;
}

Report check_invariant_form(const Algebra& A, const BilinearForm& B, FormFlavor flavor) {
    const std::size_t n = A.dim();
    if (B.dim() != n) throw Error(ErrorKind::ShapeMismatch, "form dimension differs from algebra");
    Report rep(flavor == FormFlavor::novikov ? "invariant_form_novikov" : "invariant_form_right_novikov");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                const Vec ea = A.unit(a), eb = A.unit(b), ec = A.unit(c);
                Scalar res = A.field().zero();
                if (flavor == FormFlavor::novikov) {
                    // B(a.b, c) + B(b, a.c + c.a)
                    res = B(A.product(a, b), ec) + B(eb, A.product(a, c) + A.product(c, a));
                } else {
                    // (a.b, c) + (a, b.c + c.b)
                    res = B(A.product(a, b), ec) + B(ea, A.product(b, c) + A.product(c, b));
                }
                if (!res.is_zero())
                    rep.add_violation({flavor == FormFlavor::novikov ? "B(ab,c)+B(b,a*c)" : "(ab,c)+(a,bc+cb)",
                                       {a, b, c}, witness_label(A.basis(), {a, b, c}), {res}});
            }
    if (!B.nondegenerate()) rep.notes.push_back("form is degenerate");
    return rep;
}

Report check_quasi_frobenius(const Algebra& A, const BilinearForm& w) {
    const std::size_t n = A.dim();
    if (w.dim() != n) throw Error(ErrorKind::ShapeMismatch, "form dimension differs from algebra");
    Report rep("quasi_frobenius");
    Report skew("skewsymmetric"), nondeg("nondegenerate"), ident("cocycle_identity");
    if (!w.skewsymmetric()) skew.fail("omega is not skewsymmetric");
    if (!w.nondegenerate()) nondeg.fail("omega is degenerate");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                const Vec ea = A.unit(a), eb = A.unit(b);
                const Vec astar_c = A.product(a, c) + A.product(c, a);
                const Scalar res = w(A.product(a, b), A.unit(c)) - w(astar_c, eb) + w(A.product(c, b), ea);
                if (!res.is_zero())
                    ident.add_violation({"w(ab,c)-w(a*c,b)+w(cb,a)", {a, b, c}, witness_label(A.basis(), {a, b, c}), {res}});
            }
    rep.add_part(std::move(skew));
    rep.add_part(std::move(nondeg));
    rep.add_part(std::move(ident));
    return rep;
}

Ten2 form_to_r(const Algebra& A, const BilinearForm& w) {
    if (w.dim() != A.dim()) throw Error(ErrorKind::ShapeMismatch, "form dimension differs from algebra");
    if (!w.nondegenerate()) throw Error(ErrorKind::DegenerateForm, "omega is degenerate");
    // f_b = sum_g F[g][b] e_g with W F = I, and r[a][g] = F[g][a].
    return transpose(inverse(w.matrix()));
}

BilinearForm r_to_form(const Algebra& A, const Ten2& r) {
    if (r.shape() != Ten2::Shape{A.dim(), A.dim()}) throw Error(ErrorKind::ShapeMismatch, "r must live in A (x) A");
    if (determinant(r).is_zero()) throw Error(ErrorKind::DegenerateForm, "r is degenerate as a matrix");
    return BilinearForm(inverse(transpose(r)));
}

}  // namespace nvk
