#include "nvk/doubling.hpp"

#include <algorithm>

namespace nvk {

namespace {

void require_pair_shapes(const MatchedPair& m) {
    const std::size_t n = m.A.dim(), k = m.B.dim();
    auto ok = [](const std::vector<Mat>& v, std::size_t count, std::size_t d) {
        if (v.size() != count) return false;
        return std::all_of(v.begin(), v.end(), [&](const Mat& x) { return x.shape() == Mat::Shape{d, d}; });
    };
    if (!ok(m.lA, n, k) || !ok(m.rA, n, k) || !ok(m.lB, k, n) || !ok(m.rB, k, n))
        throw Error(ErrorKind::ShapeMismatch, "matched pair action matrices have inconsistent shapes");
}

}  // namespace

Report matched_pair_residuals(const MatchedPair& m) {
    require_pair_shapes(m);
    const Algebra &A = m.A, &B = m.B;
    const std::size_t n = A.dim(), k = B.dim();
    auto lA = [&](const Vec& a) { return combine(m.lA, a); };
    auto rA = [&](const Vec& a) { return combine(m.rA, a); };
    auto lB = [&](const Vec& x) { return combine(m.lB, x); };
    auto rB = [&](const Vec& x) { return combine(m.rB, x); };
    auto pa = [&](const Vec& x, const Vec& y) { return A.product(x, y); };
    auto pb = [&](const Vec& x, const Vec& y) { return B.product(x, y); };

    std::array<Report, 8> eq;
    for (std::size_t i = 0; i < 8; ++i) eq[i] = Report("matchpair" + std::to_string(i + 1));

    // Equations with two elements of A and one of B.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t s = 0; s < k; ++s) {
                const Vec a = A.unit(i), b = A.unit(j), x = B.unit(s);
                const std::string lab = "(" + A.basis().name(i) + "," + A.basis().name(j) + "," + B.basis().name(s) + ")";
                const std::vector<std::size_t> w{i, j, s};
                const Vec ab = pa(a, b), ba = pa(b, a);
                eq[0].expect_zero("matchpair1", w, lab,
                                  matvec(lB(x), ab) + matvec(lB(matvec(lA(a), x) - matvec(rA(a), x)), b) -
                                      pa(matvec(lB(x), a) - matvec(rB(x), a), b) - matvec(rB(matvec(rA(b), x)), a) -
                                      pa(a, matvec(lB(x), b)));
                eq[1].expect_zero("matchpair2", w, lab,
                                  matvec(rB(x), ab - ba) - matvec(rB(matvec(lA(b), x)), a) +
                                      matvec(rB(matvec(lA(a), x)), b) - pa(a, matvec(rB(x), b)) + pa(b, matvec(rB(x), a)));
                eq[4].expect_zero("matchpair5", w, lab,
                                  pa(matvec(lB(x), a), b) + matvec(lB(matvec(rA(a), x)), b) - pa(matvec(lB(x), b), a) -
                                      matvec(lB(matvec(rA(b), x)), a));
                eq[5].expect_zero("matchpair6", w, lab,
                                  pa(matvec(rB(x), a), b) + matvec(lB(matvec(lA(a), x)), b) - matvec(rB(x), ab));
            }
    // Equations with one element of A and two of B.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t s = 0; s < k; ++s)
            for (std::size_t t = 0; t < k; ++t) {
                const Vec a = A.unit(i), x = B.unit(s), y = B.unit(t);
                const std::string lab = "(" + A.basis().name(i) + "," + B.basis().name(s) + "," + B.basis().name(t) + ")";
                const std::vector<std::size_t> w{i, s, t};
                const Vec xy = pb(x, y), yx = pb(y, x);
                eq[2].expect_zero("matchpair3", w, lab,
                                  matvec(lA(a), xy) + matvec(lA(matvec(lB(x), a) - matvec(rB(x), a)), y) -
                                      pb(matvec(lA(a), x) - matvec(rA(a), x), y) - matvec(rA(matvec(rB(y), a)), x) -
                                      pb(x, matvec(lA(a), y)));
                eq[3].expect_zero("matchpair4", w, lab,
                                  matvec(rA(a), xy - yx) - matvec(rA(matvec(lB(y), a)), x) +
                                      matvec(rA(matvec(lB(x), a)), y) - pb(x, matvec(rA(a), y)) + pb(y, matvec(rA(a), x)));
                eq[6].expect_zero("matchpair7", w, lab,
                                  matvec(lA(matvec(rB(x), a)), y) + pb(matvec(lA(a), x), y) -
                                      matvec(lA(matvec(rB(y), a)), x) - pb(matvec(lA(a), y), x));
                eq[7].expect_zero("matchpair8", w, lab,
                                  matvec(lA(matvec(lB(x), a)), y) + pb(matvec(rA(a), x), y) - matvec(rA(a), xy));
            }

    Report rep("matched_pair_equations");
    for (auto& e : eq) rep.add_part(std::move(e));
    return rep;
}

Report check_matched_pair(const MatchedPair& m) {
    require_pair_shapes(m);
    Representation onB{m.A, m.B.basis(), m.lA, m.rA};
    Representation onA{m.B, m.A.basis(), m.lB, m.rB};
    require(check_representation(onB), ErrorKind::InvalidRepresentation, "(B, lA, rA) is not a representation of A");
    require(check_representation(onA), ErrorKind::InvalidRepresentation, "(A, lB, rB) is not a representation of B");
    Report rep("matched_pair");
    rep.add_part(check_novikov(m.A));
    rep.add_part(check_novikov(m.B));
    rep.add_part(matched_pair_residuals(m));
    return rep;
}

Algebra matched_pair_to_algebra_unchecked(const MatchedPair& m) {
    require_pair_shapes(m);
    const std::size_t n = m.A.dim(), k = m.B.dim(), N = n + k;
    Ten3 c(m.A.field(), {N, N, N});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t g = 0; g < n; ++g) c(i, j, g) = m.A.constants()(i, j, g);
    for (std::size_t s = 0; s < k; ++s)
        for (std::size_t t = 0; t < k; ++t)
            for (std::size_t g = 0; g < k; ++g) c(n + s, n + t, n + g) = m.B.constants()(s, t, g);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t s = 0; s < k; ++s) {
            // a_i . x_s = rB(x_s) a_i + lA(a_i) x_s
            for (std::size_t g = 0; g < n; ++g) c(i, n + s, g) = m.rB[s](g, i);
            for (std::size_t g = 0; g < k; ++g) c(i, n + s, n + g) = m.lA[i](g, s);
            // x_s . a_i = lB(x_s) a_i + rA(a_i) x_s
            for (std::size_t g = 0; g < n; ++g) c(n + s, i, g) = m.lB[s](g, i);
            for (std::size_t g = 0; g < k; ++g) c(n + s, i, n + g) = m.rA[i](g, s);
        }
    return Algebra(m.A.basis() + m.B.basis(), std::move(c));
}

Algebra matched_pair_to_algebra(const MatchedPair& m) {
    require(check_matched_pair(m), ErrorKind::NotMatchedPair, "not a matched pair");
    Algebra out = matched_pair_to_algebra_unchecked(m);
    require(check_novikov(out), ErrorKind::NotNovikov, "matched pair algebra is not Novikov");
    return out;
}

MatchedPair coadjoint_matched_pair(const Algebra& A, const Algebra& As) {
    const auto opsA = multiplication_operators(A), opsB = multiplication_operators(As);
    MatchedPair m{A, As, {}, {}, {}, {}};
    for (std::size_t i = 0; i < A.dim(); ++i) {
        m.lA.push_back(dual_map(opsA.Lstar[i]));
        m.rA.push_back(-dual_map(opsA.R[i]));
    }
    for (std::size_t s = 0; s < As.dim(); ++s) {
        m.lB.push_back(dual_map(opsB.Lstar[s]));
        m.rB.push_back(-dual_map(opsB.R[s]));
    }
    return m;
}

namespace {

BilinearForm standard_form(const Field& f, std::size_t n) {
    Mat w(f, {2 * n, 2 * n});
    for (std::size_t i = 0; i < n; ++i) {
        w(i, n + i) = f.one();
        w(n + i, i) = f.one();
    }
    return BilinearForm(std::move(w));
}

ManinTripleNovikov build_double(const Algebra& A, const Coalgebra& C) {
    if (A.dim() != C.dim()) throw Error(ErrorKind::ShapeMismatch, "algebra and coalgebra dimensions differ");
    Algebra As = dualize_coproduct(C);
    As = Algebra(A.basis().decorated("*"), As.constants());
    Algebra D = matched_pair_to_algebra_unchecked(coadjoint_matched_pair(A, As));
    return {A, As, std::move(D), standard_form(A.field(), A.dim())};
}

// Products of basis elements from idx stay in span(idx) and agree with sub.
Report subalgebra_report(const std::string& name, const Algebra& D, const std::vector<std::size_t>& idx) {
    Report rep(name);
    std::vector<bool> inside(D.dim(), false);
    for (auto i : idx) inside[i] = true;
    for (auto i : idx)
        for (auto j : idx) {
            const Vec p = D.product(i, j);
            Vec outside(D.field(), {D.dim()});
            for (std::size_t g = 0; g < D.dim(); ++g)
                if (!inside[g]) outside(g) = p(g);
            rep.expect_zero("product leaves subspace", {i, j}, witness_label(D.basis(), {i, j}), outside);
        }
    return rep;
}

}  // namespace

ManinTripleNovikov assemble_double(const Algebra& A, const Coalgebra& C) {
    require(check_novikov(A), ErrorKind::NotNovikov, "A is not Novikov");
    require(check_novikov(dualize_coproduct(C)), ErrorKind::DualNotNovikov, "the dual of the coproduct is not Novikov");
    return build_double(A, C);
}

Report check_manin_triple_novikov(const ManinTripleNovikov& t) {
    const std::size_t n = t.A.dim();
    std::vector<std::size_t> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        lo[i] = i;
        hi[i] = n + i;
    }
    Report rep("manin_triple_novikov");
    Report dn = check_novikov(t.double_algebra);
    dn.name = "double_is_novikov";
    rep.add_part(std::move(dn));
    rep.add_part(subalgebra_report("A_subalgebra", t.double_algebra, lo));
    rep.add_part(subalgebra_report("Astar_subalgebra", t.double_algebra, hi));
    Report sa = check_novikov(t.A);
    sa.name = "A_is_novikov";
    Report sb = check_novikov(t.Astar);
    sb.name = "Astar_is_novikov";
    rep.add_part(std::move(sa));
    rep.add_part(std::move(sb));
    rep.add_part(check_invariant_form(t.double_algebra, t.form, FormFlavor::novikov));
    return rep;
}

Report check_manin_triple_lie(const ManinTripleLie& t) {
    require(check_lie(t.g), ErrorKind::NotLie, "g is not a Lie algebra");
    const std::size_t N = t.g.dim();
    if (t.form.dim() != N) throw Error(ErrorKind::ShapeMismatch, "form dimension differs from g");
    Report rep("manin_triple_lie");

    Report split("complementary_split");
    std::vector<int> seen(N, 0);
    for (auto i : t.sub1) ++seen.at(i);
    for (auto i : t.sub2) ++seen.at(i);
    for (std::size_t i = 0; i < N; ++i)
        if (seen[i] != 1) split.fail("basis element " + t.g.basis().name(i) + " is not in exactly one summand");
    rep.add_part(std::move(split));
    rep.add_part(subalgebra_report("subalgebra_1", t.g, t.sub1));
    rep.add_part(subalgebra_report("subalgebra_2", t.g, t.sub2));

    auto isotropy = [&](const std::string& name, const std::vector<std::size_t>& idx) {
        Report r(name);
        for (auto i : idx)
            for (auto j : idx)
                if (!t.form(i, j).is_zero())
                    r.add_violation({"(x,y) on summand", {i, j}, witness_label(t.g.basis(), {i, j}), {t.form(i, j)}});
        return r;
    };
    rep.add_part(isotropy("isotropic_1", t.sub1));
    rep.add_part(isotropy("isotropic_2", t.sub2));

    Report sym("symmetric"), nd("nondegenerate"), inv("invariant");
    if (!t.form.symmetric()) sym.fail("form is not symmetric");
    if (!t.form.nondegenerate()) nd.fail("form is degenerate");
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b)
            for (std::size_t c = 0; c < N; ++c) {
                const Scalar res = t.form(t.g.product(a, b), t.g.unit(c)) - t.form(t.g.unit(a), t.g.product(b, c));
                if (!res.is_zero())
                    inv.add_violation({"([a,b],c)-(a,[b,c])", {a, b, c}, witness_label(t.g.basis(), {a, b, c}), {res}});
            }
    rep.add_part(std::move(sym));
    rep.add_part(std::move(nd));
    rep.add_part(std::move(inv));
    return rep;
}

Algebra transport_right_novikov(const Algebra& B, const BilinearForm& form) {
    if (!form.nondegenerate()) throw Error(ErrorKind::DegenerateForm, "form on B is degenerate");
    require(check_invariant_form(B, form, FormFlavor::right_novikov), ErrorKind::InvalidArgument, "form is not invariant");
    // phi(e_p) = sum_q form(e_p, e_q) e_q*, so phi has matrix form^T.
    Algebra out = transport(B, transpose(form.matrix()), B.basis().decorated("*"));
    require(check_right_novikov(out), ErrorKind::NotRightNovikov, "transported product is not right Novikov");
    return out;
}

ManinTripleLie lie_manin_triple(const ManinTripleNovikov& t, const Algebra& B, const BilinearForm& formB) {
    const std::size_t n = t.A.dim(), m = B.dim();
    Algebra g = induced_lie_finite(t.double_algebra, B);
    ManinTripleLie out{std::move(g), {}, {}, BilinearForm()};
    Mat w(B.field(), {2 * n * m, 2 * n * m});
    for (std::size_t i = 0; i < 2 * n; ++i)
        for (std::size_t p = 0; p < m; ++p) {
            (i < n ? out.sub1 : out.sub2).push_back(i * m + p);
            for (std::size_t j = 0; j < 2 * n; ++j)
                for (std::size_t q = 0; q < m; ++q) w(i * m + p, j * m + q) = t.form(i, j) * formB(p, q);
        }
    out.form = BilinearForm(std::move(w));
    return out;
}

ManinTripleLie lie_double(const Algebra& L, const Coalgebra& delta) {
    const std::size_t N = L.dim();
    if (delta.dim() != N) throw Error(ErrorKind::ShapeMismatch, "cobracket dimension differs");
    const Field& F = L.field();
    const std::size_t M = 2 * N;
    Ten3 c(F, {M, M, M});
    const Ten3& b = L.constants();
    for (std::size_t x = 0; x < N; ++x)
        for (std::size_t y = 0; y < N; ++y)
            for (std::size_t z = 0; z < N; ++z) {
                c(x, y, z) = b(x, y, z);
                c(N + x, N + y, N + z) = delta.d(z, x, y);  // <[f,g], z> = <f (x) g, delta z>
            }
    // [x, f] = ad*_x f - ad*_f x with (ad*_x f)(y) = -f([x,y]) and <g, ad*_f x> = -<[f,g], x>.
    for (std::size_t x = 0; x < N; ++x)
        for (std::size_t f = 0; f < N; ++f) {
            for (std::size_t y = 0; y < N; ++y) {
                const Scalar coadj = -b(x, y, f);          // L* component along y*
                const Scalar back = delta.d(x, f, y);      // -ad*_f x along y is +<[f,y*],x>
                c(x, N + f, N + y) += coadj;
                c(x, N + f, y) += back;
                c(N + f, x, N + y) -= coadj;
                c(N + f, x, y) -= back;
            }
        }
    Mat w(F, {M, M});
    for (std::size_t i = 0; i < N; ++i) {
        w(i, N + i) = F.one();
        w(N + i, i) = F.one();
    }
    ManinTripleLie t{Algebra(L.basis() + L.basis().decorated("*"), std::move(c)), {}, {}, BilinearForm(std::move(w))};
    for (std::size_t i = 0; i < N; ++i) {
        t.sub1.push_back(i);
        t.sub2.push_back(N + i);
    }
    return t;
}

Coalgebra cobracket_from_manin(const ManinTripleLie& t) {
    const std::size_t k = t.sub1.size();
    if (t.sub2.size() != k) throw Error(ErrorKind::ShapeMismatch, "summands of different dimension");
    const Field& F = t.g.field();
    // P[x][u] = (x, u) for x in sub1, u in sub2.
    Mat P(F, {k, k});
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t u = 0; u < k; ++u) P(x, u) = t.form(t.sub1[x], t.sub2[u]);
    const Mat Pinv = inverse(P);
    // Bracket constants of sub2 in its own basis.
    Ten3 cm(F, {k, k, k});
    for (std::size_t u = 0; u < k; ++u)
        for (std::size_t v = 0; v < k; ++v) {
            const Vec p = t.g.product(t.sub2[u], t.sub2[v]);
            for (std::size_t w = 0; w < k; ++w) cm(u, v, w) = p(t.sub2[w]);
        }
    Basis names;
    {
        std::vector<std::string> v;
        for (auto i : t.sub1) v.push_back(t.g.basis().name(i));
        names = Basis(std::move(v));
    }
    Ten3 d(F, {k, k, k});
    for (std::size_t x = 0; x < k; ++x) {
        // (delta x, u (x) v) = (x, [u, v]);  Dx = P^-T Mx P^-1.
        Mat Mx(F, {k, k});
        for (std::size_t u = 0; u < k; ++u)
            for (std::size_t v = 0; v < k; ++v)
                for (std::size_t w = 0; w < k; ++w)
                    if (!cm(u, v, w).is_zero()) Mx(u, v) += P(x, w) * cm(u, v, w);
        const Mat Dx = matmul(matmul(transpose(Pinv), Mx), Pinv);
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) d(x, a, b) = Dx(a, b);
    }
    return {names, std::move(d)};
}

EquivalenceVerdicts equivalence_verdicts(const Algebra& A, const Coalgebra& C) {
    EquivalenceVerdicts v;
    v.bialgebra = check_novikov_bialgebra(A, C).pass;
    const ManinTripleNovikov t = build_double(A, C);
    v.manin = check_manin_triple_novikov(t).pass;
    try {
        v.matched_pair = check_matched_pair(coadjoint_matched_pair(A, t.Astar)).pass;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::InvalidRepresentation) throw;
        v.matched_pair = false;
    }
    return v;
}

Report equivalence_suite(const Algebra& A, const Coalgebra& C) {
    Report rep("equivalence_suite");
    const ManinTripleNovikov t = build_double(A, C);
    Report manin = check_manin_triple_novikov(t);
    Report mp("matched_pair");
    try {
        mp = check_matched_pair(coadjoint_matched_pair(A, t.Astar));
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::InvalidRepresentation) throw;
        mp.fail(e.what());
    }
    Report bi = check_novikov_bialgebra(A, C);
    const bool same = manin.pass == mp.pass && mp.pass == bi.pass;
    rep.notes.push_back(std::string("verdicts: manin_triple=") + (manin.pass ? "true" : "false") +
                        " matched_pair=" + (mp.pass ? "true" : "false") + " bialgebra=" + (bi.pass ? "true" : "false"));
    rep.parts = {std::move(manin), std::move(mp), std::move(bi)};
    // The suite's own verdict is agreement, not the individual verdicts.
    rep.pass = same;
    if (!same) rep.notes.push_back("verdicts disagree");
    return rep;
}

}  // namespace nvk
