#include "nvk/algebras.hpp"

namespace nvk {

const char* class_name(AlgebraClass c) {
    switch (c) {
        case AlgebraClass::novikov: return "novikov";
        case AlgebraClass::right_novikov: return "right_novikov";
        case AlgebraClass::lie: return "lie";
        case AlgebraClass::comm_assoc: return "comm_assoc";
        case AlgebraClass::zinbiel: return "zinbiel";
    }
    return "?";
}

Algebra::Algebra(Basis basis, Ten3 c) : basis_(std::move(basis)), c_(std::move(c)) {
    const std::size_t n = basis_.size();
    if (c_.shape() != Ten3::Shape{n, n, n})
        throw Error(ErrorKind::ShapeMismatch, "structure constants must have shape (n,n,n) for n = " + std::to_string(n));
}

Algebra Algebra::zero(const Basis& basis, const Field& f) {
    const std::size_t n = basis.size();
    return Algebra(basis, Ten3(f, {n, n, n}));
}

Vec Algebra::product(std::size_t a, std::size_t b) const {
    Vec v(field(), {dim()});
    for (std::size_t g = 0; g < dim(); ++g) v(g) = c_(a, b, g);
    return v;
}

Vec Algebra::product(const Vec& x, const Vec& y) const {
    const std::size_t n = dim();
    Vec v(field(), {n});
    for (std::size_t a = 0; a < n; ++a) {
        if (x(a).is_zero()) continue;
        for (std::size_t b = 0; b < n; ++b) {
            if (y(b).is_zero()) continue;
            const Scalar w = x(a) * y(b);
            for (std::size_t g = 0; g < n; ++g)
                if (!c_(a, b, g).is_zero()) v(g) += w * c_(a, b, g);
        }
    }
    return v;
}

namespace {

// Runs fn on every basis triple and records nonzero residuals.
template <typename Fn>
void scan_triples(Report& rep, const Basis& basis, const std::string& identity, Fn&& fn) {
    const std::size_t n = basis.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                rep.expect_zero(identity, {i, j, k}, witness_label(basis, {i, j, k}), fn(i, j, k));
}

template <typename Fn>
void scan_pairs(Report& rep, const Basis& basis, const std::string& identity, Fn&& fn) {
    const std::size_t n = basis.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            rep.expect_zero(identity, {i, j}, witness_label(basis, {i, j}), fn(i, j));
}

}  // namespace

Report check_novikov(const Algebra& A) {
    Report rep("novikov");
    auto m = [&](const Vec& x, const Vec& y) { return A.product(x, y); };
    auto e = [&](std::size_t i) { return A.unit(i); };
    Report ls("left_symmetry");
    scan_triples(ls, A.basis(), "(ab)c-a(bc)-(ba)c+b(ac)", [&](std::size_t i, std::size_t j, std::size_t k) {
        return m(A.product(i, j), e(k)) - m(e(i), A.product(j, k)) - m(A.product(j, i), e(k)) + m(e(j), A.product(i, k));
    });
    Report rc("right_commutativity");
    scan_triples(rc, A.basis(), "(ab)c-(ac)b", [&](std::size_t i, std::size_t j, std::size_t k) {
        return m(A.product(i, j), e(k)) - m(A.product(i, k), e(j));
    });
    rep.add_part(std::move(ls));
    rep.add_part(std::move(rc));
    return rep;
}

Report check_right_novikov(const Algebra& A) {
    Report rep("right_novikov");
    auto m = [&](const Vec& x, const Vec& y) { return A.product(x, y); };
    auto e = [&](std::size_t i) { return A.unit(i); };
    Report rs("right_symmetry");
    scan_triples(rs, A.basis(), "(ab)c-a(bc)-(ac)b+a(cb)", [&](std::size_t i, std::size_t j, std::size_t k) {
        return m(A.product(i, j), e(k)) - m(e(i), A.product(j, k)) - m(A.product(i, k), e(j)) + m(e(i), A.product(k, j));
    });
    Report lc("left_commutativity");
    scan_triples(lc, A.basis(), "a(bc)-b(ac)", [&](std::size_t i, std::size_t j, std::size_t k) {
        return m(e(i), A.product(j, k)) - m(e(j), A.product(i, k));
    });
    rep.add_part(std::move(rs));
    rep.add_part(std::move(lc));
    return rep;
}

Report check_lie(const Algebra& A) {
    Report rep("lie");
    Report alt("alternating");
    for (std::size_t i = 0; i < A.dim(); ++i)
        alt.expect_zero("[a,a]", {i}, witness_label(A.basis(), {i}), A.product(i, i));
    Report skew("skewsymmetry");
    scan_pairs(skew, A.basis(), "[a,b]+[b,a]", [&](std::size_t i, std::size_t j) {
        return A.product(i, j) + A.product(j, i);
    });
    Report jac("jacobi");
    auto e = [&](std::size_t i) { return A.unit(i); };
    scan_triples(jac, A.basis(), "[[a,b],c]+[[b,c],a]+[[c,a],b]", [&](std::size_t i, std::size_t j, std::size_t k) {
        return A.product(A.product(i, j), e(k)) + A.product(A.product(j, k), e(i)) + A.product(A.product(k, i), e(j));
    });
    rep.add_part(std::move(alt));
    rep.add_part(std::move(skew));
    rep.add_part(std::move(jac));
    return rep;
}

Report check_comm_assoc(const Algebra& A) {
    Report rep("comm_assoc");
    Report comm("commutativity");
    scan_pairs(comm, A.basis(), "ab-ba", [&](std::size_t i, std::size_t j) { return A.product(i, j) - A.product(j, i); });
    Report assoc("associativity");
    auto e = [&](std::size_t i) { return A.unit(i); };
    scan_triples(assoc, A.basis(), "(ab)c-a(bc)", [&](std::size_t i, std::size_t j, std::size_t k) {
        return A.product(A.product(i, j), e(k)) - A.product(e(i), A.product(j, k));
    });
    rep.add_part(std::move(comm));
    rep.add_part(std::move(assoc));
    return rep;
}

Report check_zinbiel(const Algebra& A) {
    Report rep("zinbiel");
    Report z("zinbiel_identity");
    auto e = [&](std::size_t i) { return A.unit(i); };
    scan_triples(z, A.basis(), "a(bc)-(ba)c-(ab)c", [&](std::size_t i, std::size_t j, std::size_t k) {
        return A.product(e(i), A.product(j, k)) - A.product(A.product(j, i), e(k)) - A.product(A.product(i, j), e(k));
    });
    rep.add_part(std::move(z));
    return rep;
}

namespace {

Report pre_novikov_report(const PreNovikovAlgebra& P, bool full) {
    const Algebra L = P.left_algebra(), R = P.right_algebra();
    auto lt = [&](const Vec& x, const Vec& y) { return L.product(x, y); };  // x <| y
    auto rt = [&](const Vec& x, const Vec& y) { return R.product(x, y); };  // x |> y
    auto e = [&](std::size_t i) { return L.unit(i); };
    Report rep(full ? "pre_novikov" : "l_dendriform");

    Report nd1("ND1");
    scan_triples(nd1, P.basis, "x>(y>z)-(x>y+x<y)>z-y>(x>z)+(y>x+y<x)>z", [&](std::size_t i, std::size_t j, std::size_t k) {
        const Vec x = e(i), y = e(j), z = e(k);
        return rt(x, rt(y, z)) - rt(rt(x, y) + lt(x, y), z) - rt(y, rt(x, z)) + rt(rt(y, x) + lt(y, x), z);
    });
    Report nd2("ND2");
    scan_triples(nd2, P.basis, "x>(y<z)-(x>y)<z-y<(x<z+x>z)+(y<x)<z", [&](std::size_t i, std::size_t j, std::size_t k) {
        const Vec x = e(i), y = e(j), z = e(k);
        return rt(x, lt(y, z)) - lt(rt(x, y), z) - lt(y, lt(x, z) + rt(x, z)) + lt(lt(y, x), z);
    });
    rep.add_part(std::move(nd1));
    rep.add_part(std::move(nd2));
    if (!full) return rep;

    Report nd3("ND3");
    scan_triples(nd3, P.basis, "(x<y+x>y)>z-(x>z)<y", [&](std::size_t i, std::size_t j, std::size_t k) {
        const Vec x = e(i), y = e(j), z = e(k);
        return rt(lt(x, y) + rt(x, y), z) - lt(rt(x, z), y);
    });
    Report nd4("ND4");
    scan_triples(nd4, P.basis, "(x<y)<z-(x<z)<y", [&](std::size_t i, std::size_t j, std::size_t k) {
        const Vec x = e(i), y = e(j), z = e(k);
        return lt(lt(x, y), z) - lt(lt(x, z), y);
    });
    rep.add_part(std::move(nd3));
    rep.add_part(std::move(nd4));
    return rep;
}

}  // namespace

Report check_pre_novikov(const PreNovikovAlgebra& p) { return pre_novikov_report(p, true); }
Report check_l_dendriform(const PreNovikovAlgebra& p) { return pre_novikov_report(p, false); }

Report check_class(const Algebra& a, AlgebraClass c) {
    switch (c) {
        case AlgebraClass::novikov: return check_novikov(a);
        case AlgebraClass::right_novikov: return check_right_novikov(a);
        case AlgebraClass::lie: return check_lie(a);
        case AlgebraClass::comm_assoc: return check_comm_assoc(a);
        case AlgebraClass::zinbiel: return check_zinbiel(a);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown algebra class");
}

void require(const Report& r, ErrorKind kind, const std::string& what) {
    if (r.pass) return;
    std::string detail = what;
    if (!r.violations.empty()) detail += " (first violation: " + r.violations.front().identity + " at " + r.violations.front().label + ")";
    throw Error(kind, detail);
}

Report check_derivation(const DerivationData& d) {
    const Algebra& A = d.algebra;
    Report rep("derivation");
    if (d.D.shape() != Mat::Shape{A.dim(), A.dim()}) throw Error(ErrorKind::ShapeMismatch, "derivation matrix shape");
    auto D = [&](const Vec& x) { return matvec(d.D, x); };
    scan_pairs(rep, A.basis(), "D(ab)-D(a)b-aD(b)", [&](std::size_t i, std::size_t j) {
        const Vec a = A.unit(i), b = A.unit(j);
        return D(A.product(i, j)) - A.product(D(a), b) - A.product(a, D(b));
    });
    return rep;
}

Algebra opposite(const Algebra& A) {
    const std::size_t n = A.dim();
    Ten3 c(A.field(), {n, n, n});
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t g = 0; g < n; ++g) c(a, b, g) = A.constants()(b, a, g);
    return Algebra(A.basis(), std::move(c));
}

namespace {

// Constants of (x, y) -> f(x, y) for a bilinear f given on basis vectors.
template <typename Fn>
Ten3 tabulate(const Basis& basis, const Field& field, Fn&& f) {
    const std::size_t n = basis.size();
    Ten3 c(field, {n, n, n});
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const Vec v = f(unit_vec(field, n, a), unit_vec(field, n, b));
            for (std::size_t g = 0; g < n; ++g) c(a, b, g) = v(g);
        }
    return c;
}

void require_derivation_of(const DerivationData& d, AlgebraClass cls) {
    if (cls == AlgebraClass::comm_assoc)
        require(check_comm_assoc(d.algebra), ErrorKind::NotCommAssoc, "algebra is not commutative associative");
    else
        require(check_zinbiel(d.algebra), ErrorKind::NotZinbiel, "algebra is not Zinbiel");
    require(check_derivation(d), ErrorKind::NotDerivation, "D is not a derivation");
}

}  // namespace

Algebra gelfand_novikov(const DerivationData& d) {
    require_derivation_of(d, AlgebraClass::comm_assoc);
    const Algebra& A = d.algebra;
    Algebra out(A.basis(), tabulate(A.basis(), A.field(), [&](const Vec& x, const Vec& y) {
        return A.product(x, matvec(d.D, y));
    }));
    require(check_novikov(out), ErrorKind::NotNovikov, "Gelfand construction produced a non-Novikov algebra");
    out.claims.insert(AlgebraClass::novikov);
    return out;
}

Algebra gelfand_right_novikov(const DerivationData& d) {
    require_derivation_of(d, AlgebraClass::comm_assoc);
    const Algebra& A = d.algebra;
    Algebra out(A.basis(), tabulate(A.basis(), A.field(), [&](const Vec& x, const Vec& y) {
        return A.product(matvec(d.D, x), y);
    }));
    require(check_right_novikov(out), ErrorKind::NotRightNovikov, "Gelfand construction produced a non-right-Novikov algebra");
    out.claims.insert(AlgebraClass::right_novikov);
    return out;
}

PreNovikovAlgebra zinbiel_pre_novikov(const DerivationData& d) {
    require_derivation_of(d, AlgebraClass::zinbiel);
    const Algebra& A = d.algebra;
    PreNovikovAlgebra p;
    p.basis = A.basis();
    p.left = tabulate(A.basis(), A.field(), [&](const Vec& x, const Vec& y) { return A.product(matvec(d.D, y), x); });
    p.right = tabulate(A.basis(), A.field(), [&](const Vec& x, const Vec& y) { return A.product(x, matvec(d.D, y)); });
    require(check_pre_novikov(p), ErrorKind::NotPreNovikov, "Zinbiel construction produced a non-pre-Novikov algebra");
    return p;
}

Algebra associated_novikov(const PreNovikovAlgebra& p) {
    require(check_pre_novikov(p), ErrorKind::NotPreNovikov, "input is not pre-Novikov");
    Algebra out(p.basis, p.left + p.right);
    require(check_novikov(out), ErrorKind::NotNovikov, "associated algebra is not Novikov");
    out.claims.insert(AlgebraClass::novikov);
    return out;
}

Algebra star_product(const Algebra& A) { return Algebra(A.basis(), A.constants() + opposite(A).constants()); }

MultiplicationOperators multiplication_operators(const Algebra& A) {
    const std::size_t n = A.dim();
    MultiplicationOperators ops;
    for (std::size_t a = 0; a < n; ++a) {
        Mat L(A.field(), {n, n}), R(A.field(), {n, n});
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t g = 0; g < n; ++g) {
                L(g, b) = A.constants()(a, b, g);
                R(g, b) = A.constants()(b, a, g);
            }
        ops.Lstar.push_back(L + R);
        ops.L.push_back(std::move(L));
        ops.R.push_back(std::move(R));
    }
    return ops;
}

Algebra monomial_algebra(int lo, int hi, const Field& f, const std::function<Scalar(int, int)>& coef, Overflow mode,
                         const std::string& var) {
    if (hi < lo) throw Error(ErrorKind::InvalidArgument, "empty monomial window");
    std::vector<std::string> names;
    for (int i = lo; i <= hi; ++i) names.push_back(var + "^" + std::to_string(i));
    const std::size_t n = names.size();
    Ten3 c(f, {n, n, n});
    for (int i = lo; i <= hi; ++i)
        for (int j = lo; j <= hi; ++j) {
            const Scalar w = coef(i, j);
            if (w.is_zero()) continue;
            const int k = i + j;
            if (k < lo || k > hi) {
                if (mode == Overflow::truncate && k > hi) continue;
                throw Error(ErrorKind::NotClosed, var + "^" + std::to_string(i) + " * " + var + "^" + std::to_string(j) +
                                                      " leaves the window [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
            }
            c(i - lo, j - lo, k - lo) = w;
        }
    return Algebra(Basis(std::move(names)), std::move(c));
}

Algebra transport(const Algebra& A, const Mat& phi, const Basis& target) {
    const Mat inv = inverse(phi);
    const std::size_t n = A.dim();
    Ten3 c(A.field(), {n, n, n});
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const Vec x = matvec(inv, unit_vec(A.field(), n, a)), y = matvec(inv, unit_vec(A.field(), n, b));
            const Vec v = matvec(phi, A.product(x, y));
            for (std::size_t g = 0; g < n; ++g) c(a, b, g) = v(g);
        }
    return Algebra(target, std::move(c));
}

}  // namespace nvk
