#include "oracles.hpp"

#include <functional>
#include <stdexcept>

namespace oracle {

using nvk::Mat;

namespace {

using Idx = std::size_t;

// ((e_a e_b) e_c)_k and (e_a (e_b e_c))_k
Scalar lassoc(const Ten3& c, Idx a, Idx b, Idx x, Idx k) {
    Scalar s = c.field().zero();
    for (Idx g = 0; g < c.extent(0); ++g) s += c(a, b, g) * c(g, x, k);
    return s;
}
Scalar rassoc(const Ten3& c, Idx a, Idx b, Idx x, Idx k) {
    Scalar s = c.field().zero();
    for (Idx g = 0; g < c.extent(0); ++g) s += c(b, x, g) * c(a, g, k);
    return s;
}

bool all_triples(Idx n, const std::function<bool(Idx, Idx, Idx, Idx)>& ok) {
    for (Idx a = 0; a < n; ++a)
        for (Idx b = 0; b < n; ++b)
            for (Idx x = 0; x < n; ++x)
                for (Idx k = 0; k < n; ++k)
                    if (!ok(a, b, x, k)) return false;
    return true;
}

Ten3 opposite(const Ten3& c) {
    const Idx n = c.extent(0);
    Ten3 o(c.field(), {n, n, n});
    for (Idx a = 0; a < n; ++a)
        for (Idx b = 0; b < n; ++b)
            for (Idx g = 0; g < n; ++g) o(a, b, g) = c(b, a, g);
    return o;
}

}  // namespace

bool novikov(const Ten3& c) {
    return all_triples(c.extent(0), [&](Idx a, Idx b, Idx x, Idx k) {
        const Scalar ls = lassoc(c, a, b, x, k) - rassoc(c, a, b, x, k) - lassoc(c, b, a, x, k) + rassoc(c, b, a, x, k);
        return ls.is_zero() && lassoc(c, a, b, x, k) == lassoc(c, a, x, b, k);
    });
}

bool right_novikov(const Ten3& c) { return novikov(opposite(c)); }

bool lie(const Ten3& c) {
    const Idx n = c.extent(0);
    for (Idx a = 0; a < n; ++a)
        for (Idx b = 0; b < n; ++b)
            for (Idx g = 0; g < n; ++g) {
                if (!c(a, a, g).is_zero()) return false;
                if (c(a, b, g) != -c(b, a, g)) return false;
            }
    // [[a,b],x] + [[b,x],a] + [[x,a],b]
    return all_triples(n, [&](Idx a, Idx b, Idx x, Idx k) {
        return (lassoc(c, a, b, x, k) + lassoc(c, b, x, a, k) + lassoc(c, x, a, b, k)).is_zero();
    });
}

bool comm_assoc(const Ten3& c) {
    const Idx n = c.extent(0);
    for (Idx a = 0; a < n; ++a)
        for (Idx b = 0; b < n; ++b)
            for (Idx g = 0; g < n; ++g)
                if (c(a, b, g) != c(b, a, g)) return false;
    return all_triples(n, [&](Idx a, Idx b, Idx x, Idx k) { return lassoc(c, a, b, x, k) == rassoc(c, a, b, x, k); });
}

bool zinbiel(const Ten3& c) {
    return all_triples(c.extent(0), [&](Idx a, Idx b, Idx x, Idx k) {
        return rassoc(c, a, b, x, k) == lassoc(c, b, a, x, k) + lassoc(c, a, b, x, k);
    });
}

bool novikov_coalgebra(const Ten3& d) {
    const Idx n = d.extent(0);
    const Field& f = d.field();
    for (Idx a = 0; a < n; ++a)
        for (Idx x = 0; x < n; ++x)
            for (Idx y = 0; y < n; ++y)
                for (Idx z = 0; z < n; ++z) {
                    // id(x)Delta, Delta(x)id applied to Delta(a), and the flipped versions
                    auto idD = [&](Idx p, Idx q, Idx r) {
                        Scalar s = f.zero();
                        for (Idx w = 0; w < n; ++w) s += d(a, p, w) * d(w, q, r);
                        return s;
                    };
                    auto Did = [&](Idx p, Idx q, Idx r) {
                        Scalar s = f.zero();
                        for (Idx w = 0; w < n; ++w) s += d(a, w, r) * d(w, p, q);
                        return s;
                    };
                    // (tau (x) id)(id (x) Delta) tau Delta(a)
                    Scalar tt = f.zero();
                    for (Idx w = 0; w < n; ++w) tt += d(a, w, y) * d(w, x, z);
                    if (idD(x, y, z) - idD(y, x, z) != Did(x, y, z) - Did(y, x, z)) return false;
                    if (tt != Did(x, y, z)) return false;
                }
    return true;
}

bool novikov_bialgebra(const Ten3& c, const Ten3& d) {
    if (!novikov(c) || !novikov_coalgebra(d)) return false;
    const Idx n = c.extent(0);
    const Field& f = c.field();
    auto lstar = [&](Idx a, Idx y, Idx z) { return c(a, y, z) + c(y, a, z); };
    auto sym = [&](Idx b, Idx x, Idx y) { return d(b, x, y) + d(b, y, x); };

    auto lb5_residual = [&](Idx a, Idx b) {
        Ten2 t(f, {n, n});
        for (Idx g = 0; g < n; ++g)
            for (Idx x = 0; x < n; ++x)
                for (Idx y = 0; y < n; ++y) t(x, y) += c(a, b, g) * d(g, x, y);
        for (Idx x = 0; x < n; ++x)
            for (Idx y = 0; y < n; ++y)
                for (Idx z = 0; z < n; ++z) {
                    t(z, y) -= d(a, x, y) * c(x, b, z);
                    t(x, z) -= sym(b, x, y) * lstar(a, y, z);
                }
        return t;
    };
    auto lb6_side = [&](Idx a, Idx b) {
        Ten2 t(f, {n, n});
        for (Idx x = 0; x < n; ++x)
            for (Idx y = 0; y < n; ++y)
                for (Idx z = 0; z < n; ++z) {
                    t(z, y) += lstar(a, x, z) * d(b, x, y);
                    t(y, z) -= d(b, x, y) * lstar(a, x, z);
                }
        return t;
    };
    auto lb7_side = [&](Idx a, Idx b) {
        Ten2 t(f, {n, n});
        for (Idx x = 0; x < n; ++x)
            for (Idx y = 0; y < n; ++y)
                for (Idx z = 0; z < n; ++z) {
                    t(x, z) += sym(b, x, y) * c(y, a, z);
                    t(z, y) -= sym(b, x, y) * c(x, a, z);
                }
        return t;
    };
    for (Idx a = 0; a < n; ++a)
        for (Idx b = 0; b < n; ++b) {
            if (!lb5_residual(a, b).is_zero()) return false;
            if (lb6_side(a, b) != lb6_side(b, a)) return false;
            if (lb7_side(a, b) != lb7_side(b, a)) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------

std::vector<std::uint64_t> enumerate_class(std::size_t n, unsigned p, Cls cls) {
    const std::size_t cells = n * n * n;
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < cells; ++k) total *= p;
    std::vector<int> c(cells);
    auto C = [&](Idx a, Idx b, Idx g) { return c[(a * n + b) * n + g]; };
    auto mod = [&](long v) { return static_cast<int>(((v % static_cast<long>(p)) + p) % p); };
    // (ab)x and a(bx) as integer vectors
    auto L = [&](Idx a, Idx b, Idx x, Idx k) {
        long s = 0;
        for (Idx g = 0; g < n; ++g) s += C(a, b, g) * C(g, x, k);
        return s;
    };
    auto Rr = [&](Idx a, Idx b, Idx x, Idx k) {
        long s = 0;
        for (Idx g = 0; g < n; ++g) s += C(b, x, g) * C(a, g, k);
        return s;
    };
    auto every = [&](auto&& ok) {
        for (Idx a = 0; a < n; ++a)
            for (Idx b = 0; b < n; ++b)
                for (Idx x = 0; x < n; ++x)
                    for (Idx k = 0; k < n; ++k)
                        if (mod(ok(a, b, x, k)) != 0) return false;
        return true;
    };
    std::vector<std::uint64_t> hits;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t rest = idx;
        for (auto& v : c) {
            v = static_cast<int>(rest % p);
            rest /= p;
        }
        bool ok = false;
        switch (cls) {
            case Cls::novikov:
                ok = every([&](Idx a, Idx b, Idx x, Idx k) { return L(a, b, x, k) - Rr(a, b, x, k) - L(b, a, x, k) + Rr(b, a, x, k); }) &&
                     every([&](Idx a, Idx b, Idx x, Idx k) { return L(a, b, x, k) - L(a, x, b, k); });
                break;
            case Cls::right_novikov:
                ok = every([&](Idx a, Idx b, Idx x, Idx k) { return L(a, b, x, k) - Rr(a, b, x, k) - L(a, x, b, k) + Rr(a, x, b, k); }) &&
                     every([&](Idx a, Idx b, Idx x, Idx k) { return Rr(a, b, x, k) - Rr(b, a, x, k); });
                break;
            case Cls::lie:
                ok = every([&](Idx a, Idx b, Idx, Idx k) { return C(a, b, k) + C(b, a, k); }) &&
                     every([&](Idx a, Idx, Idx, Idx k) { return C(a, a, k); }) &&
                     every([&](Idx a, Idx b, Idx x, Idx k) { return L(a, b, x, k) + L(b, x, a, k) + L(x, a, b, k); });
                break;
            case Cls::comm_assoc:
                ok = every([&](Idx a, Idx b, Idx, Idx k) { return C(a, b, k) - C(b, a, k); }) &&
                     every([&](Idx a, Idx b, Idx x, Idx k) { return L(a, b, x, k) - Rr(a, b, x, k); });
                break;
            case Cls::zinbiel:
                ok = every([&](Idx a, Idx b, Idx x, Idx k) { return Rr(a, b, x, k) - L(b, a, x, k) - L(a, b, x, k); });
                break;
        }
        if (ok) hits.push_back(idx);
    }
    return hits;
}

// ---------------------------------------------------------------------------

namespace {

// t^i <> t^j = i t^(i+j-1); (t^i, t^j) = 1 iff i + j + 1 = 0
std::pair<std::int64_t, std::int64_t> diamond(std::int64_t i, std::int64_t j) { return {i, i + j - 1}; }
bool pairs(std::int64_t i, std::int64_t j) { return i + j + 1 == 0; }
std::int64_t dual_degree(std::int64_t p) {
    // the unique q with (t^p, t^q) = 1
    for (std::int64_t q = -p - 5; q <= -p + 5; ++q)
        if (pairs(p, q)) return q;
    throw std::logic_error("no dual degree");
}

template <std::size_t R>
void accumulate(Window<R>& w, const std::array<std::int64_t, R>& key, const nvk::Tensor<R>& t, const Scalar& s) {
    if (s.is_zero() || t.is_zero()) return;
    auto it = w.find(key);
    if (it == w.end()) {
        nvk::Tensor<R> z(t.field(), t.shape());
        z.add_scaled(s, t);
        w.emplace(key, std::move(z));
    } else {
        it->second.add_scaled(s, t);
    }
}

template <std::size_t R>
Window<R> prune(Window<R> w) {
    for (auto it = w.begin(); it != w.end();) it = it->second.is_zero() ? w.erase(it) : std::next(it);
    return w;
}

// [e_a t^m, e_x t^i] as a vector in A
nvk::Vec bracket(const Algebra& A, Idx a, std::int64_t m, Idx x, std::int64_t i) {
    const Field& f = A.field();
    const Ten3& c = A.constants();
    nvk::Vec v(f, {A.dim()});
    for (Idx z = 0; z < A.dim(); ++z) v(z) = c(a, x, z).times(m) - c(x, a, z).times(i);
    return v;
}

}  // namespace

Scalar laurent_coproduct_coefficient(std::int64_t j, std::int64_t p, std::int64_t q, const Field& f) {
    const auto [coef, deg] = diamond(dual_degree(p), dual_degree(q));
    return pairs(j, deg) ? f.from_int(coef) : f.zero();
}

Window<2> delta(const Coalgebra& C, Idx a, std::int64_t k, Span s) {
    const Field& f = C.field();
    const Idx n = C.dim();
    Ten2 da(f, {n, n}), dt(f, {n, n});
    for (Idx x = 0; x < n; ++x)
        for (Idx y = 0; y < n; ++y) {
            da(x, y) = C.d(a, x, y);
            dt(y, x) = C.d(a, x, y);
        }
    Window<2> w;
    for (std::int64_t p = s.lo; p <= s.hi; ++p)
        for (std::int64_t q = s.lo; q <= s.hi; ++q) {
            const Scalar co = laurent_coproduct_coefficient(k, p, q, f);
            if (co.is_zero()) continue;
            accumulate<2>(w, {p, q}, da, co);
            accumulate<2>(w, {q, p}, dt, -co);
        }
    return prune(std::move(w));
}

Window<2> ad(const Algebra& A, Idx a, std::int64_t m, Idx slot, const Window<2>& t) {
    const Idx n = A.dim();
    Window<2> out;
    for (const auto& [key, T] : t) {
        const std::int64_t i = key[slot];
        Ten2 o(A.field(), {n, n});
        for (Idx x = 0; x < n; ++x) {
            const nvk::Vec br = bracket(A, a, m, x, i);
            for (Idx z = 0; z < n; ++z)
                for (Idx y = 0; y < n; ++y) {
                    if (slot == 0) o(z, y) += br(z) * T(x, y);
                    else o(y, z) += br(z) * T(y, x);
                }
        }
        auto k2 = key;
        k2[slot] = m + i - 1;
        accumulate<2>(out, k2, o, A.field().one());
    }
    return prune(std::move(out));
}

Window<3> ad(const Algebra& A, Idx a, std::int64_t m, Idx slot, const Window<3>& t) {
    const Idx n = A.dim();
    Window<3> out;
    for (const auto& [key, T] : t) {
        const std::int64_t i = key[slot];
        Ten3 o(A.field(), {n, n, n});
        for (Idx x = 0; x < n; ++x) {
            const nvk::Vec br = bracket(A, a, m, x, i);
            for (Idx z = 0; z < n; ++z)
                for (Idx y = 0; y < n; ++y)
                    for (Idx w = 0; w < n; ++w) {
                        if (slot == 0) o(z, y, w) += br(z) * T(x, y, w);
                        else if (slot == 1) o(y, z, w) += br(z) * T(y, x, w);
                        else o(y, w, z) += br(z) * T(y, w, x);
                    }
        }
        auto k2 = key;
        k2[slot] = m + i - 1;
        accumulate<3>(out, k2, o, A.field().one());
    }
    return prune(std::move(out));
}

Window<2> twist(const Window<2>& t) {
    Window<2> out;
    for (const auto& [key, T] : t) {
        const Idx n = T.extent(0);
        Ten2 o(T.field(), {n, n});
        for (Idx x = 0; x < n; ++x)
            for (Idx y = 0; y < n; ++y) o(y, x) = T(x, y);
        out.emplace(std::array<std::int64_t, 2>{key[1], key[0]}, o);
    }
    return out;
}

Window<3> permute(const Window<3>& t, std::array<std::size_t, 3> perm) {
    Window<3> out;
    for (const auto& [key, T] : t) {
        const Idx n = T.extent(0);
        Ten3 o(T.field(), {n, n, n});
        std::array<Idx, 3> in{};
        for (in[0] = 0; in[0] < n; ++in[0])
            for (in[1] = 0; in[1] < n; ++in[1])
                for (in[2] = 0; in[2] < n; ++in[2]) o(in[perm[0]], in[perm[1]], in[perm[2]]) = T(in[0], in[1], in[2]);
        out.emplace(std::array<std::int64_t, 3>{key[perm[0]], key[perm[1]], key[perm[2]]}, o);
    }
    return out;
}

Window<3> extend(const Coalgebra& C, const Window<2>& t, Idx slot, Span s) {
    const Idx n = C.dim();
    const Field& f = C.field();
    Window<3> out;
    for (const auto& [key, T] : t) {
        for (Idx b = 0; b < n; ++b) {
            const std::int64_t deg = key[slot];
            for (const auto& [k2, S] : delta(C, b, deg, s)) {
                Ten3 o(f, {n, n, n});
                for (Idx x = 0; x < n; ++x)
                    for (Idx y = 0; y < n; ++y)
                        for (Idx z = 0; z < n; ++z) {
                            if (slot == 1) o(x, y, z) = T(x, b) * S(y, z);
                            else o(y, z, x) = T(b, x) * S(y, z);
                        }
                if (slot == 1) accumulate<3>(out, {key[0], k2[0], k2[1]}, o, f.one());
                else accumulate<3>(out, {k2[0], k2[1], key[1]}, o, f.one());
            }
        }
    }
    return prune(std::move(out));
}

Window<2> add(Window<2> a, const Window<2>& b, const Scalar& s) {
    for (const auto& [k, t] : b) accumulate<2>(a, k, t, s);
    return prune(std::move(a));
}

Window<3> add(Window<3> a, const Window<3>& b, const Scalar& s) {
    for (const auto& [k, t] : b) accumulate<3>(a, k, t, s);
    return prune(std::move(a));
}

Window<2> affine_r(const Ten2& r, Span s) {
    Window<2> w;
    for (std::int64_t i = s.lo; i <= s.hi; ++i)
        if (s.has(-i - 1)) accumulate<2>(w, {i, -i - 1}, r, r.field().one());
    return w;
}

Window<3> cybe(const Algebra& A, const Ten2& r, Span s) {
    const Idx n = A.dim();
    const Field& f = A.field();
    Window<3> out;
    auto put = [&](std::array<std::int64_t, 3> key, Idx p, Idx q, Idx w, const Scalar& v) {
        if (v.is_zero()) return;
        Ten3 o(f, {n, n, n});
        o(p, q, w) = v;
        accumulate<3>(out, key, o, f.one());
    };
    for (std::int64_t i = s.lo - 2; i <= s.hi + 2; ++i)
        for (std::int64_t j = s.lo - 2; j <= s.hi + 2; ++j)
            for (Idx x = 0; x < n; ++x)
                for (Idx y = 0; y < n; ++y) {
                    if (r(x, y).is_zero()) continue;
                    for (Idx x2 = 0; x2 < n; ++x2)
                        for (Idx y2 = 0; y2 < n; ++y2) {
                            const Scalar w = r(x, y) * r(x2, y2);
                            if (w.is_zero()) continue;
                            // [x t^i, x2 t^j] (x) y t^(-i-1) (x) y2 t^(-j-1)
                            const nvk::Vec b1 = bracket(A, x, i, x2, j);
                            // x t^i (x) [y t^(-i-1), x2 t^j] (x) y2 t^(-j-1)
                            const nvk::Vec b2 = bracket(A, y, -i - 1, x2, j);
                            // x t^i (x) x2 t^j (x) [y t^(-i-1), y2 t^(-j-1)]
                            const nvk::Vec b3 = bracket(A, y, -i - 1, y2, -j - 1);
                            for (Idx z = 0; z < n; ++z) {
                                put({i + j - 1, -i - 1, -j - 1}, z, y, y2, w * b1(z));
                                put({i, -i - 1 + j - 1, -j - 1}, x, z, y2, w * b2(z));
                                put({i, j, -i - j - 3}, x, x2, z, w * b3(z));
                            }
                        }
                }
    return prune(std::move(out));
}

Window<2> cocycle(const Algebra& A, const Coalgebra& C, Idx a, std::int64_t j, Idx b, std::int64_t k, Span s) {
    const Field& f = A.field();
    Window<2> res;
    const nvk::Vec xy = bracket(A, a, j, b, k);
    for (Idx z = 0; z < A.dim(); ++z) res = add(res, delta(C, z, j + k - 1, s), xy(z));
    const Window<2> dx = delta(C, a, j, s), dy = delta(C, b, k, s);
    res = add(res, ad(A, a, j, 0, dy), -f.one());
    res = add(res, ad(A, a, j, 1, dy), -f.one());
    res = add(res, ad(A, b, k, 0, dx), f.one());
    res = add(res, ad(A, b, k, 1, dx), f.one());
    return res;
}

Window<3> cojacobi(const Coalgebra& C, Idx a, std::int64_t k, Span s) {
    const Field& f = C.field();
    const Window<2> t = delta(C, a, k, s);
    const Window<3> right = extend(C, t, 1, s);
    Window<3> res = add(right, permute(right, {1, 0, 2}), -f.one());
    return add(res, extend(C, t, 0, s), -f.one());
}

Window<2> coboundary(const Algebra& A, const Ten2& r, Idx a, std::int64_t m, Span s) {
    const Window<2> rl = affine_r(r, s);
    return add(ad(A, a, m, 0, rl), ad(A, a, m, 1, rl), A.field().one());
}

// ---------------------------------------------------------------------------

namespace {

Scalar random_scalar(const Field& f, Rng& rng) {
    if (f.is_rational()) return f.from_int(std::uniform_int_distribution<int>(-3, 3)(rng));
    return f.from_int(std::uniform_int_distribution<int>(0, static_cast<int>(f.characteristic()) - 1)(rng));
}

Algebra transported(const Ten3& c, const Mat& phi) {
    const Idx n = c.extent(0);
    const Mat inv = nvk::inverse(phi);
    Ten3 out(c.field(), {n, n, n});
    // x *' y = phi(phi^-1 x * phi^-1 y)
    for (Idx a = 0; a < n; ++a)
        for (Idx b = 0; b < n; ++b)
            for (Idx p = 0; p < n; ++p)
                for (Idx q = 0; q < n; ++q) {
                    const Scalar w = inv(p, a) * inv(q, b);
                    if (w.is_zero()) continue;
                    for (Idx g = 0; g < n; ++g) {
                        if (c(p, q, g).is_zero()) continue;
                        for (Idx z = 0; z < n; ++z) out(a, b, z) += w * c(p, q, g) * phi(z, g);
                    }
                }
    return Algebra(nvk::Basis::numbered(n), out);
}

}  // namespace

Mat random_invertible(const Field& f, Idx n, Rng& rng) {
    while (true) {
        Mat m(f, {n, n});
        for (Idx k = 0; k < m.size(); ++k) m.at_flat(k) = random_scalar(f, rng);
        if (!nvk::determinant(m).is_zero()) return m;
    }
}

Ten3 random_tensor(const Field& f, Idx n, Rng& rng) {
    Ten3 c(f, {n, n, n});
    for (Idx k = 0; k < c.size(); ++k) c.at_flat(k) = random_scalar(f, rng);
    return c;
}

Algebra random_novikov(const Field& f, Idx n, Rng& rng) {
    // k[x]/(x^n) with a o b = a D(b) + xi ab, D(x) = p(x), p(0) = 0
    std::vector<Scalar> p(n, f.zero());
    for (Idx k = 1; k < n; ++k) p[k] = random_scalar(f, rng);
    const Scalar xi = random_scalar(f, rng);
    Ten3 c(f, {n, n, n});
    for (Idx i = 0; i < n; ++i)
        for (Idx j = 0; j < n; ++j) {
            if (i + j < n) c(i, j, i + j) += xi;
            // x^i D(x^j) = j x^(i+j-1) p(x)
            if (j == 0) continue;
            for (Idx k = 1; k < n; ++k)
                if (i + j - 1 + k < n) c(i, j, i + j - 1 + k) += p[k].times(static_cast<std::int64_t>(j));
        }
    return transported(c, random_invertible(f, n, rng));
}

Algebra random_non_novikov(const Field& f, Idx n, Rng& rng) {
    // every 1-dim product is Novikov
    if (n < 2) throw std::invalid_argument("random_non_novikov needs dim >= 2");
    while (true) {
        Ten3 c = random_tensor(f, n, rng);
        if (!novikov(c)) return Algebra(nvk::Basis::numbered(n), c);
    }
}

Coalgebra transport_coalgebra(const Coalgebra& co, const Mat& phi) {
    const Idx n = co.dim();
    const Mat inv = nvk::inverse(phi);
    Coalgebra out{co.basis, Ten3(co.field(), {n, n, n})};
    for (Idx a = 0; a < n; ++a)
        for (Idx g = 0; g < n; ++g) {
            const Scalar w = inv(g, a);
            if (w.is_zero()) continue;
            for (Idx x = 0; x < n; ++x)
                for (Idx y = 0; y < n; ++y) {
                    if (co.d(g, x, y).is_zero()) continue;
                    for (Idx p = 0; p < n; ++p)
                        for (Idx q = 0; q < n; ++q) out.d(a, p, q) += w * co.d(g, x, y) * phi(p, x) * phi(q, y);
                }
        }
    return out;
}

}  // namespace oracle

namespace oracle {

Algebra corrected_example(const Field& f) {
    Ten3 c(f, {2, 2, 2});
    c(0, 0, 0) = f.one();
    c(0, 1, 1) = -f.one();
    c(1, 0, 1) = f.one();
    return Algebra(nvk::Basis::numbered(2), c);
}

Coalgebra corrected_coproduct(const Field& f, const Scalar& lambda) {
    Coalgebra co = Coalgebra::zero(nvk::Basis::numbered(2), f);
    co.d(0, 1, 1) = lambda;
    return co;
}

namespace {

Mat skew_random(const Field& f, std::size_t n, Rng& rng) {
    Mat m(f, {n, n});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = random_scalar(f, rng);
            m(j, i) = -m(i, j);
        }
    return m;
}

nvk::BilinearForm moved_form(const nvk::BilinearForm& w, const Mat& phi) {
    const Mat inv = nvk::inverse(phi);
    return nvk::BilinearForm(nvk::matmul(nvk::matmul(nvk::transpose(inv), w.matrix()), inv));
}

}  // namespace

BialgebraSample bialgebra_sample(const Field& f, std::size_t n, Rng& rng, int kind) {
    const nvk::Basis basis = nvk::Basis::numbered(n);
    switch (kind) {
        case 0:
            return {random_novikov(f, n, rng), Coalgebra::zero(basis, f), kind};
        case 1:
        case 5: {
            if (n != 2) break;
            const Mat phi = random_invertible(f, 2, rng);
            const Scalar lambda = random_scalar(f, rng);
            Algebra a = transported(corrected_example(f).constants(), phi);
            Coalgebra c = transport_coalgebra(corrected_coproduct(f, lambda), phi);
            if (kind == 5) {
                Scalar& cell = c.d.at_flat(rng() % c.d.size());
                cell += f.one();
            }
            return {a, c, kind};
        }
        case 2: {
            Coalgebra c{basis, random_novikov(f, n, rng).constants()};
            // c.d[g][a][b] must be the dual product constants c*[a][b][g]
            Ten3 d(f, {n, n, n});
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    for (std::size_t g = 0; g < n; ++g) d(g, a, b) = c.d(a, b, g);
            c.d = d;
            return {random_novikov(f, n, rng), c, kind};
        }
        case 3:
            return {random_novikov(f, n, rng), Coalgebra{basis, random_tensor(f, n, rng)}, kind};
        case 4: {
            Algebra a = random_novikov(f, n, rng);
            return {a, nvk::coboundary_coproduct(a, skew_random(f, n, rng)), kind};
        }
        default:
            break;
    }
    return {random_novikov(f, n, rng), Coalgebra::zero(basis, f), 0};
}

FormSample form_sample(const Field& f, Rng& rng, int kind) {
    if (kind == 0) {
        nvk::PreNovikovAlgebra p{nvk::Basis({"e"}), Ten3(f, {1, 1, 1}), Ten3(f, {1, 1, 1})};
        Scalar s = random_scalar(f, rng);
        if (s.is_zero()) s = f.one();
        p.left(0, 0, 0) = s;
        const nvk::CanonicalSolution sol = nvk::pre_novikov_canonical_solution(p);
        const Mat phi = random_invertible(f, 2, rng);
        return {transported(sol.algebra.constants(), phi), moved_form(sol.omega, phi), kind};
    }
    Mat w = skew_random(f, 2, rng);
    if (w(0, 1).is_zero()) {
        w(0, 1) = f.one();
        w(1, 0) = -f.one();
    }
    if (kind == 1) return {Algebra::zero(nvk::Basis::numbered(2), f), nvk::BilinearForm(w), kind};
    return {random_novikov(f, 2, rng), nvk::BilinearForm(w), kind};
}

}  // namespace oracle
