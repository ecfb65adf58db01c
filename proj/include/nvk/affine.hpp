#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "nvk/bialgebra.hpp"
#include "nvk/core/poly.hpp"

namespace nvk {

// ---------------------------------------------------------------------------
// Laurent factor k[t,t^-1]: t^i <> t^j = i t^(i+j-1), (t^i, t^j) = [i+j+1 == 0].

struct LaurentB {
    static std::int64_t product_coefficient(std::int64_t i, std::int64_t /*j*/) { return i; }
    static bool pairs(std::int64_t i, std::int64_t j) { return i + j + 1 == 0; }
};

// Finite sum of a_d t^d with a_d in A; zero coefficients are never stored.
class LaurentVector {
public:
    LaurentVector() = default;
    LaurentVector(const Field& f, std::size_t n) : field_(f), n_(n) {}
    static LaurentVector monomial(const Vec& a, std::int64_t degree);

    const Field& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return n_; }
    const std::map<std::int64_t, Vec>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Vec coefficient(std::int64_t degree) const;

    void add(std::int64_t degree, const Vec& a);
    LaurentVector& operator+=(const LaurentVector& o);
    LaurentVector& operator-=(const LaurentVector& o);
    friend LaurentVector operator+(LaurentVector a, const LaurentVector& b) { return a += b; }
    friend LaurentVector operator-(LaurentVector a, const LaurentVector& b) { return a -= b; }
    LaurentVector scaled(const Scalar& s) const;
    friend bool operator==(const LaurentVector& a, const LaurentVector& b) { return a.terms_ == b.terms_; }

private:
    Field field_;
    std::size_t n_ = 0;
    std::map<std::int64_t, Vec> terms_;
};

// [a t^i, b t^j] = (i a.b - j b.a) t^(i+j-1)
LaurentVector laurent_bracket(const LaurentVector& x, const LaurentVector& y, const Algebra& a);

// Jacobi on basis elements at the given degree triples.
Report check_laurent_jacobi(const Algebra& a, const std::vector<std::array<std::int64_t, 3>>& degrees);
std::vector<std::array<std::int64_t, 3>> default_jacobi_probes();

// ---------------------------------------------------------------------------
// Banded tensors: total degree d -> polynomial in the free slot degrees.
// Rank 2: component at slot degrees (d-u, u) is f_d(u).
// Rank 3: component at (d-u-v, u, v) is g_d(u, v).

template <std::size_t R>
class BandedTensor {
public:
    using Poly_ = BandPoly<R>;

    BandedTensor() = default;
    BandedTensor(const Field& f, std::size_t n, unsigned cap = kDefaultDegreeCap) : field_(f), n_(n), cap_(cap) {}

    const Field& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return n_; }
    unsigned cap() const noexcept { return cap_; }
    const std::map<std::int64_t, Poly_>& bands() const noexcept { return bands_; }
    bool is_zero() const noexcept { return bands_.empty(); }

    typename Tensor<R>::Shape shape() const {
        typename Tensor<R>::Shape s;
        s.fill(n_);
        return s;
    }
    Poly_ empty_poly() const { return Poly_(field_, shape(), cap_); }

    void add_band(std::int64_t d, const Poly_& p) {
        if (p.is_zero()) return;
        auto it = bands_.find(d);
        if (it == bands_.end()) {
            bands_.emplace(d, p);
            return;
        }
        it->second += p;
        if (it->second.is_zero()) bands_.erase(it);
    }

    BandedTensor& operator+=(const BandedTensor& o) {
        for (const auto& [d, p] : o.bands_) add_band(d, p);
        return *this;
    }
    BandedTensor& operator-=(const BandedTensor& o) {
        for (const auto& [d, p] : o.bands_) add_band(d, -p);
        return *this;
    }
    friend BandedTensor operator+(BandedTensor a, const BandedTensor& b) { return a += b; }
    friend BandedTensor operator-(BandedTensor a, const BandedTensor& b) { return a -= b; }
    BandedTensor operator-() const {
        BandedTensor t(field_, n_, cap_);
        for (const auto& [d, p] : bands_) t.bands_.emplace(d, -p);
        return t;
    }
    BandedTensor scaled(const Scalar& s) const {
        BandedTensor t(field_, n_, cap_);
        for (const auto& [d, p] : bands_) t.add_band(d, p.scaled(s));
        return t;
    }
    friend bool operator==(const BandedTensor& a, const BandedTensor& b) { return a.bands_ == b.bands_; }

private:
    Field field_;
    std::size_t n_ = 0;
    unsigned cap_ = kDefaultDegreeCap;
    std::map<std::int64_t, Poly_> bands_;
};

using BandedTensor2 = BandedTensor<2>;
using BandedTensor3 = BandedTensor<3>;

// Component at explicit slot degrees (zero off the bands).
Ten2 component(const BandedTensor2& t, std::int64_t p, std::int64_t q);
Ten3 component(const BandedTensor3& t, std::int64_t p, std::int64_t q, std::int64_t s);

// Completed flip: band d, f(u) -> flip(f(d-u)).
BandedTensor2 twist(const BandedTensor2& t);
// Output slot k holds input slot perm[k].
BandedTensor3 permute_slots(const BandedTensor3& t, std::array<std::size_t, 3> perm);

// ad_x acting on one slot.
BandedTensor2 apply_ad(const Algebra& a, const LaurentVector& x, std::size_t slot, const BandedTensor2& t);
BandedTensor3 apply_ad(const Algebra& a, const LaurentVector& x, std::size_t slot, const BandedTensor3& t);

// Delta_B(t^j) = sum_i (i+1) t^(-i-2) (x) t^(j+i), a banded tensor over a 1-dim space.
BandedTensor2 laurent_coproduct(std::int64_t j, const Field& f);
// (Delta_B(a), b (x) c) = (a, b <> c) for all degrees in [lo, hi].
Report check_laurent_coproduct_duality(std::int64_t lo, std::int64_t hi);

// delta(a t^k) = (id - twist)(Delta_A(a) . Delta_B(t^k)), summed over the terms of x.
BandedTensor2 apply_Delta_affine(const LaurentVector& x, const Coalgebra& c);
// (id (x) delta) for slot = 1, (delta (x) id) for slot = 0.
BandedTensor3 extend_delta_slot(const BandedTensor2& t, std::size_t slot, const Coalgebra& c);

std::vector<std::int64_t> default_probe_degrees();

Report check_completed_lie_coalgebra(const Coalgebra& c, const std::vector<std::int64_t>& probes = default_probe_degrees());
Report check_completed_lie_bialgebra(const Algebra& a, const Coalgebra& c,
                                     const std::vector<std::int64_t>& probes = default_probe_degrees());

// The co-Jacobi residual of delta(a t^k) and the cocycle residual for a pair of monomials.
BandedTensor3 cojacobi_residual(const Coalgebra& c, const LaurentVector& x);
BandedTensor2 cocycle_residual(const Algebra& a, const Coalgebra& c, const LaurentVector& x, const LaurentVector& y);

// r_L = sum_i x t^i (x) y t^(-i-1): one band at degree -1 with constant coefficient r.
BandedTensor2 affinize_r(const Algebra& a, const Ten2& r);
// [r12, r13] + [r12, r23] + [r13, r23]
BandedTensor3 cybe_residual(const Algebra& a, const BandedTensor2& rl);
Report check_completed_cybe(const Algebra& a, const BandedTensor2& rl);

// (ad_x (x) id + id (x) ad_x) r_L
BandedTensor2 coboundary_delta(const Algebra& a, const BandedTensor2& rl, const LaurentVector& x);

// The delta induced from (A, -Delta_r) against the coboundary delta of r_L.
Report cross_check_cor44(const Algebra& a, const Ten2& r,
                         const std::vector<std::int64_t>& probes = {-2, -1, 0, 1, 2});

// (a t^i, b t^j)_L = omega(a, b) [i+j+1 == 0]
Scalar graded_form(const BilinearForm& omega, const LaurentVector& x, const LaurentVector& y);
Report graded_quasi_frobenius(const Algebra& a, const BilinearForm& omega,
                              const std::vector<std::int64_t>& probes = {0, 1});
Report quasi_frobenius_equivalence(const Algebra& a, const BilinearForm& omega);

// F([x, y]) = (x, y)_L for basis monomials with degrees in [lo, hi].
Report check_frobenius_function(const Algebra& a, const BilinearForm& omega,
                                const std::function<Scalar(const LaurentVector&)>& F, std::int64_t lo,
                                std::int64_t hi);

// ---------------------------------------------------------------------------
// Finite right Novikov factor B.

// [a (x) b1, c (x) b2] = a.c (x) b1<>b2 - c.a (x) b2<>b1, basis index i*dim(B)+p.
Algebra induced_lie_finite(const Algebra& a, const Algebra& b);
Algebra induced_lie_finite_unchecked(const Algebra& a, const Algebra& b);
// (Delta_B(a), b (x) c) = (a, b <> c)
Coalgebra quadratic_coproduct(const Algebra& b, const BilinearForm& form);
// delta(a (x) b) = (id - flip)(Delta_A(a) . Delta_B(b))
Coalgebra induced_cobracket_finite(const Coalgebra& ca, const Coalgebra& cb);
Report check_lie_coalgebra(const Coalgebra& delta);
Report check_lie_bialgebra(const Algebra& l, const Coalgebra& delta);

// ---------------------------------------------------------------------------
// Window evaluation.

template <std::size_t R>
using Window = std::map<std::array<std::int64_t, R>, Tensor<R>>;

Window<2> window_truncate(const BandedTensor2& t, std::int64_t lo, std::int64_t hi);
Window<3> window_truncate(const BandedTensor3& t, std::int64_t lo, std::int64_t hi);

// A window in which every nonzero band has a nonzero component.
std::pair<std::int64_t, std::int64_t> sufficient_window(const BandedTensor2& t);
std::pair<std::int64_t, std::int64_t> sufficient_window(const BandedTensor3& t);

// Compares a banded value with an independently computed dense table on
// [lo, hi] in every slot; entries of `dense` outside the window are ignored.
Report oracle_window_check(const BandedTensor2& t, const Window<2>& dense, std::int64_t lo, std::int64_t hi);
Report oracle_window_check(const BandedTensor3& t, const Window<3>& dense, std::int64_t lo, std::int64_t hi);

}  // namespace nvk
