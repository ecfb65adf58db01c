#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "nvk/core/tensor.hpp"

namespace nvk {

inline constexpr unsigned kDefaultDegreeCap = 8;

// Exponent pair (deg_u, deg_v).
using Mono = std::pair<unsigned, unsigned>;

// a*u + b*v + c with integer coefficients.
struct Affine {
    std::int64_t a = 0, b = 0, c = 0;

    static Affine u() { return {1, 0, 0}; }
    static Affine v() { return {0, 1, 0}; }
    static Affine constant(std::int64_t c) { return {0, 0, c}; }
    std::int64_t operator()(std::int64_t uu, std::int64_t vv) const { return a * uu + b * vv + c; }
};

// Over F_p the variables only ever take integer values, so u^p and u define the
// same function; exponents are folded to keep the zero test faithful.
unsigned fold_exponent(unsigned e, const Field& f);

// Scalar polynomial in two integer-valued variables u, v.
class Poly {
public:
    explicit Poly(const Field& f) : field_(f) {}
    static Poly constant(const Scalar& s);
    static Poly from_affine(const Field& f, const Affine& a);

    const Field& field() const noexcept { return field_; }
    const std::map<Mono, Scalar>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    unsigned total_degree() const;

    void add_term(Mono m, const Scalar& s);
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly pow(unsigned k) const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    Scalar evaluate(std::int64_t u, std::int64_t v) const;
    Poly substitute(const Affine& su, const Affine& sv, unsigned cap = kDefaultDegreeCap) const;

    std::string to_string() const;

private:
    Field field_;
    std::map<Mono, Scalar> terms_;
};

// Polynomial in (u, v) whose coefficients are rank-R tensors. BandPoly1 only
// uses u; BandPoly2 uses both.
template <std::size_t R>
class BandPoly {
public:
    using Coef = Tensor<R>;

    BandPoly() = default;
    BandPoly(const Field& f, typename Coef::Shape shape, unsigned cap = kDefaultDegreeCap)
        : field_(f), shape_(shape), cap_(cap) {}
    static BandPoly constant(const Coef& t, unsigned cap = kDefaultDegreeCap) {
        BandPoly p(t.field(), t.shape(), cap);
        p.add_term({0, 0}, t);
        return p;
    }

    const Field& field() const noexcept { return field_; }
    const typename Coef::Shape& shape() const noexcept { return shape_; }
    unsigned cap() const noexcept { return cap_; }
    const std::map<Mono, Coef>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [m, t] : terms_) d = std::max(d, m.first + m.second);
        return d;
    }

    void add_term(Mono m, const Coef& t) {
        m = {fold_exponent(m.first, field_), fold_exponent(m.second, field_)};
        if (m.first + m.second > cap_)
            throw Error(ErrorKind::DegreeCapExceeded, "band polynomial degree " + std::to_string(m.first + m.second) +
                                                          " exceeds cap " + std::to_string(cap_));
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!t.is_zero()) terms_.emplace(m, t);
            return;
        }
        it->second += t;
        if (it->second.is_zero()) terms_.erase(it);
    }

    BandPoly& operator+=(const BandPoly& o) {
        for (const auto& [m, t] : o.terms_) add_term(m, t);
        return *this;
    }
    BandPoly& operator-=(const BandPoly& o) {
        for (const auto& [m, t] : o.terms_) add_term(m, -t);
        return *this;
    }
    friend BandPoly operator+(BandPoly a, const BandPoly& b) { return a += b; }
    friend BandPoly operator-(BandPoly a, const BandPoly& b) { return a -= b; }
    BandPoly operator-() const {
        BandPoly p(field_, shape_, cap_);
        for (const auto& [m, t] : terms_) p.terms_.emplace(m, -t);
        return p;
    }
    BandPoly scaled(const Scalar& s) const {
        BandPoly p(field_, shape_, cap_);
        if (s.is_zero()) return p;
        for (const auto& [m, t] : terms_) p.terms_.emplace(m, s * t);
        return p;
    }
    friend bool operator==(const BandPoly& a, const BandPoly& b) { return a.terms_ == b.terms_; }

    // Multiplication by a scalar polynomial.
    BandPoly times(const Poly& q) const {
        BandPoly p(field_, shape_, cap_);
        for (const auto& [m, t] : terms_)
            for (const auto& [mq, s] : q.terms()) p.add_term({m.first + mq.first, m.second + mq.second}, s * t);
        return p;
    }

    // Composition with u -> su(u,v), v -> sv(u,v).
    BandPoly substitute(const Affine& su, const Affine& sv) const {
        BandPoly p(field_, shape_, cap_);
        const Poly pu = Poly::from_affine(field_, su), pv = Poly::from_affine(field_, sv);
        for (const auto& [m, t] : terms_) {
            const Poly factor = pu.pow(m.first) * pv.pow(m.second);
            for (const auto& [mq, s] : factor.terms()) p.add_term(mq, s * t);
        }
        return p;
    }

    // Applies a linear map to every coefficient tensor.
    template <std::size_t S, typename F>
    BandPoly<S> map_linear(typename Tensor<S>::Shape out_shape, F&& fn) const {
        BandPoly<S> p(field_, out_shape, cap_);
        for (const auto& [m, t] : terms_) p.add_term(m, fn(t));
        return p;
    }

    Coef evaluate(std::int64_t u, std::int64_t v) const {
        Coef out(field_, shape_);
        for (const auto& [m, t] : terms_) {
            Scalar w = field_.one();
            for (unsigned k = 0; k < m.first; ++k) w *= field_.from_int(u);
            for (unsigned k = 0; k < m.second; ++k) w *= field_.from_int(v);
            out.add_scaled(w, t);
        }
        return out;
    }

private:
    Field field_;
    typename Coef::Shape shape_{};
    unsigned cap_ = kDefaultDegreeCap;
    std::map<Mono, Coef> terms_;
};

using BandPoly1 = BandPoly<2>;  // one variable, A (x) A valued
using BandPoly2 = BandPoly<3>;  // two variables, A (x) A (x) A valued

// poly_substitute from the operation list: the same as BandPoly::substitute.
template <std::size_t R>
BandPoly<R> poly_substitute(const BandPoly<R>& p, const Affine& su, const Affine& sv = Affine::v()) {
    return p.substitute(su, sv);
}

}  // namespace nvk
