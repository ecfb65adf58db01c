#include "nvk/core/poly.hpp"

#include <sstream>

namespace nvk {

unsigned fold_exponent(unsigned e, const Field& f) {
    const unsigned p = f.characteristic();
    if (p == 0 || e < p) return e;
    return (e - 1) % (p - 1) + 1;
}

Poly Poly::constant(const Scalar& s) {
    Poly p(s.field());
    p.add_term({0, 0}, s);
    return p;
}

Poly Poly::from_affine(const Field& f, const Affine& a) {
    Poly p(f);
    p.add_term({1, 0}, f.from_int(a.a));
    p.add_term({0, 1}, f.from_int(a.b));
    p.add_term({0, 0}, f.from_int(a.c));
    return p;
}

unsigned Poly::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, s] : terms_) d = std::max(d, m.first + m.second);
    return d;
}

void Poly::add_term(Mono m, const Scalar& s) {
    if (s.is_zero()) return;
    m = {fold_exponent(m.first, field_), fold_exponent(m.second, field_)};
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, s);
        return;
    }
    it->second += s;
    if (it->second.is_zero()) terms_.erase(it);
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, s] : o.terms_) add_term(m, s);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, s] : o.terms_) add_term(m, -s);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly p(a.field_);
    for (const auto& [ma, sa] : a.terms_)
        for (const auto& [mb, sb] : b.terms_) p.add_term({ma.first + mb.first, ma.second + mb.second}, sa * sb);
    return p;
}

Poly Poly::pow(unsigned k) const {
    Poly r = constant(field_.one());
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

Scalar Poly::evaluate(std::int64_t u, std::int64_t v) const {
    Scalar out = field_.zero();
    const Scalar su = field_.from_int(u), sv = field_.from_int(v);
    for (const auto& [m, s] : terms_) {
        Scalar w = s;
        for (unsigned k = 0; k < m.first; ++k) w *= su;
        for (unsigned k = 0; k < m.second; ++k) w *= sv;
        out += w;
    }
    return out;
}

Poly Poly::substitute(const Affine& su, const Affine& sv, unsigned cap) const {
    const Poly pu = from_affine(field_, su), pv = from_affine(field_, sv);
    Poly out(field_);
    for (const auto& [m, s] : terms_) out += constant(s) * pu.pow(m.first) * pv.pow(m.second);
    if (out.total_degree() > cap)
        throw Error(ErrorKind::DegreeCapExceeded, "polynomial degree exceeds cap " + std::to_string(cap));
    return out;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest degree first reads more naturally
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, s] = *it;
        if (!first) os << " + ";
        first = false;
        os << s;
        if (m.first) os << "*u" << (m.first > 1 ? "^" + std::to_string(m.first) : "");
        if (m.second) os << "*v" << (m.second > 1 ? "^" + std::to_string(m.second) : "");
    }
    return os.str();
}

}  // namespace nvk
