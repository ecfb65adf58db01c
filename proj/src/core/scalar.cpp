#include "nvk/core/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace nvk {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::DegreeCapExceeded: return "DegreeCapExceeded";
        case ErrorKind::NotDerivation: return "NotDerivation";
        case ErrorKind::NotCommAssoc: return "NotCommAssoc";
        case ErrorKind::NotZinbiel: return "NotZinbiel";
        case ErrorKind::NotPreNovikov: return "NotPreNovikov";
        case ErrorKind::NotNovikov: return "NotNovikov";
        case ErrorKind::NotRightNovikov: return "NotRightNovikov";
        case ErrorKind::NotLie: return "NotLie";
        case ErrorKind::NotRepresentation: return "NotRepresentation";
        case ErrorKind::InvalidRepresentation: return "InvalidRepresentation";
        case ErrorKind::NotOOperator: return "NotOOperator";
        case ErrorKind::NotMatchedPair: return "NotMatchedPair";
        case ErrorKind::DualNotNovikov: return "DualNotNovikov";
        case ErrorKind::DegenerateForm: return "DegenerateForm";
        case ErrorKind::NotClosed: return "NotClosed";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint32_t p) {
    if (p >= (1u << 31) || !is_prime(p))
        throw Error(ErrorKind::InvalidArgument, "field characteristic " + std::to_string(p) + " is not a prime below 2^31");
    return Field(p);
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t v) const {
    if (p_ == 0) return Scalar(mpq_class(static_cast<long>(v)));
    return Scalar::residue(v, p_);
}

Scalar Field::from_rational(const mpq_class& q) const {
    if (p_ == 0) return Scalar(q);
    mpz_class num = q.get_num() % p_;
    mpz_class den = q.get_den() % p_;
    if (den == 0)
        throw Error(ErrorKind::FieldMismatch, "coefficient " + q.get_str() + " has no image in " + name());
    Scalar n = Scalar::residue(num.get_si(), p_);
    return n / Scalar::residue(den.get_si(), p_);
}

Scalar::Scalar(const mpq_class& q) : v_(q) { std::get<mpq_class>(v_).canonicalize(); }

Scalar Scalar::residue(std::int64_t v, std::uint32_t p) {
    std::int64_t m = v % static_cast<std::int64_t>(p);
    if (m < 0) m += p;
    return Scalar(Mod{static_cast<std::uint32_t>(m), p});
}

Field Scalar::field() const {
    if (std::holds_alternative<mpq_class>(v_)) return Field::rationals();
    return Field::prime(std::get<Mod>(v_).p);
}

void Scalar::require_same(const Scalar& o) const {
    const bool qa = std::holds_alternative<mpq_class>(v_);
    const bool qb = std::holds_alternative<mpq_class>(o.v_);
    if (qa != qb || (!qa && std::get<Mod>(v_).p != std::get<Mod>(o.v_).p))
        throw Error(ErrorKind::FieldMismatch, "arithmetic between " + field().name() + " and " + o.field().name());
}

bool Scalar::is_zero() const {
    if (auto q = std::get_if<mpq_class>(&v_)) return sgn(*q) == 0;
    return std::get<Mod>(v_).v == 0;
}

bool Scalar::is_one() const {
    if (auto q = std::get_if<mpq_class>(&v_)) return *q == 1;
    return std::get<Mod>(v_).v == 1;
}

Scalar Scalar::operator-() const {
    if (auto q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(-*q));
    const Mod& m = std::get<Mod>(v_);
    return Scalar(Mod{m.v == 0 ? 0 : m.p - m.v, m.p});
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    if (auto q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(1 / *q));
    const Mod& m = std::get<Mod>(v_);
    // extended Euclid on (v, p)
    std::int64_t a = m.v, b = m.p, x0 = 1, x1 = 0;
    while (b != 0) {
        std::int64_t t = a / b;
        std::int64_t r = a - t * b;
        a = b;
        b = r;
        std::int64_t x = x0 - t * x1;
        x0 = x1;
        x1 = x;
    }
    return residue(x0, m.p);
}

Scalar& Scalar::operator+=(const Scalar& o) {
    require_same(o);
    if (auto q = std::get_if<mpq_class>(&v_)) {
        *q += std::get<mpq_class>(o.v_);
    } else {
        Mod& m = std::get<Mod>(v_);
        std::uint64_t s = std::uint64_t(m.v) + std::get<Mod>(o.v_).v;
        m.v = static_cast<std::uint32_t>(s % m.p);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    require_same(o);
    if (auto q = std::get_if<mpq_class>(&v_)) {
        *q *= std::get<mpq_class>(o.v_);
    } else {
        Mod& m = std::get<Mod>(v_);
        m.v = static_cast<std::uint32_t>(std::uint64_t(m.v) * std::get<Mod>(o.v_).v % m.p);
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    require_same(o);
    return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    a.require_same(b);
    if (auto q = std::get_if<mpq_class>(&a.v_)) return *q == std::get<mpq_class>(b.v_);
    return std::get<Scalar::Mod>(a.v_).v == std::get<Scalar::Mod>(b.v_).v;
}

Scalar Scalar::times(std::int64_t k) const {
    if (auto q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(*q * mpz_class(static_cast<long>(k))));
    const Mod& m = std::get<Mod>(v_);
    return residue(k, m.p) * *this;
}

std::string Scalar::to_string() const {
    if (auto q = std::get_if<mpq_class>(&v_)) return q->get_str();
    return std::to_string(std::get<Mod>(v_).v);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar parse_scalar(const std::string& text, const Field& f) {
    if (text.empty()) throw std::invalid_argument("empty coefficient");
    std::size_t i = 0;
    if (text[0] == '-' || text[0] == '+') i = 1;
    bool slash = false;
    bool digit_before = false, digit_after = false;
    for (std::size_t k = i; k < text.size(); ++k) {
        char c = text[k];
        if (c == '/') {
            if (slash) throw std::invalid_argument("malformed coefficient '" + text + "'");
            slash = true;
        } else if (c >= '0' && c <= '9') {
            (slash ? digit_after : digit_before) = true;
        } else {
            throw std::invalid_argument("malformed coefficient '" + text + "'");
        }
    }
    if (!digit_before || (slash && !digit_after)) throw std::invalid_argument("malformed coefficient '" + text + "'");
    mpq_class q;
    std::string body = text[0] == '+' ? text.substr(1) : text;
    if (q.set_str(body, 10) != 0) throw std::invalid_argument("malformed coefficient '" + text + "'");
    if (q.get_den() == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + text + "'");
    q.canonicalize();
    return f.from_rational(q);
}

}  // namespace nvk
