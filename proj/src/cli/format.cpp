#include "nvk/cli/format.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace nvk::cli {

const char* parse_error_name(ParseErrorKind k) {
    switch (k) {
        case ParseErrorKind::Syntax: return "Syntax";
        case ParseErrorKind::UnknownBasisName: return "UnknownBasisName";
        case ParseErrorKind::FieldMismatch: return "FieldMismatch";
        case ParseErrorKind::DuplicateEntry: return "DuplicateEntry";
        case ParseErrorKind::UnknownObject: return "UnknownObject";
    }
    return "?";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& msg)
    : std::runtime_error(std::string(parse_error_name(kind)) + " at " + std::to_string(line) + ":" +
                         std::to_string(column) + ": " + msg),
      kind_(kind),
      line_(line),
      column_(column) {}

namespace {

template <typename Block>
const Block& find_block(const std::vector<Block>& v, const std::string& name, const char* what) {
    if (v.empty()) throw Error(ErrorKind::InvalidArgument, std::string("input has no ") + what);
    if (name.empty()) return v.front();
    for (const auto& b : v)
        if (b.name == name) return b;
    throw Error(ErrorKind::InvalidArgument, std::string("no ") + what + " named " + name);
}

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

struct Term {
    mpq_class coef;
    std::vector<std::string> names;
    std::size_t column;
};

// Linear combination of `arity`-fold tensor monomials joined by `sep`.
// Column numbers are 1-based and offset by `col0`.
class ComboParser {
public:
    ComboParser(const std::string& s, std::size_t line, std::size_t col0, std::size_t arity, char sep)
        : s_(s), line_(line), col0_(col0), arity_(arity), sep_(sep) {}

    std::vector<Term> parse() {
        std::vector<Term> out;
        skip();
        if (pos_ == s_.size()) syntax("empty right-hand side");
        bool first = true;
        while (true) {
            skip();
            if (pos_ == s_.size()) break;
            int sign = 1;
            if (s_[pos_] == '+' || s_[pos_] == '-') {
                sign = s_[pos_] == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                syntax("expected + or -");
            }
            first = false;
            out.push_back(term(sign));
        }
        return out;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void syntax(const std::string& m) const { throw ParseError(ParseErrorKind::Syntax, line_, col0_ + pos_ + 1, m); }

    Term term(int sign) {
        Term t{mpq_class(sign), {}, col0_ + pos_ + 1};
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
            mpq_class q;
            if (q.set_str(s_.substr(start, pos_ - start), 10) != 0) syntax("bad coefficient");
            if (q.get_den() == 0) syntax("zero denominator");
            q.canonicalize();
            t.coef *= q;
            skip();
            if (pos_ == s_.size() || s_[pos_] == '+' || s_[pos_] == '-') {
                // bare number: only "0" is meaningful
                if (q != 0) syntax("coefficient without a basis element");
                return t;
            }
        }
        for (std::size_t k = 0; k < arity_; ++k) {
            if (k > 0) {
                skip();
                if (pos_ >= s_.size() || s_[pos_] != sep_) syntax(std::string("expected '") + sep_ + "'");
                ++pos_;
                skip();
            }
            if (pos_ >= s_.size() || !name_start(s_[pos_])) syntax("expected a basis name");
            std::size_t start = pos_;
            while (pos_ < s_.size() && name_char(s_[pos_])) ++pos_;
            t.names.push_back(s_.substr(start, pos_ - start));
        }
        return t;
    }

    const std::string& s_;
    std::size_t line_, col0_, arity_;
    char sep_;
    std::size_t pos_ = 0;
};

Scalar to_field(const mpq_class& q, const Field& f, std::size_t line, std::size_t col) {
    try {
        return f.from_rational(q);
    } catch (const Error&) {
        throw ParseError(ParseErrorKind::FieldMismatch, line, col, "coefficient " + q.get_str() + " is not in " + f.name());
    }
}

std::size_t lookup(const Basis& b, const std::string& name, std::size_t line, std::size_t col) {
    if (!b.contains(name)) throw ParseError(ParseErrorKind::UnknownBasisName, line, col, "unknown basis element " + name);
    return b.index(name);
}

// Accumulates terms into a flat tensor with the given bases per slot.
template <std::size_t R>
void accumulate(Tensor<R>& out, const std::vector<Term>& terms, const std::array<const Basis*, R>& bases,
                const Field& f, std::size_t line) {
    for (const auto& t : terms) {
        if (t.names.empty()) continue;
        std::array<std::size_t, R> idx{};
        for (std::size_t k = 0; k < R; ++k) idx[k] = lookup(*bases[k], t.names[k], line, t.column);
        Scalar c = to_field(t.coef, f, line, t.column);
        if constexpr (R == 1) out(idx[0]) += c;
        if constexpr (R == 2) out(idx[0], idx[1]) += c;
    }
}

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> words(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> w;
    for (std::string x; is >> x;) w.push_back(x);
    return w;
}

Field parse_field(const std::string& w, std::size_t line) {
    if (w == "Q") return Field::rationals();
    if (w.size() > 1 && w[0] == 'F') {
        try {
            std::size_t used = 0;
            const unsigned long p = std::stoul(w.substr(1), &used);
            if (used == w.size() - 1 && p < (1ul << 31) && is_prime(p)) return Field::prime(static_cast<std::uint32_t>(p));
        } catch (const std::exception&) {
        }
    }
    throw ParseError(ParseErrorKind::Syntax, line, 7, "field must be Q or Fp with p prime, got " + w);
}

enum class Kind { none, algebra, prenovikov, representation, matched_pair };

struct Parser {
    Document doc;
    bool have_field = false;
    Kind kind = Kind::none;
    std::set<std::string> seen;  // entry keys within the current block
    std::set<std::string> names;
    std::size_t line = 0;

    [[noreturn]] void fail(ParseErrorKind k, std::size_t col, const std::string& m) const { throw ParseError(k, line, col, m); }

    const Basis* algebra_basis(const std::string& name, std::size_t col) const {
        for (const auto& a : doc.algebras)
            if (a.name == name) return &a.algebra.basis();
        fail(ParseErrorKind::UnknownObject, col, "unknown algebra " + name);
    }
    const Algebra& algebra_named(const std::string& name) const {
        for (const auto& a : doc.algebras)
            if (a.name == name) return a.algebra;
        fail(ParseErrorKind::UnknownObject, 1, "unknown algebra " + name);
    }

    void once(const std::string& key, std::size_t col) {
        if (!seen.insert(key).second) fail(ParseErrorKind::DuplicateEntry, col, "duplicate entry for " + key);
    }

    void new_block(Kind k, const std::vector<std::string>& w) {
        if (!have_field) fail(ParseErrorKind::Syntax, 1, "the first statement must be 'field'");
        if (w.size() < 2) fail(ParseErrorKind::Syntax, 1, "block needs a name");
        if (!names.insert(w[1]).second) fail(ParseErrorKind::DuplicateEntry, 1, "duplicate object name " + w[1]);
        kind = k;
        seen.clear();
        const Field& F = doc.field;
        switch (k) {
            case Kind::algebra:
                if (w.size() != 2) fail(ParseErrorKind::Syntax, 1, "usage: algebra NAME");
                doc.algebras.push_back({w[1], Algebra::zero(Basis{}, F), std::nullopt, std::nullopt, {}});
                break;
            case Kind::prenovikov:
                if (w.size() != 2) fail(ParseErrorKind::Syntax, 1, "usage: prenovikov NAME");
                doc.prenovikov.push_back({w[1], {Basis{}, Ten3(F, {0, 0, 0}), Ten3(F, {0, 0, 0})}});
                break;
            case Kind::representation: {
                if (w.size() != 4 || w[2] != "of") fail(ParseErrorKind::Syntax, 1, "usage: representation NAME of ALGEBRA");
                const Algebra& A = algebra_named(w[3]);
                doc.representations.push_back({w[1], w[3], {A, Basis{}, {}, {}}});
                break;
            }
            case Kind::matched_pair: {
                if (w.size() != 4) fail(ParseErrorKind::Syntax, 1, "usage: matchedpair NAME A B");
                const Algebra& A = algebra_named(w[2]);
                const Algebra& B = algebra_named(w[3]);
                MatchedPair m{A, B, {}, {}, {}, {}};
                for (std::size_t i = 0; i < A.dim(); ++i) {
                    m.lA.push_back(Mat(F, {B.dim(), B.dim()}));
                    m.rA.push_back(Mat(F, {B.dim(), B.dim()}));
                }
                for (std::size_t i = 0; i < B.dim(); ++i) {
                    m.lB.push_back(Mat(F, {A.dim(), A.dim()}));
                    m.rB.push_back(Mat(F, {A.dim(), A.dim()}));
                }
                doc.matched_pairs.push_back({w[1], w[2], w[3], std::move(m)});
                break;
            }
            case Kind::none: break;
        }
    }

    void basis_line(const std::vector<std::string>& w) {
        once("basis", 1);
        std::vector<std::string> b(w.begin() + 1, w.end());
        std::set<std::string> uniq(b.begin(), b.end());
        if (uniq.size() != b.size()) fail(ParseErrorKind::DuplicateEntry, 7, "repeated basis name");
        for (const auto& n : b)
            if (!name_start(n[0]) || !std::all_of(n.begin(), n.end(), name_char))
                fail(ParseErrorKind::Syntax, 7, "bad basis name " + n);
        const Field& F = doc.field;
        Basis basis(b);
        const std::size_t n = basis.size();
        switch (kind) {
            case Kind::algebra:
                if (doc.algebras.back().algebra.dim() != 0 || seen.size() > 1) fail(ParseErrorKind::Syntax, 1, "basis must come first");
                doc.algebras.back().algebra = Algebra::zero(basis, F);
                break;
            case Kind::prenovikov:
                doc.prenovikov.back().algebra = {basis, Ten3(F, {n, n, n}), Ten3(F, {n, n, n})};
                break;
            case Kind::representation: {
                auto& r = doc.representations.back().rep;
                r.module_basis = basis;
                r.l.assign(r.algebra.dim(), Mat(F, {n, n}));
                r.r.assign(r.algebra.dim(), Mat(F, {n, n}));
                break;
            }
            default: fail(ParseErrorKind::Syntax, 1, "basis outside a block that takes one");
        }
    }

    // "lhs = rhs": returns the right-hand side and its column offset.
    static std::pair<std::string, std::string> split_eq(const std::string& s, std::size_t& rhs_col) {
        const auto eq = s.find('=');
        if (eq == std::string::npos) return {s, ""};
        rhs_col = eq + 1;
        return {trim(s.substr(0, eq)), s.substr(eq + 1)};
    }

    const Basis& current_basis() const {
        switch (kind) {
            case Kind::algebra: return doc.algebras.back().algebra.basis();
            case Kind::prenovikov: return doc.prenovikov.back().algebra.basis;
            default: break;
        }
        fail(ParseErrorKind::Syntax, 1, "no basis in scope");
    }

    void statement(const std::string& raw) {
        const std::string s = trim(raw);
        const auto lead = raw.find_first_not_of(" \t");
        const std::size_t indent = lead == std::string::npos ? 0 : lead;
        const auto w = words(s);
        const std::string& head = w[0];
        const Field& F = doc.field;

        if (head == "field") {
            if (have_field) fail(ParseErrorKind::DuplicateEntry, indent + 1, "field declared twice");
            if (w.size() != 2) fail(ParseErrorKind::Syntax, indent + 1, "usage: field Q | field Fp");
            doc.field = parse_field(w[1], line);
            have_field = true;
            return;
        }
        if (head == "algebra") return new_block(Kind::algebra, w);
        if (head == "prenovikov") return new_block(Kind::prenovikov, w);
        if (head == "representation") return new_block(Kind::representation, w);
        if (head == "matchedpair") return new_block(Kind::matched_pair, w);
        if (kind == Kind::none) fail(ParseErrorKind::Syntax, indent + 1, "statement outside any block");
        if (head == "basis") return basis_line(w);

        std::size_t rc = 0;
        auto [lhs, rhs] = split_eq(s, rc);
        if (rc == 0) fail(ParseErrorKind::Syntax, indent + 1, "expected '='");
        const std::size_t rhs_col = indent + rc;
        once(lhs, indent + 1);

        if (kind == Kind::algebra) {
            auto& blk = doc.algebras.back();
            const Basis& b = blk.algebra.basis();
            if (b.size() == 0) fail(ParseErrorKind::Syntax, indent + 1, "basis must come first");
            const std::size_t n = b.size();
            if (lhs.rfind("delta ", 0) == 0) {
                const std::string g = trim(lhs.substr(6));
                const std::size_t gi = lookup(b, g, line, indent + 7);
                if (!blk.coalgebra) blk.coalgebra = Coalgebra::zero(b, F);
                Ten2 t(F, {n, n});
                accumulate<2>(t, ComboParser(rhs, line, rhs_col, 2, '.').parse(), {&b, &b}, F, line);
                for (std::size_t x = 0; x < n; ++x)
                    for (std::size_t y = 0; y < n; ++y) blk.coalgebra->d(gi, x, y) = t(x, y);
                return;
            }
            if (lhs.rfind("form ", 0) == 0) {
                const std::string pair = trim(lhs.substr(5));
                const auto comma = pair.find(',');
                if (comma == std::string::npos) fail(ParseErrorKind::Syntax, indent + 6, "usage: form x,y = c");
                const std::size_t i = lookup(b, trim(pair.substr(0, comma)), line, indent + 6);
                const std::size_t j = lookup(b, trim(pair.substr(comma + 1)), line, indent + 6);
                const std::string c = trim(rhs);
                mpq_class q;
                if (c.empty() || q.set_str(c[0] == '+' ? c.substr(1) : c, 10) != 0 || q.get_den() == 0)
                    fail(ParseErrorKind::Syntax, rhs_col + 1, "form value must be a number");
                q.canonicalize();
                if (!blk.form) blk.form = Mat(F, {n, n});
                (*blk.form)(i, j) = to_field(q, F, line, rhs_col + 1);
                return;
            }
            const auto star = lhs.find('*');
            if (star != std::string::npos) {
                const std::size_t i = lookup(b, trim(lhs.substr(0, star)), line, indent + 1);
                const std::size_t j = lookup(b, trim(lhs.substr(star + 1)), line, indent + star + 2);
                Vec v(F, {n});
                accumulate<1>(v, ComboParser(rhs, line, rhs_col, 1, ' ').parse(), {&b}, F, line);
                Ten3 c = blk.algebra.constants();
                for (std::size_t g = 0; g < n; ++g) c(i, j, g) = v(g);
                blk.algebra = Algebra(b, std::move(c));
                return;
            }
            if (!lhs.empty() && name_start(lhs[0]) && std::all_of(lhs.begin(), lhs.end(), name_char)) {
                Ten2 t(F, {n, n});
                accumulate<2>(t, ComboParser(rhs, line, rhs_col, 2, '^').parse(), {&b, &b}, F, line);
                blk.tensors[lhs] = std::move(t);
                return;
            }
            fail(ParseErrorKind::Syntax, indent + 1, "unrecognized algebra entry");
        }

        if (kind == Kind::prenovikov) {
            auto& p = doc.prenovikov.back().algebra;
            const Basis& b = p.basis;
            if (b.size() == 0) fail(ParseErrorKind::Syntax, indent + 1, "basis must come first");
            const auto op = lhs.find_first_of("<>");
            if (op == std::string::npos) fail(ParseErrorKind::Syntax, indent + 1, "expected x<y or x>y");
            const std::size_t i = lookup(b, trim(lhs.substr(0, op)), line, indent + 1);
            const std::size_t j = lookup(b, trim(lhs.substr(op + 1)), line, indent + op + 2);
            Vec v(F, {b.size()});
            accumulate<1>(v, ComboParser(rhs, line, rhs_col, 1, ' ').parse(), {&b}, F, line);
            Ten3& t = lhs[op] == '<' ? p.left : p.right;
            for (std::size_t g = 0; g < b.size(); ++g) t(i, j, g) = v(g);
            return;
        }

        // "l(a) v" style entries for representations and matched pairs.
        const auto open = lhs.find('('), close = lhs.find(')');
        if (open == std::string::npos || close == std::string::npos || close < open)
            fail(ParseErrorKind::Syntax, indent + 1, "expected op(x) y = ...");
        const std::string op = trim(lhs.substr(0, open));
        const std::string actor = trim(lhs.substr(open + 1, close - open - 1));
        const std::string target = trim(lhs.substr(close + 1));

        if (kind == Kind::representation) {
            auto& r = doc.representations.back().rep;
            if (r.module_basis.size() == 0) fail(ParseErrorKind::Syntax, indent + 1, "basis must come first");
            if (op != "l" && op != "r") fail(ParseErrorKind::Syntax, indent + 1, "representation entries use l(..) or r(..)");
            const std::size_t a = lookup(r.algebra.basis(), actor, line, indent + open + 2);
            const std::size_t v = lookup(r.module_basis, target, line, indent + close + 2);
            Vec x(F, {r.module_dim()});
            accumulate<1>(x, ComboParser(rhs, line, rhs_col, 1, ' ').parse(), {&r.module_basis}, F, line);
            Mat& m = op == "l" ? r.l[a] : r.r[a];
            for (std::size_t g = 0; g < r.module_dim(); ++g) m(g, v) = x(g);
            return;
        }

        auto& mp = doc.matched_pairs.back().pair;
        const Basis &ba = mp.A.basis(), &bb = mp.B.basis();
        std::vector<Mat>* target_maps = nullptr;
        const Basis *actor_b = nullptr, *space_b = nullptr;
        if (op == "lA" || op == "rA") {
            target_maps = op == "lA" ? &mp.lA : &mp.rA;
            actor_b = &ba;
            space_b = &bb;
        } else if (op == "lB" || op == "rB") {
            target_maps = op == "lB" ? &mp.lB : &mp.rB;
            actor_b = &bb;
            space_b = &ba;
        } else {
            fail(ParseErrorKind::Syntax, indent + 1, "matched pair entries use lA, rA, lB, rB");
        }
        const std::size_t a = lookup(*actor_b, actor, line, indent + open + 2);
        const std::size_t v = lookup(*space_b, target, line, indent + close + 2);
        Vec x(F, {space_b->size()});
        accumulate<1>(x, ComboParser(rhs, line, rhs_col, 1, ' ').parse(), {space_b}, F, line);
        for (std::size_t g = 0; g < space_b->size(); ++g) (*target_maps)[a](g, v) = x(g);
    }
};

std::string format_scalar_coef(const Scalar& s, bool first, bool& negative) {
    std::string t = s.to_string();
    negative = !t.empty() && t[0] == '-';
    if (negative) t = t.substr(1);
    (void)first;
    return t;
}

std::string format_terms(const std::vector<std::pair<Scalar, std::string>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [c, name] : terms) {
        bool neg = false;
        const std::string mag = format_scalar_coef(c, first, neg);
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (mag != "1") out += mag + " ";
        out += name;
        first = false;
    }
    return out;
}

}  // namespace

const AlgebraBlock& Document::algebra(const std::string& name) const { return find_block(algebras, name, "algebra"); }
const PreNovikovBlock& Document::pre_novikov(const std::string& name) const {
    return find_block(prenovikov, name, "prenovikov block");
}
const RepresentationBlock& Document::representation(const std::string& name) const {
    return find_block(representations, name, "representation");
}
const MatchedPairBlock& Document::matched_pair(const std::string& name) const {
    return find_block(matched_pairs, name, "matched pair");
}

Document parse_document(const std::string& text) {
    Parser p;
    std::istringstream is(text);
    std::string raw;
    while (std::getline(is, raw)) {
        ++p.line;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        if (trim(raw).empty()) continue;
        p.statement(raw);
    }
    if (!p.have_field) throw ParseError(ParseErrorKind::Syntax, p.line + 1, 1, "missing 'field' statement");
    for (const auto& a : p.doc.algebras)
        if (a.algebra.dim() == 0) throw ParseError(ParseErrorKind::Syntax, p.line, 1, "algebra " + a.name + " has no basis");
    return std::move(p.doc);
}

Document parse_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

Vec parse_vector(const std::string& text, const Basis& b, const Field& f) {
    Vec v(f, {b.size()});
    accumulate<1>(v, ComboParser(text, 1, 0, 1, ' ').parse(), {&b}, f, 1);
    return v;
}

Ten2 parse_tensor2(const std::string& text, const Basis& left, const Basis& right, const Field& f) {
    Ten2 t(f, {left.size(), right.size()});
    accumulate<2>(t, ComboParser(text, 1, 0, 2, '^').parse(), {&left, &right}, f, 1);
    return t;
}

std::string format_vector(const Vec& v, const Basis& b) {
    std::vector<std::pair<Scalar, std::string>> terms;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (!v(i).is_zero()) terms.emplace_back(v(i), b.name(i));
    return format_terms(terms);
}

std::string format_tensor2(const Ten2& t, const Basis& left, const Basis& right, const std::string& sep) {
    std::vector<std::pair<Scalar, std::string>> terms;
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < right.size(); ++j)
            if (!t(i, j).is_zero()) terms.emplace_back(t(i, j), left.name(i) + sep + right.name(j));
    return format_terms(terms);
}

std::string serialize(const Document& doc) {
    std::ostringstream os;
    os << "field " << doc.field.name() << "\n";
    auto basis_line = [&](const Basis& b) {
        os << "basis";
        for (const auto& n : b.names()) os << " " << n;
        os << "\n";
    };
    for (const auto& blk : doc.algebras) {
        const Basis& b = blk.algebra.basis();
        const std::size_t n = b.size();
        os << "\nalgebra " << blk.name << "\n";
        basis_line(b);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Vec v = blk.algebra.product(i, j);
                if (!v.is_zero()) os << b.name(i) << "*" << b.name(j) << " = " << format_vector(v, b) << "\n";
            }
        if (blk.coalgebra)
            for (std::size_t g = 0; g < n; ++g) {
                const Ten2 d = blk.coalgebra->delta(g);
                const bool all_zero = blk.coalgebra->d.is_zero();
                if (!d.is_zero() || (all_zero && g == 0))
                    os << "delta " << b.name(g) << " = " << format_tensor2(d, b, b, ".") << "\n";
            }
        if (blk.form) {
            bool any = false;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (!(*blk.form)(i, j).is_zero()) {
                        os << "form " << b.name(i) << "," << b.name(j) << " = " << (*blk.form)(i, j).to_string() << "\n";
                        any = true;
                    }
            if (!any) os << "form " << b.name(0) << "," << b.name(0) << " = 0\n";
        }
        for (const auto& [name, t] : blk.tensors) os << name << " = " << format_tensor2(t, b, b, "^") << "\n";
    }
    for (const auto& blk : doc.prenovikov) {
        const Basis& b = blk.algebra.basis;
        os << "\nprenovikov " << blk.name << "\n";
        basis_line(b);
        for (const auto* t : {&blk.algebra.left, &blk.algebra.right})
            for (std::size_t i = 0; i < b.size(); ++i)
                for (std::size_t j = 0; j < b.size(); ++j) {
                    Vec v(doc.field, {b.size()});
                    for (std::size_t g = 0; g < b.size(); ++g) v(g) = (*t)(i, j, g);
                    if (!v.is_zero())
                        os << b.name(i) << (t == &blk.algebra.left ? "<" : ">") << b.name(j) << " = "
                           << format_vector(v, b) << "\n";
                }
    }
    auto maps = [&](const std::string& op, const std::vector<Mat>& ms, const Basis& actor, const Basis& space) {
        for (std::size_t a = 0; a < ms.size(); ++a)
            for (std::size_t v = 0; v < space.size(); ++v) {
                Vec x(doc.field, {space.size()});
                for (std::size_t g = 0; g < space.size(); ++g) x(g) = ms[a](g, v);
                if (!x.is_zero())
                    os << op << "(" << actor.name(a) << ") " << space.name(v) << " = " << format_vector(x, space) << "\n";
            }
    };
    for (const auto& blk : doc.representations) {
        os << "\nrepresentation " << blk.name << " of " << blk.algebra << "\n";
        basis_line(blk.rep.module_basis);
        maps("l", blk.rep.l, blk.rep.algebra.basis(), blk.rep.module_basis);
        maps("r", blk.rep.r, blk.rep.algebra.basis(), blk.rep.module_basis);
    }
    for (const auto& blk : doc.matched_pairs) {
        os << "\nmatchedpair " << blk.name << " " << blk.a << " " << blk.b << "\n";
        const auto& m = blk.pair;
        maps("lA", m.lA, m.A.basis(), m.B.basis());
        maps("rA", m.rA, m.A.basis(), m.B.basis());
        maps("lB", m.lB, m.B.basis(), m.A.basis());
        maps("rB", m.rB, m.B.basis(), m.A.basis());
    }
    return os.str();
}

}  // namespace nvk::cli
