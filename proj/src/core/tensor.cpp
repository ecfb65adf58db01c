#include "nvk/core/tensor.hpp"

#include <sstream>

namespace nvk {

Basis::Basis(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!index_.emplace(names_[i], i).second)
            throw Error(ErrorKind::InvalidArgument, "duplicate basis name '" + names_[i] + "'");
    }
}

Basis Basis::numbered(std::size_t n, const std::string& prefix) {
    std::vector<std::string> v;
    for (std::size_t i = 1; i <= n; ++i) v.push_back(prefix + std::to_string(i));
    return Basis(std::move(v));
}

std::size_t Basis::index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw Error(ErrorKind::InvalidArgument, "unknown basis name '" + name + "'");
    return it->second;
}

Basis Basis::operator+(const Basis& other) const {
    std::vector<std::string> v = names_;
    v.insert(v.end(), other.names_.begin(), other.names_.end());
    return Basis(std::move(v));
}

Basis Basis::decorated(const std::string& suffix) const {
    std::vector<std::string> v;
    for (const auto& n : names_) v.push_back(n + suffix);
    return Basis(std::move(v));
}

Vec zero_vec(const Field& f, std::size_t n) { return Vec(f, {n}); }

Vec unit_vec(const Field& f, std::size_t n, std::size_t i) {
    Vec v(f, {n});
    v(i) = f.one();
    return v;
}

Mat zero_mat(const Field& f, std::size_t rows, std::size_t cols) { return Mat(f, {rows, cols}); }

Mat identity_mat(const Field& f, std::size_t n) {
    Mat m(f, {n, n});
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
}

Vec tensor_contract(const Ten2& t, std::size_t slot, const Vec& v) {
    if (slot > 1 || t.extent(slot) != v.extent(0)) throw Error(ErrorKind::ShapeMismatch, "bad contraction");
    const std::size_t keep = t.extent(1 - slot);
    Vec out(t.field(), {keep});
    for (std::size_t k = 0; k < v.extent(0); ++k) {
        if (v(k).is_zero()) continue;
        for (std::size_t j = 0; j < keep; ++j) {
            const Scalar& e = slot == 0 ? t(k, j) : t(j, k);
            if (!e.is_zero()) out(j) += e * v(k);
        }
    }
    return out;
}

Ten2 tensor_contract(const Ten3& t, std::size_t slot, const Vec& v) {
    if (slot > 2 || t.extent(slot) != v.extent(0)) throw Error(ErrorKind::ShapeMismatch, "bad contraction");
    std::array<std::size_t, 2> rest{};
    std::size_t r = 0;
    for (std::size_t s = 0; s < 3; ++s)
        if (s != slot) rest[r++] = s;
    Ten2 out(t.field(), {t.extent(rest[0]), t.extent(rest[1])});
    for (std::size_t k = 0; k < v.extent(0); ++k) {
        if (v(k).is_zero()) continue;
        for (std::size_t a = 0; a < out.extent(0); ++a)
            for (std::size_t b = 0; b < out.extent(1); ++b) {
                std::array<std::size_t, 3> idx{};
                idx[slot] = k;
                idx[rest[0]] = a;
                idx[rest[1]] = b;
                const Scalar& e = t(idx[0], idx[1], idx[2]);
                if (!e.is_zero()) out(a, b) += e * v(k);
            }
    }
    return out;
}

Mat slice0(const Ten3& t, std::size_t i) {
    Mat m(t.field(), {t.extent(1), t.extent(2)});
    for (std::size_t a = 0; a < t.extent(1); ++a)
        for (std::size_t b = 0; b < t.extent(2); ++b) m(a, b) = t(i, a, b);
    return m;
}

Mat transpose(const Mat& m) {
    Mat t(m.field(), {m.extent(1), m.extent(0)});
    for (std::size_t i = 0; i < m.extent(0); ++i)
        for (std::size_t j = 0; j < m.extent(1); ++j) t(j, i) = m(i, j);
    return t;
}

Mat matmul(const Mat& a, const Mat& b) {
    if (a.extent(1) != b.extent(0)) throw Error(ErrorKind::ShapeMismatch, "matmul shapes");
    Mat c(a.field(), {a.extent(0), b.extent(1)});
    for (std::size_t i = 0; i < a.extent(0); ++i)
        for (std::size_t k = 0; k < a.extent(1); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.extent(1); ++j)
                if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

Vec matvec(const Mat& a, const Vec& v) { return tensor_contract(a, 1, v); }

Mat combine(const std::vector<Mat>& ms, const Vec& x) {
    if (ms.size() != x.extent(0) || ms.empty()) throw Error(ErrorKind::ShapeMismatch, "combine shapes");
    Mat out(ms[0].field(), ms[0].shape());
    for (std::size_t i = 0; i < ms.size(); ++i) out.add_scaled(x(i), ms[i]);
    return out;
}

Ten2 apply_pair(const Mat& x, const Mat& y, const Ten2& t) { return matmul(matmul(x, t), transpose(y)); }

Ten3 apply_slot(const Mat& x, std::size_t slot, const Ten3& t) {
    if (x.extent(1) != t.extent(slot)) throw Error(ErrorKind::ShapeMismatch, "apply_slot shapes");
    auto shape = t.shape();
    shape[slot] = x.extent(0);
    Ten3 out(t.field(), shape);
    for (std::size_t i = 0; i < t.extent(0); ++i)
        for (std::size_t j = 0; j < t.extent(1); ++j)
            for (std::size_t k = 0; k < t.extent(2); ++k) {
                const Scalar& e = t(i, j, k);
                if (e.is_zero()) continue;
                std::array<std::size_t, 3> idx{i, j, k};
                const std::size_t src = idx[slot];
                for (std::size_t o = 0; o < x.extent(0); ++o) {
                    if (x(o, src).is_zero()) continue;
                    idx[slot] = o;
                    out(idx[0], idx[1], idx[2]) += x(o, src) * e;
                }
            }
    return out;
}

Ten3 apply_triple(const Mat& x, const Mat& y, const Mat& z, const Ten3& t) {
    return apply_slot(z, 2, apply_slot(y, 1, apply_slot(x, 0, t)));
}

Ten3 permute(const Ten3& t, std::array<std::size_t, 3> perm) {
    Ten3 out(t.field(), {t.extent(perm[0]), t.extent(perm[1]), t.extent(perm[2])});
    for (std::size_t i = 0; i < out.extent(0); ++i)
        for (std::size_t j = 0; j < out.extent(1); ++j)
            for (std::size_t k = 0; k < out.extent(2); ++k) {
                std::array<std::size_t, 3> src{};
                src[perm[0]] = i;
                src[perm[1]] = j;
                src[perm[2]] = k;
                out(i, j, k) = t(src[0], src[1], src[2]);
            }
    return out;
}

namespace {

// Row-reduces a copy of m; returns rank and the determinant (zero when singular).
std::pair<std::size_t, Scalar> eliminate(Mat m) {
    const std::size_t rows = m.extent(0), cols = m.extent(1);
    Scalar det = m.field().one();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m(piv, c).is_zero()) ++piv;
        if (piv == rows) {
            det = m.field().zero();
            continue;
        }
        if (piv != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
            det = -det;
        }
        det *= m(r, c);
        const Scalar inv = m(r, c).inverse();
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m(i, c).is_zero()) continue;
            const Scalar f = m(i, c) * inv;
            for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    if (r < rows || rows != cols) det = m.field().zero();
    return {r, det};
}

}  // namespace

Scalar determinant(const Mat& m) {
    if (m.extent(0) != m.extent(1)) throw Error(ErrorKind::ShapeMismatch, "determinant of non-square matrix");
    return eliminate(m).second;
}

std::size_t rank(const Mat& m) { return eliminate(m).first; }

Mat inverse(const Mat& m) {
    const std::size_t n = m.extent(0);
    if (n != m.extent(1)) throw Error(ErrorKind::ShapeMismatch, "inverse of non-square matrix");
    Mat a = m;
    Mat inv = identity_mat(m.field(), n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a(piv, c).is_zero()) ++piv;
        if (piv == n) throw Error(ErrorKind::DegenerateForm, "matrix is singular");
        if (piv != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(c, j));
                std::swap(inv(piv, j), inv(c, j));
            }
        const Scalar s = a(c, c).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) *= s;
            inv(c, j) *= s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c).is_zero()) continue;
            const Scalar f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

std::string to_string(const Vec& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.extent(0); ++i) os << (i ? ", " : "") << v(i);
    os << ')';
    return os.str();
}

}  // namespace nvk
