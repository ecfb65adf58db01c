#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "nvk/core/scalar.hpp"

namespace nvk {

class Basis {
public:
    Basis() = default;
    explicit Basis(std::vector<std::string> names);
    // e1 .. en
    static Basis numbered(std::size_t n, const std::string& prefix = "e");

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    bool contains(const std::string& name) const { return index_.count(name) != 0; }
    std::size_t index(const std::string& name) const;

    // Concatenation (used for A + V, A + A*).
    Basis operator+(const Basis& other) const;
    // Appends a suffix to each name, e.g. "*" for the dual basis.
    Basis decorated(const std::string& suffix) const;

    friend bool operator==(const Basis& a, const Basis& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

// Dense rank-R array of Scalars. All entries belong to one field.
template <std::size_t R>
class Tensor {
public:
    using Shape = std::array<std::size_t, R>;

    Tensor() { shape_.fill(0); }
    Tensor(const Field& f, Shape shape) : field_(f), shape_(shape) {
        std::size_t n = 1;
        for (auto s : shape_) n *= s;
        data_.assign(n, f.zero());
    }

    const Field& field() const noexcept { return field_; }
    const Shape& shape() const noexcept { return shape_; }
    std::size_t extent(std::size_t k) const { return shape_.at(k); }
    std::size_t size() const noexcept { return data_.size(); }

    template <typename... I>
    Scalar& operator()(I... idx) { return data_[offset({static_cast<std::size_t>(idx)...})]; }
    template <typename... I>
    const Scalar& operator()(I... idx) const { return data_[offset({static_cast<std::size_t>(idx)...})]; }

    Scalar& at_flat(std::size_t k) { return data_[k]; }
    const Scalar& at_flat(std::size_t k) const { return data_[k]; }
    const std::vector<Scalar>& data() const noexcept { return data_; }

    bool is_zero() const {
        for (const auto& s : data_)
            if (!s.is_zero()) return false;
        return true;
    }

    Tensor& operator+=(const Tensor& o) {
        require_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Tensor& operator-=(const Tensor& o) {
        require_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    Tensor& operator*=(const Scalar& s) {
        if (s.is_zero()) {
            for (auto& x : data_) x = field_.zero();
        } else if (!s.is_one()) {
            for (auto& x : data_)
                if (!x.is_zero()) x *= s;
        }
        return *this;
    }
    // axpy: this += s * o
    void add_scaled(const Scalar& s, const Tensor& o) {
        require_shape(o);
        if (s.is_zero()) return;
        for (std::size_t k = 0; k < data_.size(); ++k)
            if (!o.data_[k].is_zero()) data_[k] += s * o.data_[k];
    }

    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend Tensor operator*(const Scalar& s, Tensor a) { return a *= s; }
    Tensor operator-() const {
        Tensor t = *this;
        for (auto& x : t.data_) x = -x;
        return t;
    }
    friend bool operator==(const Tensor& a, const Tensor& b) {
        if (a.shape_ != b.shape_) return false;
        for (std::size_t k = 0; k < a.data_.size(); ++k)
            if (a.data_[k] != b.data_[k]) return false;
        return true;
    }
    friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }

    void require_shape(const Tensor& o) const {
        if (o.shape_ != shape_) throw Error(ErrorKind::ShapeMismatch, "tensor shapes differ");
        if (o.field_ != field_) throw Error(ErrorKind::FieldMismatch, "tensor fields differ");
    }

private:
    std::size_t offset(std::array<std::size_t, R> idx) const {
        std::size_t o = 0;
        for (std::size_t k = 0; k < R; ++k) o = o * shape_[k] + idx[k];
        return o;
    }

    Field field_;
    Shape shape_;
    std::vector<Scalar> data_;
};

using Vec = Tensor<1>;
using Mat = Tensor<2>;
using Ten2 = Tensor<2>;
using Ten3 = Tensor<3>;

Vec zero_vec(const Field& f, std::size_t n);
Vec unit_vec(const Field& f, std::size_t n, std::size_t i);
Mat zero_mat(const Field& f, std::size_t rows, std::size_t cols);
Mat identity_mat(const Field& f, std::size_t n);

// Contract `slot` of t against v: the output drops that slot.
Vec tensor_contract(const Ten2& t, std::size_t slot, const Vec& v);
Ten2 tensor_contract(const Ten3& t, std::size_t slot, const Vec& v);

// Slice t[i][.][.] of a rank-3 tensor.
Mat slice0(const Ten3& t, std::size_t i);

Mat transpose(const Mat& m);
Mat matmul(const Mat& a, const Mat& b);
Vec matvec(const Mat& a, const Vec& v);
// Linear combination sum_i x_i * ms[i].
Mat combine(const std::vector<Mat>& ms, const Vec& x);

// (X (x) Y) applied to an element t of U (x) W, i.e. X t Y^T.
Ten2 apply_pair(const Mat& x, const Mat& y, const Ten2& t);
// (X (x) Y (x) Z) applied to a rank-3 tensor; any of the maps may be the identity.
Ten3 apply_triple(const Mat& x, const Mat& y, const Mat& z, const Ten3& t);
Ten3 apply_slot(const Mat& x, std::size_t slot, const Ten3& t);

// Slot permutation: output slot k holds input slot perm[k].
Ten3 permute(const Ten3& t, std::array<std::size_t, 3> perm);

// Exact linear algebra by Gaussian elimination.
Scalar determinant(const Mat& m);
std::size_t rank(const Mat& m);
// Throws DegenerateForm if singular.
Mat inverse(const Mat& m);

std::string to_string(const Vec& v);

}  // namespace nvk
