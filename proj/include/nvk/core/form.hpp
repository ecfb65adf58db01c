#pragma once

#include "nvk/core/tensor.hpp"

namespace nvk {

// form(e_a, e_b) = M[a][b]. Flags are computed once at construction.
class BilinearForm {
public:
    BilinearForm() = default;
    explicit BilinearForm(Mat m);

    const Mat& matrix() const noexcept { return m_; }
    std::size_t dim() const { return m_.extent(0); }
    const Field& field() const { return m_.field(); }

    bool symmetric() const noexcept { return symmetric_; }
    bool skewsymmetric() const noexcept { return skew_; }
    bool nondegenerate() const noexcept { return nondegenerate_; }

    Scalar operator()(std::size_t a, std::size_t b) const { return m_(a, b); }
    Scalar operator()(const Vec& x, const Vec& y) const;

private:
    Mat m_;
    bool symmetric_ = true, skew_ = true, nondegenerate_ = false;
};

}  // namespace nvk
