#pragma once

// Reference implementations for the tests. They share the scalar and tensor
// containers with the library but none of its checkers or banded machinery.

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "nvk/affine.hpp"
#include "nvk/bialgebra.hpp"
#include "nvk/representations.hpp"
#include "nvk/yangbaxter.hpp"

namespace oracle {

using nvk::Algebra;
using nvk::Coalgebra;
using nvk::Field;
using nvk::Scalar;
using nvk::Ten2;
using nvk::Ten3;
using nvk::Window;

// ---- naive axiom checks, straight index loops ----------------------------

bool novikov(const Ten3& c);
bool right_novikov(const Ten3& c);
bool lie(const Ten3& c);
bool comm_assoc(const Ten3& c);
bool zinbiel(const Ten3& c);

// coleft_symmetry/coright_commutativity literally, with (id (x) Delta), (Delta (x) id) and the flips written out.
bool novikov_coalgebra(const Ten3& d);
// The three product/coproduct compatibilities literally (plus both component axioms).
bool novikov_bialgebra(const Ten3& c, const Ten3& d);

// ---- naive finite-field enumeration with plain integers ----------------

enum class Cls { novikov, right_novikov, lie, comm_assoc, zinbiel };
// Candidate k assigns digit number q (base p, least significant first) to the
// q-th constant in row-major order, matching the tool's numbering.
std::vector<std::uint64_t> enumerate_class(std::size_t dim, unsigned p, Cls cls);

// ---- dense evaluation of the affinized structures ----------------------
// Elements of L (x) L and L (x) L (x) L are kept as explicit tables of
// components indexed by slot degrees, limited to [lo, hi] in every slot.

struct Span {
    std::int64_t lo, hi;
    bool has(std::int64_t d) const { return d >= lo && d <= hi; }
};

// Delta_B(t^j) read off the pairing: the coefficient of t^p (x) t^q is
// (t^j, t^p' <> t^q') where t^p', t^q' are the dual basis vectors of t^p, t^q.
Scalar laurent_coproduct_coefficient(std::int64_t j, std::int64_t p, std::int64_t q, const Field& f);

Window<2> delta(const Coalgebra& C, std::size_t a, std::int64_t k, Span s);
// ad_{e_a t^m} on one slot.
Window<2> ad(const Algebra& A, std::size_t a, std::int64_t m, std::size_t slot, const Window<2>& t);
Window<3> ad(const Algebra& A, std::size_t a, std::int64_t m, std::size_t slot, const Window<3>& t);
Window<2> twist(const Window<2>& t);
Window<3> permute(const Window<3>& t, std::array<std::size_t, 3> perm);
Window<3> extend(const Coalgebra& C, const Window<2>& t, std::size_t slot, Span s);

Window<2> add(Window<2> a, const Window<2>& b, const Scalar& s);
Window<3> add(Window<3> a, const Window<3>& b, const Scalar& s);

// sum_i r t^i (x) t^(-i-1)
Window<2> affine_r(const Ten2& r, Span s);
// [r12,r13] + [r12,r23] + [r13,r23] for r_L, computed term by term.
Window<3> cybe(const Algebra& A, const Ten2& r, Span s);

// delta([x,y]) - x.delta(y) + y.delta(x) for x = e_a t^j, y = e_b t^k
Window<2> cocycle(const Algebra& A, const Coalgebra& C, std::size_t a, std::int64_t j, std::size_t b, std::int64_t k,
                  Span s);
// (1 - (12))(1 (x) delta)delta(x) - (delta (x) 1)delta(x)
Window<3> cojacobi(const Coalgebra& C, std::size_t a, std::int64_t k, Span s);
// (ad_x (x) 1 + 1 (x) ad_x) r_L
Window<2> coboundary(const Algebra& A, const Ten2& r, std::size_t a, std::int64_t m, Span s);

// ---- random samples ---------------------------------------------------

using Rng = std::mt19937_64;

nvk::Mat random_invertible(const Field& f, std::size_t n, Rng& rng);
Ten3 random_tensor(const Field& f, std::size_t n, Rng& rng);
// a.D(b) on a truncated polynomial algebra with a random derivation, moved by a
// random basis change. Always Novikov.
Algebra random_novikov(const Field& f, std::size_t n, Rng& rng);
// Random constants that fail the Novikov identities.
Algebra random_non_novikov(const Field& f, std::size_t n, Rng& rng);
// Coalgebra pushed along phi: Delta' = (phi (x) phi) Delta phi^-1.
Coalgebra transport_coalgebra(const Coalgebra& c, const nvk::Mat& phi);


// The 2-dim algebra e1e1 = e1, e1e2 = -e2, e2e1 = e2 with Delta(e1) = lambda e2 (x) e2.
Algebra corrected_example(const Field& f);
Coalgebra corrected_coproduct(const Field& f, const Scalar& lambda);

struct BialgebraSample {
    Algebra A;
    Coalgebra C;
    int kind;
};
// kind (sample % 6): zero coproduct, moved corrected example, dual of a Novikov
// algebra, random coproduct, coboundary of a random skew r, perturbed example.
BialgebraSample bialgebra_sample(const Field& f, std::size_t n, Rng& rng, int kind);

struct FormSample {
    Algebra A;
    nvk::BilinearForm omega;
    int kind;
};
// kind (sample % 3): canonical pre-Novikov solution moved by a basis change,
// zero algebra with a random form, random Novikov algebra with a random form.
FormSample form_sample(const Field& f, Rng& rng, int kind);

}  // namespace oracle
