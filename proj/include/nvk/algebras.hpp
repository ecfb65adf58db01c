#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "nvk/core/form.hpp"
#include "nvk/core/report.hpp"
#include "nvk/core/tensor.hpp"

namespace nvk {

enum class AlgebraClass { novikov, right_novikov, lie, comm_assoc, zinbiel };

const char* class_name(AlgebraClass c);

// A binary product e_a * e_b = sum_g c[a][b][g] e_g.
class Algebra {
public:
    Algebra() = default;
    Algebra(Basis basis, Ten3 c);
    // Zero product on the given basis.
    static Algebra zero(const Basis& basis, const Field& f);

    const Basis& basis() const noexcept { return basis_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const Field& field() const noexcept { return c_.field(); }
    const Ten3& constants() const noexcept { return c_; }

    Vec unit(std::size_t i) const { return unit_vec(field(), dim(), i); }
    Vec product(std::size_t a, std::size_t b) const;
    Vec product(const Vec& x, const Vec& y) const;

    // Advisory only; checkers never consult these.
    std::set<AlgebraClass> claims;

    friend bool operator==(const Algebra& x, const Algebra& y) {
        return x.basis_ == y.basis_ && x.c_ == y.c_;
    }

private:
    Basis basis_;
    Ten3 c_;
};

// Two products on one space: left is the triangle-left product, right the triangle-right one.
struct PreNovikovAlgebra {
    Basis basis;
    Ten3 left;
    Ten3 right;

    std::size_t dim() const { return basis.size(); }
    const Field& field() const { return left.field(); }
    Algebra left_algebra() const { return Algebra(basis, left); }
    Algebra right_algebra() const { return Algebra(basis, right); }
};

// D(e_b) = sum_a D[a][b] e_a.
struct DerivationData {
    Algebra algebra;
    Mat D;
};

Report check_novikov(const Algebra& a);
Report check_right_novikov(const Algebra& a);
// Alternating [x,x] = 0, skewsymmetry and Jacobi.
Report check_lie(const Algebra& a);
Report check_comm_assoc(const Algebra& a);
Report check_zinbiel(const Algebra& a);
Report check_pre_novikov(const PreNovikovAlgebra& p);
Report check_l_dendriform(const PreNovikovAlgebra& p);
Report check_class(const Algebra& a, AlgebraClass c);
Report check_derivation(const DerivationData& d);

Algebra opposite(const Algebra& a);
Algebra gelfand_novikov(const DerivationData& d);
Algebra gelfand_right_novikov(const DerivationData& d);
PreNovikovAlgebra zinbiel_pre_novikov(const DerivationData& d);
Algebra associated_novikov(const PreNovikovAlgebra& p);
Algebra star_product(const Algebra& a);

struct MultiplicationOperators {
    std::vector<Mat> L, R, Lstar;  // one matrix per basis element, acting on columns
};
MultiplicationOperators multiplication_operators(const Algebra& a);

// Algebras spanned by monomials x^lo .. x^hi with x^i * x^j = coef(i,j) x^(i+j).
// With truncate, exponents above hi vanish (a quotient); otherwise a product
// leaving the window throws NotClosed.
enum class Overflow { truncate, reject };
Algebra monomial_algebra(int lo, int hi, const Field& f,
                         const std::function<Scalar(int, int)>& coef, Overflow mode,
                         const std::string& var = "x");

// Structure transported along an invertible linear map phi (columns are images):
// x *' y = phi(phi^-1 x * phi^-1 y). Used for basis changes and the B -> B* transport.
Algebra transport(const Algebra& a, const Mat& phi, const Basis& target);

// Throws the given error kind when the report fails.
void require(const Report& r, ErrorKind kind, const std::string& what);

}  // namespace nvk
