#pragma once

#include <array>

#include "nvk/affine.hpp"
#include "nvk/bialgebra.hpp"
#include "nvk/representations.hpp"
#include "nvk/yangbaxter.hpp"

namespace nvk {

// A with its product, B with its product; lA, rA act on B (indexed by A's
// basis) and lB, rB act on A (indexed by B's basis).
struct MatchedPair {
    Algebra A, B;
    std::vector<Mat> lA, rA, lB, rB;
};

// The eight compatibility equations, without validating the representations.
Report matched_pair_residuals(const MatchedPair& m);
// Validates both representations (InvalidRepresentation) then scans the equations.
Report check_matched_pair(const MatchedPair& m);
Algebra matched_pair_to_algebra(const MatchedPair& m);
Algebra matched_pair_to_algebra_unchecked(const MatchedPair& m);

// The pair (A, A*, L*^*, -R^*, L'*^*, -R'^*) built from a product and a coproduct.
MatchedPair coadjoint_matched_pair(const Algebra& a, const Algebra& astar);

struct ManinTripleNovikov {
    Algebra A;
    Algebra Astar;
    Algebra double_algebra;  // basis A then A*
    BilinearForm form;       // <f,b> + <g,a>
};

ManinTripleNovikov assemble_double(const Algebra& a, const Coalgebra& c);
Report check_manin_triple_novikov(const ManinTripleNovikov& t);

struct ManinTripleLie {
    Algebra g;
    std::vector<std::size_t> sub1, sub2;
    BilinearForm form;
};

Report check_manin_triple_lie(const ManinTripleLie& t);

// f <>' g = phi(phi^-1 f <> phi^-1 g) with phi(a) = (a, .).
Algebra transport_right_novikov(const Algebra& b, const BilinearForm& form);

// ((A + A*) (x) B, A (x) B, A* (x) B) with the tensor form.
ManinTripleLie lie_manin_triple(const ManinTripleNovikov& t, const Algebra& b, const BilinearForm& form);

// Drinfeld double L + L* of a Lie algebra with a cobracket, with the
// standard pairing; L* carries the bracket dual to delta.
ManinTripleLie lie_double(const Algebra& l, const Coalgebra& delta);

// Cobracket on the first subalgebra read off a Lie Manin triple through its form.
Coalgebra cobracket_from_manin(const ManinTripleLie& t);

struct EquivalenceVerdicts {
    bool manin = false, matched_pair = false, bialgebra = false;
    bool consistent() const { return manin == matched_pair && matched_pair == bialgebra; }
};
EquivalenceVerdicts equivalence_verdicts(const Algebra& a, const Coalgebra& c);
// Passes iff the three verdicts coincide.
Report equivalence_suite(const Algebra& a, const Coalgebra& c);

}  // namespace nvk
