#include "doctest.h"
#include "nvk/representations.hpp"
#include "oracles.hpp"

using namespace nvk;

namespace {

Representation conjugated(const Representation& rho, const Mat& P) {
    Representation out = rho;
    const Mat Pi = inverse(P);
    for (auto& m : out.l) m = matmul(matmul(P, m), Pi);
    for (auto& m : out.r) m = matmul(matmul(P, m), Pi);
    return out;
}

Representation random_rep(const Algebra& a, std::size_t m, oracle::Rng& rng) {
    Representation rho{a, Basis::numbered(m, "v"), {}, {}};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Mat l(a.field(), {m, m}), r(a.field(), {m, m});
        for (std::size_t k = 0; k < l.size(); ++k) {
            l.at_flat(k) = a.field().from_int(static_cast<int>(rng() % 3) - 1);
            r.at_flat(k) = a.field().from_int(static_cast<int>(rng() % 3) - 1);
        }
        rho.l.push_back(l);
        rho.r.push_back(r);
    }
    return rho;
}

}  // namespace

TEST_CASE("a representation is exactly a Novikov semidirect product") {
    oracle::Rng rng(21);
    const Field F5 = Field::prime(5);
    int positives = 0, negatives = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 1 + trial % 2;
        const Algebra a = oracle::random_novikov(F5, n, rng);
        Representation rho;
        switch (trial % 4) {
            case 0: rho = adjoint_representation(a); break;
            case 1: rho = dual_representation(adjoint_representation(a)); break;
            case 2: rho = conjugated(adjoint_representation(a), oracle::random_invertible(F5, n, rng)); break;
            default: rho = random_rep(a, 1 + trial % 2, rng); break;
        }
        const bool is_rep = check_representation(rho).pass;
        CHECK(is_rep == oracle::novikov(semidirect_product_unchecked(rho).constants()));
        (is_rep ? positives : negatives)++;
    }
    CHECK(positives >= 100);
    CHECK(negatives >= 10);
}

TEST_CASE("adjoint and dual representations of Novikov algebras") {
    oracle::Rng rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        const Algebra a = oracle::random_novikov(Field::rationals(), 1 + trial % 3, rng);
        const Representation ad = adjoint_representation(a);
        CHECK(check_representation(ad).pass);
        const Representation du = dual_representation(ad);
        CHECK(check_representation(du).pass);
        CHECK(du.module_basis.name(0) == a.basis().name(0) + "*");
        const Algebra sd = semidirect_product(du);
        CHECK(sd.dim() == 2 * a.dim());
        CHECK(oracle::novikov(sd.constants()));
    }
}

TEST_CASE("dual_map is minus the transpose") {
    const Field Q = Field::rationals();
    Mat m(Q, {2, 2});
    m(0, 1) = Q.from_int(3);
    m(1, 0) = Q.from_int(-2);
    m(1, 1) = Q.one();
    const Mat d = dual_map(m);
    CHECK(d(1, 0) == Q.from_int(-3));
    CHECK(d(0, 1) == Q.from_int(2));
    CHECK(d(1, 1) == Q.from_int(-1));
}

TEST_CASE("non-representations are rejected with kinds") {
    oracle::Rng rng(3);
    const Algebra a = oracle::random_novikov(Field::rationals(), 2, rng);
    Representation bad{a, Basis::numbered(1, "v"), {}, {}};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        bad.l.push_back(identity_mat(a.field(), 1));
        bad.r.push_back(identity_mat(a.field(), 1));
    }
    if (!check_representation(bad).pass) {
        try {
            (void)semidirect_product(bad);
            FAIL("expected NotRepresentation");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NotRepresentation);
        }
    }
    Representation shape = adjoint_representation(a);
    shape.l.pop_back();
    CHECK_THROWS_AS(check_representation(shape), Error);
}
