#include "doctest.h"

#include <random>

#include "eqlab/error.hpp"
#include "eqlab/factor.hpp"
#include "eqlab/resultant.hpp"
#include "eqlab/text_io.hpp"

using namespace eqlab;
using namespace eqlab::algebra;

namespace {

const Field Q = Field::rationals();

Polynomial P(const std::string& s, const VarNames& v = {"x", "y"}, const Field& k = Q) {
    return parse_polynomial(s, v, k);
}

Polynomial random_poly(std::mt19937_64& rng, std::size_t nvars, unsigned maxdeg, int terms) {
    std::uniform_int_distribution<int> coef(-5, 5);
    std::uniform_int_distribution<unsigned> ex(0, maxdeg);
    std::vector<Term> ts;
    for (int i = 0; i < terms; ++i) {
        Exponents e(nvars, 0);
        unsigned budget = ex(rng);
        for (std::size_t v = 0; v < nvars && budget > 0; ++v) {
            std::uniform_int_distribution<unsigned> take(0, budget);
            e[v] = take(rng);
            budget -= e[v];
        }
        ts.push_back({e, Q.from_int(coef(rng))});
    }
    return Polynomial::from_terms(Q, nvars, ts);
}

// Sylvester matrix determinant of two univariate polynomials.
Scalar sylvester_resultant(const UPoly& f, const UPoly& g) {
    const std::size_t m = static_cast<std::size_t>(f.degree()), n = static_cast<std::size_t>(g.degree());
    Matrix s(Q, m + n, m + n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i <= m; ++i) s.at(r, r + i) = f.coeff(m - i);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i <= n; ++i) s.at(n + r, r + i) = g.coeff(n - i);
    return s.determinant();
}

} // namespace

TEST_CASE("arithmetic identities") {
    CHECK(P("(x+y)*(x-y)") == P("x^2 - y^2"));
    Polynomial zero = P("(x+y)") * P("0");
    CHECK(zero.is_zero());
    CHECK(zero.terms().empty());
    Polynomial cube = P("(x^2 - y^3)^3");
    CHECK(cube.coefficient({4, 3}) == Q.from_int(-3));
    CHECK(cube.coefficient({2, 6}) == Q.from_int(3));
    CHECK(cube.degree() == 9);
}

TEST_CASE("arity and field mismatches raise structured errors") {
    Polynomial a = P("x + y");
    Polynomial b = P("x", {"x"});
    try {
        (void)(a + b);
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ArityMismatch);
    }
    Polynomial c = P("x + y", {"x", "y"}, Field::prime(7));
    CHECK_THROWS_AS((void)(a * c), Error);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        const std::size_t nv = 1 + i % 3;
        Polynomial a = random_poly(rng, nv, 4, 4), b = random_poly(rng, nv, 4, 4), c = random_poly(rng, nv, 4, 4);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("differentiation") {
    CHECK(differentiate(P("x^2 - y^5"), 0) == P("2*x"));
    CHECK(differentiate(P("x^2*y - y^4"), 1) == P("x^2 - 4*y^3"));
    CHECK(differentiate(P("17"), 0).is_zero());
}

TEST_CASE("linear change of coordinates") {
    const std::vector<long> swap = {0, 1, 1, 0};
    CHECK(linear_change(P("x^2 - y^2"), Matrix::from_ints(Q, 2, 2, swap)) == P("y^2 - x^2"));
    const std::vector<long> m = {1, 1, 1, -1};
    CHECK(linear_change(P("x*y"), Matrix::from_ints(Q, 2, 2, m)) == P("x^2 - y^2"));
    CHECK(linear_change(P("x^3 + 2*x*y"), Matrix::identity(Q, 2)) == P("x^3 + 2*x*y"));
    const std::vector<long> sing = {1, 2, 2, 4};
    CHECK_THROWS_AS(linear_change(P("x"), Matrix::from_ints(Q, 2, 2, sing)), Error);

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> e(-3, 3);
    for (int i = 0; i < 20; ++i) {
        std::vector<long> ent(9);
        for (auto& v : ent) v = e(rng);
        Matrix M = Matrix::from_ints(Q, 3, 3, ent);
        if (M.determinant().is_zero()) continue;
        Polynomial f = random_poly(rng, 3, 4, 5);
        CHECK(linear_change(linear_change(f, M), M.inverse()) == f);
    }
}

TEST_CASE("homogenize and dehomogenize") {
    const VarNames xyz = {"x", "y", "z"};
    Polynomial h = homogenize(P("y^2 - x^3"), 2, 3);
    CHECK(h == P("y^2*z - x^3", xyz));
    CHECK(dehomogenize(h, 2, Q.one()) == P("y^2 - x^3"));
    Polynomial h5 = homogenize(P("y^2 - x^3"), 2, 5);
    CHECK(h5 == P("z^2", xyz) * P("y^2*z - x^3", xyz));
    CHECK(h5.is_homogeneous());
    CHECK_THROWS_AS(homogenize(P("y^2 - x^3"), 2, 2), Error);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 30; ++i) {
        Polynomial f = random_poly(rng, 2, 5, 5);
        if (f.is_zero()) continue;
        const unsigned d = static_cast<unsigned>(f.degree()) + static_cast<unsigned>(i % 3);
        Polynomial g = homogenize(f, 2, d);
        for (const auto& t : g.terms()) CHECK(total_degree(t.exps) == d);
        CHECK(dehomogenize(g, 2, Q.one()) == f);
    }
}

TEST_CASE("resultant") {
    const VarNames xy = {"x", "y"};
    CHECK(resultant(P("x^2 - y"), P("x - y"), 0) == P("y^2 - y"));
    CHECK(resultant(P("x^3 + x*y + 1"), P("x^3 + x*y + 1"), 0).is_zero());
    const VarNames xab = {"x", "a", "b"};
    Polynomial r = resultant(P("x - a", xab), P("x - b", xab), 0);
    CHECK((r == P("a - b", xab) || r == P("b - a", xab)));
    CHECK_THROWS_AS(resultant(P("0"), P("0"), 0), Error);
    CHECK(resultant(P("3"), P("x^2 + y"), 0) == P("9"));

    // Sylvester determinant oracle on univariate specialisations.
    std::mt19937_64 rng(5);
    for (int i = 0; i < 25; ++i) {
        Polynomial f = random_poly(rng, 2, 5, 5), g = random_poly(rng, 2, 4, 4);
        if (f.degree_in(0) < 1 || g.degree_in(0) < 1) continue;
        Polynomial res = resultant(f, g, 0);
        for (long y0 : {-2L, 1L, 3L}) {
            Polynomial fs = f.evaluate_var(1, Q.from_int(y0)), gs = g.evaluate_var(1, Q.from_int(y0));
            UPoly uf = UPoly::from_polynomial(fs, 0), ug = UPoly::from_polynomial(gs, 0);
            if (uf.degree() != f.degree_in(0) || ug.degree() != g.degree_in(0)) continue;
            const Scalar expect = sylvester_resultant(uf, ug);
            const Scalar got = res.evaluate_var(1, Q.from_int(y0)).constant_term();
            CHECK(got == expect);
        }
    }
}

TEST_CASE("resultant is multiplicative") {
    std::mt19937_64 rng(9);
    const VarNames xy = {"x", "y"};
    for (int i = 0; i < 20; ++i) {
        Polynomial f = random_poly(rng, 2, 3, 3) + P("x^2", xy), g = random_poly(rng, 2, 3, 3) + P("x", xy);
        Polynomial h = random_poly(rng, 2, 3, 4) + P("x^3", xy);
        CHECK(resultant(f * g, h, 0) == resultant(f, h, 0) * resultant(g, h, 0));
    }
}

TEST_CASE("gcd and square-free part") {
    const VarNames x = {"x"};
    CHECK(squarefree_part(P("(x+1)^2*(x-2)", x)) == P("(x+1)*(x-2)", x));
    CHECK(squarefree_part(P("x^3", x)) == P("x", x));
    const VarNames zw = {"z", "w"};
    CHECK(squarefree_part(P("z^4 + w^4", zw)) == P("z^4 + w^4", zw));
    CHECK_THROWS_AS(squarefree_part(P("0")), Error);
    CHECK(gcd(P("x^2 - y^2"), P("x^2 + 2*x*y + y^2")) == P("x + y"));
    CHECK(gcd(P("x^3*y - x*y^3"), P("x^2*y^2 - y^4")) == P("x^2*y - y^3"));

    std::mt19937_64 rng(13);
    for (int i = 0; i < 15; ++i) {
        Polynomial f = random_poly(rng, 2, 3, 3);
        if (f.is_constant()) continue;
        const Polynomial s = squarefree_part(f);
        CHECK(squarefree_part(f.pow(3)) == s);
        CHECK(try_divide(f, s).has_value());
    }
}

TEST_CASE("univariate factorisation over Q") {
    const VarNames x = {"x"};
    UPoly f = UPoly::from_polynomial(P("(x^2 + 1)*(x - 3)^2*(x^4 - 2)*6", x), 0);
    UFactorization fac = factor(f);
    CHECK(fac.unit == Q.from_int(6));
    REQUIRE(fac.factors.size() == 3);
    UPoly prod = UPoly(Q, {fac.unit});
    for (const auto& fc : fac.factors)
        for (unsigned i = 0; i < fc.multiplicity; ++i) prod = prod * fc.poly;
    CHECK(prod == f);
    CHECK(fac.factors[0].poly == UPoly::from_ints(Q, {-3, 1}));
    CHECK(fac.factors[0].multiplicity == 2);

    // Swinnerton-Dyer style polynomial: irreducible but splits modulo every prime.
    UPoly sd = UPoly::from_polynomial(P("x^4 - 10*x^2 + 1", x), 0);
    CHECK(factor(sd).factors.size() == 1);
    UPoly split = UPoly::from_polynomial(P("(x^2 - 2)*(x^2 - 3)*(x^3 - x - 1)", x), 0);
    CHECK(factor(split).factors.size() == 3);
}

TEST_CASE("factorisation over an extension and a prime field") {
    const Field K = Field::extension({1, -1, 1}, "t"); // t^2 - t + 1
    const VarNames z = {"z"};
    UPoly f = UPoly::from_polynomial(P("z^2 - z + 1", z, K), 0);
    UFactorization fac = factor(f);
    CHECK(fac.factors.size() == 2);
    CHECK(roots(f).size() == 2);

    const Field F5 = Field::prime(5);
    UPoly g = UPoly::from_polynomial(P("z^4 + 1", z, F5), 0);
    UFactorization gf = factor(g);
    UPoly prod = UPoly(F5, {gf.unit});
    for (const auto& fc : gf.factors)
        for (unsigned i = 0; i < fc.multiplicity; ++i) prod = prod * fc.poly;
    CHECK(prod == g);
    CHECK(gf.factors.size() == 2);
}

TEST_CASE("irreducibility test") {
    const VarNames xyz = {"x", "y", "z"};
    CHECK(irreducibility_test(P("x*y")) == Irreducibility::Reducible);
    CHECK(irreducibility_test(P("y^2*z - x^3", xyz)) == Irreducibility::Irreducible);
    CHECK(irreducibility_test(P("(x+y)^2")) == Irreducibility::Reducible);
    CHECK(irreducibility_test(P("x^2 + y^2 - 1")) == Irreducibility::Irreducible);
    CHECK(irreducibility_test(P("x^3 + y^3 + z^3", xyz)) == Irreducibility::Irreducible);
    // 2 is not a cube modulo 7, while every residue is a cube modulo 5.
    CHECK(irreducible_mod_p(UPoly::from_polynomial(P("x^3 - 2", {"x"}), 0), 7));
    CHECK_FALSE(irreducible_mod_p(UPoly::from_polynomial(P("x^3 - 2", {"x"}), 0), 5));
    const VarNames xyzw = {"x", "y", "z", "w"};
    try {
        irreducibility_test(P("x + y + z + w", xyzw));
        FAIL("expected unsupported");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Unsupported);
    }
}

TEST_CASE("text round trip") {
    const VarNames xyz = {"x", "y", "z"};
    Polynomial f = P("3/2*x^2*y - z^3 + 7", xyz);
    CHECK(format_polynomial(f, xyz) == "3/2*x^2*y - z^3 + 7");
    CHECK(P(format_polynomial(f, xyz), xyz) == f);
    nlohmann::json j = to_json(f, xyz);
    CHECK(j["terms"][0][1] == "3/2");
    NamedPolynomial back = from_json(j);
    CHECK(back.poly == f);
    CHECK(back.vars == xyz);

    const Field K = Field::parse("q[t]/(t^2 + 1)");
    CHECK(K.degree() == 2);
    Polynomial g = P("t*x^2 + (1 + t)*y", {"x", "y"}, K);
    CHECK(P(format_polynomial(g, {"x", "y"}), {"x", "y"}, K) == g);
    NamedPolynomial gj = from_json(to_json(g, {"x", "y"}));
    CHECK(gj.poly == g);

    NamedPolynomial doc = parse_document("# a cusp\nvars: x, y\ny^2 -\n x^3\n");
    CHECK(doc.poly == P("y^2 - x^3"));
    NamedPolynomial implicit = parse_document("y^2 - x^3");
    CHECK(implicit.vars == VarNames{"x", "y"});
    CHECK_THROWS_AS(parse_polynomial("x + q", {"x"}, Q), Error);
    CHECK_THROWS_AS(parse_polynomial("x / y", {"x", "y"}, Q), Error);
}
