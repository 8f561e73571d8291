#include "doctest.h"

#include <random>

#include "eqlab/error.hpp"
#include "eqlab/geometry.hpp"
#include "eqlab/series.hpp"
#include "eqlab/text_io.hpp"

using namespace eqlab;
using namespace eqlab::algebra;
using namespace eqlab::geometry;

namespace {

const Field Q = Field::rationals();
const VarNames XYZ = {"x", "y", "z"};
const VarNames XYZW = {"x", "y", "z", "w"};

Polynomial P3(const std::string& s) { return parse_polynomial(s, XYZ, Q); }
Polynomial P4(const std::string& s, const Field& k = Q) { return parse_polynomial(s, XYZW, k); }

} // namespace

TEST_CASE("implicit series solve") {
    const VarNames v = {"x", "y", "z"};
    std::vector<Scalar> origin(3, Q.zero());
    TruncatedSeries s = implicit_series_solve(parse_polynomial("z - x^2 - y^2", v, Q), origin, 2, 6);
    CHECK(s.poly() == parse_polynomial("x^2 + y^2", {"x", "y"}, Q));

    const Field K = Field::parse("q[i]/(i^2 + 1)");
    const Polynomial g = parse_polynomial("x^2 + y^2 + z^2 + 1", v, K);
    std::vector<Scalar> pt = {K.zero(), K.zero(), K.generator()};
    for (unsigned order : {1u, 2u, 4u, 7u}) {
        TruncatedSeries z = implicit_series_solve(g, pt, 2, order);
        CHECK(z.poly().constant_term() == K.generator());
        std::vector<TruncatedSeries> images = {
            TruncatedSeries(Polynomial::variable(K, 2, 0), order), TruncatedSeries(Polynomial::variable(K, 2, 1), order), z};
        CHECK(compose_truncated(g, images, order).poly().is_zero());
    }
    // z = i*sqrt(1 + x^2 + y^2) = i + (i/2)(x^2 + y^2) + ...
    TruncatedSeries z4 = implicit_series_solve(g, pt, 2, 4);
    CHECK(z4.poly().coefficient({2, 0}) == K.div(K.generator(), K.from_int(2)));
    CHECK_THROWS_AS(implicit_series_solve(parse_polynomial("z^2 - x", v, Q), origin, 2, 4), Error);

    TruncatedSeries a(parse_polynomial("1 + x + y^2", {"x", "y"}, Q), 6);
    CHECK((a * a.inverse()).poly() == Polynomial::constant(Q, 2, Q.one()));
}

TEST_CASE("cone equation") {
    PlaneCurve cusp(P3("y^2*z - x^3"));
    CHECK(cone_equation(cusp, ProjPoint::from_ints({0, 0, 0, 1})).equation == P4("y^2*z - x^3"));
    Polynomial f = cone_equation(cusp, ProjPoint::from_ints({0, 0, 1, 1})).equation;
    CHECK(f == P4("y^2*(z - w) - x^3"));
    PlaneCurve conic(P3("x*z - y^2"));
    CHECK(cone_equation(conic, ProjPoint::from_ints({0, 0, 0, 1})).equation == P4("x*z - y^2"));
    CHECK_THROWS_AS(cone_equation(cusp, ProjPoint::from_ints({1, 0, 0, 0})), Error);

    // Cone property: F vanishes along every line through the vertex and a
    // point of C. Points of the cusp: (s^2 : s^3 : 1).
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> u(-4, 4);
    for (int i = 0; i < 20; ++i) {
        ProjPoint p = ProjPoint::from_ints({u(rng), u(rng), u(rng), 1 + (u(rng) == 0 ? 1 : 0)});
        if (p[3].is_zero()) continue;
        Polynomial cone = cone_equation(cusp, p).equation;
        // K_{C,p} meets the plane w = 0 in C.
        CHECK(dehomogenize(cone, 3, Q.zero()).monic() == P3("y^2*z - x^3").monic());
        for (int j = 0; j < 5; ++j) {
            const long s = u(rng), t = u(rng);
            std::vector<Scalar> pt;
            for (std::size_t c = 0; c < 4; ++c) {
                const long q = c == 0 ? s * s : c == 1 ? s * s * s : c == 2 ? 1 : 0;
                pt.push_back(Q.add(Q.from_int(q), Q.mul(Q.from_int(t), p[c])));
            }
            CHECK(cone.evaluate(pt).is_zero());
        }
    }
}

TEST_CASE("cone uniqueness") {
    PlaneCurve conic(P3("x*z - y^2"));
    CHECK(cone_uniqueness_check(conic, ProjPoint::from_ints({0, 0, 0, 1}), ProjPoint::from_ints({0, 1, 0, 1})));
    CHECK_THROWS_AS(
        cone_uniqueness_check(conic, ProjPoint::from_ints({0, 0, 0, 1}), ProjPoint::from_ints({0, 0, 0, 1})), Error);
    PlaneCurve line(P3("x + 2*y - z"));
    try {
        cone_uniqueness_check(line, ProjPoint::from_ints({0, 0, 0, 1}), ProjPoint::from_ints({1, 0, 0, 1}));
        FAIL("expected the line exclusion");
    } catch (const Error& e) {
        CHECK(std::string(e.what()) == "curve is a line");
    }
}

TEST_CASE("line and surface") {
    ProjLine l(ProjPoint::from_ints({0, 0, 1, 0}), ProjPoint::from_ints({0, 0, 0, 1}));
    LineIntersection li = line_surface_intersection(l, P4("x^3 + y^3 + z^3 + w^3"));
    CHECK(li.binary_form == parse_polynomial("s^3 + t^3", {"s", "t"}, Q));
    REQUIRE(li.packets.size() == 2);
    CHECK(li.packets[0].degree() == 1);
    CHECK(*li.packets[0].point == ProjPoint::from_ints({0, 0, 1, -1}));
    CHECK(li.packets[1].degree() == 2);
    CHECK(li.total_multiplicity() == 3);
    CHECK(li.transversal());

    LineIntersection q4 = line_surface_intersection(l, P4("x^4 + y^4 + z^4 + w^4"));
    REQUIRE(q4.packets.size() == 1);
    CHECK(q4.packets[0].degree() == 4);
    CHECK(transversality_check(l, P4("x^4 + y^4 + z^4 + w^4")));

    CHECK_FALSE(transversality_check(l, P4("(z - w)^2*z + x^3 + y^3")));
    CHECK_THROWS_AS(line_surface_intersection(l, P4("x*w - y*z")), Error);

    const Field K = Field::parse("q[t]/(t^2 - t + 1)");
    LineIntersection split = line_surface_intersection(l, P4("x^3 + y^3 + z^3 + w^3"), K);
    CHECK(split.packets.size() == 3);
    for (const auto& pk : split.packets) CHECK(pk.point.has_value());
}

TEST_CASE("cone section and irreducibility") {
    PlaneCurve cusp(P3("y^2*z - x^3"));
    const ProjPoint p = ProjPoint::from_ints({0, 0, 0, 1});
    ConeSection cs = cone_section(cusp, p, P4("x^3 + y^3 + z^3 + w^3"));
    CHECK(cs.cone.degree() == 3);
    CHECK(section_irreducibility(cs).verdict == Irreducibility::Irreducible);
    SectionOptions none;
    none.retries = 0;
    CHECK(section_irreducibility(cs, none).verdict == Irreducibility::Unknown);

    CHECK_THROWS_AS(cone_section(cusp, p, P4("y^2*z - x^3")), Error);
    CHECK_THROWS_AS(cone_section(cusp, p, P4("(y^2*z - x^3)*(x + w)")), Error);

    PlaneCurve two_lines(P3("x*y"));
    ConeSection red = cone_section(two_lines, p, P4("x^2 + y^2 + z^2 + w^2"));
    CHECK(section_irreducibility(red).verdict == Irreducibility::Reducible);
}
