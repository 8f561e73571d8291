#include "doctest.h"

#include <random>

#include "eqlab/error.hpp"
#include "eqlab/factor.hpp"
#include "eqlab/singularity.hpp"
#include "eqlab/text_io.hpp"

using namespace eqlab;
using namespace eqlab::algebra;
using namespace eqlab::geometry;
using namespace eqlab::singularity;

namespace {

const Field Q = Field::rationals();
const VarNames XY = {"x", "y"};
const VarNames XYZ = {"x", "y", "z"};

CurveGerm G(const std::string& s) { return CurveGerm(parse_polynomial(s, XY, Q)); }
Polynomial P3(const std::string& s) { return parse_polynomial(s, XYZ, Q); }

unsigned mu(const std::string& s) { return *milnor_number(G(s)).value; }
unsigned tau(const std::string& s) { return *tjurina_number(G(s)).value; }

} // namespace

TEST_CASE("Milnor and Tjurina numbers") {
    CHECK(mu("x^2 - y^5") == 4);
    CHECK(mu("x^2 - y^2") == 1);
    CHECK(mu("x^3 - y^5") == 8);
    CHECK(tau("x^2*y - y^4") == 5);
    CHECK(tau("x^2 - y^2") == 1);
    CHECK(tau("(x+y)^2 - (x-y)^5") == 4);
    CHECK(mu("x + y^2") == 0);
    // Quasi-homogeneous vs not: x^4 + y^5 + x^2*y^3 has mu = 12 > tau = 11.
    CHECK(mu("x^4 + y^5 + x^2*y^3") == 12);
    CHECK(tau("x^4 + y^5 + x^2*y^3") == 11);
    // Non-isolated: x^2 has an infinite Milnor number.
    CHECK_FALSE(milnor_number(G("x^2")).value.has_value());
    CHECK_THROWS_AS(classify_simple(G("x^2*y^2")), Error);
}

TEST_CASE("certification is stable under a larger truncation") {
    for (const char* s : {"x^2 - y^7", "x^3 - x*y^3", "x^2*y - y^9", "x^4 + y^5 + x^2*y^3", "x^5 + y^5"}) {
        const auto a = milnor_number(G(s), {8, 64});
        REQUIRE(a.value);
        const auto b = milnor_number(G(s), {2 * a.truncation, 128});
        CHECK(a.value == b.value);
    }
}

TEST_CASE("Hessian corank") {
    CHECK(hessian_corank(G("x^2 - y^2")) == 0);
    CHECK(hessian_corank(G("x^2 - y^3")) == 1);
    CHECK(hessian_corank(G("x^3 - y^4")) == 2);
}

TEST_CASE("classification of normal forms and coordinate changes") {
    std::vector<SingularityClass> all;
    for (unsigned k = 1; k <= 12; ++k) all.push_back(SingularityClass::a(k));
    for (unsigned k = 4; k <= 12; ++k) all.push_back(SingularityClass::d(k));
    for (unsigned k = 6; k <= 8; ++k) all.push_back(SingularityClass::e(k));
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<long> u(-3, 3);
    for (const auto& c : all) {
        const Classification base = classify_simple(CurveGerm(normal_form(c)));
        CHECK(base.cls == c);
        CHECK(base.mu == c.index);
        CHECK(base.tau == c.index);
        for (int i = 0; i < 3; ++i) {
            std::vector<long> e(4);
            do {
                for (auto& v : e) v = u(rng);
            } while (e[0] * e[3] - e[1] * e[2] == 0);
            const Polynomial unit = parse_polynomial("1 + x - 2*y^2", XY, Q);
            const Polynomial g = linear_change(normal_form(c) * unit, Matrix::from_ints(Q, 2, 2, e));
            CHECK(classify_simple(CurveGerm(g)).cls == c);
        }
    }
    CHECK(classify_simple(G("x^2*y - y^3")).cls == SingularityClass::d(4));
    CHECK(classify_simple(G("x^3 - x*y^3")).cls == SingularityClass::e(7));
    CHECK(classify_simple(G("x*(x-y)*(x+y)")).cls == SingularityClass::d(4));
    CHECK(classify_simple(G("x^4 + y^4")).cls.kind == SingKind::NonSimple);
    CHECK(classify_simple(G("x - y^3")).cls.kind == SingKind::Smooth);
}

TEST_CASE("class codes") {
    CHECK(SingularityClass::parse("a1") == SingularityClass::a(1));
    CHECK(SingularityClass::parse("D_5") == SingularityClass::d(5));
    CHECK(SingularityClass::parse("e8").name() == "E_8");
    CHECK_THROWS_AS(SingularityClass::parse("e9"), Error);
    CHECK_THROWS_AS(SingularityClass::parse("x3"), Error);
}

TEST_CASE("singular locus") {
    auto cusp = singular_locus(P3("y^2*z - x^3"));
    REQUIRE(cusp.size() == 1);
    CHECK(cusp[0].point == ProjPoint::from_ints({0, 0, 1}));
    CHECK(cusp[0].invariants->cls == SingularityClass::a(2));

    auto tri = singular_locus(P3("x*y*z"));
    REQUIRE(tri.size() == 3);
    for (const auto& r : tri) CHECK(r.invariants->cls == SingularityClass::a(1));
    CHECK(tri[0].point == ProjPoint::from_ints({0, 0, 1}));

    CHECK(singular_locus(P3("x^3 + y^3 + z^3")).empty());
    CHECK_THROWS_AS(singular_locus(P3("(x + y)^2*z")), Error);

    // The line x = 0 meets the conic x^2 + y^2 + z^2 = 0 in a conjugate pair of nodes.
    auto pair = singular_locus(P3("x*(x^2 + y^2 + z^2)"));
    REQUIRE(pair.size() == 1);
    CHECK(pair[0].geometric_points() == 2);
    CHECK(pair[0].invariants->cls == SingularityClass::a(1));
}

TEST_CASE("local germ") {
    CHECK(local_germ(P3("y^2*z - x^3"), ProjPoint::from_ints({0, 0, 1})).poly ==
          parse_polynomial("y^2 - x^3", XY, Q));
    CHECK(local_germ(P3("x*y*z"), ProjPoint::from_ints({0, 0, 1})).poly == parse_polynomial("x*y", XY, Q));
    const Field K = Field::parse("q[t]/(t^2 + t + 1)");
    const ProjPoint w(K, {K.zero(), K.one(), K.generator()});
    CurveGerm g = local_germ(P3("x^6 + y^6 + z^6 - 2*(x^3*y^3 + y^3*z^3 + z^3*x^3)"), w);
    CHECK(g.poly.field() == K);
    CHECK(classify_simple(g).cls == SingularityClass::a(2));
    CHECK_THROWS_AS(local_germ(P3("x*y*z"), ProjPoint::from_ints({1, 1, 1})), Error);
}

TEST_CASE("dual curves") {
    const Polynomial dual = dual_curve(P3("x^3 + y^3 + z^3"));
    CHECK(dual == P3("x^6 + y^6 + z^6 - 2*(x^3*y^3 + y^3*z^3 + z^3*x^3)"));
    CHECK(dual_curve(P3("x^2 + y^2 - z^2")) == P3("x^2 + y^2 - z^2"));
    CHECK(dual_curve(P3("x*z - y^2")).monic() == P3("y^2 - 4*x*z").monic());
}

TEST_CASE("nine cusps of the dual Fermat cubic") {
    const Polynomial sextic = dual_curve(P3("x^3 + y^3 + z^3"));
    CHECK(sextic.degree() == 6);
    CHECK(irreducibility_test(sextic) == Irreducibility::Irreducible);
    const auto locus = singular_locus(sextic);
    std::size_t points = 0, rational = 0;
    for (const auto& r : locus) {
        points += r.geometric_points();
        if (r.geometric_points() == 1) ++rational;
        CHECK(r.invariants->cls == SingularityClass::a(2));
    }
    CHECK(points == 9);
    CHECK(rational == 3);
}

TEST_CASE("surface chart germ and transfer") {
    const VarNames xyzw = {"x", "y", "z", "w"};
    PlaneCurve cusp(P3("y^2*z - x^3"));
    const ProjPoint p = ProjPoint::from_ints({0, 0, 0, 1});
    const ConeSection cs = cone_section(cusp, p, parse_polynomial("x^3 + y^3 + z^3 + w^3", xyzw, Q));
    const CurveGerm g = surface_chart_germ(cs, ProjPoint::from_ints({0, 0, 1, -1}), 6);
    CHECK(classify_simple(g).cls == SingularityClass::a(2));
    CHECK_THROWS_AS(surface_chart_germ(cs, ProjPoint::from_ints({0, 0, 1, 1}), 6), Error);

    TransferReport rep = transfer_check(cs);
    REQUIRE(rep.fibers.size() == 1);
    CHECK(rep.fibers[0].transversal);
    REQUIRE(rep.fibers[0].points.size() == 2);
    for (const auto& pt : rep.fibers[0].points) CHECK(pt.verdict == TransferVerdict::SameType);

    TransferOptions split;
    split.field = Field::parse("q[t]/(t^2 - t + 1)");
    TransferReport rep2 = transfer_check(cs, split);
    REQUIRE(rep2.fibers[0].points.size() == 3);
    for (const auto& pt : rep2.fibers[0].points) {
        CHECK(pt.packet_degree == 1);
        CHECK(pt.verdict == TransferVerdict::SameType);
    }

    // Graph surface: the chart is exact and the germ is the planar one.
    const ConeSection graph = cone_section(cusp, p, parse_polynomial("z*w - x^2 - y^2 - w^2", xyzw, Q));
    const TransferReport gr = transfer_check(graph);
    CHECK_FALSE(gr.any_different());

    // Tangential fiber: the surface touches the fiber line at the point over the cusp.
    const ConeSection tangent =
        cone_section(cusp, p, parse_polynomial("w^2*z + x^3 + x*y*z + y^3 + x*z^2", xyzw, Q));
    const TransferReport tr = transfer_check(tangent);
    CHECK_FALSE(tr.fibers[0].transversal);
    CHECK((tr.any_different() || tr.any_unresolved()));

    PlaneCurve smooth(P3("x^3 + y^3 + z^3"));
    CHECK(transfer_check(cone_section(smooth, p, parse_polynomial("x^2 + y^2 + z^2 + w^2", xyzw, Q))).fibers.empty());
}
