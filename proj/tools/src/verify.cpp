#include "verify.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

#include "eqlab/error.hpp"
#include "eqlab/factor.hpp"
#include "eqlab/family.hpp"
#include "eqlab/geometry.hpp"
#include "eqlab/singularity.hpp"
#include "eqlab/text_io.hpp"

namespace eqlab::verify {

using namespace eqlab::algebra;
using namespace eqlab::geometry;
using namespace eqlab::singularity;
using namespace eqlab::family;

namespace {

const Field Q = Field::rationals();

Polynomial P3(const char* s) { return parse_polynomial(s, {"x", "y", "z"}, Q); }
Polynomial P4(const char* s) { return parse_polynomial(s, {"x", "y", "z", "w"}, Q); }

// Collects failed expectations; the first few end up in the detail line.
class Checker {
public:
    void expect(bool ok, const std::string& what) {
        if (ok) return;
        ++failed_;
        if (failed_ <= 3) msgs_ += (msgs_.empty() ? "" : "; ") + what;
    }
    Outcome finish(const std::string& summary) const {
        if (failed_ == 0) return {true, summary};
        return {false, std::to_string(failed_) + " failed: " + msgs_};
    }

private:
    unsigned failed_ = 0;
    std::string msgs_;
};

Outcome dimension_oracle(std::uint64_t) {
    Checker c;
    unsigned pairs = 0;
    for (long n = 1; n <= 10; ++n)
        for (long d = 1; d <= 60; ++d, ++pairs)
            c.expect(dim_linear_system(n, d) == dim_linear_system_oracle(n, d),
                     "n=" + std::to_string(n) + " d=" + std::to_string(d));
    return c.finish(std::to_string(pairs) + " (n, d) pairs agree");
}

Outcome example_one(std::uint64_t) {
    Checker c;
    const auto rows = example1_scan(7, 8, 8, SingularityClass::a(1));
    c.expect(rows.size() == 1, "one row");
    const ObstructionReport& r = rows.front();
    c.expect(r.spec.total() == 21, "r = 21");
    c.expect(r.window_lo == 21 && r.window_hi == 21 && r.window_ok, "window [21,21]");
    c.expect(r.plane_expdim == 23, "plane expdim 23");
    c.expect(r.lower_bound == 23, "lower bound 23");
    c.expect(r.sigma_tau == 21 && r.westenberger_rhs == 21 && r.westenberger_ok, "Westenberger 21 <= 21");
    mpq_class threshold(84, 18);
    threshold.canonicalize();
    c.expect(r.threshold_d == threshold && r.threshold_ok, "threshold 84/18");
    c.expect(r.expdim == 13 && mpq_class(r.expdim) < r.lower_bound, "scaled expdim 13 < 23");
    c.expect(r.upper_bound == 13 && mpq_class(r.expdim) <= r.upper_bound, "13 <= upper bound 13");
    c.expect(r.verdict == Verdict::Obstructed, "verdict obstructed");
    return c.finish("r=21, window [21,21], plane expdim 23 = lower bound 23, expdim(147 A_1) = 13 <= 13, obstructed");
}

Outcome example_two(std::uint64_t) {
    Checker c;
    const HiranoParams a = hirano_params(2, 1), b = hirano_params(2, 2);
    c.expect(a.d == 6 && a.r == 9, "(2,1) -> (6,9)");
    c.expect(b.d == 18 && b.r == 90, "(2,2) -> (18,90)");
    c.expect(hirano_leading_coefficient(2) == mpq_class(-1, 4), "leading coefficient -1/4");
    std::string values;
    mpz_class prev;
    for (unsigned m = 1; m <= 4; ++m) {
        const HiranoReport h = hirano_analyze(5, 2, m);
        if (m == 1) c.expect(h.expdim == -11, "expdim -11 at m=1");
        if (m > 1) c.expect(h.expdim < prev, "decreasing at m=" + std::to_string(m));
        prev = h.expdim;
        values += (values.empty() ? "" : ", ") + h.expdim.get_str();
    }
    return c.finish("(6,9), (18,90), leading coefficient -1/4, expdim for m=1..4: " + values);
}

Outcome classification_suite(std::uint64_t seed) {
    Checker c;
    std::vector<SingularityClass> all;
    for (unsigned k = 1; k <= 12; ++k) all.push_back(SingularityClass::a(k));
    for (unsigned k = 4; k <= 12; ++k) all.push_back(SingularityClass::d(k));
    for (unsigned k = 6; k <= 8; ++k) all.push_back(SingularityClass::e(k));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> u(-3, 3);
    unsigned germs = 0;
    for (const auto& cls : all) {
        const Polynomial nf = normal_form(cls);
        const CurveGerm g(nf);
        c.expect(milnor_number(g).value == cls.index, cls.name() + " mu");
        c.expect(tjurina_number(g).value == cls.index, cls.name() + " tau");
        c.expect(classify_simple(g).cls == cls, cls.name() + " class");
        ++germs;
        for (int i = 0; i < 20; ++i) {
            std::vector<long> e(4);
            do {
                for (auto& v : e) v = u(rng);
            } while (e[0] * e[3] - e[1] * e[2] == 0);
            const Classification k = classify_simple(CurveGerm(linear_change(nf, Matrix::from_ints(Q, 2, 2, e))));
            c.expect(k.cls == cls && k.mu == cls.index && k.tau == cls.index, cls.name() + " after a coordinate change");
            ++germs;
        }
    }
    return c.finish(std::to_string(all.size()) + " normal forms, " + std::to_string(germs) + " germs classified");
}

Outcome nine_cusps(std::uint64_t seed) {
    Checker c;
    const Polynomial dual = dual_curve(P3("x^3 + y^3 + z^3"));
    c.expect(dual.degree() == 6, "degree 6");
    c.expect(irreducibility_test(dual) == Irreducibility::Irreducible, "irreducible");
    LocusOptions lo;
    lo.seed = seed;
    const auto locus = singular_locus(dual, lo);
    std::size_t points = 0, rational = 0;
    for (const auto& r : locus) {
        points += r.geometric_points();
        if (r.geometric_points() == 1) {
            ++rational;
            c.expect(r.invariants && r.invariants->cls == SingularityClass::a(2), "A_2 at " + r.point.format());
        }
    }
    c.expect(points == 9, "9 geometric points");
    return c.finish("degree 6, irreducible, " + std::to_string(points) + " points in " + std::to_string(locus.size()) +
                    " packets, " + std::to_string(rational) + " rational cusps of type A_2");
}

Outcome cone_transfer(std::uint64_t seed) {
    Checker c;
    const PlaneCurve cusp(P3("y^2*z - x^3"));
    const ProjPoint p = ProjPoint::from_ints({0, 0, 0, 1});
    const Polynomial fermat = P4("x^3 + y^3 + z^3 + w^3");
    const ConeSection cs = cone_section(cusp, p, fermat);

    const ProjLine fiber(ProjPoint::from_ints({0, 0, 1, 0}), ProjPoint::from_ints({0, 0, 0, 1}));
    const LineIntersection li = line_surface_intersection(fiber, fermat);
    c.expect(li.transversal(), "fiber transversal");
    bool linear = false, quadratic = false;
    for (const auto& pk : li.packets) {
        if (pk.degree() == 1 && format_upoly(pk.factor, "s") == "s + 1") linear = true;
        if (pk.degree() == 2 && format_upoly(pk.factor, "s") == "s^2 - s + 1") quadratic = true;
    }
    c.expect(linear && quadratic && li.packets.size() == 2, "(z+w)(z^2-zw+w^2)");

    const Classification base = classify_simple(local_germ(cusp.equation(), ProjPoint::from_ints({0, 0, 1})));
    const Classification chart = classify_simple(surface_chart_germ(cs, ProjPoint::from_ints({0, 0, 1, -1}), 8));
    c.expect(base.cls == SingularityClass::a(2) && chart.cls == base.cls, "A_2 at (0:0:1:-1)");

    TransferOptions split;
    split.field = Field::parse("q[t]/(t^2 - t + 1)");
    split.locus.seed = seed;
    const TransferReport rep = transfer_check(cs, split);
    c.expect(rep.fibers.size() == 1, "one singular fiber");
    unsigned same = 0;
    for (const auto& f : rep.fibers)
        for (const auto& pt : f.points)
            if (pt.verdict == TransferVerdict::SameType && pt.invariants && pt.invariants->cls == SingularityClass::a(2))
                ++same;
    c.expect(same == 3, "three fiber points of type A_2");

    SectionOptions so;
    so.seed = seed;
    c.expect(section_irreducibility(cs, so).verdict == Irreducibility::Irreducible, "section irreducible");
    return c.finish("transversal fiber (z+w)(z^2-zw+w^2), " + std::to_string(same) +
                    " points of type A_2 over q[t]/(t^2-t+1), section irreducible");
}

Outcome tsmooth(std::uint64_t) {
    Checker c;
    const Condition1 a = tsmooth_condition1(7, 8, SingularitySpec::parse("a1:147"));
    c.expect(!a.holds && a.lhs == 441 && a.rhs == 118, "condition 1: 441 >= 118");
    const Condition2 b = tsmooth_condition2(7, 8, SingularitySpec::parse("a1:147"));
    c.expect(!b.holds && b.ratio == mpq_class(147, 80), "condition 2 ratio 147/80");
    const Condition1 q = tsmooth_condition1(2, 10, SingularitySpec::parse("a1:32"));
    c.expect(q.holds && q.lhs == 96 && q.rhs == 99, "quadric: 96 < 99");
    return c.finish("condition 1 fails 441 >= 118, condition 2 ratio " + b.ratio.get_str() + ", quadric 96 < 99");
}

Outcome e_star_table(std::uint64_t) {
    Checker c;
    struct Row {
        SingularityClass cls;
        unsigned value;
    };
    std::vector<Row> table;
    const unsigned a[] = {2, 3, 4, 4, 4, 4, 4, 5, 5, 5};
    for (unsigned k = 1; k <= 10; ++k) table.push_back({SingularityClass::a(k), a[k - 1]});
    const unsigned d[] = {3, 4, 5, 5, 5, 5, 5, 6, 6, 6};
    for (unsigned k = 4; k <= 13; ++k) table.push_back({SingularityClass::d(k), d[k - 4]});
    table.push_back({SingularityClass::e(6), 4});
    table.push_back({SingularityClass::e(7), 4});
    table.push_back({SingularityClass::e(8), 5});
    for (const auto& r : table) {
        const EStar e = e_star(r.cls);
        c.expect(e.value == r.value && !e.upper_bound, r.cls.name() + " table value");
        if (const auto b = e_star_bound_formula(r.cls)) c.expect(e.value <= *b, r.cls.name() + " within bound");
    }
    return c.finish(std::to_string(table.size()) + " table entries, all within the bound formulas");
}

Outcome cone_uniqueness(std::uint64_t seed) {
    Checker c;
    const PlaneCurve cusp(P3("y^2*z - x^3"));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> u(-4, 4);
    unsigned pairs = 0;
    while (pairs < 25) {
        const long w1 = u(rng), w2 = u(rng);
        const ProjPoint p = ProjPoint::from_ints({u(rng), u(rng), u(rng), w1});
        const ProjPoint q = ProjPoint::from_ints({u(rng), u(rng), u(rng), w2});
        if (w1 == 0 || w2 == 0 || p == q) continue;
        c.expect(cone_uniqueness_check(cusp, p, q), "cones at " + p.format() + " and " + q.format());
        ++pairs;
    }
    std::string message;
    try {
        cone_uniqueness_check(PlaneCurve(P3("x + 2*y - z")), ProjPoint::from_ints({0, 0, 0, 1}),
                              ProjPoint::from_ints({1, 0, 0, 1}));
    } catch (const Error& e) {
        message = e.what();
    }
    c.expect(message == "curve is a line", "line exclusion");
    return c.finish(std::to_string(pairs) + " vertex pairs with distinct cones; line rejected");
}

} // namespace

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {1, "dimension formula oracle", 1, dimension_oracle},
        {2, "obstructed family n=7 d=8 A_1", 1, example_one},
        {3, "Hirano families", 1, example_two},
        {4, "mu/tau/classification suite", 60, classification_suite},
        {5, "nine-cuspidal sextic", 60, nine_cusps},
        {6, "cone transfer", 120, cone_transfer},
        {7, "T-smoothness conditions", 1, tsmooth},
        {8, "e* table", 1, e_star_table},
        {9, "cone uniqueness", 10, cone_uniqueness},
    };
    return all;
}

Result run(const Criterion& c, std::uint64_t seed) {
    Result r;
    r.id = c.id;
    r.title = c.title;
    r.limit_seconds = c.limit_seconds;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = c.run(seed);
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.pass = o.pass && r.seconds < c.limit_seconds;
    r.detail = o.detail;
    if (o.pass && !r.pass) r.detail += "; over the time limit";
    return r;
}

std::string format_line(const Result& r) {
    char t[64];
    std::snprintf(t, sizeof t, "(%.2f s, limit %g s)", r.seconds, r.limit_seconds);
    std::ostringstream out;
    out << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.title << " " << t << " " << r.detail;
    return out.str();
}

} // namespace eqlab::verify
