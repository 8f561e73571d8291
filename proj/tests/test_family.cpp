#include "doctest.h"

#include "eqlab/error.hpp"
#include "eqlab/family.hpp"

using namespace eqlab;
using namespace eqlab::family;
using eqlab::singularity::SingularityClass;

namespace {

SingularitySpec S(const char* s) { return SingularitySpec::parse(s); }

} // namespace

TEST_CASE("dimension of |dH|") {
    CHECK(dim_linear_system(1, 3) == 9);
    CHECK(dim_linear_system(2, 1) == 3);
    CHECK(dim_linear_system(7, 8) == 160);
    CHECK(dim_linear_system(5, 6) == 79);
    for (long n = 1; n <= 10; ++n)
        for (long d = 1; d <= 60; ++d) REQUIRE(dim_linear_system(n, d) == dim_linear_system_oracle(n, d));
    for (long d = 1; d <= 100; ++d) CHECK(dim_linear_system(1, d) == d * (d + 3) / 2);
    CHECK_THROWS_AS(dim_linear_system(0, 3), Error);
    CHECK_THROWS_AS(dim_linear_system(3, 0), Error);
}

TEST_CASE("specs and expected dimensions") {
    const SingularitySpec s = S("a1:10, d4:5,a1:2");
    CHECK(s.format() == "a1:12,d4:5");
    CHECK(s.total() == 17);
    CHECK(s.sigma_tau() == 32);
    CHECK(s.max_tau() == 4);
    CHECK(S("").entries.empty());
    CHECK_THROWS_AS(S("a1:-3"), Error);
    CHECK_THROWS_AS(S("q7:1"), Error);

    CHECK(tau_of(SingularityClass::a(1)) == 1);
    CHECK(tau_of(SingularityClass::d(7)) == 7);
    CHECK(tau_of(SingularityClass::e(6)) == 6);
    CHECK_THROWS_AS(tau_of(SingularityClass::non_simple(10, 2)), Error);

    CHECK(surface_family_expdim(7, 8, S("a1:147")) == 13);
    CHECK(surface_family_expdim(5, 6, S("a2:45")) == -11);
    CHECK(surface_family_expdim(4, 5, S("")) == dim_linear_system(4, 5));
    CHECK(surface_family_expdim(4, 5, S("d5:3").appended(SingularityClass::e(7))) ==
          surface_family_expdim(4, 5, S("d5:3")) - 7);
    CHECK(plane_family_expdim(8, S("a1:21")) == 23);
    CHECK(plane_family_expdim(5, S("")) == 20);
    CHECK(plane_family_expdim(6, S("a2:9")) == 9);

    CHECK(westenberger_nonempty_check(8, S("a1:21")));
    CHECK_FALSE(westenberger_nonempty_check(5, S("a1:6")));
    CHECK(westenberger_nonempty_check(3, S("")));
}

TEST_CASE("obstruction window") {
    const ObstructionReport r = example1_analyze(7, 8, S("a1:21"));
    CHECK(r.window_lo == 21);
    CHECK(r.window_hi == 21);
    CHECK(r.window_ok);
    CHECK(r.plane_expdim == 23);
    CHECK(r.lower_bound == 23);
    CHECK(r.westenberger_rhs == 21);
    CHECK(r.threshold_d == mpq_class(14, 3));
    CHECK(r.threshold_ok);
    CHECK(r.expdim == 13);
    CHECK(r.upper_bound == 13);
    CHECK(r.verdict == Verdict::Obstructed);

    CHECK(example1_analyze(7, 8, S("a1:20")).verdict == Verdict::NotConcluded);
    const ObstructionReport six = example1_analyze(6, 8, S("a1:22"));
    CHECK_FALSE(six.hypothesis_n);
    CHECK(six.failures.front() == "hypothesis n>2m+4 fails");
    CHECK(six.verdict == Verdict::NotConcluded);
    CHECK_THROWS_AS(example1_analyze(7, 8, SingularitySpec({{SingularityClass::non_simple(9, 2), 1}})), Error);

    const auto one = example1_scan(7, 8, 8, SingularityClass::a(1));
    REQUIRE(one.size() == 1);
    CHECK(one[0].spec.total() == 21);
    CHECK(one[0].verdict == Verdict::Obstructed);
    CHECK(example1_scan(10, 12, 12, SingularityClass::a(1))[0].spec.total() == 37);
    CHECK_THROWS_AS(example1_scan(7, 9, 8, SingularityClass::a(1)), Error);
    ScanOptions strict;
    strict.strict = true;
    CHECK_THROWS_AS(example1_scan(7, 8, 8, SingularityClass::a(1), strict), Error);

    // The chain of estimates holds on every accepted row.
    for (long n : {7L, 9L, 12L})
        for (unsigned k : {1u, 2u}) {
            const auto type = SingularityClass::a(k);
            if (n <= 2 * static_cast<long>(k) + 4) continue;
            for (const auto& row : example1_scan(n, 1, 80, type)) {
                if (!row.window_ok || !row.westenberger_ok || !row.threshold_ok) continue;
                CHECK(row.window_hi <= row.westenberger_rhs);
                CHECK(mpq_class(row.plane_expdim) >= row.lower_bound);
                CHECK(mpq_class(row.expdim) <= row.upper_bound);
                CHECK(row.verdict == Verdict::Obstructed);
            }
        }
}

TEST_CASE("Hirano families") {
    CHECK(hirano_params(2, 1).d == 6);
    CHECK(hirano_params(2, 1).r == 9);
    CHECK(hirano_params(2, 2).d == 18);
    CHECK(hirano_params(2, 2).r == 90);
    CHECK(hirano_params(4, 1).d == 10);
    CHECK(hirano_params(4, 1).r == 15);
    CHECK_THROWS_AS(hirano_params(3, 1), Error);
    for (unsigned k = 2; k <= 20; k += 2)
        for (unsigned m = 1; m <= 6; ++m) CHECK(hirano_params(k, m).r > 0);

    CHECK(hirano_leading_coefficient(2) == mpq_class(-1, 4));
    for (unsigned k = 2; k <= 40; k += 2) CHECK(hirano_leading_coefficient(k) < 0);

    const long expected[] = {-11, -131, -1031, -8591};
    for (unsigned m = 1; m <= 4; ++m) {
        const HiranoReport h = hirano_analyze(5, 2, m);
        CHECK(h.expdim == expected[m - 1]);
        CHECK(h.verdict == Verdict::Obstructed);
    }
}

TEST_CASE("e* table and bounds") {
    const unsigned a[] = {2, 3, 4, 4, 4, 4, 4, 5, 5, 5};
    for (unsigned k = 1; k <= 10; ++k) {
        const EStar e = e_star(SingularityClass::a(k));
        CHECK(e.value == a[k - 1]);
        CHECK_FALSE(e.upper_bound);
        CHECK(e.value <= *e_star_bound_formula(SingularityClass::a(k)));
    }
    const unsigned dk[] = {3, 4, 5, 5, 5, 5, 5, 6, 6, 6};
    for (unsigned k = 4; k <= 13; ++k) {
        const EStar e = e_star(SingularityClass::d(k));
        CHECK(e.value == dk[k - 4]);
        CHECK(e.value <= *e_star_bound_formula(SingularityClass::d(k)));
    }
    CHECK(e_star(SingularityClass::e(6)).value == 4);
    CHECK(e_star(SingularityClass::e(7)).value == 4);
    CHECK(e_star(SingularityClass::e(8)).value == 5);
    const EStar a20 = e_star(SingularityClass::a(20));
    CHECK(a20.value == 10);
    CHECK(a20.upper_bound);
    CHECK(e_star(SingularityClass::d(14)).upper_bound);
    CHECK_THROWS_AS(e_star(SingularityClass::non_simple(9, 2)), Error);

    CHECK(e_star_bounds(1, 1).analytic == 1);
    CHECK(e_star_bounds(4, 1).analytic == 4);
    CHECK(e_star_bounds(1, 6).topological == 8);
    CHECK_THROWS_AS(e_star_bounds(0, 1), Error);
}

TEST_CASE("T-smoothness conditions") {
    const Condition1 c1 = tsmooth_condition1(7, 8, S("a1:147"));
    CHECK_FALSE(c1.holds);
    CHECK(c1.lhs == 441);
    CHECK(c1.rhs == 118);
    const Condition1 q = tsmooth_condition1(2, 10, S("a1:32"));
    CHECK(q.holds);
    CHECK(q.lhs == 96);
    CHECK(q.rhs == 99);
    CHECK_FALSE(q.caveat.empty());
    CHECK(tsmooth_condition1(3, 4, S("")).holds);
    CHECK(tsmooth_condition1(3, 40, S("a20:1")).conservative);

    // Monotone in the spec and in d.
    SingularitySpec grow;
    bool was = true;
    for (int i = 0; i < 40; ++i) {
        grow = grow.appended(SingularityClass::a(1 + i % 5));
        const bool now = tsmooth_condition1(3, 6, grow).holds;
        CHECK((was || !now));
        was = now;
    }
    was = false;
    for (long d = 1; d <= 20; ++d) {
        const bool now = tsmooth_condition1(3, d, S("a2:20,d5:3")).holds;
        CHECK((!was || now));
        was = now;
    }

    const Condition2 c2 = tsmooth_condition2(7, 8, S("a1:147"));
    CHECK_FALSE(c2.holds);
    CHECK(c2.ratio == mpq_class(147, 80));
    CHECK(tsmooth_condition2(2, 10, S("a1:24")).holds);
    CHECK(tsmooth_condition2(2, 10, S("")).ratio == 0);

    CHECK(existence_precondition_pairs(7, 8, S("a1:1000")).holds);
    CHECK(existence_precondition_pairs(7, 8, S("a1:1")).lhs == 41);
    const PairCheck e8 = existence_precondition_pairs(2, 1, S("e8:1"));
    CHECK_FALSE(e8.holds);
    CHECK(e8.lhs == 2);
    CHECK(e8.worst == 10);
    CHECK(existence_precondition_pairs(2, 1, S("")).holds);

    const GapReport g = gap_report(7, 8, S("a1:147"));
    CHECK(g.cond2.ratio == mpq_class(147, 80));
    CHECK(g.summary.find("147/80") != std::string::npos);
    const GapReport mixed = gap_report(5, 12, S("a1:10,d4:5"));
    REQUIRE(mixed.items.size() == 2);
    CHECK(mixed.items[0].tau_part + mixed.items[1].tau_part == mixed.spec.sigma_tau());
    CHECK(mixed.items[0].cond1_part + mixed.items[1].cond1_part == mixed.cond1.lhs);
    CHECK(gap_report(2, 10, S("a1:24")).cond2.ratio <= 1);
}

TEST_CASE("report serialization") {
    const auto j = to_json(example1_analyze(7, 8, S("a1:21")));
    CHECK(j["dim_dH"] == 160);
    CHECK(j["expdim"] == 13);
    CHECK(j["lower_bound"] == 23);
    CHECK(j["threshold_d"] == "14/3");
    CHECK(j["window_lo"] == 21);
    CHECK(j["verdict"] == "obstructed");
    CHECK(to_json(tsmooth_condition2(7, 8, S("a1:147")))["cond2_ratio"] == "147/80");
    CHECK(to_json(tsmooth_condition1(7, 8, S("a1:147")))["cond1_rhs"] == 118);
    mpz_class big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 30);
    CHECK(to_json(big) == big.get_str());

    const std::string row = to_csv_row(example1_analyze(7, 8, S("a1:21")));
    CHECK(row.rfind("7,8,a1:21,21,21,160,13,23,23,13,21,21,21,14/3,obstructed,", 0) == 0);
    CHECK(to_csv_row(example1_analyze(7, 8, S("a1:21,d4:1"))).find("\"a1:21,d4:1\"") != std::string::npos);
}
