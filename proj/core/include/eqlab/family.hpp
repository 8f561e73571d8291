#ifndef EQLAB_FAMILY_HPP
#define EQLAB_FAMILY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "eqlab/singularity.hpp"

namespace eqlab::family {

using singularity::SingularityClass;

struct SpecEntry {
    SingularityClass cls;
    mpz_class count;
};

/// A multiset of singularity types: r_i points of type S_i.
struct SingularitySpec {
    std::vector<SpecEntry> entries;

    SingularitySpec() = default;
    explicit SingularitySpec(std::vector<SpecEntry> e);

    /// "a1:147,d4:5"; the empty string is the empty spec.
    static SingularitySpec parse(std::string_view text);
    std::string format() const;

    mpz_class total() const;      // r
    mpz_class sigma_tau() const;  // sum r_i * tau(S_i)
    unsigned max_tau() const;     // m, 0 for the empty spec
    SingularitySpec scaled(const mpz_class& factor) const;
    SingularitySpec appended(const SingularityClass& cls, const mpz_class& count = 1) const;
};

/// dim |dH| for a smooth surface of degree n in P^3:
/// (n d^2 + (4n - n^2) d)/2 + (n^3 - 6n^2 + 11n - 6)/6 for d >= n, and the
/// full count of degree-d forms minus one below n.
mpz_class dim_linear_system(long n, const mpz_class& d);
/// C(d+3,3) - C(d-n+3,3) - 1 by counting monomials.
mpz_class dim_linear_system_oracle(long n, const mpz_class& d);

unsigned tau_of(const SingularityClass& cls);

mpz_class surface_family_expdim(long n, const mpz_class& d, const SingularitySpec& spec);
mpz_class plane_family_expdim(const mpz_class& d, const SingularitySpec& spec);

mpq_class westenberger_rhs(const mpz_class& d, unsigned m);
bool westenberger_nonempty_check(const mpz_class& d, const SingularitySpec& spec);

enum class Verdict { Obstructed, NotConcluded };
std::string_view to_string(Verdict v) noexcept;

struct ObstructionReport {
    long n = 0;
    mpz_class d;
    SingularitySpec spec;        // the plane family
    unsigned m = 0;
    mpz_class sigma_tau;         // of the plane family
    mpz_class dim_dH;
    mpz_class expdim;            // of the surface family with counts n*r_i
    mpz_class plane_expdim;
    mpq_class lower_bound;       // (n-1)/2*d - m
    mpq_class upper_bound;       // (n^3 - 6n^2 + 5n - 6)/6
    mpq_class window_lo, window_hi;
    mpq_class westenberger_rhs;
    mpq_class threshold_d;
    bool hypothesis_n = false;   // n > 2m + 4
    bool window_ok = false;
    bool westenberger_ok = false;
    bool threshold_ok = false;
    bool n_gt_3k_plus_4 = false; // n > 3m + 4
    Verdict verdict = Verdict::NotConcluded;
    std::vector<std::string> failures;
};

ObstructionReport example1_analyze(long n, const mpz_class& d, const SingularitySpec& spec);

struct ScanOptions {
    bool strict = false;  // refuse n <= 3k + 4 instead of flagging it
};

/// One report per d in [d_lo, d_hi] with r = ceil((d^2 + (4-n)d + 2)/(2k)).
std::vector<ObstructionReport> example1_scan(long n, const mpz_class& d_lo, const mpz_class& d_hi,
                                             const SingularityClass& type, const ScanOptions& opts = {});

struct HiranoParams {
    mpz_class d;
    mpz_class r;
};

/// d = 2(k+1)^m, r = 3(k+1)((k+1)^(2m) - 1)/((k+1)^2 - 1) for even k.
HiranoParams hirano_params(unsigned k, unsigned m);
/// 2 - 3(k^2+k)/(k^2+2k).
mpq_class hirano_leading_coefficient(unsigned k);

struct HiranoReport {
    long n = 0;
    unsigned k = 0, m = 0;
    HiranoParams params;
    SingularitySpec spec;        // {A_k: n*r}
    mpz_class dim_dH;
    mpz_class sigma_tau;
    mpz_class expdim;
    mpq_class leading_coefficient;
    Verdict verdict = Verdict::NotConcluded;
    std::string note;
};

HiranoReport hirano_analyze(long n, unsigned k, unsigned m);

struct EStar {
    unsigned value = 0;
    bool upper_bound = false;  // from the general formula rather than the table
};

EStar e_star(const SingularityClass& cls);
/// The general bound formula for A_k and D_k; empty for E.
std::optional<unsigned> e_star_bound_formula(const SingularityClass& cls);

struct EStarBounds {
    long analytic = 0;     // floor(3 sqrt(mu) - 2)
    long topological = 0;  // floor(9/sqrt(6) sqrt(delta) - 1)
};

EStarBounds e_star_bounds(const mpz_class& mu, const mpz_class& delta);

struct Condition1 {
    bool holds = false;
    mpz_class lhs;  // sum r_i e*(e*+1)/2
    mpz_class rhs;  // dim |(d-1)H|
    bool conservative = false;
    std::string caveat;
};

Condition1 tsmooth_condition1(long n, const mpz_class& d, const SingularitySpec& spec);

struct Condition2 {
    bool holds = false;
    mpz_class lhs;    // 2 * sigma_tau
    mpz_class rhs;    // dim |dH|
    mpq_class ratio;  // lhs / rhs
    std::string note;
};

Condition2 tsmooth_condition2(long n, const mpz_class& d, const SingularitySpec& spec);

struct PairCheck {
    bool holds = false;
    mpz_class lhs;       // d*n - (n-1)(n-2)/2
    unsigned worst = 0;  // largest m_i + m_j
};

PairCheck existence_precondition_pairs(long n, const mpz_class& d, const SingularitySpec& spec);

struct GapItem {
    SingularityClass cls;
    mpz_class count;
    unsigned tau = 0;
    EStar e;
    mpz_class tau_part;   // count * tau
    mpz_class cond1_part; // count * e(e+1)/2
};

struct GapReport {
    long n = 0;
    mpz_class d;
    SingularitySpec spec;
    Condition1 cond1;
    Condition2 cond2;
    mpq_class cond1_ratio;
    std::vector<GapItem> items;
    std::string summary;
};

GapReport gap_report(long n, const mpz_class& d, const SingularitySpec& spec);

/// Integers as JSON numbers when they fit, strings otherwise; rationals
/// as "p/q" strings.
nlohmann::json to_json(const mpz_class& z);
nlohmann::json to_json(const mpq_class& q);
nlohmann::json to_json(const ObstructionReport& r);
nlohmann::json to_json(const HiranoReport& r);
nlohmann::json to_json(const Condition1& c);
nlohmann::json to_json(const Condition2& c);
nlohmann::json to_json(const GapReport& g);

std::string scan_csv_header();
std::string to_csv_row(const ObstructionReport& r);
std::string hirano_csv_header();
std::string to_csv_row(const HiranoReport& r);

} // namespace eqlab::family

#endif
