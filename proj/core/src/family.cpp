#include "eqlab/family.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

#include "eqlab/error.hpp"

namespace eqlab::family {

namespace {

mpz_class binomial(const mpz_class& n, unsigned long k) {
    if (n < 0) return 0;
    mpz_class r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

mpz_class isqrt(const mpz_class& a) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

mpq_class canon(mpq_class q) {
    q.canonicalize();
    return q;
}

mpz_class ceil_div(const mpq_class& q, unsigned k) {
    mpz_class r;
    const mpz_class den = q.get_den() * k;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), den.get_mpz_t());
    return r;
}

void check_surface(long n, const mpz_class& d) {
    if (n < 1 || d < 1) fail(ErrorCode::InvalidArgument, "n and d must be positive");
}

std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

std::string str(const mpz_class& z) { return z.get_str(); }
std::string str(const mpq_class& q) { return q.get_str(); }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string approx(const mpq_class& q) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", q.get_d());
    return buf;
}

} // namespace

// ---------------------------------------------------------------- specs

SingularitySpec::SingularitySpec(std::vector<SpecEntry> e) : entries(std::move(e)) {
    for (const auto& x : entries)
        if (x.count < 0) fail(ErrorCode::InvalidArgument, "singularity counts must be nonnegative");
}

SingularitySpec SingularitySpec::parse(std::string_view text) {
    SingularitySpec s;
    std::size_t pos = 0;
    const std::string all = trim(text);
    if (all.empty()) return s;
    while (pos <= all.size()) {
        const std::size_t comma = std::min(all.find(',', pos), all.size());
        const std::string item = trim(std::string_view(all).substr(pos, comma - pos));
        pos = comma + 1;
        if (item.empty()) fail(ErrorCode::Parse, "empty entry in singularity spec");
        const std::size_t colon = item.find(':');
        const SingularityClass cls = SingularityClass::parse(trim(item.substr(0, colon)));
        mpz_class count = 1;
        if (colon != std::string::npos) {
            const std::string num = trim(item.substr(colon + 1));
            if (num.empty() || !std::all_of(num.begin(), num.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                fail(ErrorCode::Parse, "bad count in singularity spec: '" + item + "'");
            count = mpz_class(num);
        }
        auto it = std::find_if(s.entries.begin(), s.entries.end(), [&](const SpecEntry& e) { return e.cls == cls; });
        if (it == s.entries.end())
            s.entries.push_back({cls, count});
        else
            it->count += count;
    }
    return s;
}

std::string SingularitySpec::format() const {
    std::string out;
    for (const auto& e : entries) {
        if (!out.empty()) out += ',';
        out += e.cls.code() + ":" + e.count.get_str();
    }
    return out;
}

mpz_class SingularitySpec::total() const {
    mpz_class r = 0;
    for (const auto& e : entries) r += e.count;
    return r;
}

mpz_class SingularitySpec::sigma_tau() const {
    mpz_class r = 0;
    for (const auto& e : entries) r += e.count * tau_of(e.cls);
    return r;
}

unsigned SingularitySpec::max_tau() const {
    unsigned m = 0;
    for (const auto& e : entries) m = std::max(m, tau_of(e.cls));
    return m;
}

SingularitySpec SingularitySpec::scaled(const mpz_class& factor) const {
    SingularitySpec s = *this;
    for (auto& e : s.entries) e.count *= factor;
    return s;
}

SingularitySpec SingularitySpec::appended(const SingularityClass& cls, const mpz_class& count) const {
    SingularitySpec s = *this;
    auto it = std::find_if(s.entries.begin(), s.entries.end(), [&](const SpecEntry& e) { return e.cls == cls; });
    if (it == s.entries.end())
        s.entries.push_back({cls, count});
    else
        it->count += count;
    return s;
}

// ---------------------------------------------------------- dimensions

mpz_class dim_linear_system(long n, const mpz_class& d) {
    check_surface(n, d);
    if (d < n) return binomial(d + 3, 3) - 1;
    const mpz_class nn = n;
    return (nn * d * d + (4 * nn - nn * nn) * d) / 2 + (nn - 1) * (nn - 2) * (nn - 3) / 6;
}

mpz_class dim_linear_system_oracle(long n, const mpz_class& d) {
    check_surface(n, d);
    return binomial(d + 3, 3) - (d >= n ? binomial(d - n + 3, 3) : mpz_class(0)) - 1;
}

unsigned tau_of(const SingularityClass& cls) {
    if (!cls.is_simple()) fail(ErrorCode::InvalidArgument, "tau is tabulated for simple types only, got " + cls.name());
    return cls.index;
}

mpz_class surface_family_expdim(long n, const mpz_class& d, const SingularitySpec& spec) {
    return dim_linear_system(n, d) - spec.sigma_tau();
}

mpz_class plane_family_expdim(const mpz_class& d, const SingularitySpec& spec) {
    check_surface(1, d);
    return d * (d + 3) / 2 - spec.sigma_tau();
}

mpq_class westenberger_rhs(const mpz_class& d, unsigned m) {
    return canon(mpq_class(d * d, 2) - m * d - 3);
}

bool westenberger_nonempty_check(const mpz_class& d, const SingularitySpec& spec) {
    return mpq_class(spec.sigma_tau()) <= westenberger_rhs(d, spec.max_tau());
}

std::string_view to_string(Verdict v) noexcept {
    return v == Verdict::Obstructed ? "obstructed" : "not-concluded";
}

// ---------------------------------------------------------- obstruction window

ObstructionReport example1_analyze(long n, const mpz_class& d, const SingularitySpec& spec) {
    if (n < 2) fail(ErrorCode::InvalidArgument, "surface degree must be at least 2");
    check_surface(n, d);
    ObstructionReport r;
    r.n = n;
    r.d = d;
    r.spec = spec;
    r.m = spec.max_tau();
    r.sigma_tau = spec.sigma_tau();
    r.dim_dH = dim_linear_system(n, d);
    r.expdim = surface_family_expdim(n, d, spec.scaled(n));
    r.plane_expdim = plane_family_expdim(d, spec);
    const mpz_class nn = n;
    r.lower_bound = canon(mpq_class((nn - 1) * d, 2) - r.m);
    r.upper_bound = canon(mpq_class(nn * nn * nn - 6 * nn * nn + 5 * nn - 6, 6));
    r.window_lo = canon(mpq_class(d * d + (4 - nn) * d + 2, 2));
    r.window_hi = r.window_lo + (static_cast<long>(r.m) - 1);
    r.westenberger_rhs = westenberger_rhs(d, r.m);
    r.threshold_d = canon(mpq_class(nn * nn * nn - 6 * nn * nn + 5 * nn - 6 + 6 * r.m, 3 * nn - 3));

    r.hypothesis_n = n > 2 * static_cast<long>(r.m) + 4;
    const mpq_class st(r.sigma_tau);
    r.window_ok = r.window_lo <= st && st <= r.window_hi;
    r.westenberger_ok = st <= r.westenberger_rhs;
    r.threshold_ok = mpq_class(d) > r.threshold_d;
    r.n_gt_3k_plus_4 = n > 3 * static_cast<long>(r.m) + 4;

    if (!r.hypothesis_n) r.failures.push_back("hypothesis n>2m+4 fails");
    if (!r.window_ok) r.failures.push_back("sigma_tau outside the window");
    if (!r.westenberger_ok) r.failures.push_back("Westenberger bound fails");
    if (!r.threshold_ok) r.failures.push_back("d below the threshold");
    const bool exceeds = r.lower_bound > mpq_class(r.expdim);
    if (!exceeds) r.failures.push_back("lower bound does not exceed expdim");
    r.verdict = r.failures.empty() ? Verdict::Obstructed : Verdict::NotConcluded;
    return r;
}

std::vector<ObstructionReport> example1_scan(long n, const mpz_class& d_lo, const mpz_class& d_hi,
                                             const SingularityClass& type, const ScanOptions& opts) {
    const unsigned k = tau_of(type);
    if (d_lo > d_hi) fail(ErrorCode::InvalidArgument, "empty d range");
    if (opts.strict && n <= 3 * static_cast<long>(k) + 4) fail(ErrorCode::InvalidArgument, "n must exceed 3k+4");
    std::vector<ObstructionReport> out;
    for (mpz_class d = d_lo; d <= d_hi; ++d) {
        check_surface(n, d);
        const mpq_class w = canon(mpq_class(d * d + (4 - n) * d + 2, 2));
        mpz_class r = ceil_div(w, k);
        if (r < 0) r = 0;
        out.push_back(example1_analyze(n, d, SingularitySpec({{type, r}})));
    }
    return out;
}

// ---------------------------------------------------------- Hirano families

HiranoParams hirano_params(unsigned k, unsigned m) {
    if (k < 2 || k % 2 != 0) fail(ErrorCode::InvalidArgument, "k must be even and positive");
    if (m < 1) fail(ErrorCode::InvalidArgument, "m must be positive");
    mpz_class q = k + 1, qm, q2m;
    mpz_pow_ui(qm.get_mpz_t(), q.get_mpz_t(), m);
    q2m = qm * qm;
    const mpz_class num = 3 * q * (q2m - 1), den = q * q - 1;
    if (num % den != 0) fail(ErrorCode::Internal, "non-integral point count");
    return {2 * qm, num / den};
}

mpq_class hirano_leading_coefficient(unsigned k) {
    const mpz_class kk = k;
    return canon(2 - mpq_class(3 * (kk * kk + kk), kk * kk + 2 * kk));
}

HiranoReport hirano_analyze(long n, unsigned k, unsigned m) {
    if (n < 2) fail(ErrorCode::InvalidArgument, "surface degree must be at least 2");
    HiranoReport h;
    h.n = n;
    h.k = k;
    h.m = m;
    h.params = hirano_params(k, m);
    h.spec = SingularitySpec({{SingularityClass::a(k), n * h.params.r}});
    h.dim_dH = dim_linear_system(n, h.params.d);
    h.sigma_tau = h.spec.sigma_tau();
    h.expdim = h.dim_dH - h.sigma_tau;
    h.leading_coefficient = hirano_leading_coefficient(k);
    if (h.expdim < 0) {
        h.verdict = Verdict::Obstructed;
        h.note = "non-empty by construction, expected dimension negative";
    } else {
        h.note = "expected dimension nonnegative";
    }
    return h;
}

// ---------------------------------------------------------- e* and T-smoothness

EStar e_star(const SingularityClass& cls) {
    if (!cls.is_simple()) fail(ErrorCode::InvalidArgument, "e* is tabulated for simple types; use e_star_bounds with mu and delta");
    const unsigned k = cls.index;
    switch (cls.kind) {
    case singularity::SingKind::A:
        if (k == 1) return {2, false};
        if (k == 2) return {3, false};
        if (k <= 7) return {4, false};
        if (k <= 10) return {5, false};
        return {*e_star_bound_formula(cls), true};
    case singularity::SingKind::D:
        if (k == 4) return {3, false};
        if (k == 5) return {4, false};
        if (k <= 10) return {5, false};
        if (k <= 13) return {6, false};
        return {*e_star_bound_formula(cls), true};
    default:
        return {k == 8 ? 5u : 4u, false};
    }
}

std::optional<unsigned> e_star_bound_formula(const SingularityClass& cls) {
    if (cls.kind == singularity::SingKind::A) return static_cast<unsigned>(2 * isqrt(cls.index + 5).get_ui());
    if (cls.kind == singularity::SingKind::D) return static_cast<unsigned>(2 * isqrt(cls.index + 7).get_ui() + 1);
    return std::nullopt;
}

EStarBounds e_star_bounds(const mpz_class& mu, const mpz_class& delta) {
    if (mu < 1 || delta < 1) fail(ErrorCode::InvalidArgument, "mu and delta must be positive");
    EStarBounds b;
    b.analytic = mpz_class(isqrt(9 * mu) - 2).get_si();
    const mpz_class t = 27 * delta / 2;
    b.topological = mpz_class(isqrt(t) - 1).get_si();
    return b;
}

Condition1 tsmooth_condition1(long n, const mpz_class& d, const SingularitySpec& spec) {
    check_surface(n, d);
    Condition1 c;
    c.lhs = 0;
    for (const auto& e : spec.entries) {
        const EStar s = e_star(e.cls);
        c.lhs += e.count * (s.value * (s.value + 1) / 2);
        if (s.upper_bound && e.count > 0) c.conservative = true;
    }
    c.rhs = d == 1 ? mpz_class(0) : dim_linear_system(n, d - 1);
    c.holds = c.lhs < c.rhs;
    if (c.holds) c.caveat = "condition satisfied; a T-smooth component also needs d >= d(S), which is not effective";
    if (c.conservative) {
        if (!c.caveat.empty()) c.caveat += "; ";
        c.caveat += "e* taken from upper bounds, lhs is an upper bound";
    }
    return c;
}

Condition2 tsmooth_condition2(long n, const mpz_class& d, const SingularitySpec& spec) {
    Condition2 c;
    c.lhs = 2 * spec.sigma_tau();
    c.rhs = dim_linear_system(n, d);
    c.ratio = canon(mpq_class(c.lhs, c.rhs));
    c.holds = c.lhs <= c.rhs;
    c.note = "leading-order form, the o(sqrt(tau)) term is dropped";
    return c;
}

PairCheck existence_precondition_pairs(long n, const mpz_class& d, const SingularitySpec& spec) {
    check_surface(n, d);
    PairCheck p;
    p.lhs = d * n - mpz_class((n - 1) * (n - 2) / 2);
    for (const auto& e : spec.entries)
        if (e.count > 0) p.worst = std::max(p.worst, 2 * e_star(e.cls).value);
    p.holds = p.lhs >= p.worst;
    return p;
}

GapReport gap_report(long n, const mpz_class& d, const SingularitySpec& spec) {
    GapReport g;
    g.n = n;
    g.d = d;
    g.spec = spec;
    g.cond1 = tsmooth_condition1(n, d, spec);
    g.cond2 = tsmooth_condition2(n, d, spec);
    g.cond1_ratio = g.cond1.rhs == 0 ? mpq_class(0) : canon(mpq_class(g.cond1.lhs, g.cond1.rhs));
    for (const auto& e : spec.entries) {
        GapItem it;
        it.cls = e.cls;
        it.count = e.count;
        it.tau = tau_of(e.cls);
        it.e = e_star(e.cls);
        it.tau_part = e.count * it.tau;
        it.cond1_part = e.count * (it.e.value * (it.e.value + 1) / 2);
        g.items.push_back(std::move(it));
    }
    if (g.cond2.holds)
        g.summary = "condition 2 holds, ratio " + str(g.cond2.ratio) + " <= 1";
    else
        g.summary = "condition 2 fails by the factor " + str(g.cond2.ratio) + " (about " + approx(g.cond2.ratio) + ")";
    g.summary += g.cond1.holds ? "; condition 1 holds" : "; condition 1 fails by the factor " + str(g.cond1_ratio) +
                                                            " (about " + approx(g.cond1_ratio) + ")";
    return g;
}

// ---------------------------------------------------------- output

nlohmann::json to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

nlohmann::json to_json(const mpq_class& q) {
    if (q.get_den() == 1) return to_json(mpz_class(q.get_num()));
    return q.get_str();
}

nlohmann::json to_json(const ObstructionReport& r) {
    return {
        {"n", r.n},
        {"d", to_json(r.d)},
        {"spec", r.spec.format()},
        {"r", to_json(r.spec.total())},
        {"m", r.m},
        {"sigma_tau", to_json(r.sigma_tau)},
        {"dim_dH", to_json(r.dim_dH)},
        {"expdim", to_json(r.expdim)},
        {"plane_expdim", to_json(r.plane_expdim)},
        {"lower_bound", to_json(r.lower_bound)},
        {"upper_bound", to_json(r.upper_bound)},
        {"window_lo", to_json(r.window_lo)},
        {"window_hi", to_json(r.window_hi)},
        {"westenberger_rhs", to_json(r.westenberger_rhs)},
        {"threshold_d", to_json(r.threshold_d)},
        {"checks",
         {{"hypothesis_n", r.hypothesis_n},
          {"window", r.window_ok},
          {"westenberger", r.westenberger_ok},
          {"threshold", r.threshold_ok},
          {"n_gt_3k_plus_4", r.n_gt_3k_plus_4}}},
        {"verdict", std::string(to_string(r.verdict))},
        {"failures", r.failures},
    };
}

nlohmann::json to_json(const HiranoReport& r) {
    return {
        {"n", r.n},
        {"k", r.k},
        {"m", r.m},
        {"d", to_json(r.params.d)},
        {"r", to_json(r.params.r)},
        {"spec", r.spec.format()},
        {"dim_dH", to_json(r.dim_dH)},
        {"sigma_tau", to_json(r.sigma_tau)},
        {"expdim", to_json(r.expdim)},
        {"leading_coefficient", to_json(r.leading_coefficient)},
        {"verdict", std::string(to_string(r.verdict))},
        {"note", r.note},
    };
}

nlohmann::json to_json(const Condition1& c) {
    return {{"holds", c.holds}, {"cond1_lhs", to_json(c.lhs)}, {"cond1_rhs", to_json(c.rhs)},
            {"conservative", c.conservative}, {"caveat", c.caveat}};
}

nlohmann::json to_json(const Condition2& c) {
    return {{"holds", c.holds}, {"lhs", to_json(c.lhs)}, {"dim_dH", to_json(c.rhs)},
            {"cond2_ratio", to_json(c.ratio)}, {"note", c.note}};
}

nlohmann::json to_json(const GapReport& g) {
    nlohmann::json items = nlohmann::json::array();
    for (const auto& it : g.items)
        items.push_back({{"type", it.cls.code()},
                         {"count", to_json(it.count)},
                         {"tau", it.tau},
                         {"e_star", it.e.value},
                         {"e_star_is_bound", it.e.upper_bound},
                         {"tau_part", to_json(it.tau_part)},
                         {"cond1_part", to_json(it.cond1_part)}});
    return {{"n", g.n},
            {"d", to_json(g.d)},
            {"spec", g.spec.format()},
            {"condition1", to_json(g.cond1)},
            {"condition2", to_json(g.cond2)},
            {"cond1_ratio", to_json(g.cond1_ratio)},
            {"items", items},
            {"summary", g.summary}};
}

std::string scan_csv_header() {
    return "n,d,spec,r,sigma_tau,dim_dH,expdim,plane_expdim,lower_bound,upper_bound,window_lo,window_hi,"
           "westenberger_rhs,threshold_d,verdict,failures";
}

std::string to_csv_row(const ObstructionReport& r) {
    std::string failures;
    for (const auto& f : r.failures) failures += (failures.empty() ? "" : "; ") + f;
    const std::vector<std::string> cols = {
        std::to_string(r.n), str(r.d), csv_field(r.spec.format()), str(r.spec.total()), str(r.sigma_tau),
        str(r.dim_dH), str(r.expdim), str(r.plane_expdim), str(r.lower_bound), str(r.upper_bound),
        str(r.window_lo), str(r.window_hi), str(r.westenberger_rhs), str(r.threshold_d),
        std::string(to_string(r.verdict)), csv_field(failures)};
    std::string out;
    for (const auto& c : cols) out += (out.empty() ? "" : ",") + c;
    return out;
}

std::string hirano_csv_header() { return "n,k,m,d,r,dim_dH,sigma_tau,expdim,leading_coefficient,verdict"; }

std::string to_csv_row(const HiranoReport& r) {
    return std::to_string(r.n) + "," + std::to_string(r.k) + "," + std::to_string(r.m) + "," + str(r.params.d) + "," +
           str(r.params.r) + "," + str(r.dim_dH) + "," + str(r.sigma_tau) + "," + str(r.expdim) + "," +
           str(r.leading_coefficient) + "," + std::string(to_string(r.verdict));
}

} // namespace eqlab::family
