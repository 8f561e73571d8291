#include "eqlab/singularity.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <tuple>

#include "eqlab/error.hpp"
#include "eqlab/factor.hpp"
#include "eqlab/resultant.hpp"
#include "eqlab/series.hpp"
#include "eqlab/upoly.hpp"

namespace eqlab::singularity {

using algebra::Exponents;
using algebra::Matrix;
using algebra::Term;
using algebra::UPoly;

// ------------------------------------------------------------------ classes

CurveGerm::CurveGerm(Polynomial p, std::optional<unsigned> ord) : poly(std::move(p)), order(ord) {
    if (poly.nvars() != 2) fail(ErrorCode::ArityMismatch, "a curve germ has two local variables");
    if (order) poly = poly.truncated(*order);
    if (!poly.constant_term().is_zero()) fail(ErrorCode::DomainError, "germ does not vanish at the origin");
}

SingularityClass SingularityClass::a(unsigned k) {
    if (k < 1) fail(ErrorCode::InvalidArgument, "A_k needs k >= 1");
    return {SingKind::A, k, 0};
}

SingularityClass SingularityClass::d(unsigned k) {
    if (k < 4) fail(ErrorCode::InvalidArgument, "D_k needs k >= 4");
    return {SingKind::D, k, 0};
}

SingularityClass SingularityClass::e(unsigned k) {
    if (k < 6 || k > 8) fail(ErrorCode::InvalidArgument, "E_k needs k in {6, 7, 8}");
    return {SingKind::E, k, 0};
}

SingularityClass SingularityClass::parse(std::string_view code) {
    std::string s;
    for (char c : code)
        if (c != '_' && !std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::tolower(c));
    if (s.size() < 2 || !std::all_of(s.begin() + 1, s.end(), [](unsigned char c) { return std::isdigit(c); }))
        fail(ErrorCode::Parse, "bad singularity type '" + std::string(code) + "' (expected a1, d4, e6, ...)");
    const unsigned long k = std::stoul(s.substr(1));
    if (k > 100000) fail(ErrorCode::Parse, "singularity index too large");
    switch (s[0]) {
    case 'a': return a(static_cast<unsigned>(k));
    case 'd': return d(static_cast<unsigned>(k));
    case 'e': return e(static_cast<unsigned>(k));
    default: fail(ErrorCode::Parse, "bad singularity type '" + std::string(code) + "'");
    }
}

std::string SingularityClass::name() const {
    switch (kind) {
    case SingKind::Smooth: return "smooth";
    case SingKind::A: return "A_" + std::to_string(index);
    case SingKind::D: return "D_" + std::to_string(index);
    case SingKind::E: return "E_" + std::to_string(index);
    case SingKind::NonSimple:
        return "non-simple(mu=" + std::to_string(index) + ", corank=" + std::to_string(corank) + ")";
    }
    return "?";
}

std::string SingularityClass::code() const {
    switch (kind) {
    case SingKind::A: return "a" + std::to_string(index);
    case SingKind::D: return "d" + std::to_string(index);
    case SingKind::E: return "e" + std::to_string(index);
    default: fail(ErrorCode::InvalidArgument, "only simple classes have a type code");
    }
}

bool operator<(const SingularityClass& a, const SingularityClass& b) {
    return std::tie(a.kind, a.index, a.corank) < std::tie(b.kind, b.index, b.corank);
}

Polynomial normal_form(const SingularityClass& c) {
    const Field q = Field::rationals();
    auto mono = [&](std::uint32_t i, std::uint32_t j, long coef) {
        return Polynomial::monomial(q, 2, Exponents{i, j}, q.from_int(coef));
    };
    switch (c.kind) {
    case SingKind::A: return mono(2, 0, 1) + mono(0, c.index + 1, -1);
    case SingKind::D: return mono(2, 1, 1) + mono(0, c.index - 1, -1);
    case SingKind::E:
        if (c.index == 6) return mono(3, 0, 1) + mono(0, 4, -1);
        if (c.index == 7) return mono(3, 0, 1) + mono(1, 3, -1);
        return mono(3, 0, 1) + mono(0, 5, -1);
    default: fail(ErrorCode::InvalidArgument, "normal forms exist for simple classes only");
    }
}

// ---------------------------------------------------------- jet algebra

namespace {

unsigned column(std::uint32_t a, std::uint32_t b) {
    const unsigned d = a + b;
    return d * (d + 1) / 2 + b;
}

unsigned degree_of_column(unsigned c) {
    unsigned d = 0;
    while ((d + 1) * (d + 2) / 2 <= c) ++d;
    return d;
}

struct FieldOps {
    const Field& k;
    using T = Scalar;
    T from(const Scalar& s) const { return s; }
    bool is_zero(const T& a) const { return a.is_zero(); }
    T mul(const T& a, const T& b) const { return k.mul(a, b); }
    T sub(const T& a, const T& b) const { return k.sub(a, b); }
    T neg(const T& a) const { return k.neg(a); }
    T inv(const T& a) const { return k.inv(a); }
};

// row <- row - f * pivot, where both start at the same column.
template <class Ops>
std::vector<std::pair<unsigned, typename Ops::T>> subtract(const Ops& ops,
                                                           const std::vector<std::pair<unsigned, typename Ops::T>>& row,
                                                           const typename Ops::T& f,
                                                           const std::vector<std::pair<unsigned, typename Ops::T>>& pivot) {
    std::vector<std::pair<unsigned, typename Ops::T>> out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
            out.push_back(row[i++]);
        } else if (i == row.size() || pivot[j].first < row[i].first) {
            out.emplace_back(pivot[j].first, ops.neg(ops.mul(f, pivot[j].second)));
            ++j;
        } else {
            auto v = ops.sub(row[i].second, ops.mul(f, pivot[j].second));
            if (!ops.is_zero(v)) out.emplace_back(row[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

// Semi-echelon form of {m * g : deg m < n} in k[x,y]/m^n with the lowest
// column of each row as pivot. Rows are added by increasing multiplier
// degree; a row from a multiplier of degree md starts in degree >= md + o
// (o the least order of a generator), so once all multipliers of degree
// md are in, the pivot counts in degrees <= md + o are final and the
// certification test can run on them.
template <class Ops>
std::optional<std::pair<unsigned, unsigned>> certify(const Ops& ops, const std::vector<Polynomial>& gens, unsigned n) {
    using Row = std::vector<std::pair<unsigned, typename Ops::T>>;
    std::vector<const Polynomial*> live;
    unsigned o = n;
    for (const auto& g : gens)
        if (!g.is_zero()) {
            live.push_back(&g);
            o = std::min(o, static_cast<unsigned>(g.order()));
        }
    if (live.empty()) return std::nullopt;
    std::map<unsigned, Row> pivots;
    std::vector<unsigned> per_degree(n, 0);
    unsigned next = 0, codim = 0;
    for (unsigned md = 0; md < n; ++md) {
        for (std::uint32_t i = 0; i <= md; ++i) {
            const std::uint32_t mx = md - i, my = i;
            for (const Polynomial* g : live) {
                Row row;
                for (const auto& t : g->terms()) {
                    const std::uint32_t a = t.exps[0] + mx, b = t.exps[1] + my;
                    if (a + b >= n) continue;
                    row.emplace_back(column(a, b), ops.from(t.coef));
                }
                std::sort(row.begin(), row.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
                while (!row.empty()) {
                    auto it = pivots.find(row.front().first);
                    if (it == pivots.end()) break;
                    row = subtract(ops, row, row.front().second, it->second);
                }
                if (row.empty()) continue;
                const auto inv = ops.inv(row.front().second);
                for (auto& e : row) e.second = ops.mul(e.second, inv);
                ++per_degree[degree_of_column(row.front().first)];
                pivots.emplace(row.front().first, std::move(row));
            }
        }
        for (; next <= md + o && next < n; ++next) {
            if (per_degree[next] == next + 1) return std::make_pair(codim, next);
            codim += next + 1 - per_degree[next];
        }
    }
    return std::nullopt;
}

// Fraction-free variant over the rationals: generators are scaled to
// integer coefficients, rows are combined as lc(p)*row - lc(row)*p and kept
// primitive. Same pivot pattern as the field version.
std::optional<std::pair<unsigned, unsigned>> certify_integral(const std::vector<Polynomial>& gens, unsigned n) {
    using Row = std::vector<std::pair<unsigned, mpz_class>>;
    std::vector<std::vector<std::pair<std::pair<std::uint32_t, std::uint32_t>, mpz_class>>> ints;
    unsigned o = n;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        mpz_class den = 1;
        for (const auto& t : g.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coef.base_value().get_den_mpz_t());
        std::vector<std::pair<std::pair<std::uint32_t, std::uint32_t>, mpz_class>> terms;
        for (const auto& t : g.terms()) {
            const mpq_class c = t.coef.base_value() * den;
            terms.push_back({{t.exps[0], t.exps[1]}, c.get_num()});
        }
        ints.push_back(std::move(terms));
        o = std::min(o, static_cast<unsigned>(g.order()));
    }
    if (ints.empty()) return std::nullopt;
    auto make_primitive = [](Row& row) {
        mpz_class c = 0;
        for (const auto& e : row) {
            mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), e.second.get_mpz_t());
            if (c == 1) return;
        }
        if (row.front().second < 0) c = -c;
        for (auto& e : row) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), c.get_mpz_t());
    };
    std::map<unsigned, Row> pivots;
    std::vector<unsigned> per_degree(n, 0);
    unsigned next = 0, codim = 0;
    Row tmp;
    for (unsigned md = 0; md < n; ++md) {
        for (std::uint32_t i = 0; i <= md; ++i) {
            const std::uint32_t mx = md - i, my = i;
            for (const auto& g : ints) {
                Row row;
                for (const auto& [e, c] : g) {
                    const std::uint32_t a = e.first + mx, b = e.second + my;
                    if (a + b >= n) continue;
                    row.emplace_back(column(a, b), c);
                }
                std::sort(row.begin(), row.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
                while (!row.empty()) {
                    auto it = pivots.find(row.front().first);
                    if (it == pivots.end()) break;
                    const Row& pv = it->second;
                    const mpz_class g = gcd(row.front().second, pv.front().second);
                    const mpz_class fr = pv.front().second / g, fp = row.front().second / g;
                    tmp.clear();
                    std::size_t a = 1, b = 1;
                    while (a < row.size() || b < pv.size()) {
                        if (b == pv.size() || (a < row.size() && row[a].first < pv[b].first)) {
                            tmp.emplace_back(row[a].first, fr * row[a].second);
                            ++a;
                        } else if (a == row.size() || pv[b].first < row[a].first) {
                            tmp.emplace_back(pv[b].first, -fp * pv[b].second);
                            ++b;
                        } else {
                            mpz_class v = fr * row[a].second - fp * pv[b].second;
                            if (v != 0) tmp.emplace_back(row[a].first, std::move(v));
                            ++a;
                            ++b;
                        }
                    }
                    row.swap(tmp);
                    if (!row.empty()) make_primitive(row);
                }
                if (row.empty()) continue;
                make_primitive(row);
                ++per_degree[degree_of_column(row.front().first)];
                pivots.emplace(row.front().first, std::move(row));
            }
        }
        for (; next <= md + o && next < n; ++next) {
            if (per_degree[next] == next + 1) return std::make_pair(codim, next);
            codim += next + 1 - per_degree[next];
        }
    }
    return std::nullopt;
}

} // namespace

LocalAlgebraDimension local_algebra_dimension(const std::vector<Polynomial>& generators,
                                              std::optional<unsigned> known_below, const JetOptions& opts) {
    if (generators.empty()) fail(ErrorCode::InvalidArgument, "local algebra needs generators");
    for (const auto& g : generators) {
        if (g.nvars() != 2) fail(ErrorCode::ArityMismatch, "local algebra generators must be bivariate");
        if (g.field() != generators.front().field()) fail(ErrorCode::FieldMismatch, "generators over different fields");
    }
    if (opts.start < 2 || opts.ceiling < opts.start) fail(ErrorCode::InvalidArgument, "bad jet options");
    const Field& k = generators.front().field();
    const unsigned cap = known_below ? std::min(*known_below, opts.ceiling) : opts.ceiling;
    LocalAlgebraDimension out;
    if (cap < 1) return out;
    for (unsigned n = std::min(opts.start, cap);; n = std::min(2 * n, cap)) {
        out.truncation = n;
        const auto r = k.is_rational() ? certify_integral(generators, n) : certify(FieldOps{k}, generators, n);
        if (r) {
            out.value = r->first;
            out.certified_degree = r->second;
            return out;
        }
        if (n >= cap) return out;
    }
}

LocalAlgebraDimension milnor_number(const CurveGerm& g, const JetOptions& opts) {
    const std::optional<unsigned> known = g.order ? std::optional<unsigned>(*g.order - 1) : std::nullopt;
    return local_algebra_dimension({algebra::differentiate(g.poly, 0), algebra::differentiate(g.poly, 1)}, known, opts);
}

LocalAlgebraDimension tjurina_number(const CurveGerm& g, const JetOptions& opts) {
    const std::optional<unsigned> known = g.order ? std::optional<unsigned>(*g.order - 1) : std::nullopt;
    return local_algebra_dimension({g.poly, algebra::differentiate(g.poly, 0), algebra::differentiate(g.poly, 1)},
                                   known, opts);
}

unsigned hessian_corank(const CurveGerm& g) {
    const Field& k = g.poly.field();
    const Scalar a = g.poly.coefficient({2, 0}), b = g.poly.coefficient({1, 1}), c = g.poly.coefficient({0, 2});
    if (a.is_zero() && b.is_zero() && c.is_zero()) return 2;
    const Scalar det = k.sub(k.mul(k.from_int(4), k.mul(a, c)), k.mul(b, b));
    return det.is_zero() ? 1 : 0;
}

Classification classify_simple(const CurveGerm& g, const JetOptions& opts) {
    const Field& k = g.poly.field();
    Classification out;
    if (!g.poly.coefficient({1, 0}).is_zero() || !g.poly.coefficient({0, 1}).is_zero()) {
        out.cls = SingularityClass::smooth();
        return out;
    }
    if (g.order && *g.order < 4) fail(ErrorCode::Undetermined, "germ is known only below degree 4");
    const auto mu = milnor_number(g, opts);
    if (!mu.value) fail(ErrorCode::Undetermined, "Milnor number not certified below the jet ceiling");
    const auto tau = tjurina_number(g, opts);
    if (!tau.value) fail(ErrorCode::Undetermined, "Tjurina number not certified below the jet ceiling");
    out.mu = *mu.value;
    out.tau = *tau.value;
    out.corank = hessian_corank(g);

    if (out.corank == 0) {
        out.cls = SingularityClass::a(1);
    } else if (out.corank == 1) {
        out.cls = SingularityClass::a(out.mu);
    } else {
        // Binary cubic a x^3 + b x^2 y + c x y^2 + d y^3.
        const Scalar a = g.poly.coefficient({3, 0}), b = g.poly.coefficient({2, 1});
        const Scalar c = g.poly.coefficient({1, 2}), d = g.poly.coefficient({0, 3});
        auto mul = [&](std::initializer_list<Scalar> xs, long coef) {
            Scalar r = k.from_int(coef);
            for (const auto& x : xs) r = k.mul(r, x);
            return r;
        };
        const bool cubic_zero = a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero();
        Scalar disc = k.zero();
        for (const Scalar& t : {mul({b, b, c, c}, 1), mul({a, c, c, c}, -4), mul({b, b, b, d}, -4),
                                mul({a, a, d, d}, -27), mul({a, b, c, d}, 18)})
            disc = k.add(disc, t);
        // The Hessian covariant of the cubic vanishes exactly for a cube.
        const bool cube = k.sub(mul({b, b}, 1), mul({a, c}, 3)).is_zero() &&
                          k.sub(mul({b, c}, 1), mul({a, d}, 9)).is_zero() &&
                          k.sub(mul({c, c}, 1), mul({b, d}, 3)).is_zero();
        if (cubic_zero) out.cls = SingularityClass::non_simple(out.mu, 2);
        else if (!disc.is_zero()) out.cls = SingularityClass::d(4);
        else if (!cube) out.cls = out.mu >= 4 ? SingularityClass::d(out.mu) : SingularityClass::non_simple(out.mu, 2);
        else if (out.mu >= 6 && out.mu <= 8) out.cls = SingularityClass::e(out.mu);
        else out.cls = SingularityClass::non_simple(out.mu, 2);
    }
    if (out.cls.is_simple() && (out.cls.index != out.mu || out.tau != out.mu))
        fail(ErrorCode::Internal, "invariants contradict the class " + out.cls.name() + ": mu=" +
                                      std::to_string(out.mu) + ", tau=" + std::to_string(out.tau));
    return out;
}

// ---------------------------------------------------------- singular locus

namespace {

std::vector<mpq_class> as_vector(const Scalar& s, std::size_t e) {
    std::vector<mpq_class> v(e);
    for (std::size_t i = 0; i < s.coeffs().size() && i < e; ++i) v[i] = s.coeffs()[i];
    return v;
}

// Re-expresses a packet point over Q(alpha) for its first coordinate alpha
// that generates the field, so conjugate packets print canonically.
ProjPoint simplify_packet(const ProjPoint& p) {
    const Field& k = p.field();
    const std::size_t e = k.degree();
    if (e <= 1) return p;
    const Field q = Field::rationals();
    for (std::size_t idx = 0; idx < p.size(); ++idx) {
        if (p[idx].is_base()) continue;
        // Columns: coordinates of alpha^0 .. alpha^(e-1).
        Matrix a(q, e, e);
        Scalar pw = k.one();
        for (std::size_t j = 0; j < e; ++j) {
            const auto v = as_vector(pw, e);
            for (std::size_t i = 0; i < e; ++i) a.at(i, j) = q.from_rational(v[i]);
            pw = k.mul(pw, p[idx]);
        }
        if (a.determinant().is_zero()) continue;
        auto solve = [&](const Scalar& s) {
            const auto v = as_vector(s, e);
            std::vector<Scalar> rhs;
            for (const auto& x : v) rhs.push_back(q.from_rational(x));
            return a.solve(rhs);
        };
        const auto top = solve(pw);  // alpha^e in the power basis
        std::vector<mpq_class> minpoly(e + 1);
        for (std::size_t j = 0; j < e; ++j) minpoly[j] = -top[j].base_value();
        minpoly[e] = 1;
        const Field nk = Field::extension(minpoly, "t");
        std::vector<Scalar> coords;
        for (std::size_t i = 0; i < p.size(); ++i) {
            const auto c = solve(p[i]);
            std::vector<mpq_class> cv;
            for (const auto& x : c) cv.push_back(x.base_value());
            coords.push_back(nk.from_coeffs(cv));
        }
        return ProjPoint(nk, coords);
    }
    return p;
}

std::string sort_key(const SingularPointRecord& r) {
    return std::to_string(r.point.field().degree()) + "|" + r.point.field().descriptor() + "|" + r.point.format();
}

Matrix random_frame(std::mt19937_64& rng, long box) {
    const Field q = Field::rationals();
    std::uniform_int_distribution<long> u(-box, box);
    while (true) {
        std::vector<long> e(9);
        for (auto& v : e) v = u(rng);
        Matrix m = Matrix::from_ints(q, 3, 3, e);
        if (!m.determinant().is_zero()) return m;
    }
}

} // namespace

std::vector<SingularPointRecord> singular_locus(const Polynomial& f, const LocusOptions& opts) {
    const Field q = Field::rationals();
    if (f.nvars() != 3 || !f.is_homogeneous() || f.degree() < 1)
        fail(ErrorCode::InvalidArgument, "singular locus needs a homogeneous ternary form");
    if (!f.field().is_rational()) fail(ErrorCode::Unsupported, "singular locus is computed over the rationals");
    if (algebra::squarefree_part(f).degree() != f.degree())
        fail(ErrorCode::NonIsolated, "non-isolated singularities: the curve has a multiple component");
    const unsigned d = static_cast<unsigned>(f.degree());
    std::vector<SingularPointRecord> out;
    if (d < 2) return out;

    std::mt19937_64 rng(opts.seed);
    for (unsigned attempt = 0; attempt < std::max(1u, opts.retries); ++attempt) {
        const Matrix l = random_frame(rng, opts.box);
        const Polynomial g = algebra::linear_change(f, l);
        const std::vector<Scalar> y_axis = {q.zero(), q.one(), q.zero()};
        if (g.evaluate(y_axis).is_zero()) continue;
        // No singular point on the line at infinity z = 0.
        Polynomial at_inf = g.evaluate_var(2, q.zero());
        for (std::size_t v = 0; v < 3; ++v) at_inf = algebra::gcd(at_inf, algebra::differentiate(g, v).evaluate_var(2, q.zero()));
        if (!at_inf.is_constant()) continue;

        const Polynomial a = algebra::dehomogenize(g, 2, q.one());
        const Polynomial ax = algebra::differentiate(a, 0), ay = algebra::differentiate(a, 1);
        const Polynomial elim = algebra::gcd(algebra::resultant(a, ay, 1), algebra::resultant(ax, ay, 1));
        if (elim.is_zero()) fail(ErrorCode::NonIsolated, "non-isolated singularities: eliminant vanishes identically");
        if (elim.is_constant()) return out;

        bool bad_frame = false;
        std::vector<SingularPointRecord> found;
        for (const auto& fac : algebra::factor(UPoly::from_polynomial(elim, 0)).factors) {
            const UPoly& p = fac.poly;
            Field k = q;
            Scalar x0;
            if (p.degree() == 1) {
                x0 = q.neg(p.coeff(0));
            } else {
                std::vector<mpq_class> m;
                for (const auto& c : p.coeffs()) m.push_back(c.base_value());
                k = Field::extension(m, "s");
                x0 = k.generator();
            }
            auto in_y = [&](const Polynomial& h) {
                return UPoly::from_polynomial(h.coerce(k).evaluate_var(0, x0), 1);
            };
            const UPoly common = algebra::gcd(in_y(a), algebra::gcd(in_y(ax), in_y(ay)));
            if (common.degree() <= 0) continue;  // spurious factor of the eliminant
            if (common.degree() > 1) {
                bad_frame = true;
                break;
            }
            const Scalar y0 = k.neg(common.coeff(0));
            const std::vector<Scalar> local = {x0, y0, k.one()};
            const ProjPoint pt(k, geometry::coerce(l, k).apply(local));
            SingularPointRecord rec{simplify_packet(pt), fac.multiplicity, std::nullopt, std::nullopt};
            found.push_back(std::move(rec));
        }
        if (bad_frame) continue;
        std::sort(found.begin(), found.end(),
                  [](const SingularPointRecord& x, const SingularPointRecord& y) { return sort_key(x) < sort_key(y); });
        if (opts.analyze)
            for (auto& r : found) {
                r.germ = local_germ(f, r.point);
                r.invariants = classify_simple(*r.germ, opts.jets);
            }
        return found;
    }
    fail(ErrorCode::Undetermined, "no generic frame found for the singular locus within the retry budget");
}

CurveGerm local_germ(const Polynomial& f, const ProjPoint& p) {
    if (f.nvars() != p.size()) fail(ErrorCode::ArityMismatch, "point and curve dimensions differ");
    if (f.nvars() != 3) fail(ErrorCode::ArityMismatch, "local germs are taken of plane curves");
    const Field& k = p.field();
    const Polynomial fk = f.field() == k ? f : f.coerce(k);
    const std::size_t pivot = p.pivot();
    std::vector<Polynomial> images;
    std::size_t next = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        if (i == pivot) images.push_back(Polynomial::constant(k, 2, k.one()));
        else images.push_back(Polynomial::variable(k, 2, next++) + Polynomial::constant(k, 2, p[i]));
    }
    const Polynomial g = fk.compose(images);
    if (!g.constant_term().is_zero()) fail(ErrorCode::DomainError, "point is not on the curve");
    return CurveGerm(g);
}

Polynomial dual_curve(const Polynomial& f) {
    if (f.nvars() != 3 || !f.is_homogeneous() || f.degree() < 2)
        fail(ErrorCode::InvalidArgument, "dual curve needs a homogeneous ternary form of degree >= 2");
    const Field& k = f.field();
    // Variables (x, a, b, c); the line aX + bY + cZ = 0 through (c*x : c : -(a*x + b)).
    const Polynomial x = Polynomial::variable(k, 4, 0), a = Polynomial::variable(k, 4, 1);
    const Polynomial b = Polynomial::variable(k, 4, 2), c = Polynomial::variable(k, 4, 3);
    const std::vector<Polynomial> images = {c * x, c, -(a * x + b)};
    const Polynomial h = f.compose(images);
    const auto coeffs = h.coefficients_in(0);
    if (coeffs.size() < 3) fail(ErrorCode::DomainError, "restriction to a general line is degenerate");
    Polynomial disc = algebra::resultant(h, algebra::differentiate(h, 0), 0);
    disc = algebra::divide_exact(disc, coeffs.back());
    if (disc.is_zero()) fail(ErrorCode::DomainError, "curve has a multiple component");
    disc = algebra::strip_variable_power(algebra::drop_variable(disc, 0), 2);
    return algebra::squarefree_part(disc);
}

// ------------------------------------------------------------ transfer

CurveGerm surface_chart_germ(const geometry::ConeSection& cs, const ProjPoint& q, unsigned order) {
    if (q.size() != 4) fail(ErrorCode::ArityMismatch, "fiber point must lie in P^3");
    if (order < 2) fail(ErrorCode::InvalidArgument, "chart order must be at least 2");
    const Field& k = q.field();
    auto to_k = [&](const Polynomial& p) { return p.field() == k ? p : p.coerce(k); };
    const Polynomial big_f = to_k(cs.cone), big_g = to_k(cs.surface);
    if (!big_f.evaluate(q.coords()).is_zero() || !big_g.evaluate(q.coords()).is_zero())
        fail(ErrorCode::DomainError, "point is not on both the cone and the surface");

    const std::size_t pivot = q.pivot();
    std::vector<Polynomial> images;
    std::size_t next = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        if (i == pivot) images.push_back(Polynomial::constant(k, 3, k.one()));
        else images.push_back(Polynomial::variable(k, 3, next++) + Polynomial::constant(k, 3, q[i]));
    }
    const Polynomial fl = big_f.compose(images), gl = big_g.compose(images);
    const std::vector<Scalar> origin(3, k.zero());
    std::size_t solve = 3;
    for (std::size_t v = 0; v < 3 && solve == 3; ++v)
        if (!algebra::differentiate(gl, v).evaluate(origin).is_zero()) solve = v;
    if (solve == 3) fail(ErrorCode::NotSmooth, "surface singular at point");

    const algebra::TruncatedSeries s = algebra::implicit_series_solve(gl, origin, solve, order);
    std::vector<algebra::TruncatedSeries> subst;
    std::size_t local = 0;
    for (std::size_t v = 0; v < 3; ++v) {
        if (v == solve) subst.push_back(s);
        else subst.emplace_back(Polynomial::variable(k, 2, local++), order);
    }
    return CurveGerm(algebra::compose_truncated(fl, subst, order).poly(), order);
}

std::string_view to_string(TransferVerdict v) noexcept {
    switch (v) {
    case TransferVerdict::SameType: return "same-type";
    case TransferVerdict::Different: return "different";
    case TransferVerdict::Unresolved: return "unresolved";
    }
    return "?";
}

bool TransferReport::any_different() const {
    for (const auto& f : fibers)
        for (const auto& p : f.points)
            if (p.verdict == TransferVerdict::Different) return true;
    return false;
}

bool TransferReport::any_unresolved() const {
    for (const auto& f : fibers)
        for (const auto& p : f.points)
            if (p.verdict == TransferVerdict::Unresolved) return true;
    return false;
}

namespace {

void classify_fiber_point(const geometry::ConeSection& cs, const SingularityClass& expected, unsigned expected_mu,
                          const JetOptions& jets, FiberPointReport& r) {
    unsigned order = 2 * std::max(expected_mu, 1u) + 2;
    for (int round = 0; round < 2; ++round, order *= 2) {
        try {
            const CurveGerm germ = surface_chart_germ(cs, *r.point, order);
            r.invariants = classify_simple(germ, jets);
            if (r.invariants->cls.kind != SingKind::NonSimple) break;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::Undetermined || round == 1) {
                r.invariants.reset();
                r.verdict = TransferVerdict::Unresolved;
                r.note = e.what();
                return;
            }
        }
    }
    r.verdict = r.invariants->cls == expected ? TransferVerdict::SameType : TransferVerdict::Different;
}

} // namespace

TransferReport transfer_check(const geometry::ConeSection& cs, const TransferOptions& opts) {
    TransferReport report;
    LocusOptions lo = opts.locus;
    lo.analyze = true;
    lo.jets = opts.jets;
    for (auto& rec : singular_locus(cs.curve.equation(), lo)) {
        const ProjPoint q = cs.curve.embed(rec.point);
        std::optional<Field> split;
        if (opts.field && q.field().is_rational()) split = opts.field;
        const geometry::ProjLine line(q, cs.vertex.coerce(q.field().is_rational() ? cs.vertex.field() : q.field()));
        SingularFiberReport fr{rec, q, false, geometry::line_surface_intersection(line, cs.surface, split), {}};
        fr.transversal = fr.fiber.transversal();
        const Field line_field = fr.fiber.binary_form.field();
        const auto& expected = rec.invariants->cls;
        for (const auto& pk : fr.fiber.packets) {
            FiberPointReport pr;
            pr.packet_degree = pk.degree();
            pr.multiplicity = pk.multiplicity;
            if (pk.point) {
                pr.point = pk.point;
            } else if (line_field.is_rational()) {
                std::vector<mpq_class> m;
                for (const auto& c : pk.factor.coeffs()) m.push_back(c.base_value());
                const Field k = Field::extension(m, "s");
                const geometry::ProjLine lk(line.a().coerce(k), line.b().coerce(k));
                pr.point = ProjPoint(k, lk.at(k.generator(), k.one()));
                pr.note = "generic point of a conjugate packet";
            } else {
                pr.verdict = TransferVerdict::Unresolved;
                pr.note = "packet does not split over " + line_field.descriptor();
                fr.points.push_back(std::move(pr));
                continue;
            }
            classify_fiber_point(cs, expected, rec.invariants->mu, opts.jets, pr);
            fr.points.push_back(std::move(pr));
        }
        report.fibers.push_back(std::move(fr));
    }
    return report;
}

} // namespace eqlab::singularity
