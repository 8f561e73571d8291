#ifndef EQLAB_SINGULARITY_HPP
#define EQLAB_SINGULARITY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqlab/geometry.hpp"
#include "eqlab/polynomial.hpp"

namespace eqlab::singularity {

using algebra::Field;
using algebra::Polynomial;
using algebra::Scalar;
using geometry::ProjPoint;

/// A plane curve germ at the origin of the two local variables. When
/// `order` is set, only the terms of total degree < order are known.
struct CurveGerm {
    Polynomial poly;
    std::optional<unsigned> order;

    explicit CurveGerm(Polynomial p, std::optional<unsigned> ord = std::nullopt);
};

enum class SingKind { Smooth, A, D, E, NonSimple };

/// Smooth, A_k (k >= 1), D_k (k >= 4), E_6/E_7/E_8, or a non-simple germ
/// carrying its Milnor number and corank.
struct SingularityClass {
    SingKind kind = SingKind::Smooth;
    unsigned index = 0;   // k for A/D/E, the Milnor number for NonSimple
    unsigned corank = 0;  // only meaningful for NonSimple

    static SingularityClass smooth() { return {}; }
    static SingularityClass a(unsigned k);
    static SingularityClass d(unsigned k);
    static SingularityClass e(unsigned k);
    static SingularityClass non_simple(unsigned mu, unsigned corank) { return {SingKind::NonSimple, mu, corank}; }
    /// Lowercase codes "a1", "d4", "e6" (case-insensitive, "A_1" also accepted).
    static SingularityClass parse(std::string_view code);

    bool is_simple() const noexcept { return kind == SingKind::A || kind == SingKind::D || kind == SingKind::E; }
    /// "A_2", "D_5", "E_6", "smooth", "non-simple(mu=10, corank=2)".
    std::string name() const;
    /// "a2", "d5", ...; simple classes only.
    std::string code() const;

    friend bool operator==(const SingularityClass& a, const SingularityClass& b) {
        return a.kind == b.kind && a.index == b.index && a.corank == b.corank;
    }
    friend bool operator!=(const SingularityClass& a, const SingularityClass& b) { return !(a == b); }
    friend bool operator<(const SingularityClass& a, const SingularityClass& b);
};

/// The normal form of a simple class in variables (x, y) over the rationals:
/// A_k: x^2 - y^(k+1), D_k: x^2*y - y^(k-1), E_6: x^3 - y^4,
/// E_7: x^3 - x*y^3, E_8: x^3 - y^5.
Polynomial normal_form(const SingularityClass& c);

struct JetOptions {
    unsigned start = 8;
    unsigned ceiling = 64;
};

/// Result of a certified jet computation of dim k[[x,y]]/I.
struct LocalAlgebraDimension {
    std::optional<unsigned> value;  // empty: not certified below the ceiling
    unsigned certified_degree = 0;  // k with m^k contained in I
    unsigned truncation = 0;        // last jet order used
};

/// Dimension of the local algebra k[[x,y]]/<generators> at the origin,
/// computed in the jet space of order N (monomials of degree < N). The
/// value is certified at the smallest k < N for which every monomial of
/// degree k lies in I + m^(k+1); then m^k is contained in I and the value
/// is read off below degree k. N doubles from opts.start up to opts.ceiling
/// (and never beyond what a truncated germ determines).
LocalAlgebraDimension local_algebra_dimension(const std::vector<Polynomial>& generators,
                                              std::optional<unsigned> known_below, const JetOptions& opts = {});

LocalAlgebraDimension milnor_number(const CurveGerm& g, const JetOptions& opts = {});
LocalAlgebraDimension tjurina_number(const CurveGerm& g, const JetOptions& opts = {});

/// 2 minus the rank of the Hessian at the origin.
unsigned hessian_corank(const CurveGerm& g);

struct Classification {
    SingularityClass cls;
    unsigned mu = 0;
    unsigned tau = 0;
    unsigned corank = 0;
};

/// ADE decision tree: corank, then root multiplicities of the cubic part
/// (discriminant and Hessian covariant, no root extraction), then the
/// Milnor number. Throws Undetermined when mu is not certified and
/// Internal when the Tjurina number contradicts the class.
Classification classify_simple(const CurveGerm& g, const JetOptions& opts = {});

/// A point of the projective plane over the field of its coordinates.
/// Over an extension of degree e the coordinates are a generic point of a
/// packet of e conjugate points.
struct SingularPointRecord {
    ProjPoint point;
    unsigned eliminant_multiplicity = 1;
    std::optional<CurveGerm> germ;
    std::optional<Classification> invariants;

    std::size_t geometric_points() const { return point.field().degree(); }
};

struct LocusOptions {
    std::uint64_t seed = 1;
    unsigned retries = 8;
    long box = 3;  // entries of the random projective frame
    bool analyze = true;  // fill germ and invariants
    JetOptions jets{};
};

/// Singular points of a reduced plane curve f(x, y, z) = 0 over Q. Rational
/// points are listed exactly; conjugate packets are given by a generic point
/// over Q[s]/(p(s)), expressed through a primitive coordinate when one
/// exists. Throws NonIsolated for a curve with a multiple component.
std::vector<SingularPointRecord> singular_locus(const Polynomial& f, const LocusOptions& opts = {});

/// Affine chart at the first nonzero coordinate of p, translated so p is
/// the origin; the remaining coordinates in order are the local variables.
CurveGerm local_germ(const Polynomial& f, const ProjPoint& p);

/// The dual curve of f(x, y, z) in the dual coordinates (a, b, c): the
/// square-free discriminant of f restricted to the line ax + by + cz = 0.
Polynomial dual_curve(const Polynomial& f);

/// Germ of C' = {F = G = 0} at a point q of P^3 where G is smooth: G is
/// solved for a coordinate with nonzero partial as a series in the other
/// two local coordinates (to the given order) and substituted into F.
CurveGerm surface_chart_germ(const geometry::ConeSection& cs, const ProjPoint& q, unsigned order);

enum class TransferVerdict { SameType, Different, Unresolved };
std::string_view to_string(TransferVerdict v) noexcept;

struct FiberPointReport {
    std::optional<ProjPoint> point;   // explicit or generic point of a packet
    unsigned packet_degree = 1;
    unsigned multiplicity = 1;
    std::optional<Classification> invariants;
    TransferVerdict verdict = TransferVerdict::Unresolved;
    std::string note;
};

struct SingularFiberReport {
    SingularPointRecord base;         // singular point of C in its plane
    ProjPoint base_in_space;
    bool transversal = false;
    geometry::LineIntersection fiber;
    std::vector<FiberPointReport> points;
};

struct TransferOptions {
    std::optional<Field> field;       // split fibers over this field; packets left over are unresolved
    LocusOptions locus{};
    JetOptions jets{};
};

struct TransferReport {
    std::vector<SingularFiberReport> fibers;
    bool any_different() const;
    bool any_unresolved() const;
};

/// For each singular point q of C, meets the line through the vertex and q
/// with the surface and classifies C' at every fiber point against C's
/// class at q.
TransferReport transfer_check(const geometry::ConeSection& cs, const TransferOptions& opts = {});

} // namespace eqlab::singularity

#endif
