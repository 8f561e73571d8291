#ifndef EQLAB_GEOMETRY_HPP
#define EQLAB_GEOMETRY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqlab/factor.hpp"
#include "eqlab/polynomial.hpp"
#include "eqlab/upoly.hpp"

namespace eqlab::geometry {

using algebra::Field;
using algebra::Irreducibility;
using algebra::Matrix;
using algebra::Polynomial;
using algebra::Scalar;
using algebra::UPoly;

/// A point of projective space over a field, scaled so that its first
/// nonzero coordinate is 1. Works in any dimension; P^3 points have four
/// coordinates and plane points three.
class ProjPoint {
public:
    ProjPoint(Field field, std::vector<Scalar> coords);
    static ProjPoint from_ints(std::initializer_list<long> coords, const Field& field = Field::rationals());

    const Field& field() const noexcept { return field_; }
    const std::vector<Scalar>& coords() const noexcept { return c_; }
    std::size_t size() const noexcept { return c_.size(); }
    const Scalar& operator[](std::size_t i) const { return c_[i]; }
    /// Index of the first nonzero coordinate (whose value is 1).
    std::size_t pivot() const;
    /// The same point over a larger field.
    ProjPoint coerce(const Field& k) const;
    std::string format() const;

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.field_ == b.field_ && a.c_ == b.c_; }
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }

private:
    Field field_;
    std::vector<Scalar> c_;
};

/// A hyperplane given by the coefficients of its linear form, scaled like a
/// point.
class ProjPlane {
public:
    explicit ProjPlane(ProjPoint coefficients) : a_(std::move(coefficients)) {}
    static ProjPlane from_ints(std::initializer_list<long> coeffs) { return ProjPlane(ProjPoint::from_ints(coeffs)); }
    const ProjPoint& coefficients() const noexcept { return a_; }
    Scalar evaluate(const ProjPoint& p) const;
    bool contains(const ProjPoint& p) const { return evaluate(p).is_zero(); }

private:
    ProjPoint a_;
};

/// The line spanned by two distinct points.
class ProjLine {
public:
    ProjLine(ProjPoint a, ProjPoint b);
    const ProjPoint& a() const noexcept { return a_; }
    const ProjPoint& b() const noexcept { return b_; }
    /// s*a + t*b.
    std::vector<Scalar> at(const Scalar& s, const Scalar& t) const;

private:
    ProjPoint a_, b_;
};

/// A reduced plane curve f(y0, y1, y2) = 0 placed in P^3 by a frame: the
/// invertible 4x4 matrix F with X = F*Y, the plane being {Y3 = 0}.
class PlaneCurve {
public:
    explicit PlaneCurve(Polynomial f);
    PlaneCurve(Polynomial f, Matrix frame);

    const Polynomial& equation() const noexcept { return f_; }
    const Matrix& frame() const noexcept { return frame_; }
    unsigned degree() const noexcept { return static_cast<unsigned>(f_.degree()); }
    ProjPlane plane() const;
    /// The P^3 point of a plane point (y0:y1:y2).
    ProjPoint embed(const ProjPoint& plane_point) const;

private:
    Polynomial f_;
    Matrix frame_;
};

/// The cone over C with the given vertex. The frame N = [F e0, F e1, F e2, p]
/// sends the coordinate vertex (0:0:0:1) to p and {Y3 = 0} to the plane of C.
struct Cone {
    Polynomial equation;   // homogeneous in four variables
    Matrix frame;          // N; in N-coordinates the equation is f(Z0, Z1, Z2)
};

Cone cone_equation(const PlaneCurve& c, const ProjPoint& p);

/// True when the cones with vertices p and p2 have non-proportional
/// equations. Throws for a line, for p == p2 and for vertices on the plane.
bool cone_uniqueness_check(const PlaneCurve& c, const ProjPoint& p, const ProjPoint& p2);

/// Points of a line on a surface, grouped by field of definition. A
/// packet is an irreducible factor of the restriction in the line
/// parameter s (points s*a + b; the factor "t" stands for the point a).
struct IntersectionPacket {
    UPoly factor;                 // monic irreducible in s over the field of the line
    bool at_a = false;            // the point a itself (parameter t = 0)
    unsigned multiplicity = 1;
    std::optional<ProjPoint> point;  // explicit point when the packet has degree one
    unsigned degree() const noexcept { return at_a ? 1u : static_cast<unsigned>(factor.degree()); }
};

struct LineIntersection {
    Polynomial binary_form;  // G(s*a + t*b) in (s, t), degree n
    std::vector<IntersectionPacket> packets;
    unsigned total_multiplicity() const;
    bool transversal() const;
};

/// Restricts a surface to a line and factors the restriction over the
/// field of the line's points (optionally a larger field).
LineIntersection line_surface_intersection(const ProjLine& l, const Polynomial& g,
                                           const std::optional<Field>& field = std::nullopt);

/// True when the line meets the surface in deg G distinct geometric points.
bool transversality_check(const ProjLine& l, const Polynomial& g);

/// C' = K_{C,p} cut with the surface G = 0.
struct ConeSection {
    PlaneCurve curve;
    ProjPoint vertex;
    Polynomial cone;      // F
    Polynomial surface;   // G
    Matrix frame;         // N, see Cone
};

ConeSection cone_section(const PlaneCurve& c, const ProjPoint& p, const Polynomial& g);

struct SectionOptions {
    std::uint64_t seed = 1;
    unsigned retries = 8;
    long box = 5;  // projection centres are drawn from [-box, box]^4
};

struct SectionIrreducibility {
    Irreducibility verdict = Irreducibility::Unknown;
    unsigned attempts = 0;
    std::optional<Polynomial> plane_model;  // square-free projected equation
    std::string reason;
};

/// Irreducibility of C' by projecting from a random centre to a plane
/// model (resultant in the projection direction) and certifying that.
SectionIrreducibility section_irreducibility(const ConeSection& cs, const SectionOptions& opts = {});

/// Matrix over a larger field (entries reinterpreted).
Matrix coerce(const Matrix& m, const Field& k);

} // namespace eqlab::geometry

#endif
