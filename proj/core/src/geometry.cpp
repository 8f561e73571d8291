#include "eqlab/geometry.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "eqlab/error.hpp"
#include "eqlab/resultant.hpp"
#include "eqlab/text_io.hpp"

namespace eqlab::geometry {

namespace {

Scalar lift_scalar(const Field& from, const Field& to, const Scalar& s) {
    if (from == to) return s;
    if (from.is_rational() || s.is_base()) return to.from_rational(s.base_value());
    fail(ErrorCode::FieldMismatch, "cannot move a scalar from " + from.descriptor() + " to " + to.descriptor());
}

// The larger of two fields when one of them is the rationals.
Field common_field(const Field& a, const Field& b) {
    if (a == b) return a;
    if (a.is_rational()) return b;
    if (b.is_rational()) return a;
    fail(ErrorCode::FieldMismatch, "incompatible fields " + a.descriptor() + " and " + b.descriptor());
}

Polynomial to_field(const Polynomial& f, const Field& k) { return f.field() == k ? f : f.coerce(k); }

void require_homogeneous(const Polynomial& f, std::size_t nvars, const char* what) {
    if (f.nvars() != nvars)
        fail(ErrorCode::ArityMismatch, std::string(what) + " must have " + std::to_string(nvars) + " variables");
    if (f.is_zero() || f.is_constant()) fail(ErrorCode::InvalidArgument, std::string(what) + " must be nonconstant");
    if (!f.is_homogeneous()) fail(ErrorCode::InvalidArgument, std::string(what) + " must be homogeneous");
}

} // namespace

Matrix coerce(const Matrix& m, const Field& k) {
    if (m.field() == k) return m;
    Matrix out(k, m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, c) = lift_scalar(m.field(), k, m.at(r, c));
    return out;
}

// ---------------------------------------------------------------- points

ProjPoint::ProjPoint(Field field, std::vector<Scalar> coords) : field_(std::move(field)), c_(std::move(coords)) {
    if (c_.empty()) fail(ErrorCode::InvalidArgument, "projective point needs coordinates");
    std::size_t i = 0;
    while (i < c_.size() && c_[i].is_zero()) ++i;
    if (i == c_.size()) fail(ErrorCode::InvalidArgument, "projective point with all coordinates zero");
    const Scalar inv = field_.inv(c_[i]);
    for (auto& x : c_) x = field_.mul(x, inv);
}

ProjPoint ProjPoint::from_ints(std::initializer_list<long> coords, const Field& field) {
    std::vector<Scalar> c;
    for (long v : coords) c.push_back(field.from_int(v));
    return ProjPoint(field, std::move(c));
}

std::size_t ProjPoint::pivot() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return i;
    fail(ErrorCode::Internal, "projective point lost its normalisation");
}

ProjPoint ProjPoint::coerce(const Field& k) const {
    if (k == field_) return *this;
    std::vector<Scalar> c;
    for (const auto& x : c_) c.push_back(lift_scalar(field_, k, x));
    return ProjPoint(k, std::move(c));
}

std::string ProjPoint::format() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ":";
        const std::string s = field_.format(c_[i]);
        const bool compound = !c_[i].is_base() && s.find_first_of("+- ", 1) != std::string::npos;
        os << (compound ? "(" + s + ")" : s);
    }
    os << ")";
    return os.str();
}

Scalar ProjPlane::evaluate(const ProjPoint& p) const {
    if (p.size() != a_.size()) fail(ErrorCode::ArityMismatch, "plane and point dimensions differ");
    const Field k = common_field(a_.field(), p.field());
    const ProjPoint a = a_.coerce(k), q = p.coerce(k);
    Scalar s = k.zero();
    for (std::size_t i = 0; i < q.size(); ++i) s = k.add(s, k.mul(a[i], q[i]));
    return s;
}

ProjLine::ProjLine(ProjPoint a, ProjPoint b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.size() != b_.size()) fail(ErrorCode::ArityMismatch, "line through points of different dimension");
    const Field k = common_field(a_.field(), b_.field());
    a_ = a_.coerce(k);
    b_ = b_.coerce(k);
    if (a_ == b_) fail(ErrorCode::InvalidArgument, "a line needs two distinct points");
}

std::vector<Scalar> ProjLine::at(const Scalar& s, const Scalar& t) const {
    const Field& k = a_.field();
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < a_.size(); ++i) out.push_back(k.add(k.mul(s, a_[i]), k.mul(t, b_[i])));
    return out;
}

// ----------------------------------------------------------------- curves

PlaneCurve::PlaneCurve(Polynomial f) : PlaneCurve(f, Matrix::identity(f.field(), 4)) {}

PlaneCurve::PlaneCurve(Polynomial f, Matrix frame) : f_(std::move(f)), frame_(std::move(frame)) {
    require_homogeneous(f_, 3, "plane curve equation");
    if (frame_.rows() != 4 || frame_.cols() != 4) fail(ErrorCode::ArityMismatch, "frame must be 4x4");
    frame_ = coerce(frame_, common_field(frame_.field(), f_.field()));
    if (frame_.field() != f_.field()) f_ = f_.coerce(frame_.field());
    if (frame_.determinant().is_zero()) fail(ErrorCode::DomainError, "frame is singular");
    if (f_.field().characteristic_zero() && algebra::squarefree_part(f_).degree() != f_.degree())
        fail(ErrorCode::InvalidArgument, "plane curve must be reduced (square-free)");
}

ProjPlane PlaneCurve::plane() const {
    const Matrix inv = frame_.inverse();
    std::vector<Scalar> row;
    for (std::size_t c = 0; c < 4; ++c) row.push_back(inv.at(3, c));
    return ProjPlane(ProjPoint(frame_.field(), std::move(row)));
}

ProjPoint PlaneCurve::embed(const ProjPoint& y) const {
    if (y.size() != 3) fail(ErrorCode::ArityMismatch, "plane point needs three coordinates");
    const Field k = common_field(frame_.field(), y.field());
    const Matrix fr = coerce(frame_, k);
    const ProjPoint yy = y.coerce(k);
    std::vector<Scalar> v = {yy[0], yy[1], yy[2], k.zero()};
    return ProjPoint(k, fr.apply(v));
}

// ------------------------------------------------------------------ cones

Cone cone_equation(const PlaneCurve& c, const ProjPoint& p) {
    if (p.size() != 4) fail(ErrorCode::ArityMismatch, "vertex must be a point of P^3");
    const Field k = common_field(c.frame().field(), p.field());
    const Matrix fr = coerce(c.frame(), k);
    const ProjPoint v = p.coerce(k);
    if (c.plane().contains(v)) fail(ErrorCode::DomainError, "vertex on base plane");
    Matrix n(k, 4, 4);
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t col = 0; col < 3; ++col) n.at(r, col) = fr.at(r, col);
        n.at(r, 3) = v[r];
    }
    const std::vector<std::size_t> lift = {0, 1, 2};
    const Polynomial f = to_field(c.equation(), k).remap(lift, 4);
    return {algebra::linear_change(f, n.inverse()), n};
}

bool cone_uniqueness_check(const PlaneCurve& c, const ProjPoint& p, const ProjPoint& p2) {
    if (c.degree() < 2) fail(ErrorCode::InvalidArgument, "curve is a line");
    if (p == p2) fail(ErrorCode::InvalidArgument, "vertices must be distinct");
    const Polynomial f1 = cone_equation(c, p).equation.monic();
    const Polynomial f2 = cone_equation(c, p2).equation.monic();
    return f1 != f2;
}

// ------------------------------------------------------- line intersection

unsigned LineIntersection::total_multiplicity() const {
    unsigned n = 0;
    for (const auto& pk : packets) n += pk.degree() * pk.multiplicity;
    return n;
}

bool LineIntersection::transversal() const {
    for (const auto& pk : packets)
        if (pk.multiplicity != 1) return false;
    return true;
}

LineIntersection line_surface_intersection(const ProjLine& l, const Polynomial& g, const std::optional<Field>& field) {
    require_homogeneous(g, l.a().size(), "surface equation");
    Field k = common_field(l.a().field(), g.field());
    if (field) k = common_field(k, *field);
    const ProjPoint a = l.a().coerce(k), b = l.b().coerce(k);
    const Polynomial gk = to_field(g, k);

    // Binary restriction G(s*a + t*b) in the variables (s, t).
    std::vector<Polynomial> images;
    const Polynomial s = Polynomial::variable(k, 2, 0), t = Polynomial::variable(k, 2, 1);
    for (std::size_t i = 0; i < a.size(); ++i) images.push_back(s.scaled(a[i]) + t.scaled(b[i]));
    LineIntersection out{gk.compose(images), {}};
    if (out.binary_form.is_zero()) fail(ErrorCode::DomainError, "line lies on surface");

    const unsigned n = static_cast<unsigned>(gk.degree());
    const UPoly r = UPoly::from_polynomial(algebra::dehomogenize(out.binary_form, 1, k.one()), 0);
    const unsigned at_a = n - static_cast<unsigned>(r.degree());
    if (at_a > 0) {
        IntersectionPacket pk{UPoly(k), true, at_a, a};
        out.packets.push_back(std::move(pk));
    }
    if (r.degree() > 0) {
        const ProjLine lk(a, b);
        for (const auto& f : algebra::factor(r).factors) {
            IntersectionPacket pk{f.poly, false, f.multiplicity, std::nullopt};
            if (f.poly.degree() == 1) {
                const Scalar sigma = k.neg(f.poly.coeff(0));
                pk.point = ProjPoint(k, lk.at(sigma, k.one()));
            }
            out.packets.push_back(std::move(pk));
        }
    }
    return out;
}

bool transversality_check(const ProjLine& l, const Polynomial& g) {
    return line_surface_intersection(l, g).transversal();
}

// ---------------------------------------------------------- cone sections

ConeSection cone_section(const PlaneCurve& c, const ProjPoint& p, const Polynomial& g) {
    require_homogeneous(g, 4, "surface equation");
    Cone cone = cone_equation(c, p);
    const Field k = common_field(cone.equation.field(), g.field());
    const Polynomial f = to_field(cone.equation, k), gk = to_field(g, k);
    if (!algebra::gcd(f, gk).is_constant()) fail(ErrorCode::DomainError, "cone and surface share a component");
    return {c, p.coerce(k), f, gk, coerce(cone.frame, k)};
}

SectionIrreducibility section_irreducibility(const ConeSection& cs, const SectionOptions& opts) {
    SectionIrreducibility out;
    const Field& k = cs.cone.field();
    if (!k.is_rational()) fail(ErrorCode::Unsupported, "section irreducibility is certified over the rationals only");
    if (algebra::irreducibility_test(cs.curve.equation(), {opts.seed}) == Irreducibility::Reducible) {
        out.verdict = Irreducibility::Reducible;
        out.reason = "base curve is reducible";
        return out;
    }
    const unsigned target = static_cast<unsigned>(cs.cone.degree() * cs.surface.degree());
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<long> coord(-opts.box, opts.box);
    while (out.attempts < opts.retries) {
        ++out.attempts;
        std::vector<Scalar> o(4);
        for (auto& x : o) x = k.from_int(coord(rng));
        if (std::all_of(o.begin(), o.end(), [](const Scalar& x) { return x.is_zero(); })) continue;
        if (cs.cone.evaluate(o).is_zero() || cs.surface.evaluate(o).is_zero()) continue;
        // Frame sending (0:0:0:1) to the centre o.
        std::size_t j = 0;
        while (o[j].is_zero()) ++j;
        Matrix m(k, 4, 4);
        std::size_t col = 0;
        for (std::size_t i = 0; i < 4; ++i)
            if (i != j) m.at(i, col++) = k.one();
        for (std::size_t r = 0; r < 4; ++r) m.at(r, 3) = o[r];
        const Polynomial f = algebra::linear_change(cs.cone, m), g = algebra::linear_change(cs.surface, m);
        const Polynomial res = algebra::resultant(f, g, 3);
        if (res.is_zero()) {
            out.reason = "degenerate projection";
            continue;
        }
        const Polynomial model = algebra::squarefree_part(algebra::drop_variable(res, 3));
        if (static_cast<unsigned>(model.degree()) != target) {
            out.reason = "projection is not birational onto a reduced model";
            continue;
        }
        out.plane_model = model;
        const Irreducibility v = algebra::irreducibility_test(model, {opts.seed + out.attempts});
        if (v != Irreducibility::Unknown) {
            out.verdict = v;
            out.reason = v == Irreducibility::Irreducible ? "plane model certified irreducible"
                                                          : "plane model has a proper factor";
            return out;
        }
        out.reason = "irreducibility test inconclusive";
    }
    out.verdict = Irreducibility::Unknown;
    if (out.reason.empty()) out.reason = "retry budget exhausted";
    return out;
}

} // namespace eqlab::geometry
