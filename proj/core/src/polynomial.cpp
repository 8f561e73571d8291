#include "eqlab/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "eqlab/error.hpp"

namespace eqlab::algebra {

unsigned total_degree(const Exponents& e) noexcept {
    return std::accumulate(e.begin(), e.end(), 0U);
}

bool grlex_greater(const Exponents& a, const Exponents& b) noexcept {
    const unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

namespace {

std::vector<Term> canonicalize(const Field& field, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return grlex_greater(x.exps, y.exps); });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().exps == t.exps) {
            out.back().coef = field.add(out.back().coef, t.coef);
            continue;
        }
        if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
        out.push_back(std::move(t));
    }
    if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
    return out;
}

} // namespace

Polynomial::Polynomial(Field field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {}

Polynomial::Polynomial(Field field, std::size_t nvars, std::vector<Term> sorted_terms)
    : field_(std::move(field)), nvars_(nvars), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::from_terms(Field field, std::size_t nvars, std::vector<Term> terms) {
    for (const auto& t : terms)
        if (t.exps.size() != nvars) fail(ErrorCode::ArityMismatch, "term arity does not match polynomial arity");
    auto canon = canonicalize(field, std::move(terms));
    return Polynomial(std::move(field), nvars, std::move(canon));
}

Polynomial Polynomial::constant(Field field, std::size_t nvars, Scalar c) {
    std::vector<Term> t;
    if (!c.is_zero()) t.push_back({Exponents(nvars, 0), std::move(c)});
    return Polynomial(std::move(field), nvars, std::move(t));
}

Polynomial Polynomial::variable(Field field, std::size_t nvars, std::size_t var) {
    if (var >= nvars) fail(ErrorCode::ArityMismatch, "variable index out of range");
    Exponents e(nvars, 0);
    e[var] = 1;
    Scalar one = field.one();
    return Polynomial(std::move(field), nvars, {Term{std::move(e), std::move(one)}});
}

Polynomial Polynomial::monomial(Field field, std::size_t nvars, Exponents exps, Scalar c) {
    if (exps.size() != nvars) fail(ErrorCode::ArityMismatch, "monomial arity mismatch");
    std::vector<Term> t;
    if (!c.is_zero()) t.push_back({std::move(exps), std::move(c)});
    return Polynomial(std::move(field), nvars, std::move(t));
}

void Polynomial::check_compatible(const Polynomial& other) const {
    if (nvars_ != other.nvars_)
        fail(ErrorCode::ArityMismatch, "polynomials have " + std::to_string(nvars_) + " and " +
                                           std::to_string(other.nvars_) + " variables");
    if (field_ != other.field_)
        fail(ErrorCode::FieldMismatch, "polynomials live over " + field_.descriptor() + " and " +
                                           other.field_.descriptor());
}

bool Polynomial::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].exps) == 0);
}

int Polynomial::degree() const noexcept {
    return terms_.empty() ? -1 : static_cast<int>(total_degree(terms_.front().exps));
}

int Polynomial::degree_in(std::size_t var) const {
    if (var >= nvars_) fail(ErrorCode::ArityMismatch, "variable index out of range");
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.exps[var]));
    return d;
}

int Polynomial::order() const noexcept {
    return terms_.empty() ? -1 : static_cast<int>(total_degree(terms_.back().exps));
}

bool Polynomial::is_homogeneous() const noexcept { return degree() == order(); }

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) fail(ErrorCode::DomainError, "zero polynomial has no leading term");
    return terms_.front();
}

Scalar Polynomial::coefficient(const Exponents& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Exponents& x) { return grlex_greater(t.exps, x); });
    if (it != terms_.end() && it->exps == e) return it->coef;
    return {};
}

Scalar Polynomial::constant_term() const {
    if (!terms_.empty() && total_degree(terms_.back().exps) == 0) return terms_.back().coef;
    return {};
}

Polynomial Polynomial::operator-() const {
    std::vector<Term> t = terms_;
    for (auto& x : t) x.coef = field_.neg(x.coef);
    return Polynomial(field_, nvars_, std::move(t));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    std::vector<Term> out;
    out.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
        if (j == b.terms_.size() || (i < a.terms_.size() && grlex_greater(a.terms_[i].exps, b.terms_[j].exps))) {
            out.push_back(a.terms_[i++]);
        } else if (i == a.terms_.size() || grlex_greater(b.terms_[j].exps, a.terms_[i].exps)) {
            out.push_back(b.terms_[j++]);
        } else {
            Scalar c = a.field_.add(a.terms_[i].coef, b.terms_[j].coef);
            if (!c.is_zero()) out.push_back({a.terms_[i].exps, std::move(c)});
            ++i;
            ++j;
        }
    }
    return Polynomial(a.field_, a.nvars_, std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field_, a.nvars_);
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) {
            Exponents e(a.nvars_);
            for (std::size_t k = 0; k < a.nvars_; ++k) e[k] = s.exps[k] + t.exps[k];
            prod.push_back({std::move(e), a.field_.mul(s.coef, t.coef)});
        }
    return Polynomial(a.field_, a.nvars_, canonicalize(a.field_, std::move(prod)));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    if (c.is_zero()) return Polynomial(field_, nvars_);
    std::vector<Term> t = terms_;
    for (auto& x : t) x.coef = field_.mul(x.coef, c);
    return Polynomial(field_, nvars_, std::move(t));
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(field_, nvars_, field_.one());
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1U) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

Polynomial Polynomial::shifted(const Exponents& e) const {
    if (e.size() != nvars_) fail(ErrorCode::ArityMismatch, "monomial arity mismatch");
    std::vector<Term> t = terms_;
    for (auto& x : t)
        for (std::size_t k = 0; k < nvars_; ++k) x.exps[k] += e[k];
    return Polynomial(field_, nvars_, std::move(t));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(terms_.front().coef));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    if (!a.terms_.empty() && a.field_ != b.field_) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].exps != b.terms_[i].exps || a.terms_[i].coef != b.terms_[i].coef) return false;
    return true;
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
    if (point.size() != nvars_) fail(ErrorCode::ArityMismatch, "evaluation point has wrong arity");
    // Cache powers per variable.
    std::vector<std::vector<Scalar>> powers(nvars_);
    for (std::size_t k = 0; k < nvars_; ++k) {
        unsigned maxe = 0;
        for (const auto& t : terms_) maxe = std::max(maxe, t.exps[k]);
        powers[k].reserve(maxe + 1);
        powers[k].push_back(field_.one());
        for (unsigned e = 1; e <= maxe; ++e) powers[k].push_back(field_.mul(powers[k].back(), point[k]));
    }
    Scalar acc;
    for (const auto& t : terms_) {
        Scalar v = t.coef;
        for (std::size_t k = 0; k < nvars_ && !v.is_zero(); ++k)
            if (t.exps[k]) v = field_.mul(v, powers[k][t.exps[k]]);
        acc = field_.add(acc, v);
    }
    return acc;
}

Polynomial Polynomial::evaluate_var(std::size_t var, const Scalar& value) const {
    if (var >= nvars_) fail(ErrorCode::ArityMismatch, "variable index out of range");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Term n{t.exps, t.coef};
        if (n.exps[var]) {
            n.coef = field_.mul(n.coef, field_.pow(value, n.exps[var]));
            n.exps[var] = 0;
        }
        out.push_back(std::move(n));
    }
    return from_terms(field_, nvars_, std::move(out));
}

Polynomial Polynomial::compose(std::span<const Polynomial> images) const {
    if (images.size() != nvars_) fail(ErrorCode::ArityMismatch, "composition needs one image per variable");
    if (nvars_ == 0) return *this;
    const std::size_t target = images[0].nvars();
    for (const auto& im : images) {
        if (im.nvars() != target) fail(ErrorCode::ArityMismatch, "composition images differ in arity");
        if (im.field() != field_) fail(ErrorCode::FieldMismatch, "composition images live over another field");
    }
    std::vector<std::vector<Polynomial>> powers(nvars_);
    for (std::size_t k = 0; k < nvars_; ++k) {
        unsigned maxe = 0;
        for (const auto& t : terms_) maxe = std::max(maxe, t.exps[k]);
        powers[k].push_back(constant(field_, target, field_.one()));
        for (unsigned e = 1; e <= maxe; ++e) powers[k].push_back(powers[k].back() * images[k]);
    }
    std::vector<Term> acc;
    for (const auto& t : terms_) {
        Polynomial p = constant(field_, target, t.coef);
        for (std::size_t k = 0; k < nvars_; ++k)
            if (t.exps[k]) p = p * powers[k][t.exps[k]];
        for (auto& x : p.terms_) acc.push_back(std::move(x));
    }
    return from_terms(field_, target, std::move(acc));
}

Polynomial Polynomial::coerce(const Field& target) const {
    if (target == field_) return *this;
    if (!field_.is_rational())
        fail(ErrorCode::FieldMismatch, "only polynomials over the rationals can be coerced");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.exps, target.from_rational(t.coef.base_value())});
    return from_terms(target, nvars_, std::move(out));
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
    const int d = degree_in(var);
    std::vector<std::vector<Term>> buckets(d < 0 ? 0 : static_cast<std::size_t>(d) + 1);
    for (const auto& t : terms_) {
        Term n = t;
        const unsigned e = n.exps[var];
        n.exps[var] = 0;
        buckets[e].push_back(std::move(n));
    }
    std::vector<Polynomial> out;
    out.reserve(buckets.size());
    // Removing a variable from grlex-sorted terms preserves relative order
    // only within equal degree, so re-sort.
    for (auto& b : buckets) out.push_back(from_terms(field_, nvars_, std::move(b)));
    return out;
}

Polynomial Polynomial::truncated(unsigned order) const {
    std::vector<Term> out;
    for (const auto& t : terms_)
        if (total_degree(t.exps) < order) out.push_back(t);
    return Polynomial(field_, nvars_, std::move(out));
}

Polynomial Polynomial::homogeneous_part(unsigned deg) const {
    std::vector<Term> out;
    for (const auto& t : terms_)
        if (total_degree(t.exps) == deg) out.push_back(t);
    return Polynomial(field_, nvars_, std::move(out));
}

Polynomial Polynomial::remap(std::span<const std::size_t> map, std::size_t new_nvars) const {
    if (map.size() != nvars_) fail(ErrorCode::ArityMismatch, "variable map has wrong length");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Exponents e(new_nvars, 0);
        for (std::size_t k = 0; k < nvars_; ++k) {
            if (t.exps[k] == 0) continue;
            if (map[k] >= new_nvars) fail(ErrorCode::ArityMismatch, "variable map target out of range");
            e[map[k]] += t.exps[k];
        }
        out.push_back({std::move(e), t.coef});
    }
    return from_terms(field_, new_nvars, std::move(out));
}

Polynomial differentiate(const Polynomial& f, std::size_t var) {
    if (var >= f.nvars()) fail(ErrorCode::ArityMismatch, "differentiation variable out of range");
    const Field& k = f.field();
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        if (t.exps[var] == 0) continue;
        Term n{t.exps, k.mul(t.coef, k.from_int(static_cast<long>(t.exps[var])))};
        --n.exps[var];
        if (!n.coef.is_zero()) out.push_back(std::move(n));
    }
    return Polynomial::from_terms(k, f.nvars(), std::move(out));
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols) {}

Matrix Matrix::identity(Field field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
}

Matrix Matrix::from_ints(Field field, std::size_t rows, std::size_t cols, std::span<const long> entries) {
    if (entries.size() != rows * cols) fail(ErrorCode::InvalidArgument, "matrix entry count mismatch");
    Matrix m(field, rows, cols);
    for (std::size_t i = 0; i < entries.size(); ++i) m.a_[i] = field.from_int(entries[i]);
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorCode::ArityMismatch, "matrix shapes do not chain");
    Matrix r(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                r.at(i, j) = a.field_.add(r.at(i, j), a.field_.mul(a.at(i, k), b.at(k, j)));
        }
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

std::vector<Scalar> Matrix::apply(std::span<const Scalar> v) const {
    if (v.size() != cols_) fail(ErrorCode::ArityMismatch, "vector length does not match matrix");
    std::vector<Scalar> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] = field_.add(r[i], field_.mul(at(i, j), v[j]));
    return r;
}

namespace {

// Row reduction in place; returns rank and the determinant sign/scale.
std::size_t eliminate(Matrix& m, Scalar* det) {
    const Field& k = m.field();
    std::size_t rank = 0;
    Scalar d = k.one();
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t piv = rank;
        while (piv < m.rows() && m.at(piv, c).is_zero()) ++piv;
        if (piv == m.rows()) {
            d = {};
            continue;
        }
        if (piv != rank) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(rank, j));
            d = k.neg(d);
        }
        const Scalar p = m.at(rank, c);
        d = k.mul(d, p);
        const Scalar pinv = k.inv(p);
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            if (m.at(r, c).is_zero()) continue;
            const Scalar f = k.mul(m.at(r, c), pinv);
            for (std::size_t j = c; j < m.cols(); ++j)
                m.at(r, j) = k.sub(m.at(r, j), k.mul(f, m.at(rank, j)));
        }
        ++rank;
    }
    if (det) *det = rank == m.rows() ? d : Scalar{};
    return rank;
}

} // namespace

std::size_t Matrix::rank() const {
    Matrix m = *this;
    return eliminate(m, nullptr);
}

Scalar Matrix::determinant() const {
    if (rows_ != cols_) fail(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
    Matrix m = *this;
    Scalar d;
    eliminate(m, &d);
    return d;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) fail(ErrorCode::InvalidArgument, "inverse of a non-square matrix");
    const std::size_t n = rows_;
    Matrix aug(field_, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, n + i) = field_.one();
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && aug.at(piv, c).is_zero()) ++piv;
        if (piv == n) fail(ErrorCode::DomainError, "matrix is singular");
        if (piv != c)
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug.at(piv, j), aug.at(c, j));
        const Scalar pinv = field_.inv(aug.at(c, c));
        for (std::size_t j = 0; j < 2 * n; ++j) aug.at(c, j) = field_.mul(aug.at(c, j), pinv);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || aug.at(r, c).is_zero()) continue;
            const Scalar f = aug.at(r, c);
            for (std::size_t j = 0; j < 2 * n; ++j)
                aug.at(r, j) = field_.sub(aug.at(r, j), field_.mul(f, aug.at(c, j)));
        }
    }
    Matrix inv(field_, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

std::vector<Scalar> Matrix::solve(std::span<const Scalar> b) const { return inverse().apply(b); }

// ---------------------------------------------------------------- substitutions

Polynomial linear_change(const Polynomial& f, const Matrix& m) {
    const std::size_t n = f.nvars();
    if (m.rows() != n || m.cols() != n) fail(ErrorCode::ArityMismatch, "linear change matrix must match the arity");
    if (m.field() != f.field()) fail(ErrorCode::FieldMismatch, "linear change matrix lives over another field");
    if (m.determinant().is_zero()) fail(ErrorCode::DomainError, "linear change matrix is singular");
    std::vector<Polynomial> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Term> t;
        for (std::size_t j = 0; j < n; ++j) {
            if (m.at(i, j).is_zero()) continue;
            Exponents e(n, 0);
            e[j] = 1;
            t.push_back({std::move(e), m.at(i, j)});
        }
        images.push_back(Polynomial::from_terms(f.field(), n, std::move(t)));
    }
    return f.compose(images);
}

Polynomial homogenize(const Polynomial& f, std::size_t new_var, unsigned target_degree) {
    if (new_var > f.nvars()) fail(ErrorCode::ArityMismatch, "homogenizing variable index out of range");
    if (f.degree() > static_cast<int>(target_degree))
        fail(ErrorCode::InvalidArgument, "target degree " + std::to_string(target_degree) +
                                             " is below the polynomial degree " + std::to_string(f.degree()));
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        Exponents e;
        e.reserve(f.nvars() + 1);
        for (std::size_t k = 0; k < f.nvars(); ++k) {
            if (k == new_var) e.push_back(0);
            e.push_back(t.exps[k]);
        }
        if (new_var == f.nvars()) e.push_back(0);
        e[new_var] = target_degree - total_degree(t.exps);
        out.push_back({std::move(e), t.coef});
    }
    return Polynomial::from_terms(f.field(), f.nvars() + 1, std::move(out));
}

Polynomial dehomogenize(const Polynomial& f, std::size_t var, const Scalar& value) {
    return drop_variable(f.evaluate_var(var, value), var);
}

Polynomial drop_variable(const Polynomial& f, std::size_t var) {
    if (var >= f.nvars()) fail(ErrorCode::ArityMismatch, "variable index out of range");
    if (f.degree_in(var) > 0) fail(ErrorCode::InvalidArgument, "variable still occurs in the polynomial");
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
        Exponents e = t.exps;
        e.erase(e.begin() + static_cast<std::ptrdiff_t>(var));
        out.push_back({std::move(e), t.coef});
    }
    return Polynomial::from_terms(f.field(), f.nvars() - 1, std::move(out));
}

} // namespace eqlab::algebra
