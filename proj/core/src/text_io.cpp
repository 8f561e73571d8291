#include "eqlab/text_io.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include "eqlab/error.hpp"

namespace eqlab::algebra {

namespace {

class Parser {
public:
    Parser(std::string_view text, const VarNames& vars, const Field& field)
        : s_(text), vars_(vars), k_(field) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip();
        if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void error(const std::string& msg) const {
        fail(ErrorCode::Parse, msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial constant(const Scalar& c) const { return Polynomial::constant(k_, vars_.size(), c); }

    Polynomial expr() {
        Polynomial acc = term();
        while (true) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else return acc;
        }
    }

    Polynomial term() {
        Polynomial acc = unary();
        while (true) {
            if (accept('*')) {
                acc *= unary();
            } else if (accept('/')) {
                Polynomial d = unary();
                if (!d.is_constant() || d.is_zero()) error("division by a non-constant or zero");
                acc = acc.scaled(k_.inv(d.constant_term()));
            } else {
                return acc;
            }
        }
    }

    Polynomial unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Polynomial power() {
        Polynomial base = atom();
        if (accept('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) error("expected a nonnegative integer exponent");
            const unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
            if (e > 100000) error("exponent too large");
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Polynomial atom() {
        skip();
        if (pos_ >= s_.size()) error("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!accept(')')) error("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return constant(k_.from_rational(mpq_class(mpz_class(std::string(s_.substr(start, pos_ - start))))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            const std::string name(s_.substr(start, pos_ - start));
            auto it = std::find(vars_.begin(), vars_.end(), name);
            if (it != vars_.end())
                return Polynomial::variable(k_, vars_.size(), static_cast<std::size_t>(it - vars_.begin()));
            if (k_.kind() == FieldKind::Extension && name == k_.generator_name()) return constant(k_.generator());
            pos_ = start;
            error("undeclared identifier '" + name + "'");
        }
        error("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    const VarNames& vars_;
    const Field& k_;
    std::size_t pos_ = 0;
};

std::string trim_copy(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

VarNames collect_identifiers(std::string_view text, const Field& field) {
    VarNames found;
    for (std::size_t i = 0; i < text.size();) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (std::isalpha(c) || c == '_') {
            std::size_t start = i;
            while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
            std::string name(text.substr(start, i - start));
            if (field.kind() == FieldKind::Extension && name == field.generator_name()) continue;
            if (std::find(found.begin(), found.end(), name) == found.end()) found.push_back(name);
        } else {
            ++i;
        }
    }
    // Conventional names first, in their conventional order.
    static const VarNames preferred = {"x", "y", "z", "w"};
    VarNames ordered;
    for (const auto& p : preferred)
        if (std::find(found.begin(), found.end(), p) != found.end()) ordered.push_back(p);
    for (const auto& f : found)
        if (std::find(preferred.begin(), preferred.end(), f) == preferred.end()) ordered.push_back(f);
    return ordered;
}

} // namespace

Polynomial parse_polynomial(std::string_view text, const VarNames& vars, const Field& field) {
    return Parser(text, vars, field).parse();
}

std::string format_scalar(const Field& field, const Scalar& s) { return field.format(s); }

std::string format_polynomial(const Polynomial& f, const VarNames& vars) {
    if (vars.size() != f.nvars()) fail(ErrorCode::ArityMismatch, "variable name count does not match arity");
    if (f.is_zero()) return "0";
    const Field& k = f.field();
    std::ostringstream os;
    bool first = true;
    for (const auto& t : f.terms()) {
        std::ostringstream mono;
        bool any = false;
        for (std::size_t i = 0; i < t.exps.size(); ++i) {
            if (t.exps[i] == 0) continue;
            if (any) mono << "*";
            mono << vars[i];
            if (t.exps[i] > 1) mono << "^" << t.exps[i];
            any = true;
        }
        std::string coef;
        bool negative = false;
        if (t.coef.is_base()) {
            mpq_class c = t.coef.base_value();
            negative = c < 0;
            const mpq_class a = abs(c);
            if (a != 1 || !any) coef = a.get_str();
        } else {
            coef = "(" + k.format(t.coef) + ")";
        }
        if (first) os << (negative ? "-" : "");
        else os << (negative ? " - " : " + ");
        first = false;
        if (!coef.empty()) {
            os << coef;
            if (any) os << "*";
        }
        os << mono.str();
    }
    return os.str();
}

std::string format_upoly(const UPoly& f, std::string_view var) {
    return format_polynomial(f.to_polynomial(1, 0), VarNames{std::string(var)});
}

VarNames default_names(std::size_t n) {
    static const VarNames base = {"x", "y", "z", "w"};
    if (n <= base.size()) return VarNames(base.begin(), base.begin() + static_cast<std::ptrdiff_t>(n));
    VarNames out;
    for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i));
    return out;
}

NamedPolynomial parse_document(std::string_view text, const Field& default_field) {
    std::optional<VarNames> vars;
    Field field = default_field;
    std::string body;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string t = trim_copy(line);
        if (t.empty()) continue;
        if (t.rfind("vars:", 0) == 0) {
            VarNames v;
            std::string rest = t.substr(5);
            std::replace(rest.begin(), rest.end(), ',', ' ');
            std::istringstream names(rest);
            std::string name;
            while (names >> name) v.push_back(name);
            if (v.empty()) fail(ErrorCode::Parse, "empty vars header");
            vars = std::move(v);
        } else if (t.rfind("field:", 0) == 0) {
            field = Field::parse(trim_copy(t.substr(6)));
        } else {
            body += t;
            body += ' ';
        }
    }
    if (trim_copy(body).empty()) fail(ErrorCode::Parse, "document contains no polynomial");
    if (!vars) vars = collect_identifiers(body, field);
    Polynomial p = parse_polynomial(body, *vars, field);
    return {std::move(*vars), std::move(p)};
}

nlohmann::json to_json(const Polynomial& f, const VarNames& vars) {
    if (vars.size() != f.nvars()) fail(ErrorCode::ArityMismatch, "variable name count does not match arity");
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : f.terms())
        terms.push_back(nlohmann::json::array({t.exps, f.field().format(t.coef)}));
    nlohmann::json j = {{"vars", vars}, {"terms", terms}};
    if (!f.field().is_rational()) j["field"] = f.field().descriptor();
    return j;
}

NamedPolynomial from_json(const nlohmann::json& j, const Field& default_field) {
    try {
        Field field = j.contains("field") ? Field::parse(j.at("field").get<std::string>()) : default_field;
        VarNames vars = j.at("vars").get<VarNames>();
        std::vector<Term> terms;
        for (const auto& t : j.at("terms")) {
            Exponents e = t.at(0).get<Exponents>();
            if (e.size() != vars.size()) fail(ErrorCode::Parse, "term exponent vector has wrong length");
            const std::string coef = t.at(1).is_string() ? t.at(1).get<std::string>() : t.at(1).dump();
            const Polynomial c = parse_polynomial(coef, {}, field);
            if (!c.is_constant()) fail(ErrorCode::Parse, "coefficient is not a constant");
            terms.push_back({std::move(e), c.constant_term()});
        }
        Polynomial p = Polynomial::from_terms(field, vars.size(), std::move(terms));
        return {std::move(vars), std::move(p)};
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::Parse, std::string("malformed polynomial JSON: ") + e.what());
    }
}

Field Field::parse(std::string_view descriptor) {
    std::string d = trim_copy(descriptor);
    std::string lower = d;
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "q" || lower == "qq" || lower == "rationals") return rationals();
    if (lower.rfind("gf(", 0) == 0 && lower.back() == ')') {
        const std::string num = lower.substr(3, lower.size() - 4);
        if (num.empty() || !std::all_of(num.begin(), num.end(), [](unsigned char c) { return std::isdigit(c); }))
            fail(ErrorCode::Parse, "bad prime field descriptor '" + d + "'");
        return prime(std::stoull(num));
    }
    if ((lower[0] == 'q') && d.size() > 1 && d[1] == '[') {
        const auto close = d.find(']');
        const auto slash = d.find('/', close);
        if (close == std::string::npos || slash == std::string::npos)
            fail(ErrorCode::Parse, "bad extension field descriptor '" + d + "'");
        const std::string gen = trim_copy(d.substr(2, close - 2));
        if (gen.empty()) fail(ErrorCode::Parse, "extension generator name is empty");
        const std::string mod = d.substr(slash + 1);
        const Polynomial m = parse_polynomial(mod, VarNames{gen}, rationals());
        std::vector<mpq_class> coeffs(static_cast<std::size_t>(std::max(m.degree(), 0)) + 1);
        for (const auto& t : m.terms()) coeffs[t.exps[0]] = t.coef.base_value();
        return extension(std::move(coeffs), gen);
    }
    fail(ErrorCode::Parse, "unknown field descriptor '" + d + "'");
}

} // namespace eqlab::algebra
