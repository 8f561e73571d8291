#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "eqlab/error.hpp"
#include "eqlab/factor.hpp"
#include "eqlab/family.hpp"
#include "eqlab/geometry.hpp"
#include "eqlab/singularity.hpp"
#include "eqlab/text_io.hpp"
#include "verify.hpp"

namespace eqlab::cli {

using namespace eqlab::algebra;
using namespace eqlab::family;
using namespace eqlab::geometry;
using namespace eqlab::singularity;
using nlohmann::json;

namespace {

const VarNames XYZ = {"x", "y", "z"};
const VarNames XYZW = {"x", "y", "z", "w"};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::InvalidArgument, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

mpz_class parse_integer(const std::string& s, const char* what) {
    const bool neg = !s.empty() && s[0] == '-';
    const std::string digits = neg ? s.substr(1) : s;
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
        fail(ErrorCode::Parse, std::string("bad integer for ") + what + ": '" + s + "'");
    return mpz_class(s);
}

std::pair<mpz_class, mpz_class> parse_range(const std::string& s, const char* what) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) {
        const mpz_class v = parse_integer(s, what);
        return {v, v};
    }
    return {parse_integer(s.substr(0, colon), what), parse_integer(s.substr(colon + 1), what)};
}

SingularitySpec load_spec(const std::string& spec, const std::string& file) {
    if (!file.empty()) {
        std::string text;
        std::istringstream in(read_file(file));
        for (std::string line; std::getline(in, line);) {
            line = line.substr(0, line.find('#'));
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            text += (text.empty() ? "" : ",") + line;
        }
        return SingularitySpec::parse(text);
    }
    return SingularitySpec::parse(spec);
}

void check_format(const Config& cfg) {
    if (cfg.format != "text" && cfg.format != "json" && cfg.format != "csv")
        fail(ErrorCode::InvalidArgument, "format must be text, json or csv");
}

void kv(std::ostream& out, const std::string& key, const std::string& value) {
    out << std::left << std::setw(18) << key << value << '\n';
}

std::string yes_no(bool holds) { return holds ? "holds" : "fails"; }

std::string point_text(const ProjPoint& p) {
    std::string s = p.format();
    if (!p.field().is_rational()) s += " over " + p.field().descriptor();
    return s;
}

std::string class_text(const std::optional<Classification>& c) {
    if (!c) return "-";
    return c->cls.name() + " (mu=" + std::to_string(c->mu) + ", tau=" + std::to_string(c->tau) + ")";
}

json class_json(const std::optional<Classification>& c) {
    if (!c) return nullptr;
    return {{"class", c->cls.name()}, {"mu", c->mu}, {"tau", c->tau}, {"corank", c->corank}};
}

Scalar scene_scalar(const json& v, const Field& k) {
    if (v.is_number_integer()) return k.from_int(v.get<long>());
    if (v.is_string()) {
        const Polynomial c = parse_polynomial(v.get<std::string>(), {}, k);
        return c.constant_term();
    }
    fail(ErrorCode::Parse, "scene coordinates must be integers or strings");
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace

// ---------------------------------------------------------------- dims

int cmd_dims(const Config& cfg, const DimsArgs& a, std::ostream& out) {
    check_format(cfg);
    const mpz_class d = parse_integer(a.d, "d");
    const SingularitySpec spec = load_spec(a.spec, a.spec_file);
    const mpz_class dim = dim_linear_system(a.n, d), oracle = dim_linear_system_oracle(a.n, d);
    const mpz_class expdim = surface_family_expdim(a.n, d, spec);
    if (cfg.format == "json") {
        out << json{{"n", a.n},
                    {"d", to_json(d)},
                    {"dim_dH", to_json(dim)},
                    {"oracle", to_json(oracle)},
                    {"spec", spec.format()},
                    {"sigma_tau", to_json(spec.sigma_tau())},
                    {"expdim", to_json(expdim)}}
                   .dump(2)
            << '\n';
    } else if (cfg.format == "csv") {
        out << "n,d,dim_dH,oracle,spec,sigma_tau,expdim\n"
            << a.n << ',' << d << ',' << dim << ',' << oracle << ',' << csv_quote(spec.format()) << ','
            << spec.sigma_tau() << ',' << expdim << '\n';
    } else {
        kv(out, "n", std::to_string(a.n));
        kv(out, "d", d.get_str());
        kv(out, "dim |dH|", dim.get_str());
        kv(out, "oracle", oracle.get_str() + (dim == oracle ? " (agrees)" : " (MISMATCH)"));
        if (!spec.entries.empty()) {
            kv(out, "spec", spec.format());
            kv(out, "sigma tau", spec.sigma_tau().get_str());
        }
        kv(out, "expdim", expdim.get_str());
    }
    return dim == oracle ? Ok : Mismatch;
}

// ---------------------------------------------------------------- scan

int cmd_scan(const Config& cfg, const ScanArgs& a, std::ostream& out) {
    check_format(cfg);
    const auto [lo, hi] = parse_range(a.d_range, "d");
    ScanOptions opts;
    opts.strict = a.strict;
    const auto rows = example1_scan(a.n, lo, hi, SingularityClass::parse(a.type), opts);
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back(to_json(r));
        out << arr.dump(2) << '\n';
    } else if (cfg.format == "csv") {
        out << scan_csv_header() << '\n';
        for (const auto& r : rows) out << to_csv_row(r) << '\n';
    } else {
        out << "n = " << a.n << ", type " << SingularityClass::parse(a.type).name() << '\n';
        out << std::right << std::setw(6) << "d" << std::setw(8) << "r" << std::setw(10) << "sigma_tau"
            << std::setw(16) << "window" << std::setw(10) << "dim_dH" << std::setw(9) << "expdim" << std::setw(13)
            << "lower_bound" << std::setw(13) << "threshold_d" << "  verdict\n";
        for (const auto& r : rows) {
            const std::string window = r.window_lo.get_str() + ".." + r.window_hi.get_str();
            out << std::setw(6) << r.d.get_str() << std::setw(8) << r.spec.total().get_str() << std::setw(10)
                << r.sigma_tau.get_str() << std::setw(16) << window << std::setw(10) << r.dim_dH.get_str()
                << std::setw(9) << r.expdim.get_str() << std::setw(13) << r.lower_bound.get_str() << std::setw(13)
                << r.threshold_d.get_str() << "  " << to_string(r.verdict);
            for (const auto& f : r.failures) out << " [" << f << "]";
            out << '\n';
        }
    }
    return Ok;
}

// ---------------------------------------------------------------- hirano

int cmd_hirano(const Config& cfg, const HiranoArgs& a, std::ostream& out) {
    check_format(cfg);
    const auto [lo, hi] = parse_range(a.m_range, "m");
    if (lo < 1 || lo > hi || !hi.fits_uint_p()) fail(ErrorCode::InvalidArgument, "m range must be nonempty and positive");
    std::vector<HiranoReport> rows;
    for (unsigned long m = lo.get_ui(); m <= hi.get_ui(); ++m)
        rows.push_back(hirano_analyze(a.n, a.k, static_cast<unsigned>(m)));
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back(to_json(r));
        out << arr.dump(2) << '\n';
    } else if (cfg.format == "csv") {
        out << hirano_csv_header() << '\n';
        for (const auto& r : rows) out << to_csv_row(r) << '\n';
    } else {
        out << "n = " << a.n << ", k = " << a.k << ", leading coefficient "
            << hirano_leading_coefficient(a.k).get_str() << '\n';
        out << std::right << std::setw(4) << "m" << std::setw(12) << "d" << std::setw(14) << "r" << std::setw(16)
            << "dim_dH" << std::setw(16) << "sigma_tau" << std::setw(16) << "expdim"
            << "  verdict\n";
        for (const auto& r : rows)
            out << std::setw(4) << r.m << std::setw(12) << r.params.d.get_str() << std::setw(14)
                << r.params.r.get_str() << std::setw(16) << r.dim_dH.get_str() << std::setw(16)
                << r.sigma_tau.get_str() << std::setw(16) << r.expdim.get_str() << "  " << to_string(r.verdict)
                << '\n';
    }
    return Ok;
}

// ---------------------------------------------------------------- tsmooth

int cmd_tsmooth(const Config& cfg, const TsmoothArgs& a, std::ostream& out) {
    check_format(cfg);
    const mpz_class d = parse_integer(a.d, "d");
    const SingularitySpec spec = load_spec(a.spec, a.spec_file);
    const GapReport g = gap_report(a.n, d, spec);
    const PairCheck pairs = existence_precondition_pairs(a.n, d, spec);
    if (cfg.format == "json") {
        json j = to_json(g);
        j["pairs"] = {{"holds", pairs.holds}, {"lhs", to_json(pairs.lhs)}, {"max_pair", pairs.worst}};
        out << j.dump(2) << '\n';
    } else if (cfg.format == "csv") {
        out << "n,d,spec,cond1_lhs,cond1_rhs,cond1_holds,cond2_lhs,dim_dH,cond2_ratio,cond2_holds,pairs_lhs,pairs_max,"
               "pairs_holds\n";
        out << a.n << ',' << d << ',' << csv_quote(spec.format()) << ',' << g.cond1.lhs << ',' << g.cond1.rhs << ','
            << g.cond1.holds << ',' << g.cond2.lhs << ',' << g.cond2.rhs << ',' << g.cond2.ratio << ','
            << g.cond2.holds << ',' << pairs.lhs << ',' << pairs.worst << ',' << pairs.holds << '\n';
    } else {
        kv(out, "n, d", std::to_string(a.n) + ", " + d.get_str());
        kv(out, "spec", spec.format().empty() ? "(empty)" : spec.format());
        kv(out, "condition 1", g.cond1.lhs.get_str() + (g.cond1.holds ? " < " : " >= ") + g.cond1.rhs.get_str() +
                                   "  " + yes_no(g.cond1.holds));
        kv(out, "condition 2", g.cond2.lhs.get_str() + (g.cond2.holds ? " <= " : " > ") + g.cond2.rhs.get_str() +
                                   "  ratio " + g.cond2.ratio.get_str() + "  " + yes_no(g.cond2.holds));
        kv(out, "pairs", pairs.lhs.get_str() + (pairs.holds ? " >= " : " < ") + std::to_string(pairs.worst) + "  " +
                             yes_no(pairs.holds));
        for (const auto& it : g.items)
            out << "  " << std::left << std::setw(6) << it.cls.code() << " x" << std::setw(10) << it.count.get_str()
                << " tau part " << std::setw(10) << it.tau_part.get_str() << " e* " << it.e.value
                << (it.e.upper_bound ? " (bound)" : "") << "  cond1 part " << it.cond1_part.get_str() << '\n';
        out << g.summary << '\n';
        if (!g.cond1.caveat.empty()) out << "note: " << g.cond1.caveat << '\n';
        out << "note: " << g.cond2.note << '\n';
    }
    return Ok;
}

// ---------------------------------------------------------------- cone

int cmd_cone(const Config& cfg, const std::string& scene_file, std::ostream& out) {
    check_format(cfg);
    json scene;
    try {
        scene = json::parse(read_file(scene_file));
    } catch (const json::exception& e) {
        fail(ErrorCode::Parse, std::string("scene: ") + e.what());
    }
    if (!scene.contains("curve") || !scene.contains("vertex") || !scene.contains("surface"))
        fail(ErrorCode::Parse, "scene needs curve, vertex and surface");
    const Field k = Field::parse(scene.value("field", std::string("q")));
    const Polynomial f = parse_polynomial(scene["curve"].get<std::string>(), XYZ, k);
    const Polynomial g = parse_polynomial(scene["surface"].get<std::string>(), XYZW, k);
    std::vector<Scalar> v;
    for (const auto& x : scene["vertex"]) v.push_back(scene_scalar(x, k));
    if (v.size() != 4) fail(ErrorCode::Parse, "vertex needs four coordinates");
    const ProjPoint p(k, v);
    std::optional<PlaneCurve> curve;
    if (scene.contains("frame")) {
        Matrix m(k, 4, 4);
        const json& fr = scene["frame"];
        if (fr.size() != 4) fail(ErrorCode::Parse, "frame must be a 4x4 matrix");
        for (std::size_t i = 0; i < 4; ++i) {
            if (fr[i].size() != 4) fail(ErrorCode::Parse, "frame must be a 4x4 matrix");
            for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = scene_scalar(fr[i][j], k);
        }
        curve.emplace(f, m);
    } else {
        curve.emplace(f);
    }

    const Cone cone = cone_equation(*curve, p);
    const bool reducible = k.is_rational() && irreducibility_test(f) == Irreducibility::Reducible;
    const ConeSection cs = cone_section(*curve, p, g);
    SectionOptions so;
    so.seed = cfg.seed;
    so.retries = cfg.retries;
    const SectionIrreducibility si = section_irreducibility(cs, so);

    std::optional<TransferReport> rep;
    if (!reducible) {
        TransferOptions to;
        if (cfg.field != "q") to.field = Field::parse(cfg.field);
        to.locus.seed = cfg.seed;
        to.locus.retries = cfg.retries;
        to.locus.jets.ceiling = cfg.jet_ceiling;
        to.jets.ceiling = cfg.jet_ceiling;
        rep = transfer_check(cs, to);
    }
    const bool different = rep && rep->any_different();

    if (cfg.format == "json") {
        json j = {{"field", k.descriptor()},
                  {"cone", format_polynomial(cone.equation, XYZW)},
                  {"curve_reducible", reducible},
                  {"section", std::string(to_string(si.verdict))},
                  {"section_attempts", si.attempts}};
        json fibers = json::array();
        if (rep)
            for (const auto& fb : rep->fibers) {
                json pts = json::array();
                for (const auto& pt : fb.points)
                    pts.push_back({{"point", pt.point ? json(point_text(*pt.point)) : json(nullptr)},
                                   {"packet_degree", pt.packet_degree},
                                   {"multiplicity", pt.multiplicity},
                                   {"classification", class_json(pt.invariants)},
                                   {"verdict", std::string(to_string(pt.verdict))},
                                   {"note", pt.note}});
                fibers.push_back({{"base", point_text(fb.base.point)},
                                  {"base_in_space", point_text(fb.base_in_space)},
                                  {"base_classification", class_json(fb.base.invariants)},
                                  {"transversal", fb.transversal},
                                  {"points", pts}});
            }
        j["fibers"] = fibers;
        j["any_different"] = different;
        j["any_unresolved"] = rep && rep->any_unresolved();
        out << j.dump(2) << '\n';
    } else if (cfg.format == "csv") {
        out << "base,base_class,transversal,point,packet_degree,multiplicity,class,verdict\n";
        if (rep)
            for (const auto& fb : rep->fibers)
                for (const auto& pt : fb.points)
                    out << csv_quote(point_text(fb.base.point)) << ','
                        << (fb.base.invariants ? fb.base.invariants->cls.name() : "-") << ',' << fb.transversal << ','
                        << csv_quote(pt.point ? point_text(*pt.point) : "-") << ',' << pt.packet_degree << ','
                        << pt.multiplicity << ',' << (pt.invariants ? pt.invariants->cls.name() : "-") << ','
                        << to_string(pt.verdict) << '\n';
    } else {
        kv(out, "cone", format_polynomial(cone.equation, XYZW));
        if (reducible) {
            kv(out, "curve", "reducible");
            kv(out, "section", "reducible");
            return Ok;
        }
        kv(out, "section", std::string(to_string(si.verdict)) + ", attempts " + std::to_string(si.attempts));
        kv(out, "singular points", std::to_string(rep->fibers.size()));
        for (const auto& fb : rep->fibers) {
            out << point_text(fb.base.point) << " -> " << point_text(fb.base_in_space) << ": "
                << class_text(fb.base.invariants) << '\n';
            out << "  fiber " << (fb.transversal ? "transversal" : "not transversal") << '\n';
            for (const auto& pt : fb.points) {
                out << "  " << (pt.point ? point_text(*pt.point) : "packet of degree " + std::to_string(pt.packet_degree))
                    << ": " << class_text(pt.invariants) << ", " << to_string(pt.verdict);
                if (pt.multiplicity > 1) out << ", multiplicity " << pt.multiplicity;
                if (!pt.note.empty()) out << " (" << pt.note << ")";
                out << '\n';
            }
        }
        kv(out, "transfer", different ? "different types found" : rep->any_unresolved() ? "no differences, some unresolved"
                                                                                         : "same types everywhere");
    }
    return different ? Mismatch : Ok;
}

// ---------------------------------------------------------------- classify

int cmd_classify(const Config& cfg, const std::string& input, std::ostream& out) {
    check_format(cfg);
    std::error_code ec;
    std::string text = std::filesystem::is_regular_file(input, ec) ? read_file(input) : input;
    if (text.find("vars:") == std::string::npos) text = "vars: x, y\n" + text;
    const NamedPolynomial doc = parse_document(text, Field::parse(cfg.field));
    if (doc.vars.size() != 2) fail(ErrorCode::ArityMismatch, "a germ needs exactly two variables");
    JetOptions jets;
    jets.ceiling = cfg.jet_ceiling;
    const Classification c = classify_simple(CurveGerm(doc.poly), jets);
    if (cfg.format == "json") {
        out << json{{"germ", format_polynomial(doc.poly, doc.vars)},
                    {"class", c.cls.name()},
                    {"mu", c.mu},
                    {"tau", c.tau},
                    {"corank", c.corank}}
                   .dump(2)
            << '\n';
    } else if (cfg.format == "csv") {
        out << "germ,class,mu,tau,corank\n"
            << csv_quote(format_polynomial(doc.poly, doc.vars)) << ',' << csv_quote(c.cls.name()) << ',' << c.mu << ','
            << c.tau << ',' << c.corank << '\n';
    } else {
        kv(out, "germ", format_polynomial(doc.poly, doc.vars));
        kv(out, "class", c.cls.name());
        kv(out, "mu", std::to_string(c.mu));
        kv(out, "tau", std::to_string(c.tau));
        kv(out, "corank", std::to_string(c.corank));
    }
    return Ok;
}

// ---------------------------------------------------------------- verify-example

int cmd_verify(const Config& cfg, const VerifyArgs& a, std::ostream& out) {
    check_format(cfg);
    bool all = true;
    json arr = json::array();
    if (cfg.format == "csv") out << "criterion,title,result,seconds,detail\n";
    for (const auto& c : verify::criteria()) {
        if (!a.only.empty() && std::find(a.only.begin(), a.only.end(), c.id) == a.only.end()) continue;
        const verify::Result r = verify::run(c, cfg.seed);
        all = all && r.pass;
        if (cfg.format == "json")
            arr.push_back({{"criterion", r.id}, {"title", r.title}, {"pass", r.pass}, {"seconds", r.seconds},
                           {"detail", r.detail}});
        else if (cfg.format == "csv")
            out << r.id << ',' << csv_quote(r.title)
                << ',' << (r.pass ? "PASS" : "FAIL") << ',' << r.seconds << ',' << csv_quote(r.detail) << '\n';
        else
            out << verify::format_line(r) << std::endl;
    }
    if (cfg.format == "json") out << arr.dump(2) << '\n';
    return all ? Ok : Mismatch;
}

} // namespace eqlab::cli
