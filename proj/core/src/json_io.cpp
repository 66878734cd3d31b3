#include "llpack/json_io.hpp"

#include <algorithm>

namespace llpack::io {

using cusp::CuspidalLabel;
using cusp::TypeDatum;
using par::Parameter;
using par::PGroupKind;
using poly::MonicPoly;

std::string rational_string(const gf::Rat& r) {
    std::string s = std::to_string(r.numerator());
    if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
    return s;
}

namespace {

gf::FieldPtr field_of(long long p, int e) {
    auto f = gf::Field::prime(p);
    return e > 1 ? f->extension(e) : f;
}

}  // namespace

Json poly_to_json(const MonicPoly& p) {
    Json j;
    j["p"] = p.field()->characteristic();
    j["e"] = p.field()->degree_over_prime();
    j["poly"] = p.to_string();
    return j;
}

MonicPoly poly_from_json(const Json& j) {
    if (!j.contains("p") || !j.contains("poly"))
        throw Error(ErrorCode::Shape, "polynomial JSON needs fields p and poly");
    long long p = j.at("p").get<long long>();
    int e = j.value("e", 1);
    return MonicPoly::parse(field_of(p, e), j.at("poly").get<std::string>());
}

Json kind_to_json(const PGroupKind& kind) {
    Json j;
    j["family"] = par::pfamily_name(kind.family);
    j["n"] = kind.n;
    if (kind.family == par::PFamily::EvenOrthogonal) j["disc"] = par::disc_name(kind.disc);
    return j;
}

PGroupKind kind_from_json(const Json& j) {
    auto fam = par::pfamily_from_name(j.value("family", std::string()));
    if (!fam) throw Error(ErrorCode::Shape, "unknown parameter family in kind JSON");
    PGroupKind kind;
    kind.family = *fam;
    kind.n = j.value("n", 0);
    if (j.contains("disc")) {
        auto d = par::disc_from_name(j.at("disc").get<std::string>());
        if (!d) throw Error(ErrorCode::Shape, "unknown discriminant class in kind JSON");
        kind.disc = *d;
    }
    return kind;
}

Json parameter_to_json(const Parameter& phi) {
    Json j;
    j["kind"] = kind_to_json(phi.kind);
    j["a"] = phi.a;
    j["b"] = phi.b;
    j["c"] = phi.c;
    j["d"] = phi.d;
    Json deep = Json::array();
    for (const auto& p : phi.deep) {
        Json e = poly_to_json(p.poly);
        e["a_phi"] = p.a_phi;
        e["b_phi"] = p.b_phi;
        deep.push_back(std::move(e));
    }
    j["deep"] = std::move(deep);
    return j;
}

Parameter parameter_from_json(const Json& j) {
    Parameter phi;
    if (!j.contains("kind")) throw Error(ErrorCode::Shape, "parameter JSON needs a kind");
    phi.kind = kind_from_json(j.at("kind"));
    phi.a = j.value("a", -1);
    phi.b = j.value("b", -1);
    phi.c = j.value("c", -1);
    phi.d = j.value("d", -1);
    for (const auto& e : j.value("deep", Json::array()))
        phi.deep.push_back({poly_from_json(e), e.value("a_phi", -1), e.value("b_phi", -1)});
    phi.normalize();
    return phi;
}

namespace {

Json finite_kind_to_json(const cusp::FiniteGroupKind& kind) {
    Json j;
    j["family"] = cusp::family_name(kind.family);
    j["n"] = kind.n;
    if (kind.family == cusp::Family::EvenOrthogonal) j["delta"] = kind.delta;
    if (kind.family == cusp::Family::Unitary) j["q_bullet"] = kind.q_bullet;
    return j;
}

cusp::FiniteGroupKind finite_kind_from_json(const Json& j) {
    auto fam = cusp::family_from_name(j.value("family", std::string()));
    if (!fam) throw Error(ErrorCode::Shape, "unknown finite group family in kind JSON");
    cusp::FiniteGroupKind kind;
    kind.family = *fam;
    kind.n = j.value("n", 0);
    kind.delta = j.value("delta", +1);
    kind.q_bullet = j.value("q_bullet", 0LL);
    return kind;
}

}  // namespace

Json label_to_json(const CuspidalLabel& label) {
    Json j;
    j["kind"] = finite_kind_to_json(label.kind);
    j["m_plus"] = label.m_plus;
    j["m_minus"] = label.m_minus;
    Json deep = Json::array();
    for (const auto& e : label.deep) {
        Json d = poly_to_json(e.poly);
        d["m"] = e.m;
        deep.push_back(std::move(d));
    }
    j["deep"] = std::move(deep);
    if (label.eps) j["eps"] = *label.eps;
    return j;
}

CuspidalLabel label_from_json(const Json& j) {
    CuspidalLabel label;
    if (!j.contains("kind")) throw Error(ErrorCode::Shape, "label JSON needs a kind");
    label.kind = finite_kind_from_json(j.at("kind"));
    label.m_plus = j.value("m_plus", 0);
    label.m_minus = j.value("m_minus", 0);
    for (const auto& e : j.value("deep", Json::array()))
        label.deep.push_back({poly_from_json(e), e.value("m", 0)});
    if (j.contains("eps")) label.eps = j.at("eps").get<int>();
    label.normalize();
    return label;
}

Json datum_to_json(const TypeDatum& datum) {
    Json j;
    if (datum.gl_poly) j["gl_poly"] = poly_to_json(*datum.gl_poly);
    j["rho_y"] = label_to_json(datum.rho_y);
    j["rho_z"] = label_to_json(datum.rho_z);
    j["inner_form"] = datum.inner_form;
    return j;
}

TypeDatum datum_from_json(const Json& j) {
    TypeDatum datum;
    if (j.contains("gl_poly")) datum.gl_poly = poly_from_json(j.at("gl_poly"));
    if (!j.contains("rho_y") || !j.contains("rho_z"))
        throw Error(ErrorCode::Shape, "datum JSON needs rho_y and rho_z");
    datum.rho_y = label_from_json(j.at("rho_y"));
    datum.rho_z = label_from_json(j.at("rho_z"));
    datum.inner_form = j.value("inner_form", +1);
    return datum;
}

Json red_point_to_json(const hecke::ReducPoint& s) {
    Json j;
    j["real"] = rational_string(s.real);
    j["imag_units"] = s.imag_units;
    j["m"] = s.m;
    j["signed_zero"] = s.negative;
    return j;
}

Json red_set_to_json(const std::vector<hecke::ReducPoint>& points) {
    Json arr = Json::array();
    for (const auto& s : points) arr.push_back(red_point_to_json(s));
    return arr;
}

Json verify_report_to_json(const sg::VerifyReport& report) {
    Json j;
    j["lemma"] = report.check;
    j["q"] = report.q;
    j["space"] = report.space;
    j["pass"] = report.pass;
    j["class_reps"] = report.class_reps;
    j["counts"] = report.counts;
    if (report.counterexample) j["counterexample"] = *report.counterexample;
    return j;
}

Json sp4_report_to_json(const sg::Sp4Report& report) {
    Json j;
    j["q"] = report.q;
    j["c"] = report.c_expr;
    j["abs_b"] = report.abs_b_expr;
    j["nu_equal"] = report.nu_equal;
    j["nu_diff"] = report.nu_diff;
    j["rhs_matches"] = report.difference_matches;
    j["tr_Ay"] = report.trace_ay_normalized ? "n(psi)" : "mismatch";
    j["pass"] = report.pass;
    return j;
}

namespace {

std::string label_short(const CuspidalLabel& l) {
    std::string s = "rho(" + std::to_string(l.m_plus) + "," + std::to_string(l.m_minus);
    for (const auto& e : l.deep) s += ",{" + e.poly.to_string() + ":" + std::to_string(e.m) + "}";
    s += ")";
    if (l.kind.family == cusp::Family::OddOrthogonal)
        s += l.eps.value_or(+1) > 0 ? "(+)" : "(-)";
    return s;
}

std::string datum_short(const TypeDatum& d) {
    std::string s = label_short(d.rho_y) + "x" + label_short(d.rho_z);
    if (d.inner_form < 0) s += "'";
    return s;
}

}  // namespace

Json table_row_to_json(const cls::TableRow& row) {
    Json j;
    j["parameter"] = parameter_to_json(row.phi);
    Json types = Json::array();
    for (const auto& t : row.types) types.push_back(datum_to_json(t));
    j["types"] = std::move(types);
    return j;
}

std::string table_row_to_tsv(const cls::TableRow& row) {
    std::string family = par::pfamily_name(row.phi.kind.family);
    if (row.phi.kind.family == par::PFamily::EvenOrthogonal)
        family += std::string("/") + par::disc_name(row.phi.kind.disc);

    std::string params = std::to_string(row.phi.a) + "," + std::to_string(row.phi.b) + "," +
                         std::to_string(row.phi.c) + "," + std::to_string(row.phi.d);

    std::string deep;
    for (const auto& p : row.phi.deep) {
        if (!deep.empty()) deep += ";";
        deep += "(" + p.poly.to_string() + ":" + std::to_string(p.a_phi) + "," +
                std::to_string(p.b_phi) + ")";
    }
    if (deep.empty()) deep = "-";

    std::string types;
    for (const auto& t : row.types) {
        if (!types.empty()) types += ";";
        types += datum_short(t);
    }

    return family + "\t" + params + "\t" + deep + "\t" + types;
}

Json descend_to_json(const cls::DescendResult& res) {
    Json j;
    j["phi0"] = parameter_to_json(res.phi0);
    j["exceptional"] = res.exceptional;
    Json entries = Json::array();
    for (const auto& e : res.entries) {
        Json entry;
        entry["datum"] = datum_to_json(e.datum);
        entry["sign"] = e.sign;
        entries.push_back(std::move(entry));
    }
    j["entries"] = std::move(entries);
    return j;
}

}  // namespace llpack::io
