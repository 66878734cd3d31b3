// Command-line front end: polynomial enumeration, parameter validation, the
// classification maps, reducibility sets, and the finite-group verification
// reports, with JSON (default) or TSV output.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "llpack/classify.hpp"
#include "llpack/json_io.hpp"

using namespace llpack;
using io::Json;

namespace {

long long max_q() {
    long long cap = 13;
    if (const char* env = std::getenv("LLPACK_MAX_Q")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) cap = v;
    }
    return cap;
}

void check_q(long long q) {
    if (q > max_q())
        throw Error(ErrorCode::CapExceeded,
                    "q = " + std::to_string(q) + " exceeds the cap " + std::to_string(max_q()) +
                        " (override with LLPACK_MAX_Q)");
}

gf::FieldPtr field_of_q(long long q) {
    long long p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) p = q;
    int e = 0;
    long long r = q;
    while (r > 1) {
        if (r % p != 0) throw Error(ErrorCode::Domain, "q must be a prime power");
        r /= p;
        ++e;
    }
    auto f = gf::Field::prime(p);
    return e > 1 ? f->extension(e) : f;
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Domain, "cannot open " + path);
    Json j;
    in >> j;
    return j;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct Options {
    bool tsv = false;
};

int cmd_polys(long long q, int deg, const std::string& kind_name, bool allow_deg_one,
              const Options& opt) {
    auto field = field_of_q(q);
    poly::DualityKind kind = poly::DualityKind::plain();
    if (kind_name == "conj") {
        long long qb = 1;
        while (qb * qb < q) ++qb;
        if (qb * qb != q)
            throw Error(ErrorCode::Domain, "conjugate duality needs a square field size");
        kind = poly::DualityKind::conjugate(qb);
    } else if (kind_name != "plain") {
        throw Error(ErrorCode::Domain, "kind must be plain or conj");
    }
    auto polys = poly::enumerate_self_dual_irreducible(field, deg, kind, allow_deg_one);
    if (opt.tsv) {
        for (const auto& p : polys) std::cout << p.to_string() << "\n";
    } else {
        Json arr = Json::array();
        for (const auto& p : polys) arr.push_back(p.to_string());
        emit(arr);
    }
    return 0;
}

int cmd_validate_param(const std::string& path, const Options& opt) {
    auto phi = io::parameter_from_json(load_json(path));
    auto violations = par::validate_parameter(phi);
    if (opt.tsv) {
        std::cout << (violations.empty() ? "ok" : "invalid") << "\n";
        for (const auto& v : violations)
            std::cout << error_code_name(v.code) << "\t" << v.message << "\n";
    } else {
        Json j;
        j["ok"] = violations.empty();
        Json arr = Json::array();
        for (const auto& v : violations) {
            Json e;
            e["code"] = error_code_name(v.code);
            e["message"] = v.message;
            arr.push_back(std::move(e));
        }
        j["violations"] = std::move(arr);
        emit(j);
    }
    return violations.empty() ? 0 : 1;
}

int cmd_to_param(const std::string& path, const Options&) {
    Json j = load_json(path);
    if (!j.contains("datum")) throw Error(ErrorCode::Shape, "expected fields ambient and datum");
    auto datum = io::datum_from_json(j.at("datum"));
    par::PGroupKind ambient =
        j.contains("ambient") ? io::kind_from_json(j.at("ambient")) : par::PGroupKind{};
    if (!j.contains("ambient")) {
        switch (datum.rho_y.kind.family) {
            case cusp::Family::Symplectic: ambient = par::PGroupKind::symplectic(0); break;
            case cusp::Family::Unitary: ambient = par::PGroupKind::unitary(0); break;
            case cusp::Family::EvenOrthogonal:
                ambient = par::PGroupKind::even_orthogonal(0, par::Disc::One);
                break;
            case cusp::Family::OddOrthogonal:
                ambient = par::PGroupKind::even_orthogonal(0, par::Disc::Varpi);
                break;
        }
    }
    emit(io::parameter_to_json(cls::type_to_parameter(datum, ambient)));
    return 0;
}

int cmd_to_types(const std::string& path, const Options&) {
    Json j = load_json(path);
    auto phi = io::parameter_from_json(j.contains("parameter") ? j.at("parameter") : j);
    auto types = cls::parameter_to_types(phi.kind, phi);
    Json arr = Json::array();
    for (const auto& t : types) arr.push_back(io::datum_to_json(t));
    emit(arr);
    return 0;
}

int cmd_packet_count(const std::string& path, bool connected, const Options&) {
    auto phi = io::parameter_from_json(load_json(path));
    par::require_valid(phi);
    auto variant = connected ? par::CountVariant::ConnectedEvenSO : par::CountVariant::Full;
    std::cout << par::supercuspidal_count(phi, variant) << "\n";
    return 0;
}

int cmd_red_set(const std::string& path, const std::string& block_name, const Options& opt) {
    Json j = load_json(path);
    auto datum = io::datum_from_json(j.contains("datum") ? j.at("datum") : j);
    hecke::GlBlock block = hecke::GlBlock::one();
    if (block_name == "one") {
        block = hecke::GlBlock::one();
    } else if (block_name == "omega1") {
        block = hecke::GlBlock::omega1();
    } else if (block_name.rfind("poly:", 0) == 0) {
        std::string text = block_name.substr(5);
        if (datum.rho_y.deep.empty())
            throw Error(ErrorCode::Domain, "datum has no deep polynomials to select from");
        auto field = datum.rho_y.deep.front().poly.field();
        block = hecke::GlBlock::of_poly(poly::MonicPoly::parse(field, text));
    } else {
        throw Error(ErrorCode::Domain, "block must be one, omega1, or poly:P");
    }
    auto points = hecke::red_set(datum, block);
    if (opt.tsv) {
        for (const auto& s : points)
            std::cout << io::rational_string(s.real) << "\t" << s.imag_units << "\t" << s.m << "\t"
                      << (s.negative ? 1 : 0) << "\n";
    } else {
        emit(io::red_set_to_json(points));
    }
    return 0;
}

int cmd_verify_lemma(const std::string& space_name, long long q, const Options&) {
    check_q(q);
    auto kind = sg::space_kind_from_name(space_name);
    if (!kind) throw Error(ErrorCode::Domain, "space must be sp2, o2+, o2-, or sp4");
    auto space = sg::ClassicalSpace::make(*kind, gf::Field::prime(q));
    auto report = sg::verify_similitude_lemma(space);
    emit(io::verify_report_to_json(report));
    return report.pass ? 0 : 1;
}

int cmd_verify_sp4(long long q, const Options&) {
    check_q(q);
    auto report = sg::verify_sp4(q);
    emit(io::sp4_report_to_json(report));
    return report.pass ? 0 : 1;
}

int cmd_packet_table(const std::string& family_name, int m_max, const Options& opt) {
    auto family = cusp::family_from_name(family_name);
    if (!family) throw Error(ErrorCode::Domain, "family must be sp, o-even, o-odd, or u");
    cls::GridBounds bounds;
    bounds.max_m = m_max;
    auto rows = cls::packet_table(*family, bounds);
    if (opt.tsv) {
        for (const auto& r : rows) std::cout << io::table_row_to_tsv(r) << "\n";
    } else {
        Json arr = Json::array();
        for (const auto& r : rows) arr.push_back(io::table_row_to_json(r));
        emit(arr);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification maps for depth-zero supercuspidal packets"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--tsv", opt.tsv, "emit TSV instead of JSON");

    long long q = 3;
    int deg = 1;
    int m_max = 1;
    std::string kind_name = "plain", json_path, block_name = "one", space_name = "sp2",
                family_name = "sp";
    bool allow_deg_one = false, connected = false;

    auto* polys = app.add_subcommand("polys", "list self-dual irreducible polynomials");
    polys->add_option("--q", q, "field size")->required();
    polys->add_option("--deg", deg, "degree")->required();
    polys->add_option("--kind", kind_name, "plain|conj");
    polys->add_flag("--allow-deg-one", allow_deg_one, "include X-1 and X+1 for plain duality");

    auto* vp = app.add_subcommand("validate-param", "validate a parameter");
    vp->add_option("--json", json_path, "parameter JSON file")->required();

    auto* classify = app.add_subcommand("classify", "classification maps");
    classify->require_subcommand(1);
    auto* to_param = classify->add_subcommand("to-param", "datum to parameter");
    to_param->add_option("--json", json_path, "JSON file with ambient and datum")->required();
    auto* to_types = classify->add_subcommand("to-types", "parameter to inducing data");
    to_types->add_option("--json", json_path, "parameter JSON file")->required();

    auto* pc = app.add_subcommand("packet-count", "supercuspidal members of a packet");
    pc->add_option("--json", json_path, "parameter JSON file")->required();
    pc->add_flag("--connected", connected, "count for the connected even orthogonal group");

    auto* rs = app.add_subcommand("red-set", "points of reducibility of a datum");
    rs->add_option("--json", json_path, "datum JSON file")->required();
    rs->add_option("--block", block_name, "one|omega1|poly:P")->required();

    auto* vl = app.add_subcommand("verify-lemma", "two-class dichotomy report");
    vl->add_option("--space", space_name, "sp2|o2+|o2-|sp4")->required();
    vl->add_option("--q", q, "prime field size")->required();

    auto* vs = app.add_subcommand("verify-sp4", "rank-1 worked example report");
    vs->add_option("--q", q, "prime field size")->required();

    auto* pt = app.add_subcommand("packet-table", "grid of (parameter, type-set) rows");
    pt->add_option("--family", family_name, "sp|o-even|o-odd|u")->required();
    pt->add_option("--max-m", m_max, "multiplicity bound")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*polys) return cmd_polys(q, deg, kind_name, allow_deg_one, opt);
        if (*vp) return cmd_validate_param(json_path, opt);
        if (*to_param) return cmd_to_param(json_path, opt);
        if (*to_types) return cmd_to_types(json_path, opt);
        if (*pc) return cmd_packet_count(json_path, connected, opt);
        if (*rs) return cmd_red_set(json_path, block_name, opt);
        if (*vl) return cmd_verify_lemma(space_name, q, opt);
        if (*vs) return cmd_verify_sp4(q, opt);
        if (*pt) return cmd_packet_table(family_name, m_max, opt);
    } catch (const Error& e) {
        Json err;
        err["error"] = error_code_name(e.code());
        err["message"] = e.what();
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        Json err;
        err["error"] = "Unhandled";
        err["message"] = e.what();
        std::cerr << err.dump() << "\n";
        return 1;
    }
    return 2;
}
