#include "supell/io.hpp"

#include <chrono>
#include <istream>
#include <ostream>
#include <sstream>

namespace supell {

namespace {

const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::constructed: return "constructed";
        case Provenance::mirrored: return "mirrored";
        case Provenance::searched: return "searched";
    }
    return "?";
}

std::string modulus_string(const Field& field) {
    std::string s;
    for (std::size_t i = 0; i < field.modulus().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(field.modulus()[i]);
    }
    return s;
}

std::map<std::string, std::string> parse_kv(const std::string& line) {
    std::map<std::string, std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) continue;
        out[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    return out;
}

}  // namespace

void write_manifest(std::ostream& os, const std::string& command,
                    const std::vector<std::pair<std::string, std::string>>& args,
                    const Field& field, bool with_timestamp) {
    os << "# supell " << kArtifactVersion << "\n";
    os << "# command=" << command;
    for (const auto& [k, v] : args) os << " " << k << "=" << v;
    os << "\n";
    os << "# field p=" << field.p() << " k=" << field.k()
       << " modulus=" << modulus_string(field) << "\n";
    os << "# seed=" << kFactorSeed << "\n";
    os << "# convention=affine-points-x-nonzero\n";
    if (with_timestamp) {
        auto now = std::chrono::system_clock::now().time_since_epoch();
        os << "# timestamp="
           << std::chrono::duration_cast<std::chrono::seconds>(now).count()
           << "\n";
    }
}

std::string format_point(const RationalPoint& pt, bool porcelain) {
    std::ostringstream os;
    os << "point prov=" << provenance_name(pt.prov) << " m=" << pt.m
       << " e=" << pt.e << " x=" << pt.x.to_string()
       << " y=" << pt.y.to_string() << " mult=" << pt.mult;
    if (!porcelain)
        os << "\n#   x = " << pt.x.pretty() << ", y = " << pt.y.pretty();
    return os.str();
}

std::string format_found_point(const FoundPoint& pt, bool porcelain) {
    std::ostringstream os;
    os << "point prov=searched x=" << pt.x.to_string()
       << " y=" << pt.y.to_string()
       << " class=" << (pt.cls == PthClass::pth_power ? "pth" : "nonpth")
       << " height=" << pt.height;
    if (!porcelain)
        os << "\n#   x = " << pt.x.pretty() << ", y = " << pt.y.pretty();
    return os.str();
}

std::vector<PointRecord> read_points(std::istream& is, const FieldPtr& f) {
    std::vector<PointRecord> out;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto kv = parse_kv(line);
        if (!kv.count("x") || !kv.count("y"))
            throw error("point line missing x= or y=: " + line);
        PointRecord rec;
        rec.x = parse_ratfunc(f, kv.at("x"));
        rec.y = parse_ratfunc(f, kv.at("y"));
        rec.fields = std::move(kv);
        out.push_back(std::move(rec));
    }
    return out;
}

void write_params(std::ostream& os, const CurveParams& params) {
    const Field& F = *params.field;
    os << "p=" << F.p() << "\n";
    os << "k=" << F.k() << "\n";
    os << "modulus=" << modulus_string(F) << "\n";
    os << "r=" << params.r << "\n";
    if (params.s) {
        os << "s=" << *params.s << "\n";
    } else {
        os << "h=" << params.h.to_string() << "\n";
    }
    if (params.generic_a) {
        os << "d=" << params.d << "\n";
    } else {
        os << "a_num=" << params.a_explicit->num().to_string() << "\n";
        os << "a_den=" << params.a_explicit->den().to_string() << "\n";
    }
}

CurveParams read_params(std::istream& is) {
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw error("bad config line: " + line);
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    auto need = [&](const std::string& key) -> const std::string& {
        auto it = kv.find(key);
        if (it == kv.end()) throw error("config missing key: " + key);
        return it->second;
    };
    std::uint64_t p = std::stoull(need("p"));
    std::uint32_t k = static_cast<std::uint32_t>(std::stoul(need("k")));
    FieldPtr f;
    if (kv.count("modulus")) {
        std::vector<std::uint64_t> mod;
        std::stringstream ss(kv.at("modulus"));
        std::string tok;
        while (std::getline(ss, tok, ',')) mod.push_back(std::stoull(tok));
        f = make_field(p, k, std::move(mod));
    } else {
        f = make_field(p, k);
    }
    CurveParams params;
    params.field = f;
    params.r = std::stoull(need("r"));
    if (kv.count("s")) {
        std::uint64_t s = std::stoull(kv.at("s"));
        params.h = make_params_xs1(f, params.r, s, 1).h;
        params.s = s;
    } else {
        params.h = parse_poly(f, need("h"));
    }
    if (kv.count("d")) {
        params.generic_a = true;
        params.d = std::stoull(kv.at("d"));
    } else {
        params.generic_a = false;
        params.a_explicit = RatFunc::reduce(parse_poly(f, need("a_num")),
                                            parse_poly(f, need("a_den")));
    }
    return params;
}

}  // namespace supell
