#include "fuchscodec/serialize.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace fuchscodec {

using nlohmann::json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {
json quad_json(const QuadElement& e) {
    return json{{"d", e.d()}, {"u", e.u().str()}, {"v", e.v().str()}};
}

json map_json(const UnimodularMap& m) {
    return json::array({format_double(m.a), format_double(m.b),
                        format_double(m.c), format_double(m.d)});
}

json complex_json(Complex z) {
    return json::array({format_double(z.real()), format_double(z.imag())});
}
}  // namespace

std::string quad_to_json(const QuadElement& e) { return quad_json(e).dump(); }
std::string map_to_json(const UnimodularMap& m) { return map_json(m).dump(); }

std::string domain_to_json(const FundamentalDomain& domain) {
    json j;
    j["version"] = kVersion;
    j["model"] = domain.model == DomainModel::disk ? "disk" : "half_plane";
    j["conjugator"] = map_json(domain.conjugator);
    j["center"] = complex_json(domain.center);
    j["tol"] = format_double(domain.tol);
    j["search_depth"] = domain.search_depth;
    j["finite_area"] = domain.finite_area;
    if (domain.finite_area) j["area"] = format_double(domain.area);
    if (!domain.notes.empty()) j["notes"] = domain.notes;
    json walls = json::array();
    for (const Wall& w : domain.walls) {
        walls.push_back(json{
            {"center", complex_json(w.circle.center)},
            {"radius", format_double(w.circle.radius)},
            {"side", w.side == WallSide::keep_exterior ? "keep_exterior" : "keep_interior"},
            {"pairing", map_json(w.pairing)}});
    }
    j["walls"] = walls;
    json verts = json::array();
    for (Complex v : domain.vertices) verts.push_back(complex_json(v));
    j["vertices"] = verts;
    return j.dump(2);
}

std::string codebook_to_json(const Codebook& cb) {
    json j;
    j["version"] = kVersion;
    j["group"] = cb.group;
    j["preset"] = cb.preset;
    j["tau"] = complex_json(cb.tau);
    json entries = json::array();
    for (const CodebookEntry& e : cb.entries) {
        entries.push_back(json{{"index", e.index},
                               {"word", e.word},
                               {"matrix", map_json(e.map)},
                               {"re", format_double(e.codeword.real())},
                               {"im", format_double(e.codeword.imag())}});
    }
    j["entries"] = entries;
    return j.dump(2);
}

std::string registry_to_json() {
    json rows = json::array();
    for (const TraceTriple& t : registry()) {
        rows.push_back(json{{"label", t.label},
                            {"x2", quad_json(t.x2)},
                            {"y2", quad_json(t.y2)},
                            {"z2_printed", quad_json(t.z2_printed)},
                            {"z2_corrected", quad_json(t.corrected_z2())},
                            {"e", t.e},
                            {"d", t.d},
                            {"a", quad_json(t.a)},
                            {"b", quad_json(t.b)}});
    }
    json j;
    j["version"] = kVersion;
    j["groups"] = rows;
    return j.dump(2);
}

std::string header_line(const std::string& command, double tol,
                        const std::string& seed, const std::string& budget) {
    std::ostringstream os;
    os << "# fuchscodec " << kVersion << " command=" << command
       << " tol=" << format_double(tol) << " seed=" << seed << " budget=" << budget;
    return os.str();
}

}  // namespace fuchscodec
