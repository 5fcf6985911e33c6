#include "asres/serialize.hpp"

#include <sstream>

#include "asres/error.hpp"
#include "asres/generators.hpp"

namespace asres {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::parse, "malformed document: " + what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
    return j.at(key);
}

template <class T>
T get(const Json& j, const char* key) {
    try {
        return field(j, key).get<T>();
    } catch (const nlohmann::json::exception&) {
        bad(std::string("wrong type for '") + key + "'");
    }
}

Json weights_json(const std::vector<long>& w) {
    Json out = Json::array();
    for (long x : w) out.push_back(x);
    return out;
}

} // namespace

// ----------------------------------------------------------------- export

Json params_to_json(const ASParams& p) {
    Json j;
    j["m0"] = p.m0;
    j["d"] = p.d;
    j["n"] = p.n;
    j["a"] = p.a;
    j["b"] = p.b;
    j["mu"] = p.mu;
    j["m"] = p.m;
    j["delta"] = p.delta;
    j["label"] = p.label();
    return j;
}

Json generators_to_json(const ASParams& params) {
    GeneratorSet gens = build_generators(params);
    Json out = Json::array();
    for (const auto& g : gens.g)
        out.push_back(Json{{"label", "g" + std::to_string(g.h)}, {"weight", g.weight}, {"poly", g.poly.str()}});
    for (const auto& f : gens.f)
        out.push_back(Json{{"label", "f" + std::to_string(f.i) + std::to_string(f.j)},
                           {"weight", f.weight},
                           {"poly", f.poly.str()}});
    return out;
}

Json basis_to_json(const BasisElement& e, long weight) {
    Json j;
    j["tag"] = e.tag_name();
    j["shifted"] = e.shifted;
    j["h"] = e.h;
    j["indices"] = e.indices;
    j["v0"] = e.v0;
    j["v1"] = e.v1;
    j["weight"] = weight;
    return j;
}

Json complex_to_json(const Complex& c) {
    Json j;
    Json ranks = Json::array();
    for (auto r : c.ranks()) ranks.push_back(r);
    j["ranks"] = ranks;
    Json modules = Json::array();
    for (const auto& m : c.modules) {
        Json basis = Json::array();
        for (std::size_t i = 0; i < m.rank(); ++i) basis.push_back(basis_to_json(m.at(i), m.weight(i)));
        modules.push_back(basis);
    }
    j["modules"] = modules;
    Json maps = Json::array();
    for (int s = 1; s <= c.length(); ++s) {
        const auto& d = c.differential(s);
        Json entries = Json::array();
        for (std::size_t col = 0; col < d.cols(); ++col)
            for (const auto& e : d.column(col))
                entries.push_back(Json{{"row", e.row}, {"col", col}, {"poly", e.poly.str()}});
        maps.push_back(Json{{"s", s}, {"rows", d.rows()}, {"cols", d.cols()}, {"entries", entries}});
    }
    j["differentials"] = maps;
    return j;
}

Json provenance_to_json(const std::vector<CancellationStep>& steps) {
    Json out = Json::array();
    for (const auto& st : steps)
        out.push_back(Json{{"s", st.s},
                           {"source", basis_to_json(st.source, 0)},
                           {"target", basis_to_json(st.target, 0)},
                           {"unit", st.unit.str()}});
    // Weights are not needed to identify the pair.
    for (auto& st : out) {
        st["source"].erase("weight");
        st["target"].erase("weight");
    }
    return out;
}

Artifact make_artifact(const ASParams& params) {
    Artifact a;
    a.params = params;
    ConeBuild build = build_cone_complex(params);
    a.sign_flips = build.signs.flipped_names();
    a.cone = std::move(build.complex);
    a.minimal = minimalize(a.cone);
    return a;
}

Json artifact_to_json(const Artifact& a) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["params"] = params_to_json(a.params);
    j["generators"] = generators_to_json(a.params);
    j["sign_flips"] = a.sign_flips;
    Json summary;
    Json cone_ranks = Json::array(), betti = Json::array();
    for (auto r : a.cone.ranks()) cone_ranks.push_back(r);
    for (int s = 1; s <= a.minimal.complex.length(); ++s) betti.push_back(a.minimal.complex.module(s).rank());
    summary["cone_ranks"] = cone_ranks;
    summary["betti"] = betti;
    summary["cancellations"] = a.minimal.provenance.size();
    j["summary"] = summary;
    j["cone"] = complex_to_json(a.cone);
    j["minimal"] = complex_to_json(a.minimal.complex);
    j["provenance"] = provenance_to_json(a.minimal.provenance);
    return j;
}

Json report_to_json(const VerificationReport& r) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["params"] = params_to_json(r.params);
    j["wmax"] = r.wmax;
    j["field"] = r.field;
    j["sign_flips"] = r.sign_flips;
    Json cone_ranks = Json::array();
    for (auto x : r.cone_ranks) cone_ranks.push_back(x);
    j["cone_ranks"] = cone_ranks;
    j["cone_rank_expected"] = weights_json(r.cone_rank_expected);
    auto positions = [](const std::vector<PositionReport>& ps) {
        Json out = Json::array();
        for (const auto& p : ps)
            out.push_back(Json{{"position", p.position},
                               {"composition", p.composition},
                               {"homogeneity", p.homogeneity},
                               {"minimality", p.minimality}});
        return out;
    };
    j["cone_positions"] = positions(r.cone_positions);
    j["minimal_positions"] = positions(r.minimal_positions);
    j["betti_expected"] = weights_json(r.betti_expected);
    j["betti_actual"] = weights_json(r.betti_actual);
    j["cancellations_expected"] = weights_json(r.cancellations_expected);
    j["cancellations_actual"] = weights_json(r.cancellations_actual);
    j["structural_prediction"] = r.structural_prediction;
    Json ex;
    ex["cone_checked"] = r.exactness_cone_checked;
    ex["cone"] = r.exactness_cone;
    ex["minimal_checked"] = r.exactness_minimal_checked;
    ex["minimal"] = r.exactness_minimal;
    Json fails = Json::array();
    for (const auto& c : r.exactness_failures)
        fails.push_back(Json{{"weight", c.weight}, {"position", c.position}, {"lhs", c.lhs}, {"rhs", c.rhs}});
    ex["failures"] = fails;
    j["exactness"] = ex;
    j["hilbert_matches"] = r.hilbert_matches;
    j["colon_identities"] = r.colon_identities;
    Json colon = Json::array();
    for (bool b : r.colon_noncontainment) colon.push_back(b);
    j["colon_noncontainment"] = colon;
    j["failures"] = r.failures;
    j["passed"] = r.passed();
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ----------------------------------------------------------------- import

ASParams params_from_json(const Json& j) {
    const int m0 = get<int>(j, "m0"), d = get<int>(j, "d"), n = get<int>(j, "n");
    ASParams p = make_params(m0, d, n);
    if (j.contains("m") && get<std::vector<int>>(j, "m") != p.m) bad("params.m disagrees with (m0, d, n)");
    if (j.contains("delta") && get<std::vector<int>>(j, "delta") != p.delta)
        bad("params.delta disagrees with (m0, d, n)");
    return p;
}

BasisElement basis_from_json(const Json& j) {
    const auto tag = get<std::string>(j, "tag");
    const bool shifted = get<bool>(j, "shifted");
    auto indices = get<std::vector<int>>(j, "indices");
    BasisElement e;
    if (tag == "EN")
        e = BasisElement::en(shifted, std::move(indices), get<int>(j, "v0"), get<int>(j, "v1"));
    else if (tag == "ENUnit")
        e = BasisElement::unit(shifted);
    else if (tag == "Koszul")
        e = BasisElement::koszul(get<int>(j, "h"), std::move(indices));
    else
        bad("unknown basis tag '" + tag + "'");
    return e;
}

Complex complex_from_json(const Json& j, const ASParams& params) {
    Complex c;
    c.params = params;
    const Json& modules = field(j, "modules");
    if (!modules.is_array() || modules.empty()) bad("modules must be a nonempty array");
    for (const auto& m : modules) {
        if (!m.is_array()) bad("module must be an array");
        std::vector<BasisElement> basis;
        std::vector<long> weights;
        for (const auto& e : m) {
            basis.push_back(basis_from_json(e));
            weights.push_back(get<long>(e, "weight"));
        }
        c.modules.emplace_back(std::move(basis), std::move(weights));
    }
    const Json& maps = field(j, "differentials");
    if (!maps.is_array() || maps.size() + 1 != c.modules.size()) bad("differential count does not match modules");
    for (int s = 1; s <= c.length(); ++s) {
        const Json& dj = maps[static_cast<std::size_t>(s - 1)];
        const auto rows = get<std::size_t>(dj, "rows"), cols = get<std::size_t>(dj, "cols");
        if (get<int>(dj, "s") != s || rows != c.module(s - 1).rank() || cols != c.module(s).rank())
            bad("differential " + std::to_string(s) + " has wrong shape");
        std::vector<std::vector<DifferentialMap::Entry>> columns(cols);
        for (const auto& e : field(dj, "entries")) {
            const auto row = get<std::size_t>(e, "row"), col = get<std::size_t>(e, "col");
            if (row >= rows || col >= cols) bad("entry out of range in differential " + std::to_string(s));
            columns[col].push_back({row, Polynomial::parse(get<std::string>(e, "poly"), params.nvars())});
        }
        DifferentialMap d(rows, cols);
        for (std::size_t col = 0; col < cols; ++col) d.set_column(col, std::move(columns[col]));
        c.maps.push_back(std::move(d));
    }
    return c;
}

Artifact artifact_from_json(const Json& j) {
    if (!j.is_object()) bad("top level must be an object");
    if (get<int>(j, "schema") != kSchemaVersion) bad("unsupported schema version");
    Artifact a;
    a.params = params_from_json(field(j, "params"));
    a.sign_flips = get<std::vector<std::string>>(j, "sign_flips");
    a.cone = complex_from_json(field(j, "cone"), a.params);
    a.minimal.complex = complex_from_json(field(j, "minimal"), a.params);
    for (const auto& st : field(j, "provenance")) {
        CancellationStep step;
        step.s = get<int>(st, "s");
        step.source = basis_from_json(field(st, "source"));
        step.target = basis_from_json(field(st, "target"));
        step.unit = Rational::parse(get<std::string>(st, "unit"));
        a.minimal.provenance.push_back(std::move(step));
    }
    return a;
}

// -------------------------------------------------------------------- CAS

std::string cas_script(const Complex& c, const FieldChoice& field, const std::string& title) {
    const auto& p = c.params;
    std::ostringstream out;
    out << "-- " << title << "\n";
    out << "kk = " << (field.kind == FieldChoice::Kind::rational ? std::string("QQ") : "ZZ/" + std::to_string(field.prime))
        << ";\n";
    out << "R = kk[";
    for (int i = 0; i < p.nvars(); ++i) out << (i ? "," : "") << "x" << i;
    out << ", Degrees => {";
    for (int i = 0; i < p.nvars(); ++i) out << (i ? "," : "") << p.m_at(i);
    out << "}];\n";
    auto degrees = [](const GradedFreeModule& m) {
        std::ostringstream s;
        s << "R^{";
        for (std::size_t i = 0; i < m.rank(); ++i) s << (i ? "," : "") << -m.weight(i);
        s << "}";
        return s.str();
    };
    for (int s = 1; s <= c.length(); ++s) {
        const auto& d = c.differential(s);
        out << "-- d" << s << ": " << d.rows() << "x" << d.cols() << "\n";
        out << "d" << s << " = map(" << degrees(c.module(s - 1)) << ", " << degrees(c.module(s)) << ", {";
        for (std::size_t r = 0; r < d.rows(); ++r) {
            out << (r ? ",\n    " : "") << "{";
            for (std::size_t col = 0; col < d.cols(); ++col) out << (col ? ", " : "") << d.at(r, col, p.nvars()).str();
            out << "}";
        }
        out << "});\n";
    }
    for (int s = 1; s < c.length(); ++s) out << "assert(d" << s << " * d" << s + 1 << " == 0);\n";
    out << "C = chainComplex(";
    for (int s = 1; s <= c.length(); ++s) out << (s > 1 ? ", " : "") << "d" << s;
    out << ");\n";
    out << "assert(isHomogeneous C);\n";
    out << "I = ideal(d1);\n";
    out << "assert(I == ker map(kk[t], R, {";
    for (int i = 0; i < p.nvars(); ++i) out << (i ? ", " : "") << "t^" << p.m_at(i);
    out << "}));\n";
    out << "for i from 1 to length C do assert(HH_i C == 0);\n";
    return out.str();
}

} // namespace asres
