#include "wildvf/serialize.hpp"

#include "wildvf/error.hpp"

namespace wildvf {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& field(const json& j, const char* key) {
    if (!j.is_object()) bad(std::string("expected an object holding \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
    return *it;
}

std::size_t as_size(const json& j, const char* what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
        bad(std::string(what) + " must be a non-negative integer");
    }
    return j.get<std::size_t>();
}

const std::string& as_string(const json& j, const char* what) {
    if (!j.is_string()) bad(std::string(what) + " must be a string");
    return j.get_ref<const std::string&>();
}

VarContext context_from_json(const json& j) {
    if (!j.is_array()) bad("\"vars\" must be an array");
    std::vector<std::string> names;
    for (const auto& v : j) names.push_back(as_string(v, "variable name"));
    return VarContext(std::move(names));
}

json to_json(const VarContext& ctx) { return ctx.names(); }

// Keeps the shared [x,y,z] / [x,y,z,t] instances so contexts compare by pointer.
VarContext canonical_context(VarContext ctx) {
    if (ctx == xyz_context()) return xyz_context();
    if (ctx == xyzt_context()) return xyzt_context();
    return ctx;
}

}  // namespace

std::string emit(const json& j) { return j.dump(2) + "\n"; }
std::string emit_line(const json& j) { return j.dump(); }

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        bad(e.what());
    }
}

json to_json(const Rat& r) { return format_rat(r); }
Rat rat_from_json(const json& j) { return parse_rat(as_string(j, "rational")); }

json to_json(const RatMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(format_rat(m(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

RatMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) bad("matrix must be a non-empty array of rows");
    std::vector<RatVector> rows;
    for (const auto& r : j) {
        if (!r.is_array()) bad("matrix row must be an array");
        RatVector row;
        for (const auto& e : r) row.push_back(rat_from_json(e));
        rows.push_back(std::move(row));
    }
    return RatMatrix::from_rows(rows);
}

json to_json(const MatrixPair& p) { return {{"n", p.n()}, {"S", to_json(p.S())}, {"T", to_json(p.T())}}; }

MatrixPair pair_from_json(const json& j) {
    const std::size_t n = as_size(field(j, "n"), "\"n\"");
    RatMatrix s = matrix_from_json(field(j, "S"));
    RatMatrix t = matrix_from_json(field(j, "T"));
    if (s.rows() != n || t.rows() != n) {
        throw Error(ErrorCode::ShapeMismatch, "\"n\" = " + std::to_string(n) + " but S has " +
                                                  std::to_string(s.rows()) + " rows and T has " +
                                                  std::to_string(t.rows()));
    }
    return validate_pair(std::move(s), std::move(t));
}

json to_json(const Twist& th) {
    return json::array({json::array({format_rat(th.a11), format_rat(th.a12)}),
                        json::array({format_rat(th.a21), format_rat(th.a22)})});
}

Twist twist_from_json(const json& j) {
    const RatMatrix m = matrix_from_json(j);
    if (m.rows() != 2 || m.cols() != 2) bad("twist must be a 2x2 matrix");
    return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
}

json to_json(const PairRecipe& r) {
    json j = {{"kind", std::string(to_string(r.kind))}, {"size", r.size}};
    switch (r.kind) {
        case PairRecipe::Kind::StrictlyUpperRandom:
            j["seed"] = r.seed;
            j["density"] = r.density;
            j["perturbation_terms"] = r.perturbation_terms;
            break;
        case PairRecipe::Kind::JordanWord:
            j["seed"] = r.seed;
            if (r.word) j["word"] = *r.word;
            break;
        case PairRecipe::Kind::DirectSum: {
            json parts = json::array();
            for (const auto& p : r.parts) parts.push_back(to_json(p));
            j["parts"] = std::move(parts);
            break;
        }
        case PairRecipe::Kind::Conjugated:
            j["seed"] = r.seed;
            if (!r.parts.empty()) j["base"] = to_json(r.parts.front());
            if (r.conjugator) j["P"] = to_json(*r.conjugator);
            break;
    }
    return j;
}

PairRecipe recipe_from_json(const json& j) {
    PairRecipe r;
    r.kind = parse_kind(as_string(field(j, "kind"), "\"kind\""));
    if (j.contains("seed")) {
        if (!j["seed"].is_number_integer()) bad("\"seed\" must be an integer");
        r.seed = j["seed"].get<std::uint64_t>();
    }
    switch (r.kind) {
        case PairRecipe::Kind::StrictlyUpperRandom:
            r.size = as_size(field(j, "size"), "\"size\"");
            if (j.contains("density")) r.density = static_cast<unsigned>(as_size(j["density"], "\"density\""));
            if (j.contains("perturbation_terms")) {
                r.perturbation_terms = static_cast<unsigned>(as_size(j["perturbation_terms"], "\"perturbation_terms\""));
            }
            if (r.density > 100) bad("\"density\" is a percentage");
            break;
        case PairRecipe::Kind::JordanWord:
            r.size = as_size(field(j, "size"), "\"size\"");
            if (j.contains("word")) r.word = as_string(j["word"], "\"word\"");
            break;
        case PairRecipe::Kind::DirectSum: {
            const json& parts = field(j, "parts");
            if (!parts.is_array() || parts.empty()) bad("\"parts\" must be a non-empty array");
            std::vector<PairRecipe> ps;
            for (const auto& p : parts) ps.push_back(recipe_from_json(p));
            r = PairRecipe::direct_sum(std::move(ps));
            break;
        }
        case PairRecipe::Kind::Conjugated: {
            std::optional<RatMatrix> p;
            if (j.contains("P")) p = matrix_from_json(j["P"]);
            r = PairRecipe::conjugated(recipe_from_json(field(j, "base")), r.seed, std::move(p));
            break;
        }
    }
    return r;
}

json fixture_record(const PairRecipe& r, const MatrixPair& p) { return {{"recipe", to_json(r)}, {"pair", to_json(p)}}; }

json to_json(const Derivation& d) {
    json coeffs = json::array();
    for (const auto& c : d.coeffs()) coeffs.push_back(c.to_string());
    return {{"vars", to_json(d.context())}, {"coeffs", std::move(coeffs)}};
}

Derivation derivation_from_json(const json& j) {
    const VarContext ctx = canonical_context(context_from_json(field(j, "vars")));
    const json& coeffs = field(j, "coeffs");
    if (!coeffs.is_array()) bad("\"coeffs\" must be an array");
    std::vector<Poly> polys;
    for (const auto& c : coeffs) polys.push_back(Poly::parse(ctx, as_string(c, "coefficient")));
    return Derivation(ctx, std::move(polys));
}

json to_json(const LieAlg& l) {
    json constants = json::array();
    for (std::size_t i = 0; i < l.dim(); ++i)
        for (std::size_t jj = i + 1; jj < l.dim(); ++jj)
            for (std::size_t k = 0; k < l.dim(); ++k)
                if (sgn(l.c(i, jj, k)) != 0) constants.push_back(json::array({i, jj, k, format_rat(l.c(i, jj, k))}));
    return {{"dim", l.dim()}, {"labels", l.labels()}, {"constants", std::move(constants)}};
}

LieAlg liealg_from_json(const json& j, bool validate) {
    const std::size_t n = as_size(field(j, "dim"), "\"dim\"");
    if (n == 0 || n > 512) bad("\"dim\" out of range");
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        for (const auto& s : j["labels"]) labels.push_back(as_string(s, "label"));
    }
    std::vector<Rat> c(n * n * n, Rat(0));
    const json& entries = field(j, "constants");
    if (!entries.is_array()) bad("\"constants\" must be an array");
    for (const auto& e : entries) {
        if (!e.is_array() || e.size() != 4) bad("structure constant must be [i, j, k, \"c\"]");
        const std::size_t i = as_size(e[0], "i"), jj = as_size(e[1], "j"), k = as_size(e[2], "k");
        if (i >= jj || jj >= n || k >= n) bad("structure constant index out of range or not i < j");
        const Rat v = rat_from_json(e[3]);
        c[(i * n + jj) * n + k] = v;
        c[(jj * n + i) * n + k] = -v;
    }
    return validate ? LieAlg::make(n, std::move(c), std::move(labels))
                    : LieAlg::unchecked(n, std::move(c), std::move(labels));
}

json to_json(const SeriesProfile& p) {
    json cls = p.nilpotency_class ? json(*p.nilpotency_class) : json(nullptr);
    return {{"lcs_dims", p.lcs_dims}, {"ds_dims", p.ds_dims}, {"center_dim", p.center_dim}, {"nilpotency_class", cls}};
}

SeriesProfile series_from_json(const json& j) {
    SeriesProfile p;
    for (const auto& d : field(j, "lcs_dims")) p.lcs_dims.push_back(as_size(d, "lcs dimension"));
    for (const auto& d : field(j, "ds_dims")) p.ds_dims.push_back(as_size(d, "derived dimension"));
    p.center_dim = as_size(field(j, "center_dim"), "\"center_dim\"");
    const json& cls = field(j, "nilpotency_class");
    if (!cls.is_null()) p.nilpotency_class = as_size(cls, "\"nilpotency_class\"");
    return p;
}

json to_json(const Fingerprint& f) {
    return {{"dim", f.dim},
            {"lcs_dims", f.lcs_dims},
            {"ds_dims", f.ds_dims},
            {"center_dim", f.center_dim},
            {"lcs_centralizer_dims", f.lcs_centralizer_dims}};
}

json to_json(const ModuleInvariants& inv) {
    json words = json::array();
    for (const auto& [w, r] : inv.word_ranks) words.push_back(json::array({w.first, w.second, r}));
    return {{"dimension", inv.dimension},   {"word_bound", inv.word_bound}, {"word_ranks", std::move(words)},
            {"ker_S", inv.ker_s},           {"ker_T", inv.ker_t},           {"ker_common", inv.ker_common}};
}

json to_json(const SimilarityResult& r) {
    static const char* methods[] = {"sampling", "symbolic", "empty-solution-space", "invariants"};
    return {{"result", r.witness ? "similar" : "none"},
            {"method", methods[static_cast<int>(r.method)]},
            {"solution_dim", r.solution_dim},
            {"witness", r.witness ? to_json(*r.witness) : json(nullptr)}};
}

json to_json(const VerificationReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name},
                          {"passed", c.passed},
                          {"index", c.index ? json(*c.index) : json(nullptr)},
                          {"detail", c.detail}});
    }
    return {{"ok", r.ok()}, {"checks", std::move(checks)}};
}

VerificationReport report_from_json(const json& j) {
    VerificationReport r;
    const json& checks = field(j, "checks");
    if (!checks.is_array()) bad("\"checks\" must be an array");
    for (const auto& c : checks) {
        Check k;
        k.name = as_string(field(c, "name"), "check name");
        if (!field(c, "passed").is_boolean()) bad("\"passed\" must be a boolean");
        k.passed = c["passed"].get<bool>();
        if (!field(c, "index").is_null()) k.index = as_size(c["index"], "\"index\"");
        k.detail = as_string(field(c, "detail"), "\"detail\"");
        r.checks.push_back(std::move(k));
    }
    const json& ok = field(j, "ok");
    if (!ok.is_boolean() || ok.get<bool>() != r.ok()) bad("\"ok\" disagrees with the checks");
    return r;
}

json to_json(const EmbeddedBundle& b) {
    json polys = json::array();
    for (const auto& p : b.module.polys) polys.push_back(p.to_string());
    return {{"source", to_json(b.module.source)},
            {"vars", to_json(xyz_context())},
            {"polys", std::move(polys)},
            {"flag_basis", to_json(b.module.flag_basis)},
            {"verification", to_json(b.verification)}};
}

EmbeddedBundle embedded_from_json(const json& j) {
    if (!(context_from_json(field(j, "vars")) == xyz_context())) bad("embedded module must be over [x, y, z]");
    std::vector<Poly> polys;
    for (const auto& p : field(j, "polys")) polys.push_back(Poly::parse(xyz_context(), as_string(p, "polynomial")));
    return {EmbeddedModule{pair_from_json(field(j, "source")), matrix_from_json(field(j, "flag_basis")),
                           std::move(polys)},
            report_from_json(field(j, "verification"))};
}

json to_json(const RealizedBundle& b) {
    const RealizedAlgebra& ra = b.algebra;
    json coeffs = json::array();
    json text = json::array();
    for (const auto& g : ra.generators) {
        coeffs.push_back(to_json(g));
        text.push_back(g.to_string());
    }
    return {{"vars", to_json(xyzt_context())},
            {"generators", std::move(text)},
            {"generator_fields", std::move(coeffs)},
            {"abstract", to_json(ra.abstract)},
            {"series", to_json(series_profile(ra.abstract))},
            {"fingerprint", to_json(iso_invariants(ra.abstract))},
            {"source", to_json(EmbeddedBundle{ra.source, b.reports.embedding})},
            {"reports",
             {{"embedding", to_json(b.reports.embedding)},
              {"module_action", to_json(b.reports.module_action)},
              {"cross_check", to_json(b.reports.cross)}}},
            {"ok", b.reports.ok()}};
}

RealizedBundle realized_from_json(const json& j) {
    if (!(context_from_json(field(j, "vars")) == xyzt_context())) bad("realized algebra must be over [x, y, z, t]");
    std::vector<Derivation> gens;
    for (const auto& g : field(j, "generator_fields")) gens.push_back(derivation_from_json(g));
    const json& text = field(j, "generators");
    if (!text.is_array() || text.size() != gens.size()) bad("\"generators\" and \"generator_fields\" differ in length");
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (as_string(text[i], "generator") != gens[i].to_string()) {
            bad("generator " + std::to_string(i + 1) + " text disagrees with its coefficients");
        }
    }
    EmbeddedBundle src = embedded_from_json(field(j, "source"));
    const json& reports = field(j, "reports");
    RealizationReports r{report_from_json(field(reports, "embedding")),
                         report_from_json(field(reports, "module_action")),
                         report_from_json(field(reports, "cross_check"))};
    const json& ok = field(j, "ok");
    if (!ok.is_boolean() || ok.get<bool>() != r.ok()) bad("\"ok\" disagrees with the reports");
    return {RealizedAlgebra{std::move(gens), liealg_from_json(field(j, "abstract"), false), std::move(src.module)},
            std::move(r)};
}

}  // namespace wildvf
