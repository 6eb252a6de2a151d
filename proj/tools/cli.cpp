#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "wildvf/error.hpp"
#include "wildvf/serialize.hpp"

namespace wildvf::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { Json, Pretty, Latex };

struct Io {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

std::string read_source(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open input \"" + path + "\"");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// A single JSON document, or JSON-lines with one record per non-empty line.
std::vector<json> read_records(const std::string& text) {
    try {
        return {json::parse(text)};
    } catch (const json::parse_error&) {
    }
    std::vector<json> out;
    std::istringstream lines(text);
    std::string line;
    std::size_t number = 0;
    while (std::getline(lines, line)) {
        ++number;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back(json::parse(line));
        } catch (const json::parse_error& e) {
            throw Error(ErrorCode::ParseError, "line " + std::to_string(number) + ": " + e.what());
        }
    }
    if (out.empty()) throw Error(ErrorCode::ParseError, "no JSON records in input");
    return out;
}

json read_single(const std::string& path, std::istream& in) {
    auto records = read_records(read_source(path, in));
    if (records.size() != 1) throw UsageError("\"" + path + "\" must hold exactly one JSON document");
    return records.front();
}

// Fixture lines wrap the pair as {"recipe": ..., "pair": ...}.
const json& pair_payload(const json& j) { return j.is_object() && j.contains("pair") ? j["pair"] : j; }

int severity(const Error& e) {
    return e.code() == ErrorCode::InternalError ? kVerificationFailed : kInvalidInput;
}

void write_record(Io& io, const json& j, bool batch) { io.out << (batch ? emit_line(j) + "\n" : emit(j)); }

std::string pretty_report(const std::string& title, const VerificationReport& r) {
    std::ostringstream os;
    os << title << ": " << (r.ok() ? "ok" : "FAILED") << "\n";
    for (const auto& c : r.checks) {
        if (c.passed) continue;
        os << "  " << c.name;
        if (c.index) os << " at index " << *c.index;
        os << ": " << c.detail << "\n";
    }
    return os.str();
}

std::string pretty_brackets(const LieAlg& l) {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < l.dim(); ++i)
        for (std::size_t j = i + 1; j < l.dim(); ++j) {
            const RatVector v = l.bracket_basis(i, j);
            if (is_zero(v)) continue;
            any = true;
            std::string rhs;
            for (std::size_t k = 0; k < v.size(); ++k) {
                if (sgn(v[k]) == 0) continue;
                const bool neg = sgn(v[k]) < 0;
                const Rat mag = abs(v[k]);
                rhs += rhs.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
                if (mag != 1) rhs += format_rat(mag) + " * ";
                rhs += "e" + std::to_string(k + 1);
            }
            os << "[e" << i + 1 << ", e" << j + 1 << "] = " << rhs << "\n";
        }
    if (!any) os << "abelian\n";
    return os.str();
}

std::string pretty_series(const SeriesProfile& p) {
    auto list = [](const std::vector<std::size_t>& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
        return s + "]";
    };
    std::ostringstream os;
    os << "lower central series: " << list(p.lcs_dims) << "\n"
       << "derived series: " << list(p.ds_dims) << "\n"
       << "center dimension: " << p.center_dim << "\n"
       << "nilpotency class: " << (p.nilpotency_class ? std::to_string(*p.nilpotency_class) : "not nilpotent")
       << "\n";
    return os.str();
}

// Runs `body` over every record; errors on one record are reported and
// the rest still run. Returns the worst exit code.
template <class Body>
int for_each_record(Io& io, const std::vector<json>& records, Body body) {
    int worst = kOk;
    const bool batch = records.size() > 1;
    for (std::size_t r = 0; r < records.size(); ++r) {
        try {
            worst = std::max<int>(worst, body(records[r], batch));
        } catch (const Error& e) {
            io.err << (batch ? "record " + std::to_string(r + 1) + ": " : std::string()) << e.what() << "\n";
            worst = std::max<int>(worst, severity(e));
        }
    }
    return worst;
}

// ---------------------------------------------------------------------------

int cmd_validate(Io& io, const std::string& input, Format fmt) {
    return for_each_record(io, read_records(read_source(input, io.in)), [&](const json& j, bool batch) {
        const MatrixPair p = pair_from_json(pair_payload(j));
        if (fmt == Format::Json) write_record(io, to_json(p), batch);
        else io.out << "valid: n = " << p.n() << "\n";
        return kOk;
    });
}

int cmd_embed(Io& io, const std::string& input, Format fmt) {
    return for_each_record(io, read_records(read_source(input, io.in)), [&](const json& j, bool batch) {
        const MatrixPair p = pair_from_json(pair_payload(j));
        EmbeddedBundle b{embed(p), {}};
        b.verification = verify_embedding(b.module);
        switch (fmt) {
            case Format::Json: write_record(io, to_json(b), batch); break;
            case Format::Pretty:
                for (std::size_t k = 0; k < b.module.polys.size(); ++k)
                    io.out << "p" << k + 1 << " = " << b.module.polys[k].to_string() << "\n";
                io.out << "flag basis: " << b.module.flag_basis.to_string() << "\n";
                io.out << pretty_report("verification", b.verification);
                break;
            case Format::Latex:
                io.out << "\\begin{align*}\n";
                for (std::size_t k = 0; k < b.module.polys.size(); ++k) {
                    io.out << "  p_{" << k + 1 << "} &= " << b.module.polys[k].to_latex() << " \\\\\n";
                }
                io.out << "\\end{align*}\n";
                break;
        }
        return b.verification.ok() ? kOk : kVerificationFailed;
    });
}

int cmd_realize(Io& io, const std::string& input, Format fmt) {
    return for_each_record(io, read_records(read_source(input, io.in)), [&](const json& j, bool batch) {
        const MatrixPair p = pair_from_json(pair_payload(j));
        RealizedBundle b{realize(p), {}};
        b.reports = verify_realization(b.algebra);
        switch (fmt) {
            case Format::Json: write_record(io, to_json(b), batch); break;
            case Format::Pretty:
                for (std::size_t k = 0; k < b.algebra.generators.size(); ++k)
                    io.out << "e" << k + 1 << " = " << b.algebra.generators[k].to_string() << "\n";
                io.out << pretty_brackets(b.algebra.abstract) << pretty_series(series_profile(b.algebra.abstract))
                       << pretty_report("embedding", b.reports.embedding)
                       << pretty_report("module action", b.reports.module_action)
                       << pretty_report("cross check", b.reports.cross);
                break;
            case Format::Latex: io.out << to_latex(b.algebra); break;
        }
        return b.ok() ? kOk : kVerificationFailed;
    });
}

int cmd_bracket(Io& io, const std::string& a, const std::string& b, Format fmt) {
    const Derivation d1 = derivation_from_json(read_single(a, io.in));
    const Derivation d2 = derivation_from_json(read_single(b, io.in));
    const Derivation r = bracket(d1, d2);
    switch (fmt) {
        case Format::Json: io.out << emit(to_json(r)); break;
        case Format::Pretty: io.out << r.to_string() << "\n"; break;
        case Format::Latex: io.out << r.to_latex() << "\n"; break;
    }
    return kOk;
}

int cmd_invariants(Io& io, const std::string& input, unsigned word_bound, Format fmt) {
    if (fmt == Format::Latex) throw UsageError("invariants has no LaTeX form");
    return for_each_record(io, read_records(read_source(input, io.in)), [&](const json& j, bool batch) {
        const ModuleInvariants inv = invariants(pair_from_json(pair_payload(j)), word_bound);
        if (fmt == Format::Json) {
            write_record(io, to_json(inv), batch);
        } else {
            io.out << "dimension " << inv.dimension << ", ker S " << inv.ker_s << ", ker T " << inv.ker_t
                   << ", common kernel " << inv.ker_common << "\n";
            for (const auto& [w, r] : inv.word_ranks)
                io.out << "rank S^" << w.first << " T^" << w.second << " = " << r << "\n";
        }
        return kOk;
    });
}

int cmd_semidirect(Io& io, const std::string& input, Format fmt) {
    if (fmt == Format::Latex) throw UsageError("semidirect has no LaTeX form");
    const json j = read_single(input, io.in);
    LieAlg l = LieAlg::abelian(1);
    if (j.contains("S") || j.contains("pair")) {
        const MatrixPair p = pair_from_json(pair_payload(j));
        const RatMatrix action[] = {p.S(), p.T()};
        l = semidirect(LieAlg::abelian(2), p.n(), action);
    } else {
        if (!j.contains("base") || !j.contains("w_dim") || !j.contains("action")) {
            throw Error(ErrorCode::ParseError, "expected a pair or {\"base\", \"w_dim\", \"action\"}");
        }
        const LieAlg base = liealg_from_json(j["base"]);
        std::vector<RatMatrix> action;
        for (const auto& m : j["action"]) action.push_back(matrix_from_json(m));
        l = semidirect(base, j["w_dim"].get<std::size_t>(), action);
    }
    if (fmt == Format::Json) io.out << emit(to_json(l));
    else io.out << pretty_brackets(l) << pretty_series(series_profile(l));
    return kOk;
}

int cmd_similar(Io& io, const std::string& a, const std::string& b, Format fmt) {
    if (fmt == Format::Latex) throw UsageError("similar has no LaTeX form");
    const MatrixPair pa = pair_from_json(pair_payload(read_single(a, io.in)));
    const MatrixPair pb = pair_from_json(pair_payload(read_single(b, io.in)));
    try {
        const SimilarityResult r = similar(pa, pb);
        if (r.witness && !(*r.witness * pa.S() == pb.S() * *r.witness && *r.witness * pa.T() == pb.T() * *r.witness &&
                           is_invertible(*r.witness))) {
            io.err << "InternalError witness failed re-verification\n";
            return kVerificationFailed;
        }
        if (fmt == Format::Json) io.out << emit(to_json(r));
        else io.out << (r.witness ? r.witness->to_string() : std::string("none")) << "\n";
    } catch (const Error& e) {
        if (e.code() != ErrorCode::Undecided) throw;
        if (fmt == Format::Json) io.out << emit({{"result", "undecided"}, {"detail", e.detail()}});
        else io.out << "undecided\n";
    }
    return kOk;
}

int cmd_certify(Io& io, const std::string& kind, const std::string& a, const std::string& b, const std::string& cert,
                Format fmt) {
    if (fmt == Format::Latex) throw UsageError("certify has no LaTeX form");
    bool valid = false;
    const json c = read_single(cert, io.in);
    if (kind == "weak") {
        const MatrixPair pa = pair_from_json(pair_payload(read_single(a, io.in)));
        const MatrixPair pb = pair_from_json(pair_payload(read_single(b, io.in)));
        if (!c.contains("twist") || !c.contains("X")) throw Error(ErrorCode::ParseError, "certificate needs \"twist\" and \"X\"");
        valid = check_weak_iso_certificate(pa, pb, twist_from_json(c["twist"]), matrix_from_json(c["X"]));
    } else if (kind == "lie") {
        const LieAlg la = liealg_from_json(read_single(a, io.in));
        const LieAlg lb = liealg_from_json(read_single(b, io.in));
        valid = check_isomorphism_certificate(la, lb, matrix_from_json(c.is_object() ? c.at("P") : c));
    } else {
        throw UsageError("certificate kind must be \"weak\" or \"lie\"");
    }
    if (fmt == Format::Json) io.out << emit({{"kind", kind}, {"valid", valid}});
    else io.out << (valid ? "true" : "false") << "\n";
    return kOk;
}

struct GenerateOptions {
    std::string recipe_path;
    std::string kind = "strictly-upper-random";
    std::uint64_t seed = 0;
    std::size_t size = 2;
    std::size_t count = 0;
    std::string word;
    unsigned density = 50;
    int perturbation_terms = -1;
    std::string entries;
};

int cmd_generate(Io& io, const GenerateOptions& o) {
    if (!o.entries.empty()) {
        std::vector<Rat> values;
        std::stringstream ss(o.entries);
        std::string item;
        while (std::getline(ss, item, ',')) values.push_back(parse_rat(item));
        const auto pairs = enumerate_small(o.size, values);
        json ents = json::array();
        for (const auto& v : values) ents.push_back(format_rat(v));
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            io.out << emit_line({{"enumeration", {{"n", o.size}, {"entries", ents}, {"index", k}}},
                                 {"pair", to_json(pairs[k])}})
                   << "\n";
        }
        return kOk;
    }
    std::vector<PairRecipe> recipes;
    if (!o.recipe_path.empty()) {
        for (const auto& j : read_records(read_source(o.recipe_path, io.in))) {
            // fixture lines carry their recipe next to the pair
            recipes.push_back(recipe_from_json(j.is_object() && j.contains("recipe") ? j["recipe"] : j));
        }
    } else if (o.count > 0) {
        recipes = recipe_suite(o.count, o.seed);
    } else {
        PairRecipe r;
        r.kind = parse_kind(o.kind);
        switch (r.kind) {
            case PairRecipe::Kind::StrictlyUpperRandom:
                r = PairRecipe::strictly_upper(o.size, o.seed);
                r.density = o.density;
                if (o.perturbation_terms >= 0) r.perturbation_terms = static_cast<unsigned>(o.perturbation_terms);
                break;
            case PairRecipe::Kind::JordanWord:
                r = PairRecipe::jordan(o.size, o.word.empty() ? std::nullopt : std::optional<std::string>(o.word),
                                       o.seed);
                break;
            default:
                throw UsageError("kind \"" + o.kind + "\" needs --recipe with its parts");
        }
        recipes.push_back(std::move(r));
    }
    return for_each_record(io, std::vector<json>(recipes.size()), [&, k = std::size_t{0}](const json&, bool) mutable {
        const PairRecipe& r = recipes[k++];
        io.out << emit_line(fixture_record(r, generate(r))) << "\n";
        return kOk;
    });
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Io io{in, out, err};
    CLI::App app{"Exact realization of commuting nilpotent matrix pairs as nilpotent Lie algebras of vector fields"};
    app.require_subcommand(1, 1);

    std::string format = "json";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format,-f", format, "Output format")
            ->check(CLI::IsMember({"json", "pretty", "latex"}))
            ->capture_default_str();
    };

    std::string input = "-", second, third, cert_kind;
    unsigned word_bound = 0;
    GenerateOptions gen;

    auto* validate = app.add_subcommand("validate", "Check that S and T commute and are nilpotent");
    validate->add_option("input", input, "MatrixPair JSON (or JSON-lines, - for stdin)")->capture_default_str();
    add_format(validate);

    auto* emb = app.add_subcommand("embed", "Embed the module into Q[x,y,z] with d/dx, d/dy actions");
    emb->add_option("input", input, "MatrixPair JSON")->capture_default_str();
    add_format(emb);

    auto* real = app.add_subcommand("realize", "Build the nilpotent algebra of vector fields in x, y, z, t");
    real->add_option("input", input, "MatrixPair JSON")->capture_default_str();
    add_format(real);

    auto* br = app.add_subcommand("bracket", "Lie bracket of two derivations");
    br->add_option("first", input, "Derivation JSON")->required();
    br->add_option("second", second, "Derivation JSON")->required();
    add_format(br);

    auto* inv = app.add_subcommand("invariants", "Rank invariants of a matrix pair");
    inv->add_option("input", input, "MatrixPair JSON")->capture_default_str();
    inv->add_option("--word-bound", word_bound, "Longest word length (default n)");
    add_format(inv);

    auto* semi = app.add_subcommand("semidirect", "Semidirect product with an abelian ideal");
    semi->add_option("input", input, "MatrixPair JSON or {base, w_dim, action}")->capture_default_str();
    add_format(semi);

    auto* sim = app.add_subcommand("similar", "Search for a simultaneous similarity");
    sim->add_option("first", input, "MatrixPair JSON")->required();
    sim->add_option("second", second, "MatrixPair JSON")->required();
    add_format(sim);

    auto* cert = app.add_subcommand("certify", "Check a weak-isomorphism or Lie-isomorphism certificate");
    cert->add_option("kind", cert_kind, "weak | lie")->required()->check(CLI::IsMember({"weak", "lie"}));
    cert->add_option("first", input, "MatrixPair or LieAlg JSON")->required();
    cert->add_option("second", second, "MatrixPair or LieAlg JSON")->required();
    cert->add_option("certificate", third, "{\"twist\", \"X\"} or {\"P\"}")->required();
    add_format(cert);

    auto* generate_cmd = app.add_subcommand("generate", "Expand pair recipes into fixture records (JSON-lines)");
    generate_cmd->add_option("--recipe", gen.recipe_path, "Recipe JSON or JSON-lines");
    generate_cmd->add_option("--kind", gen.kind, "strictly-upper-random | jordan-word")->capture_default_str();
    generate_cmd->add_option("--seed", gen.seed, "Seed")->capture_default_str();
    generate_cmd->add_option("--size", gen.size, "Matrix size")->capture_default_str();
    generate_cmd->add_option("--count", gen.count, "Emit the mixed recipe suite of this length");
    generate_cmd->add_option("--word", gen.word, "Jordan word q(x), e.g. x^2");
    generate_cmd->add_option("--density", gen.density, "Percent of nonzero entries in S")->check(CLI::Range(0, 100));
    generate_cmd->add_option("--perturbation-terms", gen.perturbation_terms, "Nonzero entries of the perturbation");
    generate_cmd->add_option("--entries", gen.entries, "Enumerate all strictly upper pairs with these entries, e.g. 0,1");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    const Format fmt = format == "pretty" ? Format::Pretty : format == "latex" ? Format::Latex : Format::Json;
    try {
        if (*validate) return cmd_validate(io, input, fmt);
        if (*emb) return cmd_embed(io, input, fmt);
        if (*real) return cmd_realize(io, input, fmt);
        if (*br) return cmd_bracket(io, input, second, fmt);
        if (*inv) return cmd_invariants(io, input, word_bound, fmt);
        if (*semi) return cmd_semidirect(io, input, fmt);
        if (*sim) return cmd_similar(io, input, second, fmt);
        if (*cert) return cmd_certify(io, cert_kind, input, second, third, fmt);
        if (*generate_cmd) return cmd_generate(io, gen);
    } catch (const UsageError& e) {
        err << "usage: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return severity(e);
    } catch (const json::exception& e) {
        err << "ParseError " << e.what() << "\n";
        return kInvalidInput;
    }
    return kUsage;
}

}  // namespace wildvf::cli
