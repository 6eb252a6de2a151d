#include "wildvf/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "wildvf/error.hpp"

namespace wildvf {

// ---------------------------------------------------------------------------
// VarContext

VarContext::VarContext(std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
    std::set<std::string_view> seen;
    for (const auto& n : *names_) {
        if (n.empty()) throw Error(ErrorCode::InvalidStructure, "empty variable name");
        if (!seen.insert(n).second) {
            throw Error(ErrorCode::InvalidStructure, "duplicate variable name \"" + n + "\"");
        }
    }
}

std::optional<std::size_t> VarContext::find(std::string_view name) const noexcept {
    for (std::size_t i = 0; i < names_->size(); ++i) {
        if ((*names_)[i] == name) return i;
    }
    return std::nullopt;
}

std::size_t VarContext::index_of(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw Error(ErrorCode::UnknownVariable, "\"" + std::string(name) + "\"");
}

// ---------------------------------------------------------------------------
// Monomial

unsigned Monomial::degree() const noexcept {
    return std::accumulate(exponents.begin(), exponents.end(), 0u);
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const noexcept {
    const unsigned da = a.degree();
    const unsigned db = b.degree();
    if (da != db) return da > db;
    return std::lexicographical_compare(b.exponents.begin(), b.exponents.end(),
                                        a.exponents.begin(), a.exponents.end());
}

std::string format_monomial(const VarContext& ctx, const Monomial& mono) {
    std::string out;
    for (std::size_t i = 0; i < mono.exponents.size(); ++i) {
        const unsigned e = mono.exponents[i];
        if (e == 0) continue;
        if (!out.empty()) out += " * ";
        out += ctx.name(i);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(VarContext ctx) : ctx_(std::move(ctx)) {}

Poly Poly::constant(VarContext ctx, const Rat& value) {
    Poly p(std::move(ctx));
    p.add_term(Monomial{std::vector<unsigned>(p.ctx_.size(), 0)}, value);
    return p;
}

Poly Poly::variable(VarContext ctx, std::string_view name) {
    Poly p(std::move(ctx));
    Monomial m{std::vector<unsigned>(p.ctx_.size(), 0)};
    m.exponents[p.ctx_.index_of(name)] = 1;
    p.add_term(m, Rat(1));
    return p;
}

Poly Poly::term(VarContext ctx, Monomial mono, const Rat& coeff) {
    Poly p(std::move(ctx));
    if (mono.exponents.size() != p.ctx_.size()) {
        throw Error(ErrorCode::LengthMismatch, "monomial arity " + std::to_string(mono.exponents.size()) +
                                                   " vs context arity " + std::to_string(p.ctx_.size()));
    }
    p.add_term(mono, coeff);
    return p;
}

bool Poly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

Rat Poly::constant_term() const {
    return coefficient(Monomial{std::vector<unsigned>(ctx_.size(), 0)});
}

Rat Poly::coefficient(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rat(0) : it->second;
}

unsigned Poly::total_degree() const noexcept {
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

unsigned Poly::degree_in(std::size_t var) const noexcept {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponents[var]);
    return d;
}

void Poly::require_same_context(const Poly& other) const {
    if (!(ctx_ == other.ctx_)) {
        throw Error(ErrorCode::ContextMismatch, "polynomials live over different variable lists");
    }
}

void Poly::add_term(const Monomial& mono, const Rat& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& other) {
    require_same_context(other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    require_same_context(other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.require_same_context(b);
    Poly out(a.ctx_);
    Monomial m{std::vector<unsigned>(a.ctx_.size(), 0)};
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < m.exponents.size(); ++i) {
                m.exponents[i] = ma.exponents[i] + mb.exponents[i];
            }
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Rat& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

bool operator==(const Poly& a, const Poly& b) {
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
}

Poly Poly::in_context(const VarContext& target) const {
    std::vector<std::size_t> where(ctx_.size(), target.size());
    std::vector<bool> used(ctx_.size(), false);
    for (const auto& [m, c] : terms_) {
        for (std::size_t i = 0; i < m.exponents.size(); ++i) used[i] = used[i] || m.exponents[i] > 0;
    }
    for (std::size_t i = 0; i < ctx_.size(); ++i) {
        if (auto j = target.find(ctx_.name(i))) {
            where[i] = *j;
        } else if (used[i]) {
            throw Error(ErrorCode::UnknownVariable,
                        "\"" + ctx_.name(i) + "\" is not in the target context");
        }
    }
    Poly out(target);
    for (const auto& [m, c] : terms_) {
        Monomial moved{std::vector<unsigned>(target.size(), 0)};
        for (std::size_t i = 0; i < m.exponents.size(); ++i) {
            if (m.exponents[i] > 0) moved.exponents[where[i]] = m.exponents[i];
        }
        out.add_term(moved, c);
    }
    return out;
}

std::string Poly::to_latex() const {
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = sgn(c) < 0;
        const Rat mag = abs(c);
        out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
        first = false;
        std::string vars;
        for (std::size_t i = 0; i < m.exponents.size(); ++i) {
            if (m.exponents[i] == 0) continue;
            vars += ctx_.name(i);
            if (m.exponents[i] > 1) vars += "^{" + std::to_string(m.exponents[i]) + "}";
        }
        std::string coeff;
        if (mag.get_den() != 1) {
            coeff = "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
        } else if (mag != 1 || vars.empty()) {
            coeff = mag.get_num().get_str();
        }
        out += coeff + vars;
    }
    return out.empty() ? "0" : out;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = sgn(c) < 0;
        const Rat magnitude = abs(c);
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const std::string vars = format_monomial(ctx_, m);
        if (vars.empty()) {
            out += format_rat(magnitude);
        } else if (magnitude == 1) {
            out += vars;
        } else {
            out += format_rat(magnitude) + " * " + vars;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Text parser

namespace {

class Parser {
public:
    Parser(const VarContext& ctx, std::string_view text) : ctx_(ctx), text_(text) {}

    Poly run() {
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorCode::ParseError,
                    what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool peek_digit() {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    std::string digits() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return std::string(text_.substr(start, pos_ - start));
    }

    Poly expr() {
        Poly acc = signed_term();
        for (;;) {
            if (accept('+')) {
                acc += signed_term();
            } else if (accept('-')) {
                acc -= signed_term();
            } else {
                return acc;
            }
        }
    }

    Poly signed_term() {
        if (accept('-')) return -signed_term();
        if (accept('+')) return signed_term();
        return term();
    }

    Poly term() {
        Poly acc = power();
        while (accept('*')) acc *= power();
        return acc;
    }

    Poly power() {
        Poly base = primary();
        if (accept('^')) {
            const std::string e = digits();
            if (e.size() > 6) fail("exponent too large");
            Poly out = Poly::constant(ctx_, Rat(1));
            for (unsigned long k = std::stoul(e); k > 0; --k) out *= base;
            return out;
        }
        return base;
    }

    Poly primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        if (accept('(')) {
            Poly inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (peek_digit()) {
            std::string num = digits();
            if (accept('/')) num += "/" + digits();
            return Poly::constant(ctx_, parse_rat(num));
        }
        const char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            return Poly::variable(ctx_, text_.substr(start, pos_ - start));
        }
        fail("unexpected character");
    }

    const VarContext& ctx_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(VarContext ctx, std::string_view text) { return Parser(ctx, text).run(); }

// ---------------------------------------------------------------------------
// Free operations

Poly add(const Poly& p, const Poly& q) { return p + q; }
Poly mul(const Poly& p, const Poly& q) { return p * q; }
Poly scale(const Rat& c, const Poly& p) { return c * p; }

Poly partial(const Poly& p, std::size_t var) {
    Poly out(p.context());
    for (const auto& [m, c] : p.terms()) {
        const unsigned e = m.exponents[var];
        if (e == 0) continue;
        Monomial d = m;
        d.exponents[var] = e - 1;
        out.add_term(d, c * e);
    }
    return out;
}

Poly partial(const Poly& p, std::string_view var) { return partial(p, p.context().index_of(var)); }

Poly antiderivative(const Poly& p, std::size_t var) {
    Poly out(p.context());
    for (const auto& [m, c] : p.terms()) {
        Monomial up = m;
        up.exponents[var] = m.exponents[var] + 1;
        out.add_term(up, c / Rat(up.exponents[var]));
    }
    return out;
}

Poly antiderivative(const Poly& p, std::string_view var) {
    return antiderivative(p, p.context().index_of(var));
}

bool is_free_of(const Poly& p, std::size_t var) noexcept {
    return std::all_of(p.terms().begin(), p.terms().end(),
                       [var](const auto& t) { return t.first.exponents[var] == 0; });
}

bool is_free_of(const Poly& p, std::string_view var) { return is_free_of(p, p.context().index_of(var)); }

}  // namespace wildvf
