#include "wildvf/derivation.hpp"

#include "wildvf/error.hpp"

namespace wildvf {

Derivation::Derivation(VarContext ctx) : ctx_(std::move(ctx)) {
    coeffs_.reserve(ctx_.size());
    for (std::size_t i = 0; i < ctx_.size(); ++i) coeffs_.emplace_back(ctx_);
}

Derivation::Derivation(VarContext ctx, std::vector<Poly> coeffs) : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != ctx_.size()) {
        throw Error(ErrorCode::LengthMismatch, std::to_string(coeffs_.size()) + " coefficients for " +
                                                   std::to_string(ctx_.size()) + " variables");
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!(coeffs_[i].context() == ctx_)) {
            throw Error(ErrorCode::ContextMismatch, "coefficient " + std::to_string(i + 1));
        }
    }
}

Derivation Derivation::partial(VarContext ctx, std::string_view var) {
    Derivation d(ctx);
    d.coeffs_[ctx.index_of(var)] = Poly::constant(ctx, Rat(1));
    return d;
}

Derivation Derivation::along(const Poly& f, std::string_view var) {
    Derivation d(f.context());
    d.coeffs_[f.context().index_of(var)] = f;
    return d;
}

bool Derivation::is_zero() const noexcept {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

Derivation& Derivation::operator+=(const Derivation& other) {
    if (!(ctx_ == other.ctx_)) throw Error(ErrorCode::ContextMismatch, "derivation sum");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

Derivation& Derivation::operator-=(const Derivation& other) {
    if (!(ctx_ == other.ctx_)) throw Error(ErrorCode::ContextMismatch, "derivation difference");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

Derivation operator*(const Rat& c, Derivation d) {
    for (auto& f : d.coeffs_) f *= c;
    return d;
}

bool operator==(const Derivation& a, const Derivation& b) {
    return a.ctx_ == b.ctx_ && a.coeffs_ == b.coeffs_;
}

std::string Derivation::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Poly& f = coeffs_[i];
        if (f.is_zero()) continue;
        const std::string op = "d/d" + ctx_.name(i);
        std::string piece;
        bool negative = false;
        if (f.term_count() == 1) {
            std::string text = f.to_string();
            if (text.front() == '-') {
                negative = true;
                text.erase(0, 1);
            }
            piece = text == "1" ? op : text + " " + op;
        } else {
            piece = "(" + f.to_string() + ") " + op;
        }
        if (out.empty()) {
            out = negative ? "-" + piece : piece;
        } else {
            out += (negative ? " - " : " + ") + piece;
        }
    }
    return out.empty() ? "0" : out;
}

std::string Derivation::to_latex() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Poly& f = coeffs_[i];
        if (f.is_zero()) continue;
        const std::string op = "\\frac{\\partial}{\\partial " + ctx_.name(i) + "}";
        std::string text = f.to_latex();
        bool negative = false;
        if (f.term_count() == 1 && text.front() == '-') {
            negative = true;
            text.erase(0, 1);
        }
        std::string piece;
        if (f.term_count() > 1) {
            piece = "\\left(" + text + "\\right)" + op;
        } else {
            piece = (text == "1" ? "" : text + " ") + op;
        }
        if (out.empty()) {
            out = negative ? "-" + piece : piece;
        } else {
            out += (negative ? " - " : " + ") + piece;
        }
    }
    return out.empty() ? "0" : out;
}

Poly apply(const Derivation& d, const Poly& p) {
    if (!(d.context() == p.context())) throw Error(ErrorCode::ContextMismatch, "derivation applied to foreign polynomial");
    Poly out(p.context());
    for (std::size_t i = 0; i < d.coeffs().size(); ++i) {
        if (d.coeff(i).is_zero()) continue;
        Poly dp = partial(p, i);
        if (dp.is_zero()) continue;
        out += d.coeff(i) * dp;
    }
    return out;
}

Derivation bracket(const Derivation& d1, const Derivation& d2) {
    if (!(d1.context() == d2.context())) throw Error(ErrorCode::ContextMismatch, "bracket operands");
    std::vector<Poly> coeffs;
    coeffs.reserve(d1.coeffs().size());
    for (std::size_t j = 0; j < d1.coeffs().size(); ++j) {
        coeffs.push_back(apply(d1, d2.coeff(j)) - apply(d2, d1.coeff(j)));
    }
    return Derivation(d1.context(), std::move(coeffs));
}

namespace {
bool triangular_in(const Derivation& d, const std::vector<std::size_t>& order) {
    const std::size_t n = order.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t v = 0; v <= i; ++v) {
            if (!is_free_of(d.coeff(order[i]), order[v])) return false;
        }
    }
    return n == 0 || d.coeff(order[n - 1]).is_constant();
}
}  // namespace

bool is_triangular(const Derivation& d) {
    std::vector<std::size_t> order(d.coeffs().size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    return triangular_in(d, order);
}

bool is_triangular(const Derivation& d, std::span<const std::string> order) {
    if (order.size() != d.context().size()) {
        throw Error(ErrorCode::LengthMismatch, "variable order lists " + std::to_string(order.size()) + " of " +
                                                   std::to_string(d.context().size()) + " variables");
    }
    std::vector<std::size_t> idx;
    std::vector<bool> seen(order.size(), false);
    for (const auto& name : order) {
        const std::size_t i = d.context().index_of(name);
        if (seen[i]) throw Error(ErrorCode::LengthMismatch, "variable \"" + name + "\" repeated in order");
        seen[i] = true;
        idx.push_back(i);
    }
    return triangular_in(d, idx);
}

Derivation lin_combination(std::span<const Rat> coeffs, std::span<const Derivation> ds) {
    if (coeffs.size() != ds.size()) {
        throw Error(ErrorCode::LengthMismatch, std::to_string(coeffs.size()) + " coefficients for " +
                                                   std::to_string(ds.size()) + " derivations");
    }
    if (ds.empty()) throw Error(ErrorCode::LengthMismatch, "empty combination has no context");
    Derivation out(ds.front().context());
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (!(ds[i].context() == out.context())) {
            throw Error(ErrorCode::ContextMismatch, "derivation " + std::to_string(i + 1));
        }
        if (sgn(coeffs[i]) != 0) out += coeffs[i] * ds[i];
    }
    return out;
}

}  // namespace wildvf
