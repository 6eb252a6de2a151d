#ifndef WILDVF_POLY_HPP
#define WILDVF_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wildvf/rational.hpp"

namespace wildvf {

/// Ordered list of distinct variable names. Copies share storage, so
/// comparing two contexts derived from the same original is a pointer test.
class VarContext {
public:
    VarContext(std::vector<std::string> names);
    VarContext(std::initializer_list<std::string> names)
        : VarContext(std::vector<std::string>(names)) {}

    std::size_t size() const noexcept { return names_->size(); }
    const std::string& name(std::size_t i) const { return (*names_)[i]; }
    const std::vector<std::string>& names() const noexcept { return *names_; }

    std::optional<std::size_t> find(std::string_view name) const noexcept;
    /// Throws Error{UnknownVariable}.
    std::size_t index_of(std::string_view name) const;

    friend bool operator==(const VarContext& a, const VarContext& b) noexcept {
        return a.names_ == b.names_ || *a.names_ == *b.names_;
    }

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

struct Monomial {
    std::vector<unsigned> exponents;

    unsigned degree() const noexcept;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic, larger first: total degree, then exponents
/// compared in context order.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

/// Element of Q[x1..xn] in canonical form: no zero coefficients, terms
/// kept in descending graded-lex order.
class Poly {
public:
    using TermMap = std::map<Monomial, Rat, GrlexGreater>;

    explicit Poly(VarContext ctx);

    static Poly constant(VarContext ctx, const Rat& value);
    static Poly variable(VarContext ctx, std::string_view name);
    static Poly term(VarContext ctx, Monomial mono, const Rat& coeff);
    /// Parses the text form: sums of `c * x^a * y^b`, with parentheses and
    /// unary minus accepted. Throws Error{ParseError} or Error{UnknownVariable}.
    static Poly parse(VarContext ctx, std::string_view text);

    const VarContext& context() const noexcept { return ctx_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    Rat constant_term() const;
    Rat coefficient(const Monomial& mono) const;
    /// Largest monomial in graded-lex order; precondition: nonzero.
    const Monomial& leading_monomial() const { return terms_.begin()->first; }
    const Rat& leading_coefficient() const { return terms_.begin()->second; }

    unsigned total_degree() const noexcept;
    unsigned degree_in(std::size_t var) const noexcept;

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Poly& other);
    Poly& operator*=(const Rat& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rat& c, Poly p) { return p *= c; }
    Poly operator-() const;

    friend bool operator==(const Poly& a, const Poly& b);

    /// Adds c * mono in place, dropping the term if it cancels.
    void add_term(const Monomial& mono, const Rat& c);

    /// Same polynomial over another context that contains every variable
    /// this one actually uses. Throws Error{UnknownVariable}.
    Poly in_context(const VarContext& target) const;

    std::string to_string() const;
    std::string to_latex() const;

private:
    void require_same_context(const Poly& other) const;

    VarContext ctx_;
    TermMap terms_;
};

Poly add(const Poly& p, const Poly& q);
Poly mul(const Poly& p, const Poly& q);
Poly scale(const Rat& c, const Poly& p);

Poly partial(const Poly& p, std::size_t var);
Poly partial(const Poly& p, std::string_view var);

/// Termwise primitive in `var` with zero integration constant: the result
/// has no monomial of var-degree 0.
Poly antiderivative(const Poly& p, std::size_t var);
Poly antiderivative(const Poly& p, std::string_view var);

bool is_free_of(const Poly& p, std::size_t var) noexcept;
bool is_free_of(const Poly& p, std::string_view var);

std::string format_monomial(const VarContext& ctx, const Monomial& mono);

}  // namespace wildvf

#endif
