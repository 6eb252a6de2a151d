#ifndef WILDVF_DERIVATION_HPP
#define WILDVF_DERIVATION_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wildvf/poly.hpp"

namespace wildvf {

/// Vector field sum_i f_i d/dx_i with polynomial coefficients.
class Derivation {
public:
    /// Zero field over ctx.
    explicit Derivation(VarContext ctx);
    /// Throws Error{LengthMismatch} or Error{ContextMismatch}.
    Derivation(VarContext ctx, std::vector<Poly> coeffs);

    /// d/d(var)
    static Derivation partial(VarContext ctx, std::string_view var);
    /// f * d/d(var)
    static Derivation along(const Poly& f, std::string_view var);

    const VarContext& context() const noexcept { return ctx_; }
    const std::vector<Poly>& coeffs() const noexcept { return coeffs_; }
    const Poly& coeff(std::size_t i) const { return coeffs_[i]; }
    Poly& coeff(std::size_t i) { return coeffs_[i]; }

    bool is_zero() const noexcept;

    Derivation& operator+=(const Derivation& other);
    Derivation& operator-=(const Derivation& other);
    friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
    friend Derivation operator-(Derivation a, const Derivation& b) { return a -= b; }
    friend Derivation operator*(const Rat& c, Derivation d);
    friend bool operator==(const Derivation& a, const Derivation& b);

    /// `f1 d/dx + f2 d/dy`; unit coefficients are dropped and multi-term
    /// coefficients are parenthesized. Zero prints as "0".
    std::string to_string() const;
    std::string to_latex() const;

private:
    VarContext ctx_;
    std::vector<Poly> coeffs_;
};

/// D(p) = sum_i f_i * dp/dx_i.
Poly apply(const Derivation& d, const Poly& p);

/// [D1, D2] via the closed form: j-th coefficient is D1(g_j) - D2(f_j).
Derivation bracket(const Derivation& d1, const Derivation& d2);

/// Membership in the triangular algebra: coefficient i is free of
/// x_1..x_i and the last coefficient is constant.
bool is_triangular(const Derivation& d);
/// Same test with x_1..x_n taken in the given order of variable names
/// (a permutation of the context). Throws Error{UnknownVariable} or
/// Error{LengthMismatch}.
bool is_triangular(const Derivation& d, std::span<const std::string> order);

/// sum_i c_i D_i. Throws Error{LengthMismatch} on unequal lengths and
/// Error{ContextMismatch}; an empty list has no context and is rejected.
Derivation lin_combination(std::span<const Rat> coeffs, std::span<const Derivation> ds);

}  // namespace wildvf

#endif
