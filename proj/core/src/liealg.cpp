#include "wildvf/liealg.hpp"

#include <map>
#include <tuple>

#include "wildvf/error.hpp"

namespace wildvf {

namespace {

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
    return "(" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ", " + std::to_string(k + 1) + ")";
}

std::vector<std::string> default_labels(std::size_t dim) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < dim; ++i) out.push_back("e" + std::to_string(i + 1));
    return out;
}

}  // namespace

LieAlg::LieAlg(std::size_t dim, std::vector<Rat> constants, std::vector<std::string> labels)
    : dim_(dim), c_(std::move(constants)), labels_(std::move(labels)) {
    if (dim_ == 0) throw Error(ErrorCode::InvalidStructure, "dimension must be positive");
    if (c_.size() != dim_ * dim_ * dim_) {
        throw Error(ErrorCode::LengthMismatch, std::to_string(c_.size()) + " structure constants for dimension " +
                                                   std::to_string(dim_));
    }
    if (labels_.empty()) labels_ = default_labels(dim_);
    if (labels_.size() != dim_) throw Error(ErrorCode::LengthMismatch, "label count vs dimension");
}

LieAlg LieAlg::unchecked(std::size_t dim, std::vector<Rat> constants, std::vector<std::string> labels) {
    return LieAlg(dim, std::move(constants), std::move(labels));
}

LieAlg LieAlg::make(std::size_t dim, std::vector<Rat> constants, std::vector<std::string> labels) {
    LieAlg l(dim, std::move(constants), std::move(labels));
    const VerificationReport r = l.validate();
    if (const Check* bad = r.first_failure()) throw Error(ErrorCode::InvalidStructure, bad->name + " " + bad->detail);
    return l;
}

LieAlg LieAlg::abelian(std::size_t dim) { return LieAlg(dim, std::vector<Rat>(dim * dim * dim, Rat(0)), {}); }

RatVector LieAlg::bracket_basis(std::size_t i, std::size_t j) const {
    RatVector out(dim_);
    for (std::size_t k = 0; k < dim_; ++k) out[k] = c(i, j, k);
    return out;
}

RatVector LieAlg::bracket(const RatVector& a, const RatVector& b) const {
    if (a.size() != dim_ || b.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "bracket operand length");
    RatVector out(dim_, Rat(0));
    for (std::size_t i = 0; i < dim_; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (sgn(b[j]) == 0) continue;
            const Rat ab = a[i] * b[j];
            for (std::size_t k = 0; k < dim_; ++k)
                if (sgn(c(i, j, k)) != 0) out[k] += ab * c(i, j, k);
        }
    }
    return out;
}

VerificationReport LieAlg::validate() const {
    VerificationReport report;
    std::optional<std::string> asym;
    for (std::size_t i = 0; i < dim_ && !asym; ++i)
        for (std::size_t j = i; j < dim_ && !asym; ++j)
            for (std::size_t k = 0; k < dim_; ++k)
                if (c(i, j, k) != -c(j, i, k)) {
                    asym = "at " + triple(i, j, k);
                    break;
                }
    if (asym) report.fail("antisymmetry", std::nullopt, *asym);
    else report.pass("antisymmetry");

    // [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] over i < j < k.
    std::optional<std::string> jac;
    for (std::size_t i = 0; i < dim_ && !jac; ++i)
        for (std::size_t j = i + 1; j < dim_ && !jac; ++j)
            for (std::size_t k = j + 1; k < dim_ && !jac; ++k) {
                RatVector sum(dim_, Rat(0));
                const std::tuple<std::size_t, std::size_t, std::size_t> cyc[] = {{i, j, k}, {j, k, i}, {k, i, j}};
                for (const auto& [a, b, d] : cyc) {
                    for (std::size_t m = 0; m < dim_; ++m) {
                        const Rat& inner = c(b, d, m);
                        if (sgn(inner) == 0) continue;
                        for (std::size_t q = 0; q < dim_; ++q) sum[q] += inner * c(a, m, q);
                    }
                }
                if (!is_zero(sum)) jac = "at " + triple(i, j, k);
            }
    if (jac) report.fail("jacobi", std::nullopt, *jac);
    else report.pass("jacobi");
    return report;
}

// ---------------------------------------------------------------------------

namespace {

using DerivKey = std::pair<std::size_t, Monomial>;

struct DerivKeyLess {
    bool operator()(const DerivKey& a, const DerivKey& b) const noexcept {
        if (a.first != b.first) return a.first < b.first;
        return GrlexGreater{}(a.second, b.second);
    }
};

}  // namespace

DerivationAlgebra from_derivations(std::span<const Derivation> ds) {
    if (ds.empty()) throw Error(ErrorCode::NotIndependent, "empty derivation list");
    const VarContext& ctx = ds.front().context();
    for (std::size_t i = 0; i < ds.size(); ++i)
        if (!(ds[i].context() == ctx)) throw Error(ErrorCode::ContextMismatch, "derivation " + std::to_string(i + 1));

    std::map<DerivKey, std::size_t, DerivKeyLess> slot;
    for (const auto& d : ds)
        for (std::size_t v = 0; v < d.coeffs().size(); ++v)
            for (const auto& [m, c] : d.coeff(v).terms()) slot.try_emplace({v, m}, slot.size());

    auto coords = [&](const Derivation& d) -> std::optional<RatVector> {
        RatVector out(slot.size(), Rat(0));
        for (std::size_t v = 0; v < d.coeffs().size(); ++v)
            for (const auto& [m, c] : d.coeff(v).terms()) {
                auto it = slot.find({v, m});
                if (it == slot.end()) return std::nullopt;
                out[it->second] = c;
            }
        return out;
    };

    const std::size_t n = ds.size();
    RatMatrix cols(slot.size(), n);
    for (std::size_t i = 0; i < n; ++i) cols.set_column(i, *coords(ds[i]));
    ColumnSolver solver(cols);
    if (!solver.independent()) {
        for (std::size_t i = 0; i < n; ++i) {
            RatMatrix prefix(slot.size(), i + 1);
            for (std::size_t j = 0; j <= i; ++j) prefix.set_column(j, cols.column(j));
            if (rank(prefix) <= i) throw Error(ErrorCode::NotIndependent, "derivation " + std::to_string(i + 1));
        }
    }

    std::vector<Rat> c(n * n * n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Derivation b = bracket(ds[i], ds[j]);
            std::optional<RatVector> x;
            if (auto v = coords(b)) x = solver.solve(*v);
            if (!x) {
                throw Error(ErrorCode::NotClosed,
                            "(" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
            }
            for (std::size_t k = 0; k < n; ++k) {
                c[(i * n + j) * n + k] = (*x)[k];
                c[(j * n + i) * n + k] = -(*x)[k];
            }
        }
    }
    std::vector<std::string> labels;
    for (const auto& d : ds) labels.push_back(d.to_string());
    return {LieAlg::make(n, std::move(c), std::move(labels)), std::vector<Derivation>(ds.begin(), ds.end())};
}

LieAlg semidirect(const LieAlg& base, std::size_t w_dim, std::span<const RatMatrix> action) {
    const std::size_t b = base.dim();
    if (action.size() != b) {
        throw Error(ErrorCode::NotHomomorphism, std::to_string(action.size()) + " action matrices for a base of dimension " +
                                                    std::to_string(b));
    }
    for (std::size_t i = 0; i < b; ++i) {
        if (action[i].rows() != w_dim || action[i].cols() != w_dim) {
            throw Error(ErrorCode::NotHomomorphism, "action matrix " + std::to_string(i + 1) + " has the wrong shape");
        }
    }
    for (std::size_t i = 0; i < b; ++i) {
        for (std::size_t j = i + 1; j < b; ++j) {
            RatMatrix expected(w_dim, w_dim);
            for (std::size_t k = 0; k < b; ++k)
                if (sgn(base.c(i, j, k)) != 0) expected += base.c(i, j, k) * action[k];
            if (!(commutator(action[i], action[j]) == expected)) {
                throw Error(ErrorCode::NotHomomorphism,
                            "at (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
            }
        }
    }

    const std::size_t n = b + w_dim;
    std::vector<Rat> c(n * n * n, Rat(0));
    auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Rat& { return c[(i * n + j) * n + k]; };
    for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = 0; j < b; ++j)
            for (std::size_t k = 0; k < b; ++k) at(i, j, k) = base.c(i, j, k);
    for (std::size_t i = 0; i < b; ++i)
        for (std::size_t l = 0; l < w_dim; ++l)
            for (std::size_t m = 0; m < w_dim; ++m) {
                const Rat& v = action[i](m, l);
                if (sgn(v) == 0) continue;
                at(i, b + l, b + m) = v;
                at(b + l, i, b + m) = -v;
            }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < b; ++i) labels.push_back("b" + std::to_string(i + 1));
    for (std::size_t l = 0; l < w_dim; ++l) labels.push_back("w" + std::to_string(l + 1));
    return LieAlg::make(n, std::move(c), std::move(labels));
}

// ---------------------------------------------------------------------------

namespace {

RowSpace full_space(std::size_t n) {
    RowSpace s(n);
    for (std::size_t i = 0; i < n; ++i) {
        RatVector e(n, Rat(0));
        e[i] = 1;
        s.insert(e);
    }
    return s;
}

RowSpace bracket_span(const LieAlg& l, const RowSpace& a, const RowSpace& b) {
    RowSpace out(l.dim());
    for (const auto& u : a.basis())
        for (const auto& v : b.basis()) out.insert(l.bracket(u, v));
    return out;
}

std::size_t centralizer_dim(const LieAlg& l, const RowSpace& u) {
    const std::size_t n = l.dim();
    // Unknown x; constraint rows indexed by (basis vector of u, output coordinate).
    RatMatrix sys(u.dimension() * n, n);
    for (std::size_t r = 0; r < u.dimension(); ++r) {
        const RatVector& w = u.basis()[r];
        for (std::size_t i = 0; i < n; ++i) {
            RatVector e(n, Rat(0));
            e[i] = 1;
            const RatVector img = l.bracket(e, w);
            for (std::size_t k = 0; k < n; ++k) sys(r * n + k, i) = img[k];
        }
    }
    return n - rank(sys);
}

}  // namespace

SeriesProfile series_profile(const LieAlg& l) {
    SeriesProfile p;
    const RowSpace all = full_space(l.dim());

    RowSpace cur = all;
    p.lcs_dims.push_back(cur.dimension());
    while (cur.dimension() > 0) {
        RowSpace next = bracket_span(l, all, cur);
        if (next.dimension() == cur.dimension()) break;
        p.lcs_dims.push_back(next.dimension());
        cur = std::move(next);
    }
    if (cur.dimension() == 0) p.nilpotency_class = p.lcs_dims.size() - 1;

    cur = all;
    p.ds_dims.push_back(cur.dimension());
    while (cur.dimension() > 0) {
        RowSpace next = bracket_span(l, cur, cur);
        if (next.dimension() == cur.dimension()) break;
        p.ds_dims.push_back(next.dimension());
        cur = std::move(next);
    }

    p.center_dim = centralizer_dim(l, all);
    return p;
}

Fingerprint iso_invariants(const LieAlg& l) {
    Fingerprint f;
    const SeriesProfile p = series_profile(l);
    f.dim = l.dim();
    f.lcs_dims = p.lcs_dims;
    f.ds_dims = p.ds_dims;
    f.center_dim = p.center_dim;
    const RowSpace all = full_space(l.dim());
    RowSpace cur = all;
    for (std::size_t step = 0; step < p.lcs_dims.size() && cur.dimension() > 0; ++step) {
        f.lcs_centralizer_dims.push_back(centralizer_dim(l, cur));
        cur = bracket_span(l, all, cur);
    }
    return f;
}

bool check_isomorphism_certificate(const LieAlg& l1, const LieAlg& l2, const RatMatrix& p) {
    const std::size_t n = l1.dim();
    if (l2.dim() != n || p.rows() != n || p.cols() != n) {
        throw Error(ErrorCode::DimensionMismatch, "certificate needs equal dimensions and an n x n matrix");
    }
    if (!is_invertible(p)) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const RatVector lhs = p * l1.bracket_basis(i, j);
            const RatVector rhs = l2.bracket(p.column(i), p.column(j));
            if (lhs != rhs) return false;
        }
    return true;
}

LieAlg change_basis(const LieAlg& l, const RatMatrix& p) {
    const std::size_t n = l.dim();
    if (p.rows() != n || p.cols() != n) throw Error(ErrorCode::DimensionMismatch, "basis change matrix shape");
    auto inv = inverse(p);
    if (!inv) throw Error(ErrorCode::DimensionMismatch, "basis change matrix is singular");
    std::vector<Rat> c(n * n * n, Rat(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const RatVector img = *inv * l.bracket(p.column(i), p.column(j));
            for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = img[k];
        }
    return LieAlg::make(n, std::move(c));
}

}  // namespace wildvf
