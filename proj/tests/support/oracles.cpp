#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "wildvf/reduce.hpp"

namespace oracle {

using wildvf::Derivation;
using wildvf::Monomial;
using wildvf::Poly;

Mat rows_of(const wildvf::RatMatrix& m) {
    Mat out(m.rows(), Vec(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
    return out;
}

Mat mul(const Mat& a, const Mat& b) {
    const std::size_t inner = b.size();
    const std::size_t cols = inner ? b[0].size() : 0;
    Mat out(a.size(), Vec(cols));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k)
            for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

Mat identity(std::size_t n) {
    Mat out(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
    return out;
}

bool is_zero(const Mat& m) {
    for (const auto& r : m)
        for (const auto& v : r)
            if (sgn(v) != 0) return false;
    return true;
}

Mat row_basis(Mat m) {
    Mat out;
    if (m.empty()) return out;
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && sgn(m[p][c]) == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            if (sgn(m[i][c]) == 0) continue;
            const Rat f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        out.push_back(m[r]);
        ++r;
    }
    return out;
}

std::size_t rank(const Mat& m) { return row_basis(m).size(); }

Rat det_leibniz(const Mat& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rat total = 0;
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Rat term = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n && sgn(term) != 0; ++i) term *= m[i][perm[i]];
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    Mat aug(rows, Vec(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        std::copy(a[i].begin(), a[i].end(), aug[i].begin());
        aug[i][cols] = b[i];
    }
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(aug[p][c]) == 0) ++p;
        if (p == rows) continue;
        std::swap(aug[p], aug[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(aug[i][c]) == 0) continue;
            const Rat f = aug[i][c] / aug[r][c];
            for (std::size_t j = c; j <= cols; ++j) aug[i][j] -= f * aug[r][j];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (sgn(aug[i][cols]) != 0) return std::nullopt;
    Vec x(cols);
    for (std::size_t i = 0; i < r; ++i) x[pivot_cols[i]] = aug[i][cols] / aug[i][pivot_cols[i]];
    return x;
}

Poly random_poly(wildvf::CounterRng& rng, const wildvf::VarContext& ctx, unsigned max_degree, int bound,
                 std::size_t terms) {
    Poly p(ctx);
    for (std::size_t t = 0; t < terms; ++t) {
        Monomial m{std::vector<unsigned>(ctx.size(), 0)};
        auto left = static_cast<unsigned>(rng.uniform(0, max_degree));
        for (std::size_t v = 0; v < ctx.size() && left > 0; ++v) {
            const auto e = v + 1 == ctx.size() ? left : static_cast<unsigned>(rng.uniform(0, left));
            m.exponents[v] = e;
            left -= e;
        }
        p.add_term(m, Rat(static_cast<long>(rng.uniform(-bound, bound))));
    }
    return p;
}

Derivation random_derivation(wildvf::CounterRng& rng, const wildvf::VarContext& ctx, unsigned max_degree,
                             std::size_t terms) {
    std::vector<Poly> coeffs;
    for (std::size_t i = 0; i < ctx.size(); ++i) coeffs.push_back(random_poly(rng, ctx, max_degree, 5, terms));
    return Derivation(ctx, std::move(coeffs));
}

Poly commutator_on(const Derivation& d1, const Derivation& d2, const Poly& p) {
    return wildvf::apply(d1, wildvf::apply(d2, p)) - wildvf::apply(d2, wildvf::apply(d1, p));
}

namespace {

using MonoIndex = std::map<Monomial, std::size_t, wildvf::GrlexGreater>;

void index_terms(MonoIndex& idx, const Poly& p) {
    for (const auto& [m, c] : p.terms()) idx.try_emplace(m, 0);
}

void number(MonoIndex& idx) {
    std::size_t k = 0;
    for (auto& [m, i] : idx) i = k++;
}

Vec coords(const MonoIndex& idx, const Poly& p) {
    Vec v(idx.size());
    for (const auto& [m, c] : p.terms()) v[idx.at(m)] = c;
    return v;
}

// A derivation as one long vector: coefficient blocks per variable.
Vec flatten(const MonoIndex& idx, const Derivation& d) {
    Vec v;
    for (const auto& c : d.coeffs()) {
        const Vec block = coords(idx, c);
        v.insert(v.end(), block.begin(), block.end());
    }
    return v;
}

Mat columns_to_rows(const std::vector<Vec>& cols) {
    if (cols.empty()) return {};
    Mat out(cols[0].size(), Vec(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < cols[j].size(); ++i) out[i][j] = cols[j][i];
    return out;
}

}  // namespace

Mat coefficient_columns(std::span<const Poly> polys, std::span<const Poly> extra) {
    MonoIndex idx;
    for (const auto& p : polys) index_terms(idx, p);
    for (const auto& p : extra) index_terms(idx, p);
    number(idx);
    std::vector<Vec> cols;
    for (const auto& p : polys) cols.push_back(coords(idx, p));
    Mat out = columns_to_rows(cols);
    if (out.empty()) out.assign(idx.size(), Vec(polys.size()));
    return out;
}

std::optional<Mat> derivative_matrix(std::span<const Poly> polys, std::string_view var) {
    std::vector<Poly> ders;
    for (const auto& p : polys) ders.push_back(wildvf::partial(p, var));
    MonoIndex idx;
    for (const auto& p : polys) index_terms(idx, p);
    for (const auto& p : ders) index_terms(idx, p);
    number(idx);
    std::vector<Vec> cols;
    for (const auto& p : polys) cols.push_back(coords(idx, p));
    const Mat a = columns_to_rows(cols);
    if (rank(a) != polys.size()) return std::nullopt;
    const std::size_t n = polys.size();
    Mat out(n, Vec(n));
    for (std::size_t k = 0; k < n; ++k) {
        auto x = solve(a, coords(idx, ders[k]));
        if (!x) return std::nullopt;
        for (std::size_t m = 0; m < n; ++m) out[m][k] = (*x)[m];
    }
    return out;
}

std::optional<std::vector<Rat>> structure_constants(std::span<const Derivation> gens) {
    const std::size_t n = gens.size();
    std::vector<Derivation> brackets;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) brackets.push_back(wildvf::bracket(gens[i], gens[j]));
    MonoIndex idx;
    for (const auto& g : gens)
        for (const auto& c : g.coeffs()) index_terms(idx, c);
    for (const auto& g : brackets)
        for (const auto& c : g.coeffs()) index_terms(idx, c);
    number(idx);
    std::vector<Vec> cols;
    for (const auto& g : gens) cols.push_back(flatten(idx, g));
    const Mat a = columns_to_rows(cols);
    if (rank(a) != n) return std::nullopt;
    std::vector<Rat> out(n * n * n);
    for (std::size_t ij = 0; ij < n * n; ++ij) {
        auto x = solve(a, flatten(idx, brackets[ij]));
        if (!x) return std::nullopt;
        std::copy(x->begin(), x->end(), out.begin() + static_cast<std::ptrdiff_t>(ij * n));
    }
    return out;
}

bool jacobi_holds(const wildvf::LieAlg& l) {
    const std::size_t n = l.dim();
    // [e_a, [e_b, e_c]] expanded on constants; sum over cyclic shifts.
    auto nested = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t k) {
        Rat s = 0;
        for (std::size_t m = 0; m < n; ++m) s += l.c(b, c, m) * l.c(a, m, k);
        return s;
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t k = 0; k < n; ++k)
                    if (sgn(nested(a, b, c, k) + nested(b, c, a, k) + nested(c, a, b, k)) != 0) return false;
    return true;
}

std::vector<std::size_t> lcs_dims(const wildvf::LieAlg& l) {
    const std::size_t n = l.dim();
    Mat cur = identity(n);
    std::vector<std::size_t> dims{n};
    while (!cur.empty()) {
        Mat spanning;
        for (std::size_t a = 0; a < n; ++a)
            for (const auto& v : cur) {
                Vec w(n);
                for (std::size_t b = 0; b < n; ++b) {
                    if (sgn(v[b]) == 0) continue;
                    for (std::size_t k = 0; k < n; ++k) w[k] += v[b] * l.c(a, b, k);
                }
                spanning.push_back(std::move(w));
            }
        Mat next = row_basis(std::move(spanning));
        if (next.size() == cur.size()) break;
        dims.push_back(next.size());
        cur = std::move(next);
    }
    return dims;
}

bool triangular(const Derivation& d, std::span<const std::string> order) {
    const auto& ctx = d.context();
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Poly& f = d.coeff(ctx.index_of(order[i]));
        for (std::size_t j = 0; j <= i; ++j)
            if (!wildvf::is_free_of(f, order[j])) return false;
        if (i + 1 == order.size() && !f.is_constant()) return false;
    }
    return true;
}

bool is_witness(const wildvf::MatrixPair& a, const wildvf::MatrixPair& b, const wildvf::RatMatrix& x) {
    const Mat X = rows_of(x);
    if (X.size() != a.n() || sgn(det_leibniz(X)) == 0) return false;
    return mul(X, rows_of(a.S())) == mul(rows_of(b.S()), X) && mul(X, rows_of(a.T())) == mul(rows_of(b.T()), X);
}

std::vector<std::pair<Mat, Mat>> all_strictly_upper_pairs(std::size_t n, std::span<const Rat> entries) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    std::vector<Mat> mats;
    std::size_t total = 1;
    for (std::size_t s = 0; s < slots.size(); ++s) total *= entries.size();
    for (std::size_t code = 0; code < total; ++code) {
        Mat m(n, Vec(n));
        std::size_t c = code;
        for (std::size_t s = 0; s < slots.size(); ++s) {
            m[slots[s].first][slots[s].second] = entries[c % entries.size()];
            c /= entries.size();
        }
        mats.push_back(std::move(m));
    }
    std::vector<std::pair<Mat, Mat>> out;
    for (const auto& s : mats)
        for (const auto& t : mats) out.emplace_back(s, t);
    return out;
}

Corpus standard_corpus() {
    Corpus c;
    const Rat entries[] = {Rat(0), Rat(1)};
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto pairs = wildvf::enumerate_small(n, entries);
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            c.pairs.push_back(pairs[k]);
            c.labels.push_back("enumerated n=" + std::to_string(n) + " #" + std::to_string(k));
        }
    }
    const auto recipes = wildvf::recipe_suite(kSuiteCount, kSuiteSeed);
    for (std::size_t k = 0; k < recipes.size(); ++k) {
        c.pairs.push_back(wildvf::generate(recipes[k]));
        c.labels.push_back("recipe #" + std::to_string(k) + " (" + std::string(wildvf::to_string(recipes[k].kind)) +
                           ", seed " + std::to_string(recipes[k].seed) + ")");
    }
    return c;
}

}  // namespace oracle
