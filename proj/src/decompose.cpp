#include "clusterforge/decompose.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace cf {

namespace {

Scalar trace_product(const VertexMaps& f, const VertexMaps& g) {
    Scalar t(0);
    for (std::size_t v = 0; v < f.size(); ++v) {
        const Matrix& a = f[v];
        const Matrix& b = g[v];
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t k = 0; k < a.cols(); ++k)
                if (a.at(i, k) != 0 && b.at(k, i) != 0) t += a.at(i, k) * b.at(k, i);
    }
    return t;
}

bool maps_invertible(const VertexMaps& f) {
    for (const auto& m : f) {
        if (m.rows() != m.cols()) return false;
        if (m.rank() != m.rows()) return false;
    }
    return true;
}

VertexMaps maps_linear_combo(const std::vector<VertexMaps>& basis, const std::vector<int>& coeffs,
                             const Field& fld) {
    VertexMaps out;
    for (std::size_t v = 0; v < basis[0].size(); ++v) {
        Matrix m(basis[0][v].rows(), basis[0][v].cols(), fld);
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (coeffs[k] != 0) m = m + basis[k][v].scaled(Scalar(coeffs[k]));
        out.push_back(std::move(m));
    }
    return out;
}

// rational roots of a monic-cleared integer polynomial, by bounded trial
// division of the outer coefficients
std::vector<Scalar> rational_roots(const std::vector<Scalar>& poly) {
    std::vector<Scalar> roots;
    if (poly.size() < 2) return roots;
    mpz_class lcm(1);
    for (const auto& c : poly) lcm = lcm * c.get_den() / gcd(lcm, mpz_class(c.get_den()));
    std::vector<mpz_class> ip;
    for (const auto& c : poly) ip.push_back(mpz_class(c.get_num() * (lcm / c.get_den())));
    while (!ip.empty() && ip.back() == 0) ip.pop_back();
    if (ip.size() < 2) return roots;
    std::size_t low = 0;
    while (low < ip.size() && ip[low] == 0) ++low;
    if (low > 0) roots.push_back(Scalar(0));
    auto divisors = [](mpz_class n) {
        std::vector<mpz_class> ds;
        n = abs(n);
        for (mpz_class d = 1; d * d <= n && d < 100000; ++d)
            if (n % d == 0) { ds.push_back(d); ds.push_back(n / d); }
        return ds;
    };
    auto eval = [&](const Scalar& x) {
        Scalar acc(0);
        for (auto it = ip.rbegin(); it != ip.rend(); ++it) acc = acc * x + Scalar(*it);
        return acc;
    };
    for (const auto& p : divisors(ip[low]))
        for (const auto& q : divisors(ip.back())) {
            for (int sign : {1, -1}) {
                Scalar cand(sign * p, q);
                cand.canonicalize();
                if (eval(cand) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
        }
    return roots;
}

// char poly of a square matrix by Faddeev-LeVerrier (characteristic 0 only)
std::vector<Scalar> char_poly(const Matrix& a) {
    std::size_t n = a.rows();
    std::vector<Scalar> c(n + 1, Scalar(0));
    c[n] = 1;
    Matrix m(n, n, a.field());
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m;
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) += c[n - k + 1];
        Scalar tr(0);
        Matrix am = a * m;
        for (std::size_t i = 0; i < n; ++i) tr += am.at(i, i);
        c[n - k] = -tr / Scalar((unsigned long)k);
    }
    return c;
}

struct Split {
    SubQuotient part_a, part_b;
};

// Fitting decomposition with respect to f: M = ker f^D ⊕ im f^D.
std::optional<Split> fitting_split(const Representation& m, const VertexMaps& f) {
    int d = m.total_dim();
    VertexMaps power = f;
    for (int k = 1; k < d; k <<= 1) power = maps_compose(m, power, power);
    SubQuotient ker = kernel_rep(m, m, power);
    int kd = ker.rep.total_dim();
    if (kd == 0 || kd == d) return std::nullopt;
    SubQuotient img = image_rep(m, m, power);
    if (img.rep.total_dim() + kd != d) return std::nullopt;  // not yet stable; caller retries
    return Split{std::move(ker), std::move(img)};
}

std::optional<Split> try_split_with(const Representation& m, const VertexMaps& f) {
    if (auto s = fitting_split(m, f)) return s;
    const Field& fld = m.algebra->field();
    std::vector<Scalar> eigen_candidates;
    if (fld.is_rational()) {
        for (const auto& block : f) {
            if (block.rows() == 0) continue;
            for (const auto& r : rational_roots(char_poly(block)))
                if (std::find(eigen_candidates.begin(), eigen_candidates.end(), r) ==
                    eigen_candidates.end())
                    eigen_candidates.push_back(r);
        }
    } else {
        for (unsigned long l = 0; l < fld.characteristic(); ++l)
            eigen_candidates.push_back(Scalar(l));
    }
    for (const auto& lam : eigen_candidates) {
        if (lam == 0) continue;  // plain Fitting covered that
        VertexMaps shifted;
        for (std::size_t v = 0; v < f.size(); ++v)
            shifted.push_back(f[v] - Matrix::identity(f[v].rows(), fld).scaled(lam));
        if (auto s = fitting_split(m, shifted)) return s;
    }
    return std::nullopt;
}

}  // namespace

std::string dim_vector_key(const Representation& m) {
    std::ostringstream os;
    for (int d : m.dims) os << d << ",";
    return os.str();
}

int end_radical_codim(const Representation& m) {
    auto ends = hom_basis(m, m);
    std::size_t h = ends.size();
    if (h == 0) return 0;
    Matrix gram(h, h, m.algebra->field());
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j)
            gram.at(i, j) = m.algebra->field().reduce(trace_product(ends[i], ends[j]));
    return static_cast<int>(h - kernel_basis(gram).dim());
}

bool is_indecomposable(const Representation& m) {
    if (m.is_zero()) return false;
    if (m.algebra->field().is_rational()) return end_radical_codim(m) == 1;
    // small prime field: exhaustive idempotent search in End(M)
    auto ends = hom_basis(m, m);
    std::size_t h = ends.size();
    unsigned long p = m.algebra->field().characteristic();
    double combos = 1;
    for (std::size_t i = 0; i < h; ++i) combos *= (double)p;
    if (combos > 65536)
        throw BadInput("indecomposability over F_p: End too large for exhaustive search");
    std::vector<int> coeffs(h, 0);
    const Field& fld = m.algebra->field();
    while (true) {
        VertexMaps f = maps_linear_combo(ends, coeffs, fld);
        bool zero = true, ident = true;
        for (std::size_t v = 0; v < f.size(); ++v) {
            if (!f[v].is_zero()) zero = false;
            if (!f[v].is_identity()) ident = false;
        }
        if (!zero && !ident && maps_equal(maps_compose(m, f, f), f)) return false;
        std::size_t i = 0;
        for (; i < h; ++i) {
            if (++coeffs[i] < (int)p) break;
            coeffs[i] = 0;
        }
        if (i == h) break;
    }
    return true;
}

std::optional<VertexMaps> find_isomorphism(const Representation& m, const Representation& n) {
    if (m.dims != n.dims) return std::nullopt;
    if (m.total_dim() == 0) return maps_zero(m, n);
    auto homs = hom_basis(m, n);
    if (homs.empty()) return std::nullopt;
    for (const auto& h : homs)
        if (maps_invertible(h)) return h;
    const Field& fld = m.algebra->field();
    if (!fld.is_rational()) {
        // small prime field: exhaust all combinations when feasible
        unsigned long p = fld.characteristic();
        double combos = 1;
        for (std::size_t i = 0; i < homs.size(); ++i) combos *= (double)p;
        if (combos <= 65536) {
            std::vector<int> cs(homs.size(), 0);
            while (true) {
                VertexMaps f = maps_linear_combo(homs, cs, fld);
                if (maps_invertible(f)) return f;
                std::size_t i = 0;
                for (; i < cs.size(); ++i) {
                    if (++cs[i] < (int)p) break;
                    cs[i] = 0;
                }
                if (i == cs.size()) break;
            }
            return std::nullopt;
        }
    }
    std::mt19937 rng(20240917);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int attempt = 0; attempt < 80; ++attempt) {
        std::vector<int> cs(homs.size());
        for (auto& c : cs) c = coeff(rng);
        VertexMaps f = maps_linear_combo(homs, cs, m.algebra->field());
        if (maps_invertible(f)) return f;
    }
    return std::nullopt;
}

bool is_isomorphic(const Representation& m, const Representation& n) {
    return find_isomorphism(m, n).has_value();
}

std::vector<Representation> decompose(const Representation& m) {
    std::vector<Representation> out;
    if (m.is_zero()) return out;
    if (is_indecomposable(m)) {
        out.push_back(m);
        return out;
    }
    auto ends = hom_basis(m, m);
    std::optional<Split> split;
    for (const auto& f : ends) {
        split = try_split_with(m, f);
        if (split) break;
    }
    if (!split) {
        std::mt19937 rng(987654321);
        std::uniform_int_distribution<int> coeff(-2, 2);
        for (int attempt = 0; attempt < 200 && !split; ++attempt) {
            std::vector<int> cs(ends.size());
            for (auto& c : cs) c = coeff(rng);
            split = try_split_with(m, maps_linear_combo(ends, cs, m.algebra->field()));
        }
    }
    if (!split)
        throw std::runtime_error("decompose: failed to realize a splitting idempotent");
    auto left = decompose(split->part_a.rep);
    auto right = decompose(split->part_b.rep);
    // deterministic order: sort by (total dim, dim vector key)
    out.insert(out.end(), left.begin(), left.end());
    out.insert(out.end(), right.begin(), right.end());
    std::stable_sort(out.begin(), out.end(), [](const Representation& a, const Representation& b) {
        if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim();
        return dim_vector_key(a) < dim_vector_key(b);
    });
    return out;
}

std::vector<IsoClass> group_by_iso(const std::vector<Representation>& reps) {
    std::vector<IsoClass> classes;
    for (const auto& r : reps) {
        bool found = false;
        for (auto& c : classes) {
            if (c.rep.dims == r.dims && is_isomorphic(c.rep, r)) {
                ++c.multiplicity;
                found = true;
                break;
            }
        }
        if (!found) classes.push_back(IsoClass{r, 1});
    }
    return classes;
}

}  // namespace cf
