#include "lapvertex/coulson.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>

namespace lapvertex {

std::complex<double> CharPoly::operator()(std::complex<double> z) const {
    std::complex<double> acc = 0.0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * z + *it;
    return acc;
}

namespace {

using Poly = std::vector<double>;

CharPoly faddeev_leverrier(const SymMatrix& a) {
    const int n = a.order();
    const auto idx = [n](int i, int j) { return static_cast<std::size_t>(i) * n + j; };
    CharPoly out;
    out.coefficients.assign(n + 1, 0.0);
    out.coefficients[n] = 1.0;
    std::vector<double> mk(static_cast<std::size_t>(n) * n, 0.0), next(mk.size());
    for (int k = 1; k <= n; ++k) {
        // M_k = A·M_{k-1} + c_{n-k+1}·I
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                double sum = 0.0;
                for (int l = 0; l < n; ++l) sum += a(i, l) * mk[idx(l, j)];
                next[idx(i, j)] = sum;
            }
            next[idx(i, i)] += out.coefficients[n - k + 1];
        }
        mk.swap(next);
        double trace = 0.0;
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) trace += a(i, l) * mk[idx(l, i)];
        out.coefficients[n - k] = -trace / k;
    }
    return out;
}

/// Householder reduction to tridiagonal form; returns (diagonal, subdiagonal).
std::pair<std::vector<double>, std::vector<double>> tridiagonalize(const SymMatrix& m) {
    const int n = m.order();
    const auto idx = [n](int i, int j) { return static_cast<std::size_t>(i) * n + j; };
    std::vector<double> a = m.data();
    std::vector<double> v(n), p(n), w(n);
    for (int k = 0; k + 2 < n; ++k) {
        double norm = 0.0;
        for (int i = k + 1; i < n; ++i) norm += a[idx(i, k)] * a[idx(i, k)];
        norm = std::sqrt(norm);
        double tail = 0.0;
        for (int i = k + 2; i < n; ++i) tail += a[idx(i, k)] * a[idx(i, k)];
        if (tail == 0.0) continue;
        const double x0 = a[idx(k + 1, k)];
        const double alpha = x0 >= 0.0 ? -norm : norm;
        std::fill(v.begin(), v.end(), 0.0);
        for (int i = k + 1; i < n; ++i) v[i] = a[idx(i, k)];
        v[k + 1] -= alpha;
        double vnorm = 0.0;
        for (int i = k + 1; i < n; ++i) vnorm += v[i] * v[i];
        vnorm = std::sqrt(vnorm);
        for (int i = k + 1; i < n; ++i) v[i] /= vnorm;

        // H·A·H = A − 2vwᵀ − 2wvᵀ with p = Av, K = vᵀp, w = p − Kv
        double kk = 0.0;
        for (int i = k; i < n; ++i) {
            double sum = 0.0;
            for (int j = k + 1; j < n; ++j) sum += a[idx(i, j)] * v[j];
            p[i] = sum;
        }
        for (int i = k + 1; i < n; ++i) kk += v[i] * p[i];
        for (int i = k; i < n; ++i) w[i] = p[i] - kk * v[i];
        for (int i = k; i < n; ++i)
            for (int j = k; j < n; ++j) a[idx(i, j)] -= 2.0 * (v[i] * w[j] + w[i] * v[j]);
        a[idx(k + 1, k)] = a[idx(k, k + 1)] = alpha;
        for (int i = k + 2; i < n; ++i) a[idx(i, k)] = a[idx(k, i)] = 0.0;
    }
    std::vector<double> diag(n), sub(std::max(0, n - 1));
    for (int i = 0; i < n; ++i) diag[i] = a[idx(i, i)];
    for (int i = 0; i + 1 < n; ++i) sub[i] = a[idx(i + 1, i)];
    return {diag, sub};
}

CharPoly tridiagonal_char_poly(const SymMatrix& m) {
    auto [diag, sub] = tridiagonalize(m);
    const int n = m.order();
    Poly prev{1.0};
    if (n == 0) return CharPoly{prev};
    Poly cur{-diag[0], 1.0};
    for (int k = 1; k < n; ++k) {
        Poly next(k + 2, 0.0);
        for (int j = 0; j <= k; ++j) {
            next[j + 1] += cur[j];
            next[j] -= diag[k] * cur[j];
        }
        const double b2 = sub[k - 1] * sub[k - 1];
        for (int j = 0; j < k; ++j) next[j] -= b2 * prev[j];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return CharPoly{cur};
}

// ---- exact rank modulo primes ------------------------------------------------

__extension__ typedef unsigned __int128 uint128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1;
    base %= p;
    while (exp) {
        if (exp & 1) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return result;
}

int rank_mod(const std::vector<std::int64_t>& entries, int n, std::uint64_t p) {
    std::vector<std::uint64_t> a(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        std::int64_t r = entries[i] % static_cast<std::int64_t>(p);
        a[i] = static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
    }
    const auto idx = [n](int i, int j) { return static_cast<std::size_t>(i) * n + j; };
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int pivot = -1;
        for (int row = rank; row < n; ++row)
            if (a[idx(row, col)] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j < n; ++j) std::swap(a[idx(pivot, j)], a[idx(rank, j)]);
        const std::uint64_t inv = pow_mod(a[idx(rank, col)], p - 2, p);
        for (int row = rank + 1; row < n; ++row) {
            const std::uint64_t factor = mul_mod(a[idx(row, col)], inv, p);
            if (factor == 0) continue;
            for (int j = col; j < n; ++j) {
                const std::uint64_t sub = mul_mod(factor, a[idx(rank, j)], p);
                a[idx(row, j)] = (a[idx(row, j)] + p - sub) % p;
            }
        }
        ++rank;
    }
    return rank;
}

// ---- polynomials in y = x² for the real part of the integrand ---------------

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

Poly poly_add(const Poly& a, const Poly& b, double sign = 1.0) {
    Poly out(std::max(a.size(), b.size()), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += sign * b[i];
    return out;
}

Poly times_y(const Poly& a) {
    Poly out(a.size() + 1, 0.0);
    std::copy(a.begin(), a.end(), out.begin() + 1);
    return out;
}

/// A(ix) = even(y) + i·x·odd(y) with y = x².
std::pair<Poly, Poly> imaginary_axis_split(const Poly& a) {
    Poly even, odd;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
        (k % 2 == 0 ? even : odd).push_back(sign * a[k]);
    }
    return {even, odd};
}

double horner(const Poly& a, double y) {
    double acc = 0.0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * y + *it;
    return acc;
}

/// Σ a_k u^(degree − k): the polynomial read back to front, padded to `degree`.
double horner_reversed(const Poly& a, int degree, double u) {
    double acc = 0.0;
    for (int k = 0; k <= degree; ++k) acc = acc * u + (k < static_cast<int>(a.size()) ? a[k] : 0.0);
    return acc;
}

/// Shared per-(graph, kind) data for the Coulson integral: the scaled shifted matrix and its
/// deflated characteristic polynomial.
class CoulsonEngine {
public:
    CoulsonEngine(const Graph& g, MatrixKind kind) {
        shifted_ = matrix(g, kind).shifted(trace_baseline(g, kind));
        const int n = shifted_.order();
        for (int i = 0; i < n; ++i) {
            double row = 0.0;
            for (int j = 0; j < n; ++j) row += std::abs(shifted_(i, j));
            scale_ = std::max(scale_, row);
        }
        if (scale_ == 0.0) return;
        scaled_ = SymMatrix(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) scaled_.set(i, j, shifted_(i, j) / scale_);
        nullity_ = baseline_nullity(g, kind);
        Poly p = tridiagonal_char_poly(scaled_).coefficients;
        deflated_.assign(p.begin() + nullity_, p.end());
    }

    CoulsonResult integrate(Vertex v, double tolerance) const {
        if (scale_ == 0.0) return {};
        const int n = scaled_.order();
        Poly q = n >= 2 ? tridiagonal_char_poly(principal_minor(scaled_, v)).coefficients : Poly{1.0};

        // 1 − sΨ(s) = N(s)/P'(s) after removing the s^r factor shared by P and sQ.
        Poly numer;
        if (nullity_ > 0) {
            Poly qd(q.begin() + (nullity_ - 1), q.end());
            numer = poly_add(deflated_, qd, -1.0);
        } else {
            numer = deflated_;
            for (std::size_t k = 0; k < q.size(); ++k) numer[k + 1] -= q[k];
        }
        const int degree = static_cast<int>(deflated_.size()) - 1;
        numer.resize(degree);  // leading coefficients cancel exactly (both monic)

        auto [pe, po] = imaginary_axis_split(deflated_);
        auto [ne, no] = imaginary_axis_split(numer);
        const Poly re = poly_add(poly_mul(ne, pe), times_y(poly_mul(no, po)));
        const Poly im = poly_add(poly_mul(no, pe), poly_mul(ne, po), -1.0);
        const Poly den = poly_add(poly_mul(pe, pe), times_y(poly_mul(po, po)));
        // deg_y(den) = degree, deg_y(re) <= degree − 1, deg_y(im) <= degree − 1

        struct Sample {
            double re, im;
        };
        int evaluations = 0;
        // Integrand in θ, already summed over ±θ.
        auto f = [&](double theta) -> Sample {
            ++evaluations;
            const double s = std::sin(theta), c = std::cos(theta);
            if (s <= c) {
                const double t = s / c, y = t * t;
                const double d = horner(den, y);
                // F(θ) + F(−θ): real parts add; Im F(±θ) = ±x·im(y)·(1+y)/den cancel pairwise.
                const double odd = horner(im, y) * (1.0 + y) / d;
                return {2.0 * horner(re, y) * (1.0 + y) / d, t * odd + (-t) * odd};
            }
            // x > 1: evaluate in u = 1/x² so the O(x⁻²) real part keeps full relative precision.
            const double ct = c / s, u = ct * ct;
            const double d = horner_reversed(den, degree, u);
            const double real = (1.0 + u) * horner_reversed(re, degree - 1, u) / d;
            const double odd = horner_reversed(im, degree - 1, u) * (1.0 + u) / d;
            return {2.0 * real, odd - odd};
        };

        const double target = tolerance * std::numbers::pi / scale_;
        double unconverged_error = 0.0;
        int max_depth = 0;

        auto simpson = [](double h, Sample a, Sample m, Sample b) {
            return Sample{h / 6.0 * (a.re + 4.0 * m.re + b.re), h / 6.0 * (a.im + 4.0 * m.im + b.im)};
        };
        auto recurse = [&](auto&& self, double a, double b, Sample fa, Sample fm, Sample fb, Sample whole, double eps,
                           int depth) -> Sample {
            max_depth = std::max(max_depth, depth);
            const double mid = 0.5 * (a + b);
            const Sample flm = f(0.5 * (a + mid)), frm = f(0.5 * (mid + b));
            const Sample left = simpson(mid - a, fa, flm, fm), right = simpson(b - mid, fm, frm, fb);
            const double delta = left.re + right.re - whole.re;
            if (std::abs(delta) <= 15.0 * eps) {
                return {left.re + right.re + delta / 15.0, left.im + right.im};
            }
            if (depth >= kCoulsonMaxDepth) {
                unconverged_error += std::abs(delta) / 15.0;
                return {left.re + right.re + delta / 15.0, left.im + right.im};
            }
            const Sample l = self(self, a, mid, fa, flm, fm, left, 0.5 * eps, depth + 1);
            const Sample r = self(self, mid, b, fm, frm, fb, right, 0.5 * eps, depth + 1);
            return {l.re + r.re, l.im + r.im};
        };

        const double a = 0.0, b = 0.5 * std::numbers::pi;
        const Sample fa = f(a), fm = f(0.5 * (a + b)), fb = f(b);
        const Sample total = recurse(recurse, a, b, fa, fm, fb, simpson(b - a, fa, fm, fb), target, 0);
        if (unconverged_error > target) {
            throw Error(ErrorKind::QuadratureNoConvergence,
                        "depth cap reached with estimated error " + std::to_string(unconverged_error * scale_ /
                                                                                   std::numbers::pi));
        }
        CoulsonResult out;
        out.energy = scale_ * total.re / std::numbers::pi;
        out.imaginary_residual = scale_ * std::abs(total.im) / std::numbers::pi;
        out.evaluations = evaluations;
        out.max_depth = max_depth;
        return out;
    }

private:
    SymMatrix shifted_;
    SymMatrix scaled_;
    double scale_ = 0.0;
    int nullity_ = 0;
    Poly deflated_;
};

}  // namespace

CharPoly char_poly(const SymMatrix& m, CharPolyMethod method) {
    return method == CharPolyMethod::FaddeevLeVerrier ? faddeev_leverrier(m) : tridiagonal_char_poly(m);
}

SymMatrix principal_minor(const SymMatrix& m, int i) {
    const int n = m.order();
    if (i < 0 || i >= n) throw Error(ErrorKind::IndexOutOfRange, "row " + std::to_string(i));
    if (n < 2) throw Error(ErrorKind::BadParams, "principal minor needs order >= 2");
    SymMatrix out(n - 1);
    for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = r, cc = rr; c < n; ++c) {
            if (c == i) continue;
            out.set(rr, cc, m(r, c));
            ++cc;
        }
        ++rr;
    }
    return out;
}

std::complex<double> polynomial_ratio(const CharPoly& numerator, const CharPoly& denominator,
                                      std::complex<double> z) {
    if (std::abs(z) <= 1.0) return numerator(z) / denominator(z);
    const std::complex<double> u = 1.0 / z;
    auto reversed = [&](const CharPoly& p) {
        std::complex<double> acc = 0.0;
        for (double c : p.coefficients) acc = acc * u + c;
        return acc;
    };
    return std::pow(z, numerator.degree() - denominator.degree()) * reversed(numerator) / reversed(denominator);
}

int baseline_nullity(const Graph& g, MatrixKind kind) {
    const int n = g.n();
    std::vector<std::int64_t> entries(static_cast<std::size_t>(n) * n, 0);
    for (auto [u, v] : g.edges()) {
        entries[static_cast<std::size_t>(u) * n + v] = 1;
        entries[static_cast<std::size_t>(v) * n + u] = 1;
    }
    if (kind == MatrixKind::Laplacian) {
        // n·L − 2m·I
        for (auto& e : entries) e *= -n;
        for (int i = 0; i < n; ++i)
            entries[static_cast<std::size_t>(i) * n + i] = static_cast<std::int64_t>(n) * g.degree(i) - 2LL * g.m();
    }
    int rank = 0;
    for (std::uint64_t p : {2305843009213693951ull, 1000000007ull, 998244353ull}) {
        rank = std::max(rank, rank_mod(entries, n, p));
    }
    return n - rank;
}

ResolventDiag resolvent(const Graph& g, MatrixKind kind, Vertex v) {
    g.degree(v);
    ResolventDiag out;
    out.vertex = v;
    out.baseline = trace_baseline(g, kind);
    const SymMatrix shifted = matrix(g, kind).shifted(out.baseline);
    out.denominator = char_poly(shifted, CharPolyMethod::Tridiagonal);
    out.numerator = g.n() >= 2 ? char_poly(principal_minor(shifted, v), CharPolyMethod::Tridiagonal) : CharPoly{};
    return out;
}

std::complex<double> resolvent_diag(const Graph& g, MatrixKind kind, Vertex v, std::complex<double> z) {
    const ResolventDiag psi = resolvent(g, kind, v);
    const auto decomposition = eig_sym(matrix(g, kind));
    for (double lambda : decomposition.eigenvalues) {
        if (std::abs(z - (lambda - psi.baseline)) <= 1e-8) {
            throw Error(ErrorKind::NearPole, "z lies within 1e-8 of shifted eigenvalue " +
                                                 std::to_string(lambda - psi.baseline));
        }
    }
    return psi(z);
}

std::complex<double> resolvent_diag_eigensum(const Graph& g, MatrixKind kind, Vertex v, std::complex<double> z) {
    g.degree(v);
    const double baseline = trace_baseline(g, kind);
    const auto d = eig_sym(matrix(g, kind));
    std::complex<double> sum = 0.0;
    for (int j = 0; j < d.order; ++j) {
        const double u = d.vector(v, j);
        sum += u * u / (z - (d.eigenvalues[j] - baseline));
    }
    return sum;
}

CoulsonResult coulson_integral(const Graph& g, MatrixKind kind, Vertex v, double tolerance) {
    g.degree(v);
    return CoulsonEngine(g, kind).integrate(v, tolerance);
}

double coulson_energy(const Graph& g, MatrixKind kind, Vertex v) { return coulson_integral(g, kind, v).energy; }

VertexEnergyReport coulson_report(const Graph& g, MatrixKind kind, double tolerance) {
    const CoulsonEngine engine(g, kind);
    VertexEnergyReport report;
    report.kind = kind;
    report.method = EnergyMethod::Coulson;
    for (Vertex v = 0; v < g.n(); ++v) {
        const CoulsonResult r = engine.integrate(v, tolerance);
        report.energies.push_back(r.energy);
        report.residuals.push_back(r.imaginary_residual);
    }
    report.total = std::accumulate(report.energies.begin(), report.energies.end(), 0.0);
    return report;
}

}  // namespace lapvertex
