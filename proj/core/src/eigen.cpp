#include "bellmix/eigen.hpp"

#include "bellmix/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace bellmix {

namespace {

/**
 * Cyclic Jacobi for Hermitian N x N matrices.
 *
 * Each rotation zeroes the pivot a_pq with the unitary
 *   U(p,q) = [ c          -s*phase ]
 *            [ s*conj(phase)   c   ]      phase = a_pq / |a_pq|,
 * where t = s/c is the smaller-magnitude root of t^2 - 2*theta*t - 1 = 0,
 * theta = (a_qq - a_pp) / (2|a_pq|). Off-diagonal mass is strictly
 * decreasing, convergence is quadratic once pivots are small.
 *
 * `a` is destroyed; eigenvalues land on its diagonal. `vecs` (optional)
 * accumulates V with A = V diag(d) V^dagger, eigenvectors in columns.
 */
template <int N>
void jacobi_hermitian(std::array<cplx, N * N>& a, std::array<double, N>& d,
                      std::array<cplx, N * N>* vecs) {
    auto at = [&a](int r, int c) -> cplx& { return a[static_cast<size_t>(N * r + c)]; };

    if (vecs) {
        vecs->fill(cplx(0.0));
        for (int i = 0; i < N; ++i) (*vecs)[static_cast<size_t>(N * i + i)] = 1.0;
    }

    // symmetrize: downstream callers guarantee hermiticity only within 1e-9
    for (int p = 0; p < N; ++p) {
        at(p, p) = cplx(at(p, p).real(), 0.0);
        for (int q = p + 1; q < N; ++q) {
            cplx avg = 0.5 * (at(p, q) + std::conj(at(q, p)));
            at(p, q) = avg;
            at(q, p) = std::conj(avg);
        }
    }

    double scale = 0.0;
    for (const cplx& v : a) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) {
        d.fill(0.0);
        return;
    }
    const double threshold = 1e-15 * scale;

    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < N; ++p)
            for (int q = p + 1; q < N; ++q) off = std::max(off, std::abs(at(p, q)));
        if (off <= threshold) break;

        for (int p = 0; p < N - 1; ++p) {
            for (int q = p + 1; q < N; ++q) {
                const double beta = std::abs(at(p, q));
                if (beta <= threshold) {
                    at(p, q) = 0.0;
                    at(q, p) = 0.0;
                    continue;
                }
                const cplx phase = at(p, q) / beta;
                const double alpha = at(p, p).real();
                const double gamma = at(q, q).real();
                const double theta = (gamma - alpha) / (2.0 * beta);
                const double t = (theta >= 0.0)
                                     ? -1.0 / (theta + std::sqrt(theta * theta + 1.0))
                                     : 1.0 / (-theta + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                at(p, p) = alpha * c * c + 2.0 * beta * c * s + gamma * s * s;
                at(q, q) = alpha * s * s - 2.0 * beta * c * s + gamma * c * c;
                at(p, q) = 0.0;
                at(q, p) = 0.0;

                for (int k = 0; k < N; ++k) {
                    if (k == p || k == q) continue;
                    const cplx akp = at(k, p);
                    const cplx akq = at(k, q);
                    at(k, p) = akp * c + akq * s * std::conj(phase);
                    at(k, q) = -akp * s * phase + akq * c;
                    at(p, k) = std::conj(at(k, p));
                    at(q, k) = std::conj(at(k, q));
                }
                if (vecs) {
                    for (int k = 0; k < N; ++k) {
                        cplx& vkp = (*vecs)[static_cast<size_t>(N * k + p)];
                        cplx& vkq = (*vecs)[static_cast<size_t>(N * k + q)];
                        const cplx op = vkp;
                        const cplx oq = vkq;
                        vkp = op * c + oq * s * std::conj(phase);
                        vkq = -op * s * phase + oq * c;
                    }
                }
            }
        }
    }

    for (int i = 0; i < N; ++i) d[static_cast<size_t>(i)] = at(i, i).real();
}

template <int N>
void sort_descending(std::array<double, N>& d, std::array<cplx, N * N>* vecs) {
    std::array<int, N> order;
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&d](int i, int j) { return d[static_cast<size_t>(i)] > d[static_cast<size_t>(j)]; });
    std::array<double, N> ds;
    for (int i = 0; i < N; ++i) ds[static_cast<size_t>(i)] = d[static_cast<size_t>(order[static_cast<size_t>(i)])];
    d = ds;
    if (vecs) {
        std::array<cplx, N * N> vs;
        for (int c = 0; c < N; ++c)
            for (int r = 0; r < N; ++r)
                vs[static_cast<size_t>(N * r + c)] =
                    (*vecs)[static_cast<size_t>(N * r + order[static_cast<size_t>(c)])];
        *vecs = vs;
    }
}

void require_hermitian(const ComplexMatrix4& m) {
    if (!m.all_finite()) throw NonHermitianError("hermitian eigensolve: non-finite entry");
    const double res = m.hermiticity_residual();
    if (res > kHermitianTol) {
        std::ostringstream os;
        os << "hermitian eigensolve: |m - m^dagger| = " << res << " exceeds " << kHermitianTol;
        throw NonHermitianError(os.str());
    }
}

std::array<cplx, 16> flatten(const ComplexMatrix4& m) {
    std::array<cplx, 16> a;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) a[static_cast<size_t>(4 * r + c)] = m(r, c);
    return a;
}

} // namespace

Spectrum4 hermitian_eigenvalues(const ComplexMatrix4& m) {
    require_hermitian(m);
    std::array<cplx, 16> a = flatten(m);
    std::array<double, 4> d{};
    jacobi_hermitian<4>(a, d, nullptr);
    sort_descending<4>(d, nullptr);
    return Spectrum4{d};
}

EigenSystem4 hermitian_eigensystem(const ComplexMatrix4& m) {
    require_hermitian(m);
    std::array<cplx, 16> a = flatten(m);
    std::array<cplx, 16> v{};
    std::array<double, 4> d{};
    jacobi_hermitian<4>(a, d, &v);
    sort_descending<4>(d, &v);

    EigenSystem4 sys;
    sys.values = Spectrum4{d};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) sys.vectors(r, c) = v[static_cast<size_t>(4 * r + c)];
    return sys;
}

ComplexMatrix4 psd_sqrt(const ComplexMatrix4& m) {
    EigenSystem4 sys = hermitian_eigensystem(m);
    std::array<double, 4> roots{};
    for (int i = 0; i < 4; ++i) {
        double v = sys.values[i];
        if (v < -kEigenClampTol) {
            std::ostringstream os;
            os << "psd_sqrt: eigenvalue " << v << " below -" << kEigenClampTol;
            throw NotPositiveSemidefiniteError(os.str());
        }
        roots[static_cast<size_t>(i)] = v > 0.0 ? std::sqrt(v) : 0.0;
    }
    // V diag(sqrt) V^dagger
    ComplexMatrix4 s;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            cplx acc = 0.0;
            for (int k = 0; k < 4; ++k)
                acc += sys.vectors(r, k) * roots[static_cast<size_t>(k)] * std::conj(sys.vectors(c, k));
            s(r, c) = acc;
        }
    return s;
}

std::array<double, 4> singular_values(const ComplexMatrix4& a) {
    if (!a.all_finite()) throw DomainError("singular_values: non-finite entry");

    // one-sided Jacobi: rotate column pairs until mutually orthogonal,
    // then the singular values are the column norms
    std::array<std::array<cplx, 4>, 4> col;
    for (int c = 0; c < 4; ++c)
        for (int r = 0; r < 4; ++r) col[static_cast<size_t>(c)][static_cast<size_t>(r)] = a(r, c);

    auto dot = [&col](int p, int q) {
        cplx s = 0.0;
        for (int r = 0; r < 4; ++r)
            s += std::conj(col[static_cast<size_t>(p)][static_cast<size_t>(r)]) *
                 col[static_cast<size_t>(q)][static_cast<size_t>(r)];
        return s;
    };
    auto norm2 = [&col](int p) {
        double s = 0.0;
        for (int r = 0; r < 4; ++r) s += std::norm(col[static_cast<size_t>(p)][static_cast<size_t>(r)]);
        return s;
    };

    for (int sweep = 0; sweep < 60; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < 3; ++p)
            for (int q = p + 1; q < 4; ++q) {
                const double np = norm2(p);
                const double nq = norm2(q);
                const cplx g = dot(p, q);
                const double beta = std::abs(g);
                if (beta * beta <= 1e-30 * np * nq || beta == 0.0) continue;
                rotated = true;

                // diagonalize the 2x2 Gram block [[np, g], [conj(g), nq]]
                const cplx phase = g / beta;
                const double theta = (nq - np) / (2.0 * beta);
                const double t = (theta >= 0.0)
                                     ? -1.0 / (theta + std::sqrt(theta * theta + 1.0))
                                     : 1.0 / (-theta + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int r = 0; r < 4; ++r) {
                    const cplx vp = col[static_cast<size_t>(p)][static_cast<size_t>(r)];
                    const cplx vq = col[static_cast<size_t>(q)][static_cast<size_t>(r)];
                    col[static_cast<size_t>(p)][static_cast<size_t>(r)] =
                        c * vp + s * std::conj(phase) * vq;
                    col[static_cast<size_t>(q)][static_cast<size_t>(r)] = -s * phase * vp + c * vq;
                }
            }
        if (!rotated) break;
    }

    std::array<double, 4> sv{};
    for (int p = 0; p < 4; ++p) sv[static_cast<size_t>(p)] = std::sqrt(norm2(p));
    std::sort(sv.begin(), sv.end(), std::greater<>());
    return sv;
}

std::array<double, 3> singular_values(const RealMatrix3& t) {
    if (!t.all_finite()) throw DomainError("singular_values: non-finite entry");
    const RealMatrix3 g = t * t.transpose();
    std::array<cplx, 9> a{};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) a[static_cast<size_t>(3 * r + c)] = g(r, c);
    std::array<double, 3> d{};
    jacobi_hermitian<3>(a, d, nullptr);
    sort_descending<3>(d, nullptr);
    for (double& v : d) v = v > 0.0 ? std::sqrt(v) : 0.0;
    return d;
}

} // namespace bellmix
