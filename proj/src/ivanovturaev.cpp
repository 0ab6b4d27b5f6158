#include "eulerlab/ivanovturaev.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "eulerlab/rng.hpp"

namespace eulerlab {

namespace {

// LU with partial pivoting; returns 0 on numerical breakdown.
double det_inplace(std::vector<double>& a, int k) {
    double det = 1.0;
    for (int col = 0; col < k; ++col) {
        int piv = col;
        for (int r = col + 1; r < k; ++r)
            if (std::abs(a[r * k + col]) > std::abs(a[piv * k + col])) piv = r;
        if (a[piv * k + col] == 0.0) return 0.0;
        if (piv != col) {
            for (int c = 0; c < k; ++c) std::swap(a[piv * k + c], a[col * k + c]);
            det = -det;
        }
        det *= a[col * k + col];
        for (int r = col + 1; r < k; ++r) {
            const double f = a[r * k + col] / a[col * k + col];
            for (int c = col; c < k; ++c) a[r * k + c] -= f * a[col * k + c];
        }
    }
    return det;
}

// Columns normalized to unit length before the determinant, so eps acts on
// a scale-free quantity; zero columns give 0.
double normalized_det(const std::vector<const VecN*>& cols) {
    const int k = static_cast<int>(cols.size());
    std::vector<double> a(static_cast<std::size_t>(k) * k);
    for (int j = 0; j < k; ++j) {
        double norm = 0;
        for (int i = 0; i < k; ++i) norm += (*cols[j])[i] * (*cols[j])[i];
        norm = std::sqrt(norm);
        if (norm == 0.0) return 0.0;
        for (int i = 0; i < k; ++i) a[i * k + j] = (*cols[j])[i] / norm;
    }
    return det_inplace(a, k);
}

double normalized_det_vals(std::vector<VecN> cols) {
    std::vector<const VecN*> p;
    p.reserve(cols.size());
    for (const auto& c : cols) p.push_back(&c);
    return normalized_det(p);
}

// Partial-pivot solve; false when the pivot vanishes or the residual
// exceeds 1e-8 on the normalized system.
bool solve(std::vector<double> a, std::vector<double> b, int k, std::vector<double>& x) {
    std::vector<double> a0 = a, b0 = b;
    for (int col = 0; col < k; ++col) {
        int piv = col;
        for (int r = col + 1; r < k; ++r)
            if (std::abs(a[r * k + col]) > std::abs(a[piv * k + col])) piv = r;
        if (a[piv * k + col] == 0.0) return false;
        if (piv != col) {
            for (int c = 0; c < k; ++c) std::swap(a[piv * k + c], a[col * k + c]);
            std::swap(b[piv], b[col]);
        }
        for (int r = col + 1; r < k; ++r) {
            const double f = a[r * k + col] / a[col * k + col];
            for (int c = col; c < k; ++c) a[r * k + c] -= f * a[col * k + c];
            b[r] -= f * b[col];
        }
    }
    x.assign(k, 0.0);
    for (int r = k - 1; r >= 0; --r) {
        double s = b[r];
        for (int c = r + 1; c < k; ++c) s -= a[r * k + c] * x[c];
        x[r] = s / a[r * k + r];
    }
    double scale = 0, res = 0;
    for (int r = 0; r < k; ++r) {
        double s = -b0[r];
        for (int c = 0; c < k; ++c) {
            s += a0[r * k + c] * x[c];
            scale = std::max(scale, std::abs(a0[r * k + c]));
        }
        res = std::max(res, std::abs(s));
    }
    return res <= 1e-8 * std::max(1.0, scale);
}

int sign_of(double x, double eps) { return x > eps ? 1 : (x < -eps ? -1 : 0); }

} // namespace

VecN mat_apply(const MatN& m, const VecN& v) {
    VecN out(m.size(), 0.0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

double mat_det(const MatN& m) {
    const int k = static_cast<int>(m.size());
    std::vector<double> a(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) a[i * k + j] = m[i][j];
    return det_inplace(a, k);
}

bool general_position_with_origin(const std::vector<VecN>& v, double eps) {
    const int k = static_cast<int>(v.size());
    const int d = k - 1; // vectors live in R^d... only full tuples supported
    if (k < 2 || static_cast<int>(v[0].size()) != d)
        throw Error("expected n+2 vectors in R^{n+1}");
    // omit one vector: {0, v_j (j != i)} spans iff the v_j are independent
    for (int omit = 0; omit < k; ++omit) {
        std::vector<const VecN*> cols;
        for (int j = 0; j < k; ++j)
            if (j != omit) cols.push_back(&v[j]);
        if (std::abs(normalized_det(cols)) <= eps) return false;
    }
    // omit the origin: affine independence of the v_j themselves
    std::vector<VecN> diffs;
    for (int j = 1; j < k; ++j) {
        VecN dv(d);
        for (int i = 0; i < d; ++i) dv[i] = v[j][i] - v[0][i];
        diffs.push_back(std::move(dv));
    }
    return std::abs(normalized_det_vals(std::move(diffs))) > eps;
}

bool is_generic(const std::vector<VecN>& v, double eps) {
    const int k = static_cast<int>(v.size());
    if (!general_position_with_origin(v, eps)) return false;
    const int d = static_cast<int>(v[0].size());
    // sign flips only change affine determinants; linear ones are covered above
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        if (mask & 1u) continue; // e and -e give the same simplex up to -1
        std::vector<VecN> diffs;
        for (int j = 1; j < k; ++j) {
            const double sj = (mask >> j) & 1u ? -1.0 : 1.0;
            VecN dv(d);
            for (int i = 0; i < d; ++i) dv[i] = sj * v[j][i] - v[0][i];
            diffs.push_back(std::move(dv));
        }
        if (std::abs(normalized_det_vals(std::move(diffs))) <= eps) return false;
    }
    return true;
}

int t_value(const std::vector<VecN>& v, double eps, bool* degenerate) {
    if (degenerate) *degenerate = false;
    const int k = static_cast<int>(v.size());
    const int d = k - 1;
    if (k < 2 || static_cast<int>(v[0].size()) != d)
        throw Error("t_value expects n+2 vectors in R^{n+1}");
    if (!general_position_with_origin(v, eps)) {
        if (degenerate) *degenerate = true;
        return 0;
    }
    // barycentric system: sum t_i v_i = 0, sum t_i = 1
    std::vector<double> a(static_cast<std::size_t>(k) * k), b(k, 0.0), t;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < k; ++j) a[i * k + j] = v[j][i];
    for (int j = 0; j < k; ++j) a[d * k + j] = 1.0;
    b[d] = 1.0;
    if (!solve(std::move(a), std::move(b), k, t)) {
        if (degenerate) *degenerate = true;
        return 0;
    }
    bool inside = true;
    for (double ti : t) {
        if (std::abs(ti) <= eps) {
            if (degenerate) *degenerate = true;
            return 0;
        }
        if (ti < 0) inside = false;
    }
    if (!inside) return 0;
    std::vector<VecN> diffs;
    for (int j = 1; j < k; ++j) {
        VecN dv(d);
        for (int i = 0; i < d; ++i) dv[i] = v[j][i] - v[0][i];
        diffs.push_back(std::move(dv));
    }
    return normalized_det_vals(std::move(diffs)) > 0 ? 1 : -1;
}

int t_value(const VectorTuple& v, bool* degenerate) {
    return t_value(v.vectors, v.genericity_eps, degenerate);
}

std::pair<std::vector<int>, std::vector<int>>
smillie_sign_patterns(const std::vector<VecN>& v, double eps) {
    const int k = static_cast<int>(v.size());
    const int d = k - 1;
    if (k < 2 || static_cast<int>(v[0].size()) != d)
        throw Error("smillie_sign_patterns expects n+2 vectors in R^{n+1}");
    if (!is_generic(v, eps)) throw Degenerate("tuple is not generic");

    // nullspace of the d x k matrix [v_0 ... v_{k-1}], one-dimensional by
    // genericity: eliminate, then back-substitute with the free column at 1
    std::vector<double> a(static_cast<std::size_t>(d) * k);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < k; ++j) a[i * k + j] = v[j][i];
    std::vector<int> pivot_col(d, -1);
    int row = 0;
    for (int col = 0; col < k && row < d; ++col) {
        int piv = row;
        for (int r = row + 1; r < d; ++r)
            if (std::abs(a[r * k + col]) > std::abs(a[piv * k + col])) piv = r;
        if (std::abs(a[piv * k + col]) <= 1e-13) continue;
        for (int c = 0; c < k; ++c) std::swap(a[piv * k + c], a[row * k + c]);
        for (int r = 0; r < d; ++r) {
            if (r == row) continue;
            const double f = a[r * k + col] / a[row * k + col];
            for (int c = col; c < k; ++c) a[r * k + c] -= f * a[row * k + c];
        }
        pivot_col[row] = col;
        ++row;
    }
    if (row != d) throw Degenerate("nullspace dimension exceeds one");
    int free_col = -1;
    for (int col = 0, r = 0; col < k; ++col) {
        if (r < d && pivot_col[r] == col) { ++r; continue; }
        free_col = col;
        break;
    }
    std::vector<double> alpha(k, 0.0);
    alpha[free_col] = 1.0;
    for (int r = 0; r < d; ++r)
        alpha[pivot_col[r]] = -a[r * k + free_col] / a[r * k + pivot_col[r]];
    double amax = 0;
    for (double x : alpha) amax = std::max(amax, std::abs(x));
    std::vector<int> i1(k), i2(k);
    for (int j = 0; j < k; ++j) {
        const int s = sign_of(alpha[j], eps * amax);
        if (s == 0) throw Degenerate("dependence coefficient vanishes at threshold");
        i1[j] = s;
        i2[j] = -s;
    }
    return {i1, i2};
}

namespace {

struct ChunkResult {
    double sum = 0;
    long discarded = 0;
};

ChunkResult run_chunk(const std::vector<MatN>& g, long count, std::uint64_t chunk_seed,
                      double eps) {
    Rng rng(chunk_seed);
    const int d = static_cast<int>(g[0].size());
    const int k = static_cast<int>(g.size());
    ChunkResult out;
    std::vector<VecN> w(k), ws(k);
    for (long s = 0; s < count; ++s) {
        std::vector<VecN> v;
        v.reserve(k);
        for (int j = 0; j < k; ++j) v.push_back(rng.unit_ball(d));
        for (int j = 0; j < k; ++j) w[j] = mat_apply(g[j], v[j]);
        ws = w;
        ws[0] = mat_apply(g[1], v[0]);
        ws[1] = mat_apply(g[0], v[1]);
        bool deg1 = false, deg2 = false;
        const int t1 = t_value(w, eps, &deg1);
        const int t2 = t_value(ws, eps, &deg2);
        if (deg1 || deg2) ++out.discarded;
        out.sum += 0.5 * (t1 - t2);
    }
    return out;
}

} // namespace

EulEstimate eul_estimate(const std::vector<MatN>& g, long samples, double delta,
                         std::uint64_t seed, double eps, int threads) {
    if (g.size() < 2) throw Error("eul_estimate needs n+2 matrices");
    const int d = static_cast<int>(g[0].size());
    if (static_cast<int>(g.size()) != d + 1)
        throw Error("eul_estimate needs n+2 matrices of size (n+1)x(n+1)");
    for (const auto& m : g) {
        if (static_cast<int>(m.size()) != d) throw Error("matrix dimensions disagree");
        if (!(mat_det(m) > 0)) throw BadDeterminant("matrices must have positive determinant");
    }
    if (samples < 1000) throw Error("eul_estimate needs at least 1000 samples");
    if (!(delta > 0 && delta < 1)) throw Error("confidence parameter must be in (0,1)");

    if (threads <= 0) {
        if (const char* env = std::getenv("EULERLAB_THREADS")) threads = std::atoi(env);
        if (threads <= 0) threads = 1;
    }

    const long chunk = 4096;
    const long nchunks = (samples + chunk - 1) / chunk;
    std::vector<ChunkResult> results(nchunks);
    const auto worker = [&](long c0, long c1) {
        for (long c = c0; c < c1; ++c) {
            const long count = std::min(chunk, samples - c * chunk);
            results[c] = run_chunk(g, count, splitmix64(seed + 0x1000 * c), eps);
        }
    };
    if (threads == 1 || nchunks == 1) {
        worker(0, nchunks);
    } else {
        std::vector<std::thread> pool;
        const long per = (nchunks + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const long c0 = t * per, c1 = std::min(nchunks, (t + 1) * per);
            if (c0 < c1) pool.emplace_back(worker, c0, c1);
        }
        for (auto& t : pool) t.join();
    }

    EulEstimate est;
    est.samples = samples;
    est.seed = seed;
    for (const auto& r : results) {
        est.mean += r.sum;
        est.discarded += r.discarded;
    }
    est.mean /= static_cast<double>(samples);
    est.half_width = std::sqrt(std::log(2.0 / delta) / (2.0 * samples));
    return est;
}

int it_coboundary_check(const std::vector<VecN>& w, double eps) {
    const int k = static_cast<int>(w.size()); // n+3
    const int d = k - 2;
    if (k < 3 || static_cast<int>(w[0].size()) != d)
        throw Error("it_coboundary_check expects n+3 vectors in R^{n+1}");
    int total = 0, sign = 1;
    for (int omit = 0; omit < k; ++omit) {
        std::vector<VecN> face;
        face.reserve(k - 1);
        for (int j = 0; j < k; ++j)
            if (j != omit) face.push_back(w[j]);
        bool deg = false;
        const int t = t_value(face, eps, &deg);
        if (deg) throw Degenerate("face " + std::to_string(omit) + " is degenerate");
        total += sign * t;
        sign = -sign;
    }
    return total;
}

bool it_invariance_check(const MatN& g, const std::vector<VecN>& v, double eps) {
    if (!(mat_det(g) > 0)) throw BadDeterminant("matrix must have positive determinant");
    std::vector<VecN> gv;
    gv.reserve(v.size());
    for (const auto& x : v) gv.push_back(mat_apply(g, x));
    bool deg1 = false, deg2 = false;
    const int t1 = t_value(v, eps, &deg1);
    const int t2 = t_value(gv, eps, &deg2);
    if (deg1 || deg2) throw Degenerate("tuple degenerate before or after the action");
    return t1 == t2;
}

} // namespace eulerlab
