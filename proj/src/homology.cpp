#include "tri/homology.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace tri {

static long long checked_mul(long long a, long long b) {
    __int128 r = (__int128)a * b;
    if (r > INT64_MAX / 4 || r < INT64_MIN / 4)
        throw std::runtime_error("integer overflow in exact linear algebra");
    return (long long)r;
}
static long long checked_add(long long a, long long b) {
    __int128 r = (__int128)a + b;
    if (r > INT64_MAX / 4 || r < INT64_MIN / 4)
        throw std::runtime_error("integer overflow in exact linear algebra");
    return (long long)r;
}

Mat mat_identity(int n) {
    Mat m(n, Vec(n, 0));
    for (int i = 0; i < n; i++) m[i][i] = 1;
    return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    int n = (int)a.size(), p = b.empty() ? 0 : (int)b[0].size();
    Mat c(n, Vec(p, 0));
    for (int i = 0; i < n; i++)
        for (int j = 0; j < (int)a[i].size(); j++) {
            if (a[i][j] == 0) continue;
            for (int t = 0; t < p; t++)
                c[i][t] = checked_add(c[i][t], checked_mul(a[i][j], b[j][t]));
        }
    return c;
}

Vec mat_apply(const Mat& a, const Vec& x) {
    Vec y(a.size(), 0);
    for (size_t i = 0; i < a.size(); i++)
        for (size_t j = 0; j < a[i].size(); j++)
            if (a[i][j] != 0) y[i] = checked_add(y[i], checked_mul(a[i][j], x[j]));
    return y;
}

bool mat_equal(const Mat& a, const Mat& b) { return a == b; }

long long mat_det(Mat m) {
    int n = (int)m.size();
    if (n == 0) return 1;
    long long prev = 1, sign = 1;
    for (int k = 0; k < n - 1; k++) {
        if (m[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; i++)
                if (m[i][k] != 0) { p = i; break; }
            if (p < 0) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; i++)
            for (int j = k + 1; j < n; j++) {
                __int128 num = (__int128)m[i][j] * m[k][k] - (__int128)m[i][k] * m[k][j];
                __int128 q = num / prev;
                if (q > INT64_MAX / 4 || q < INT64_MIN / 4)
                    throw std::runtime_error("determinant overflow");
                m[i][j] = (long long)q;
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

SNF smith(Mat m) {
    int rows = (int)m.size();
    int cols = rows ? (int)m[0].size() : 0;
    SNF r;
    r.u = mat_identity(rows);
    r.v = mat_identity(cols);
    auto row_add = [&](int dst, int src, long long c) {
        for (int j = 0; j < cols; j++) m[dst][j] = checked_add(m[dst][j], checked_mul(c, m[src][j]));
        for (int j = 0; j < rows; j++)
            r.u[dst][j] = checked_add(r.u[dst][j], checked_mul(c, r.u[src][j]));
    };
    auto col_add = [&](int dst, int src, long long c) {
        for (int i = 0; i < rows; i++) m[i][dst] = checked_add(m[i][dst], checked_mul(c, m[i][src]));
        for (int i = 0; i < cols; i++)
            r.v[i][dst] = checked_add(r.v[i][dst], checked_mul(c, r.v[i][src]));
    };
    auto row_swap = [&](int a, int b) {
        if (a == b) return;
        std::swap(m[a], m[b]);
        std::swap(r.u[a], r.u[b]);
    };
    auto col_swap = [&](int a, int b) {
        if (a == b) return;
        for (int i = 0; i < rows; i++) std::swap(m[i][a], m[i][b]);
        for (int i = 0; i < cols; i++) std::swap(r.v[i][a], r.v[i][b]);
    };
    auto row_neg = [&](int a) {
        for (int j = 0; j < cols; j++) m[a][j] = -m[a][j];
        for (int j = 0; j < rows; j++) r.u[a][j] = -r.u[a][j];
    };

    int t = 0;
    while (t < rows && t < cols) {
        int pi = -1, pj = -1;
        long long best = 0;
        for (int i = t; i < rows; i++)
            for (int j = t; j < cols; j++)
                if (m[i][j] != 0 && (best == 0 || std::llabs(m[i][j]) < best)) {
                    best = std::llabs(m[i][j]);
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        row_swap(t, pi);
        col_swap(t, pj);
        bool dirty = true;
        int guard = 0;
        while (dirty) {
            if (++guard > 10000) throw std::runtime_error("smith reduction stuck");
            dirty = false;
            for (int i = t + 1; i < rows; i++) {
                if (m[i][t] == 0) continue;
                long long q = m[i][t] / m[t][t];
                row_add(i, t, -q);
                if (m[i][t] != 0) { // remainder smaller than pivot
                    row_swap(t, i);
                    dirty = true;
                }
            }
            for (int j = t + 1; j < cols; j++) {
                if (m[t][j] == 0) continue;
                long long q = m[t][j] / m[t][t];
                col_add(j, t, -q);
                if (m[t][j] != 0) {
                    col_swap(t, j);
                    dirty = true;
                }
            }
        }
        if (m[t][t] < 0) row_neg(t);
        t++;
    }
    // divisibility chain
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i + 1 < t; i++) {
            if (m[i][i] != 0 && m[i + 1][i + 1] % m[i][i] != 0) {
                // classic trick: fold the two diagonal entries
                col_add(i, i + 1, 1);
                // re-reduce the 2x2 block
                while (m[i + 1][i] != 0) {
                    long long q = m[i][i] != 0 ? m[i + 1][i] / m[i][i] : 0;
                    row_add(i + 1, i, -q);
                    if (m[i + 1][i] != 0) row_swap(i, i + 1);
                }
                while (m[i][i + 1] != 0) {
                    long long q = m[i][i] != 0 ? m[i][i + 1] / m[i][i] : 0;
                    col_add(i + 1, i, -q);
                    if (m[i][i + 1] != 0) col_swap(i, i + 1);
                }
                if (m[i][i] < 0) row_neg(i);
                if (m[i + 1][i + 1] < 0) row_neg(i + 1);
                changed = true;
            }
        }
    }
    r.s = m;
    for (int i = 0; i < t; i++)
        if (m[i][i] != 0) {
            r.diag.push_back(m[i][i]);
            r.rank++;
        }
    return r;
}

std::vector<Vec> kernel(const Mat& m) {
    if (m.empty()) return {};
    SNF f = smith(m);
    int cols = (int)m[0].size();
    std::vector<Vec> out;
    for (int j = f.rank; j < cols; j++) {
        Vec x(cols);
        for (int i = 0; i < cols; i++) x[i] = f.v[i][j];
        out.push_back(std::move(x));
    }
    return out;
}

Vec solve_integer(const Mat& m, const Vec& b) {
    SNF f = smith(m);
    int rows = (int)m.size();
    int cols = rows ? (int)m[0].size() : 0;
    Vec ub = mat_apply(f.u, b);
    Vec y(cols, 0);
    for (int i = 0; i < rows; i++) {
        long long d = (i < cols) ? f.s[i][i] : 0;
        if (d == 0) {
            if (ub[i] != 0) throw std::runtime_error("no integer solution");
        } else {
            if (ub[i] % d != 0) throw std::runtime_error("no integer solution");
            if (i < cols) y[i] = ub[i] / d;
        }
    }
    return mat_apply(f.v, y);
}

int signature(Mat m) {
    int n = (int)m.size();
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++)
            if (m[i][j] != m[j][i]) throw std::runtime_error("signature of a non-symmetric form");
    // fraction-free symmetric reduction: split off a pivot d, replace the
    // rest by the scaled Schur complement d*B - (col)(row); the scaled block
    // carries the remaining inertia multiplied by sign(d)
    int sig = 0;
    int mult = 1;
    std::vector<int> act(n);
    std::iota(act.begin(), act.end(), 0);
    while (!act.empty()) {
        int p = -1;
        for (int k = 0; k < (int)act.size(); k++)
            if (m[act[k]][act[k]] != 0) { p = k; break; }
        if (p < 0) {
            // all diagonal zero: find a coupled pair or stop on the zero form
            int a = -1, b = -1;
            for (int x = 0; x < (int)act.size() && a < 0; x++)
                for (int y = x + 1; y < (int)act.size(); y++)
                    if (m[act[x]][act[y]] != 0) { a = act[x]; b = act[y]; break; }
            if (a < 0) break;
            for (int j = 0; j < n; j++) m[a][j] = checked_add(m[a][j], m[b][j]);
            for (int i = 0; i < n; i++) m[i][a] = checked_add(m[i][a], m[i][b]);
            continue; // diagonal entry 2*m[a][b] appeared
        }
        int pi = act[p];
        long long d = m[pi][pi];
        int sd = d > 0 ? 1 : -1;
        sig += mult * sd;
        act.erase(act.begin() + p);
        for (int x = 0; x < (int)act.size(); x++)
            for (int y = 0; y < (int)act.size(); y++) {
                int i = act[x], j = act[y];
                __int128 val = (__int128)d * m[i][j] - (__int128)m[i][pi] * m[pi][j];
                if (val > INT64_MAX / 8 || val < INT64_MIN / 8)
                    throw std::runtime_error("signature overflow");
                m[i][j] = (long long)val;
            }
        // uniform positive rescale of the remaining block
        long long g = 0;
        for (int x = 0; x < (int)act.size(); x++)
            for (int y = 0; y < (int)act.size(); y++) g = std::gcd(g, std::llabs(m[act[x]][act[y]]));
        if (g > 1)
            for (int x = 0; x < (int)act.size(); x++)
                for (int y = 0; y < (int)act.size(); y++) m[act[x]][act[y]] /= g;
        mult *= sd;
    }
    return sig;
}

} // namespace tri
