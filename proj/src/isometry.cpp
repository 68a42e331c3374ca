#include "k3mw/isometry.hpp"

#include <functional>
#include <vector>

namespace k3mw {

Int det(const IsometryWitness& P) {
    const int n = P.rank;
    std::array<std::array<Int, kMaxRank>, kMaxRank> a = P.m;
    // fraction-free Gaussian elimination (Bareiss) on small integer matrices
    Int sign = 1, prev = 1;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (a[i][k] != 0) { piv = i; break; }
        if (piv < 0) return 0;
        if (piv != k) { std::swap(a[piv], a[k]); sign = -sign; }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

bool verify_witness(const IsometryWitness& P, const GramLattice& L1,
                    const GramLattice& L2) {
    if (P.rank != L1.rank || L1.rank != L2.rank) return false;
    Int d = det(P);
    if (d != 1 && d != -1) return false;
    const int n = P.rank;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Int s = 0;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) s += P.m[k][i] * L1.g[k][l] * P.m[l][j];
            if (s != L2.g[i][j]) return false;
        }
    return true;
}

namespace {

IsometryWitness from_columns(int rank, const std::vector<std::vector<Int>>& cols) {
    IsometryWitness P;
    P.rank = rank;
    for (int j = 0; j < rank; ++j)
        for (int i = 0; i < rank; ++i) P.m[i][j] = cols[j][i];
    return P;
}

// Integer inverse of a unimodular matrix via adjugate.
std::optional<IsometryWitness> unimodular_inverse(const IsometryWitness& P) {
    Int d = det(P);
    if (d != 1 && d != -1) return std::nullopt;
    const int n = P.rank;
    IsometryWitness R;
    R.rank = n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // cofactor C_{ji}
            std::array<std::array<Int, 3>, 3> sub{};
            int r = 0;
            for (int ii = 0; ii < n; ++ii) {
                if (ii == j) continue;
                int cidx = 0;
                for (int jj = 0; jj < n; ++jj) {
                    if (jj == i) continue;
                    sub[r][cidx++] = P.m[ii][jj];
                }
                ++r;
            }
            Int minor = 1;
            if (n == 1) minor = 1;
            else if (n == 2) minor = sub[0][0];
            else if (n == 3) minor = sub[0][0] * sub[1][1] - sub[0][1] * sub[1][0];
            else
                minor = sub[0][0] * (sub[1][1] * sub[2][2] - sub[1][2] * sub[2][1]) -
                        sub[0][1] * (sub[1][0] * sub[2][2] - sub[1][2] * sub[2][0]) +
                        sub[0][2] * (sub[1][0] * sub[2][1] - sub[1][1] * sub[2][0]);
            Int sign = ((i + j) % 2 == 0) ? 1 : -1;
            R.m[i][j] = d * sign * minor;
        }
    return R;
}

// Closed-form base changes, keyed on source/target shapes.
std::optional<IsometryWitness> closed_form(const GramLattice& A, const GramLattice& B) {
    auto matches_lambda = [](const GramLattice& L, Int& d) {
        if (L.rank != 3) return false;
        if (L.g[0][0] == 0 && L.g[0][1] == 1 && L.g[0][2] == 0 && L.g[1][1] == 0 &&
            L.g[1][2] == 0 && L.g[2][2] < 0 && L.g[2][2] % 2 == 0) {
            d = -L.g[2][2] / 2;
            return true;
        }
        return false;
    };
    // <F,O,M> span with F.O = 1, F.M = m, O.M = x, M^2 in {-2, 0}
    auto matches_span = [](const GramLattice& L, Int& m, Int& x, Int& msq) {
        if (L.rank != 3) return false;
        if (L.g[0][0] == 0 && L.g[0][1] == 1 && L.g[1][1] == -2 && L.g[0][2] >= 1 &&
            (L.g[2][2] == -2 || L.g[2][2] == 0)) {
            m = L.g[0][2];
            x = L.g[1][2];
            msq = L.g[2][2];
            return true;
        }
        return false;
    };

    Int d = 0, m = 0, x = 0, msq = 0;
    if (matches_span(A, m, x, msq) && matches_lambda(B, d)) {
        Int target = m * m + m * x + (msq == -2 ? 1 : 0);
        if (d == target && x >= 0) {
            // base {F, F+O, -(2m+x)F - mO + M}
            return from_columns(3, {{1, 0, 0}, {1, 1, 0}, {-(2 * m + x), -m, 1}});
        }
    }
    if (matches_lambda(A, d) && matches_span(B, m, x, msq)) {
        Int target = m * m + m * x + (msq == -2 ? 1 : 0);
        if (d == target && x >= 0) {
            auto W = from_columns(3, {{1, 0, 0}, {1, 1, 0}, {-(2 * m + x), -m, 1}});
            return unimodular_inverse(W);
        }
    }
    // Gamma_{2,1} vs <F,B> = [[0,2],[2,-2]]: base {F, F+B} on the <F,B> side.
    GramLattice g21 = lattices::gamma(2, 1);
    GramLattice fb = make_from_rows({{0, 2}, {2, -2}});
    if (A == fb && B == g21) return from_columns(2, {{1, 0}, {1, 1}});
    if (A == g21 && B == fb) return from_columns(2, {{1, 0}, {-1, 1}});
    return std::nullopt;
}

} // namespace

std::optional<IsometryWitness> isometry_witness(const GramLattice& L1,
                                                const GramLattice& L2, Int bound) {
    if (L1.rank != L2.rank) throw std::invalid_argument("rank mismatch");
    const int n = L1.rank;

    if (L1 == L2) {
        IsometryWitness I;
        I.rank = n;
        for (int i = 0; i < n; ++i) I.m[i][i] = 1;
        return I;
    }
    if (auto W = closed_form(L1, L2); W && verify_witness(*W, L1, L2)) return W;
    if (bound < 1) return std::nullopt;

    // Candidate columns per target diagonal value.
    auto pair_of = [&](const std::vector<Int>& v, const std::vector<Int>& w) {
        Int s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) s += v[i] * L1.g[i][j] * w[j];
        return s;
    };
    std::vector<std::vector<std::vector<Int>>> cand(n);
    std::vector<Int> v(n, -bound);
    while (true) {
        for (int j = 0; j < n; ++j) {
            if (pair_of(v, v) == L2.g[j][j]) cand[j].push_back(v);
        }
        int k = n - 1;
        while (k >= 0 && v[k] == bound) v[k--] = -bound;
        if (k < 0) break;
        ++v[k];
    }

    std::vector<std::vector<Int>> cols(n);
    std::optional<IsometryWitness> found;
    std::function<bool(int)> dfs = [&](int j) -> bool {
        if (j == n) {
            IsometryWitness P;
            P.rank = n;
            for (int col = 0; col < n; ++col)
                for (int row = 0; row < n; ++row) P.m[row][col] = cols[col][row];
            if (verify_witness(P, L1, L2)) {
                found = P;
                return true;
            }
            return false;
        }
        for (const auto& w : cand[j]) {
            bool ok = true;
            for (int i = 0; i < j && ok; ++i)
                if (pair_of(cols[i], w) != L2.g[i][j]) ok = false;
            if (!ok) continue;
            cols[j] = w;
            if (dfs(j + 1)) return true;
        }
        return false;
    };
    dfs(0);
    return found;
}

} // namespace k3mw
