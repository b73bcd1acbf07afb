#include "toric/intlinalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace toric {

std::vector<Coeff> apply_incidence(const IncidenceMatrix& a, const std::vector<Coeff>& u) {
    if (static_cast<int>(u.size()) != a.cols)
        throw Error("vector length does not match incidence matrix columns");
    std::vector<Coeff> r(a.rows, 0);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j)
            if (a.entry[i][j] != 0)
                r[i] = checked_add(r[i], u[j]);
    return r;
}

bool is_zero(const std::vector<Coeff>& v) {
    return std::all_of(v.begin(), v.end(), [](Coeff x) { return x == 0; });
}

std::vector<std::vector<Coeff>> integer_kernel_basis(const IncidenceMatrix& a) {
    const int m = a.cols; // rows of the working matrix [A^T | I]
    const int n = a.rows;

    // w[i] = i-th row of A^T followed by the i-th unit vector.
    std::vector<std::vector<Coeff>> w(m, std::vector<Coeff>(n + m, 0));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j)
            w[i][j] = a.entry[j][i];
        w[i][n + i] = 1;
    }

    auto row_addmul = [&](int dst, int src, Coeff f) {
        if (f == 0)
            return;
        for (int j = 0; j < n + m; ++j)
            w[dst][j] = checked_add(w[dst][j], checked_mul(f, w[src][j]));
    };

    int r = 0; // next pivot row
    for (int col = 0; col < n && r < m; ++col) {
        // Euclidean elimination: shrink entries in this column below row r
        // until at most one is nonzero.
        while (true) {
            int piv = -1;
            for (int i = r; i < m; ++i)
                if (w[i][col] != 0 && (piv == -1 || std::llabs(w[i][col]) < std::llabs(w[piv][col])))
                    piv = i;
            if (piv == -1)
                break;
            bool done = true;
            for (int i = r; i < m; ++i) {
                if (i == piv || w[i][col] == 0)
                    continue;
                row_addmul(i, piv, -(w[i][col] / w[piv][col]));
                if (w[i][col] != 0)
                    done = false;
            }
            if (done) {
                std::swap(w[piv], w[r]);
                if (w[r][col] < 0)
                    for (auto& x : w[r])
                        x = -x;
                ++r;
                break;
            }
        }
    }

    // Rows past the pivot block have zero image, i.e. their identity part
    // satisfies A u = 0.
    std::vector<std::vector<Coeff>> basis;
    for (int i = r; i < m; ++i)
        basis.emplace_back(w[i].begin() + n, w[i].end());
    return basis;
}

} // namespace toric
