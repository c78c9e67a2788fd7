#include "polyharm/snf.hpp"

#include <utility>

namespace polyharm {

namespace {

bool abs_less(const Int& a, const Int& b) {
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
}

}  // namespace

std::vector<Int> smith_normal_form(std::vector<std::vector<Int>> a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    std::vector<Int> divisors;
    int r = 0;
    int c = 0;
    while (r < rows && c < cols) {
        // Pivot on a nonzero entry of minimal absolute value.
        int pr = -1;
        int pc = -1;
        for (int i = r; i < rows; ++i) {
            for (int j = c; j < cols; ++j) {
                if (a[i][j] != 0 && (pr < 0 || abs_less(a[i][j], a[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
            }
        }
        if (pr < 0) break;
        std::swap(a[r], a[pr]);
        if (pc != c) {
            for (int i = 0; i < rows; ++i) std::swap(a[i][c], a[i][pc]);
        }

        bool cleared = true;
        for (int i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            Int q = a[i][c] / a[r][c];
            if (q != 0) {
                for (int j = c; j < cols; ++j) a[i][j] -= q * a[r][j];
            }
            if (a[i][c] != 0) cleared = false;
        }
        for (int j = c + 1; j < cols; ++j) {
            if (a[r][j] == 0) continue;
            Int q = a[r][j] / a[r][c];
            if (q != 0) {
                for (int i = r; i < rows; ++i) a[i][j] -= q * a[i][c];
            }
            if (a[r][j] != 0) cleared = false;
        }
        if (!cleared) continue;  // remainders left, re-pick pivot

        // The pivot must divide the rest of the submatrix; if not, fold the
        // offending row into the pivot row and start over.
        bool retry = false;
        for (int i = r + 1; i < rows && !retry; ++i) {
            for (int j = c + 1; j < cols && !retry; ++j) {
                if (a[i][j] % a[r][c] != 0) {
                    for (int jj = c; jj < cols; ++jj) a[r][jj] += a[i][jj];
                    retry = true;
                }
            }
        }
        if (retry) continue;

        divisors.push_back(abs(a[r][c]));
        ++r;
        ++c;
    }
    return divisors;
}

}  // namespace polyharm
