#include "polyharm/linalg.hpp"

#include <utility>

#include "polyharm/errors.hpp"

namespace polyharm {

RationalMatrix RationalMatrix::product(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw consistency_error("matrix product shape mismatch");
    RationalMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (int j = 0; j < b.cols(); ++j) {
                if (b.at(k, j) == 0) continue;
                out.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    }
    return out;
}

EchelonForm reduced_row_echelon(RationalMatrix a) {
    const int rows = a.rows();
    const int cols = a.cols();
    std::vector<int> pivots;
    int lead = 0;
    for (int col = 0; col < cols && lead < rows; ++col) {
        int pivot = -1;
        for (int r = lead; r < rows; ++r) {
            if (a.at(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != lead) {
            for (int c = 0; c < cols; ++c) std::swap(a.at(pivot, c), a.at(lead, c));
        }
        Rational inv = a.at(lead, col);
        for (int c = col; c < cols; ++c) a.at(lead, c) /= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == lead || a.at(r, col) == 0) continue;
            Rational factor = a.at(r, col);
            for (int c = col; c < cols; ++c) a.at(r, c) -= factor * a.at(lead, c);
        }
        pivots.push_back(col);
        ++lead;
    }
    EchelonForm out;
    out.rank = static_cast<int>(pivots.size());
    out.pivot_columns = std::move(pivots);
    out.matrix = RationalMatrix(out.rank, cols);
    for (int r = 0; r < out.rank; ++r) {
        for (int c = 0; c < cols; ++c) out.matrix.at(r, c) = a.at(r, c);
    }
    return out;
}

int matrix_rank(const RationalMatrix& a) { return reduced_row_echelon(a).rank; }

RationalMatrix kernel_rows(const RationalMatrix& a) {
    EchelonForm ef = reduced_row_echelon(a);
    const int cols = a.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int c : ef.pivot_columns) is_pivot[c] = true;

    const int nullity = cols - ef.rank;
    RationalMatrix vectors(nullity, cols);
    int row = 0;
    for (int j = 0; j < cols; ++j) {
        if (is_pivot[j]) continue;
        vectors.at(row, j) = 1;
        for (int p = 0; p < ef.rank; ++p) {
            vectors.at(row, ef.pivot_columns[p]) = -ef.matrix.at(p, j);
        }
        ++row;
    }
    return reduced_row_echelon(std::move(vectors)).matrix;
}

std::vector<Rational> solve_exact(RationalMatrix a, std::vector<Rational> b) {
    const int n = a.rows();
    if (a.cols() != n || static_cast<int>(b.size()) != n)
        throw consistency_error("solve_exact: shape mismatch");
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (a.at(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) throw consistency_error("solve_exact: singular matrix");
        if (pivot != col) {
            for (int c = 0; c < n; ++c) std::swap(a.at(pivot, c), a.at(col, c));
            std::swap(b[pivot], b[col]);
        }
        for (int r = col + 1; r < n; ++r) {
            if (a.at(r, col) == 0) continue;
            Rational factor = a.at(r, col) / a.at(col, col);
            for (int c = col; c < n; ++c) a.at(r, c) -= factor * a.at(col, c);
            b[r] -= factor * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (int r = n - 1; r >= 0; --r) {
        Rational acc = b[r];
        for (int c = r + 1; c < n; ++c) acc -= a.at(r, c) * x[c];
        x[r] = acc / a.at(r, r);
    }
    return x;
}

std::vector<Rational> matrix_vector(const RationalMatrix& a, const std::vector<Rational>& v) {
    if (a.cols() != static_cast<int>(v.size())) throw consistency_error("matrix_vector: shape mismatch");
    std::vector<Rational> out(a.rows());
    for (int i = 0; i < a.rows(); ++i) {
        Rational acc = 0;
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j) != 0 && v[j] != 0) acc += a.at(i, j) * v[j];
        }
        out[i] = acc;
    }
    return out;
}

}  // namespace polyharm
