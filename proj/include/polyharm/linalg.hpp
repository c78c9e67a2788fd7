#pragma once

#include <vector>

#include "polyharm/rational.hpp"

namespace polyharm {

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    bool operator==(const RationalMatrix&) const = default;

    static RationalMatrix product(const RationalMatrix& a, const RationalMatrix& b);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

struct EchelonForm {
    RationalMatrix matrix;  // reduced row-echelon form with zero rows dropped
    std::vector<int> pivot_columns;
    int rank = 0;
};

EchelonForm reduced_row_echelon(RationalMatrix a);
int matrix_rank(const RationalMatrix& a);

// Nullspace basis, one vector per row, itself in reduced row-echelon form.
// This makes the basis canonical for a fixed column order.
RationalMatrix kernel_rows(const RationalMatrix& a);

// Exact dense solve of a square system; throws consistency_error if singular.
std::vector<Rational> solve_exact(RationalMatrix a, std::vector<Rational> b);

std::vector<Rational> matrix_vector(const RationalMatrix& a, const std::vector<Rational>& v);

}  // namespace polyharm
