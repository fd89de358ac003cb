#pragma once

#include "yoneda/field.hpp"

#include <optional>
#include <vector>

namespace yoneda {

struct Echelon;

/// Dense exact matrix over GF(p) or QQ. Row-major. Immutable ops return
/// fresh matrices; column vectors (cols == 1) double as coordinate vectors.
class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, int rows, int cols); // zero matrix
    static Matrix identity(Field f, int n);
    static Matrix column(Field f, const std::vector<Q>& entries);

    const Field& field() const { return f_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Q get(int i, int j) const;
    void set(int i, int j, const Q& v);

    bool is_zero() const;
    bool operator==(const Matrix& o) const;

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Q& c) const;
    Matrix transposed() const;

    Matrix hstack(const Matrix& o) const;
    Matrix vstack(const Matrix& o) const;
    Matrix submatrix(int r0, int r1, int c0, int c1) const; // half-open ranges
    Matrix col(int j) const;
    Matrix select_cols(const std::vector<int>& idx) const;

    int rank() const;
    /// Row-reduce; returns (rank, pivot columns, reduced, transform) with
    /// transform * this == reduced and transform invertible.
    Echelon rref() const;

    /// Columns form a basis of the right null space {x : this*x = 0}.
    Matrix kernel() const;

    /// Solve this * X = b; free variables are set to 0. nullopt if unsolvable.
    std::optional<Matrix> solve_right(const Matrix& b) const;

    // raw payload access for hot loops
    std::vector<std::int64_t>& ip() { return ip_; }
    const std::vector<std::int64_t>& ip() const { return ip_; }
    std::vector<Q>& qp() { return qp_; }
    const std::vector<Q>& qp() const { return qp_; }

private:
    Field f_;
    int rows_ = 0, cols_ = 0;
    std::vector<std::int64_t> ip_; // GF(p) payload
    std::vector<Q> qp_;            // rational payload
};

struct Echelon {
    int rank = 0;
    std::vector<int> pivots;
    Matrix reduced;
    Matrix transform;
};

/// Exact determinant of a square integer matrix (fraction-free Bareiss).
Z int_det(const std::vector<std::vector<Z>>& m);

/// Row-space in reduced row echelon form, used for canonical coset
/// representatives: reduce() eliminates the pivot coordinates of members.
class Subspace {
public:
    Subspace() : f_(), ambient_(0), rows_(Field(), 0, 0) {}
    Subspace(Field f, int ambient_dim);
    /// Span of the *columns* of gens.
    static Subspace from_columns(const Matrix& gens);

    int dim() const { return static_cast<int>(pivots_.size()); }
    int ambient() const { return ambient_; }
    const std::vector<int>& pivots() const { return pivots_; }
    const Matrix& row_basis() const { return rows_; } // dim x ambient, rref

    /// Canonical representative of v + (this); column vector in/out.
    Matrix reduce(const Matrix& v) const;
    bool contains(const Matrix& v) const;
    /// Extend by a vector (no-op if already contained). Returns true if grown.
    bool grow(const Matrix& v);

private:
    Field f_;
    int ambient_;
    Matrix rows_;              // rref rows stacked
    std::vector<int> pivots_;  // pivot column per row
};

} // namespace yoneda
