#include "yoneda/matrix.hpp"

#include <algorithm>

namespace yoneda {

namespace {

struct FpOps {
    std::int64_t p;
    using T = std::int64_t;
    T zero() const { return 0; }
    T one() const { return 1; }
    T add(T a, T b) const { return (a + b) % p; }
    T sub(T a, T b) const { T r = (a - b) % p; return r < 0 ? r + p : r; }
    T mul(T a, T b) const { return (a * b) % p; }
    T neg(T a) const { return a == 0 ? 0 : p - a; }
    T inv(T a) const {
        T r = 1, base = a % p, e = p - 2;
        while (e > 0) {
            if (e & 1) r = (r * base) % p;
            base = (base * base) % p;
            e >>= 1;
        }
        return r;
    }
    bool nz(T a) const { return a != 0; }
};

struct QOps {
    using T = Q;
    T zero() const { return T(0); }
    T one() const { return T(1); }
    T add(const T& a, const T& b) const { return a + b; }
    T sub(const T& a, const T& b) const { return a - b; }
    T mul(const T& a, const T& b) const { return a * b; }
    T neg(const T& a) const { return -a; }
    T inv(const T& a) const { return T(1) / a; }
    bool nz(const T& a) const { return a != 0; }
};

// Gauss-Jordan with transform tracking. a is rows x cols row-major, t starts
// as identity (rows x rows) and receives the same row operations.
template <class Ops>
void rref_impl(const Ops& K, std::vector<typename Ops::T>& a, int rows, int cols,
               std::vector<typename Ops::T>& t, int& rank, std::vector<int>& pivots) {
    rank = 0;
    pivots.clear();
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pr = -1;
        for (int r = rank; r < rows; ++r)
            if (K.nz(a[static_cast<size_t>(r) * cols + c])) { pr = r; break; }
        if (pr < 0) continue;
        if (pr != rank) {
            for (int j = 0; j < cols; ++j) std::swap(a[static_cast<size_t>(pr) * cols + j], a[static_cast<size_t>(rank) * cols + j]);
            for (int j = 0; j < rows; ++j) std::swap(t[static_cast<size_t>(pr) * rows + j], t[static_cast<size_t>(rank) * rows + j]);
        }
        auto piv = a[static_cast<size_t>(rank) * cols + c];
        if (!(piv == K.one())) {
            auto iv = K.inv(piv);
            for (int j = c; j < cols; ++j) a[static_cast<size_t>(rank) * cols + j] = K.mul(a[static_cast<size_t>(rank) * cols + j], iv);
            for (int j = 0; j < rows; ++j) t[static_cast<size_t>(rank) * rows + j] = K.mul(t[static_cast<size_t>(rank) * rows + j], iv);
        }
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            auto f = a[static_cast<size_t>(r) * cols + c];
            if (!K.nz(f)) continue;
            for (int j = c; j < cols; ++j)
                a[static_cast<size_t>(r) * cols + j] = K.sub(a[static_cast<size_t>(r) * cols + j], K.mul(f, a[static_cast<size_t>(rank) * cols + j]));
            for (int j = 0; j < rows; ++j)
                t[static_cast<size_t>(r) * rows + j] = K.sub(t[static_cast<size_t>(r) * rows + j], K.mul(f, t[static_cast<size_t>(rank) * rows + j]));
        }
        pivots.push_back(c);
        ++rank;
    }
}

template <class Ops>
void mul_impl(const Ops& K, const std::vector<typename Ops::T>& a, int ar, int ac,
              const std::vector<typename Ops::T>& b, int bc, std::vector<typename Ops::T>& out) {
    for (int i = 0; i < ar; ++i)
        for (int k = 0; k < ac; ++k) {
            auto v = a[static_cast<size_t>(i) * ac + k];
            if (!K.nz(v)) continue;
            for (int j = 0; j < bc; ++j) {
                auto& o = out[static_cast<size_t>(i) * bc + j];
                o = K.add(o, K.mul(v, b[static_cast<size_t>(k) * bc + j]));
            }
        }
}

void check_same_field(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw internal_error("matrix field mismatch");
}

} // namespace

Matrix::Matrix(Field f, int rows, int cols) : f_(f), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw internal_error("negative matrix dimensions");
    if (f_.is_rational())
        qp_.assign(static_cast<size_t>(rows) * cols, Q(0));
    else
        ip_.assign(static_cast<size_t>(rows) * cols, 0);
}

Matrix Matrix::identity(Field f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, Q(1));
    return m;
}

Matrix Matrix::column(Field f, const std::vector<Q>& entries) {
    Matrix m(f, static_cast<int>(entries.size()), 1);
    for (int i = 0; i < m.rows_; ++i) m.set(i, 0, entries[static_cast<size_t>(i)]);
    return m;
}

Q Matrix::get(int i, int j) const {
    size_t k = static_cast<size_t>(i) * cols_ + j;
    return f_.is_rational() ? qp_[k] : Q(ip_[k]);
}

void Matrix::set(int i, int j, const Q& v) {
    size_t k = static_cast<size_t>(i) * cols_ + j;
    Q n = f_.normalize(v);
    if (f_.is_rational())
        qp_[k] = n;
    else
        ip_[k] = static_cast<std::int64_t>(boost::multiprecision::numerator(n));
}

bool Matrix::is_zero() const {
    if (f_.is_rational()) {
        for (const auto& v : qp_)
            if (v != 0) return false;
    } else {
        for (auto v : ip_)
            if (v != 0) return false;
    }
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && ip_ == o.ip_ && qp_ == o.qp_;
}

Matrix Matrix::operator*(const Matrix& o) const {
    check_same_field(*this, o);
    if (cols_ != o.rows_) throw internal_error("matrix product shape mismatch");
    Matrix out(f_, rows_, o.cols_);
    if (f_.is_rational())
        mul_impl(QOps{}, qp_, rows_, cols_, o.qp_, o.cols_, out.qp_);
    else
        mul_impl(FpOps{f_.p()}, ip_, rows_, cols_, o.ip_, o.cols_, out.ip_);
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    check_same_field(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw internal_error("matrix sum shape mismatch");
    Matrix out = *this;
    if (f_.is_rational()) {
        for (size_t k = 0; k < qp_.size(); ++k) out.qp_[k] += o.qp_[k];
    } else {
        FpOps K{f_.p()};
        for (size_t k = 0; k < ip_.size(); ++k) out.ip_[k] = K.add(ip_[k], o.ip_[k]);
    }
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    check_same_field(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw internal_error("matrix diff shape mismatch");
    Matrix out = *this;
    if (f_.is_rational()) {
        for (size_t k = 0; k < qp_.size(); ++k) out.qp_[k] -= o.qp_[k];
    } else {
        FpOps K{f_.p()};
        for (size_t k = 0; k < ip_.size(); ++k) out.ip_[k] = K.sub(ip_[k], o.ip_[k]);
    }
    return out;
}

Matrix Matrix::scaled(const Q& c) const {
    Matrix out = *this;
    if (f_.is_rational()) {
        for (auto& v : out.qp_) v *= c;
    } else {
        Q n = f_.normalize(c);
        std::int64_t ci = static_cast<std::int64_t>(boost::multiprecision::numerator(n));
        FpOps K{f_.p()};
        for (auto& v : out.ip_) v = K.mul(v, ci);
    }
    return out;
}

Matrix Matrix::transposed() const {
    Matrix out(f_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            size_t s = static_cast<size_t>(i) * cols_ + j, d = static_cast<size_t>(j) * rows_ + i;
            if (f_.is_rational())
                out.qp_[d] = qp_[s];
            else
                out.ip_[d] = ip_[s];
        }
    return out;
}

Matrix Matrix::hstack(const Matrix& o) const {
    check_same_field(*this, o);
    if (rows_ != o.rows_) throw internal_error("hstack row mismatch");
    Matrix out(f_, rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_ + o.cols_; ++j) {
            size_t d = static_cast<size_t>(i) * (cols_ + o.cols_) + j;
            if (f_.is_rational())
                out.qp_[d] = j < cols_ ? qp_[static_cast<size_t>(i) * cols_ + j] : o.qp_[static_cast<size_t>(i) * o.cols_ + (j - cols_)];
            else
                out.ip_[d] = j < cols_ ? ip_[static_cast<size_t>(i) * cols_ + j] : o.ip_[static_cast<size_t>(i) * o.cols_ + (j - cols_)];
        }
    return out;
}

Matrix Matrix::vstack(const Matrix& o) const {
    check_same_field(*this, o);
    if (cols_ != o.cols_) throw internal_error("vstack col mismatch");
    Matrix out(f_, rows_ + o.rows_, cols_);
    if (f_.is_rational()) {
        std::copy(qp_.begin(), qp_.end(), out.qp_.begin());
        std::copy(o.qp_.begin(), o.qp_.end(), out.qp_.begin() + qp_.size());
    } else {
        std::copy(ip_.begin(), ip_.end(), out.ip_.begin());
        std::copy(o.ip_.begin(), o.ip_.end(), out.ip_.begin() + ip_.size());
    }
    return out;
}

Matrix Matrix::submatrix(int r0, int r1, int c0, int c1) const {
    Matrix out(f_, r1 - r0, c1 - c0);
    for (int i = r0; i < r1; ++i)
        for (int j = c0; j < c1; ++j) {
            size_t s = static_cast<size_t>(i) * cols_ + j;
            size_t d = static_cast<size_t>(i - r0) * (c1 - c0) + (j - c0);
            if (f_.is_rational())
                out.qp_[d] = qp_[s];
            else
                out.ip_[d] = ip_[s];
        }
    return out;
}

Matrix Matrix::col(int j) const { return submatrix(0, rows_, j, j + 1); }

Matrix Matrix::select_cols(const std::vector<int>& idx) const {
    Matrix out(f_, rows_, static_cast<int>(idx.size()));
    for (int i = 0; i < rows_; ++i)
        for (size_t j = 0; j < idx.size(); ++j) {
            size_t s = static_cast<size_t>(i) * cols_ + idx[j];
            size_t d = static_cast<size_t>(i) * idx.size() + j;
            if (f_.is_rational())
                out.qp_[d] = qp_[s];
            else
                out.ip_[d] = ip_[s];
        }
    return out;
}

Echelon Matrix::rref() const {
    Echelon e{0, {}, *this, Matrix::identity(f_, rows_)};
    if (f_.is_rational())
        rref_impl(QOps{}, e.reduced.qp_, rows_, cols_, e.transform.qp_, e.rank, e.pivots);
    else
        rref_impl(FpOps{f_.p()}, e.reduced.ip_, rows_, cols_, e.transform.ip_, e.rank, e.pivots);
    return e;
}

int Matrix::rank() const { return rref().rank; }

Matrix Matrix::kernel() const {
    auto e = rref();
    std::vector<int> free_cols;
    {
        std::vector<bool> is_pivot(static_cast<size_t>(cols_), false);
        for (int c : e.pivots) is_pivot[static_cast<size_t>(c)] = true;
        for (int c = 0; c < cols_; ++c)
            if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);
    }
    Matrix out(f_, cols_, static_cast<int>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        out.set(fc, static_cast<int>(k), Q(1));
        for (int r = 0; r < e.rank; ++r)
            out.set(e.pivots[static_cast<size_t>(r)], static_cast<int>(k), -e.reduced.get(r, fc));
    }
    return out;
}

std::optional<Matrix> Matrix::solve_right(const Matrix& b) const {
    check_same_field(*this, b);
    if (rows_ != b.rows_) throw input_error("solve_right: dimension mismatch");
    auto e = rref();
    Matrix tb = e.transform * b;
    // consistency: rows beyond rank must vanish
    for (int r = e.rank; r < rows_; ++r)
        for (int j = 0; j < b.cols_; ++j)
            if (tb.get(r, j) != 0) return std::nullopt;
    Matrix x(f_, cols_, b.cols_);
    for (int r = 0; r < e.rank; ++r)
        for (int j = 0; j < b.cols_; ++j) x.set(e.pivots[static_cast<size_t>(r)], j, tb.get(r, j));
    return x;
}

Z int_det(const std::vector<std::vector<Z>>& m) {
    size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw input_error("int_det: non-square input");
    if (n == 0) return Z(1);
    std::vector<std::vector<Z>> a = m;
    Z prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t sw = k + 1;
            while (sw < n && a[sw][k] == 0) ++sw;
            if (sw == n) return Z(0);
            std::swap(a[k], a[sw]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

Subspace::Subspace(Field f, int ambient_dim) : f_(f), ambient_(ambient_dim), rows_(f, 0, ambient_dim) {}

Subspace Subspace::from_columns(const Matrix& gens) {
    Subspace s(gens.field(), gens.rows());
    auto e = gens.transposed().rref();
    s.rows_ = e.reduced.submatrix(0, e.rank, 0, gens.rows());
    s.pivots_.assign(e.pivots.begin(), e.pivots.end());
    return s;
}

Matrix Subspace::reduce(const Matrix& v) const {
    if (v.rows() != ambient_ || v.cols() != 1) throw internal_error("Subspace::reduce shape");
    Matrix r = v;
    for (int i = 0; i < dim(); ++i) {
        Q c = r.get(pivots_[static_cast<size_t>(i)], 0);
        if (c == 0) continue;
        for (int j = 0; j < ambient_; ++j) r.set(j, 0, r.get(j, 0) - c * rows_.get(i, j));
    }
    return r;
}

bool Subspace::contains(const Matrix& v) const { return reduce(v).is_zero(); }

bool Subspace::grow(const Matrix& v) {
    Matrix r = reduce(v);
    int lead = -1;
    for (int j = 0; j < ambient_; ++j)
        if (r.get(j, 0) != 0) { lead = j; break; }
    if (lead < 0) return false;
    Q iv = Q(1) / r.get(lead, 0);
    Matrix row(f_, 1, ambient_);
    for (int j = 0; j < ambient_; ++j) row.set(0, j, r.get(j, 0) * iv);
    // insert keeping pivots sorted, then fully reduce existing rows against it
    int pos = 0;
    while (pos < dim() && pivots_[static_cast<size_t>(pos)] < lead) ++pos;
    Matrix nr(f_, dim() + 1, ambient_);
    for (int i = 0; i < dim() + 1; ++i) {
        const Matrix& src = (i == pos) ? row : rows_;
        int si = i < pos ? i : i - 1;
        for (int j = 0; j < ambient_; ++j) nr.set(i, j, i == pos ? row.get(0, j) : rows_.get(si, j));
    }
    pivots_.insert(pivots_.begin() + pos, lead);
    rows_ = nr;
    for (int i = 0; i < dim(); ++i) {
        if (i == pos) continue;
        Q c = rows_.get(i, lead);
        if (c == 0) continue;
        for (int j = 0; j < ambient_; ++j) rows_.set(i, j, rows_.get(i, j) - c * rows_.get(pos, j));
    }
    return true;
}

} // namespace yoneda
