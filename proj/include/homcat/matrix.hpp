#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homcat/errors.hpp"
#include "homcat/field.hpp"

namespace homcat {

// Dense matrix over an exact field (Rat or Fp), row-major, always stored with
// canonical entries so operator== is exact. Module elements are row vectors
// and a map M -> N is a (dim M x dim N) matrix acting by v |-> v*F.
template <class K>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols, const K& zero)
        : rows_(rows), cols_(cols), zero_(zero), e_(static_cast<size_t>(rows) * cols, zero) {}

    static Mat identity(int n, const K& zero) {
        Mat m(n, n, zero);
        for (int i = 0; i < n; ++i) m.at(i, i) = zero.one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const K& zero_proto() const { return zero_; }

    K& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const K& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const K& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    Mat operator+(const Mat& o) const {
        require_same_shape(o);
        Mat r = *this;
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = r.e_[i] + o.e_[i];
        return r;
    }
    Mat operator-(const Mat& o) const {
        require_same_shape(o);
        Mat r = *this;
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = r.e_[i] - o.e_[i];
        return r;
    }
    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape");
        Mat r(rows_, o.cols_, zero_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const K& a = at(i, k);
                if (a.is_zero()) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    const K& b = o.at(k, j);
                    if (!b.is_zero()) r.at(i, j) = r.at(i, j) + a * b;
                }
            }
        return r;
    }
    Mat scaled(const K& c) const {
        Mat r = *this;
        for (K& x : r.e_) x = x * c;
        return r;
    }

    Mat transpose() const {
        Mat r(cols_, rows_, zero_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    std::vector<K> row(int i) const {
        return std::vector<K>(e_.begin() + static_cast<size_t>(i) * cols_,
                              e_.begin() + static_cast<size_t>(i + 1) * cols_);
    }
    void set_row(int i, const std::vector<K>& v) {
        for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
    }
    void swap_rows(int i, int j) {
        for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }

    // Stack o below this.
    Mat vstack(const Mat& o) const {
        if (cols_ != o.cols_) throw Error(ErrorKind::DimensionMismatch, "vstack widths");
        Mat r(rows_ + o.rows_, cols_, zero_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (int i = 0; i < o.rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
        return r;
    }
    // Stack o to the right of this.
    Mat hstack(const Mat& o) const {
        if (rows_ != o.rows_) throw Error(ErrorKind::DimensionMismatch, "hstack heights");
        Mat r(rows_, cols_ + o.cols_, zero_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
            for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
        }
        return r;
    }
    Mat sub_cols(int from, int count) const {
        Mat r(rows_, count, zero_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < count; ++j) r.at(i, j) = at(i, from + j);
        return r;
    }
    Mat sub_rows(int from, int count) const {
        Mat r(count, cols_, zero_);
        for (int i = 0; i < count; ++i)
            for (int j = 0; j < cols_; ++j) r.at(i, j) = at(from + i, j);
        return r;
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i < rows_; ++i) {
            s += "[";
            for (int j = 0; j < cols_; ++j) {
                if (j) s += ", ";
                s += at(i, j).str();
            }
            s += "]\n";
        }
        return s;
    }

private:
    void require_same_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw Error(ErrorKind::DimensionMismatch, "matrix shapes differ");
    }

    int rows_, cols_;
    K zero_;
    std::vector<K> e_;
};

template <class K>
struct RrefResult {
    Mat<K> mat;
    std::vector<int> pivots;  // pivot columns, strictly increasing
};

// Generic Gauss-Jordan reduced row echelon form; used directly for F_p.
template <class K>
RrefResult<K> rref_gauss(Mat<K> m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pr = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        m.swap_rows(r, pr);
        K inv = m.at(r, c).inv();
        for (int j = c; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            K f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

inline RrefResult<Fp> rref(const Mat<Fp>& m) { return rref_gauss(m); }

// Fraction-free (Bareiss) elimination over Q: rows are first cleared to
// integers, the forward pass stays in Z with exact divisions, and only the
// final normalization reintroduces fractions. Keeps intermediate entry growth
// polynomial instead of the naive exponential blowup on long resolutions.
inline RrefResult<Rat> rref(const Mat<Rat>& input) {
    const int rows = input.rows(), cols = input.cols();
    std::vector<std::vector<mpz_class>> z(rows, std::vector<mpz_class>(cols));
    for (int i = 0; i < rows; ++i) {
        mpz_class lcm = 1;
        for (int j = 0; j < cols; ++j) lcm = ::lcm(lcm, input.at(i, j).v.get_den());
        for (int j = 0; j < cols; ++j) {
            mpq_class q = input.at(i, j).v * lcm;
            z[i][j] = q.get_num();
        }
    }

    std::vector<int> pivots;
    mpz_class prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (z[i][c] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(z[r], z[pr]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                mpz_class num = z[r][c] * z[i][j] - z[i][c] * z[r][j];
                mpz_class q, rem;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                if (rem != 0) throw std::logic_error("Bareiss exact division failed");
                z[i][j] = q;
            }
            z[i][c] = 0;
        }
        prev = z[r][c];
        pivots.push_back(c);
        ++r;
    }

    // Normalization: rational back-substitution from the integer echelon form.
    Mat<Rat> out(rows, cols, Rat());
    for (int i = 0; i < static_cast<int>(pivots.size()); ++i) {
        mpq_class inv(1);
        inv /= mpq_class(z[i][pivots[i]]);
        for (int j = 0; j < cols; ++j) out.at(i, j) = Rat(mpq_class(mpq_class(z[i][j]) * inv));
    }
    for (int i = static_cast<int>(pivots.size()) - 1; i >= 0; --i) {
        for (int k = 0; k < i; ++k) {
            Rat f = out.at(k, pivots[i]);
            if (f.is_zero()) continue;
            for (int j = pivots[i]; j < cols; ++j)
                out.at(k, j) = out.at(k, j) - f * out.at(i, j);
        }
    }
    return {std::move(out), std::move(pivots)};
}

template <class K>
int rank(const Mat<K>& m) {
    return static_cast<int>(rref(m).pivots.size());
}

// Basis of the right null space {x : m*x = 0}, returned as columns.
template <class K>
Mat<K> kernel_basis(const Mat<K>& m) {
    RrefResult<K> r = rref(m);
    const int n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (int c : r.pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Mat<K> basis(n, static_cast<int>(free_cols.size()), m.zero_proto());
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        basis.at(fc, static_cast<int>(k)) = m.zero_proto().one();
        for (size_t pi = 0; pi < r.pivots.size(); ++pi)
            basis.at(r.pivots[pi], static_cast<int>(k)) = -r.mat.at(static_cast<int>(pi), fc);
    }
    return basis;
}

// Basis of {v : v*m = 0} returned as rows (kernel of a module map in the
// row-vector convention).
template <class K>
Mat<K> row_kernel(const Mat<K>& m) {
    return kernel_basis(m.transpose()).transpose();
}

// Solve a*x = b columnwise; nullopt exactly when some column of b is outside
// the column space of a.
template <class K>
std::optional<Mat<K>> solve(const Mat<K>& a, const Mat<K>& b) {
    if (a.rows() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "solve row counts");
    RrefResult<K> r = rref(a.hstack(b));
    for (int c : r.pivots)
        if (c >= a.cols()) return std::nullopt;
    Mat<K> x(a.cols(), b.cols(), a.zero_proto());
    for (size_t pi = 0; pi < r.pivots.size(); ++pi)
        for (int j = 0; j < b.cols(); ++j)
            x.at(r.pivots[pi], j) = r.mat.at(static_cast<int>(pi), a.cols() + j);
    return x;
}

// Solve x*a = b in the row convention.
template <class K>
std::optional<Mat<K>> solve_left(const Mat<K>& a, const Mat<K>& b) {
    auto xt = solve(a.transpose(), b.transpose());
    if (!xt) return std::nullopt;
    return xt->transpose();
}

template <class K>
bool is_invertible(const Mat<K>& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

template <class K>
Mat<K> inverse(const Mat<K>& m) {
    auto x = solve(m, Mat<K>::identity(m.rows(), m.zero_proto()));
    if (!x || m.rows() != m.cols() || rank(m) != m.rows())
        throw Error(ErrorKind::Validation, "matrix not invertible");
    return *x;
}

// ---------------------------------------------------------------------------
// Row spaces as canonical subspaces of k^n: the RREF with zero rows dropped.
// Two subspaces are equal iff their canonical matrices compare equal bitwise.
// ---------------------------------------------------------------------------

template <class K>
struct RowSpace {
    Mat<K> basis;              // RREF rows, no zero rows
    std::vector<int> pivots;   // pivot column of each basis row

    int dim() const { return basis.rows(); }
    int ambient() const { return basis.cols(); }
    bool operator==(const RowSpace& o) const { return basis == o.basis; }
};

template <class K>
RowSpace<K> row_space(const Mat<K>& m) {
    RrefResult<K> r = rref(m);
    RowSpace<K> s;
    s.pivots = r.pivots;
    s.basis = r.mat.sub_rows(0, static_cast<int>(r.pivots.size()));
    return s;
}

// Reduce v against the RREF basis; the result has zeros in all pivot columns.
template <class K>
std::vector<K> reduce_row(const RowSpace<K>& s, std::vector<K> v) {
    for (int i = 0; i < s.dim(); ++i) {
        const K& c = v[s.pivots[i]];
        if (c.is_zero()) continue;
        K f = c;
        for (int j = 0; j < s.ambient(); ++j) v[j] = v[j] - f * s.basis.at(i, j);
    }
    return v;
}

template <class K>
bool contains_row(const RowSpace<K>& s, const std::vector<K>& v) {
    for (const K& x : reduce_row(s, v))
        if (!x.is_zero()) return false;
    return true;
}

template <class K>
bool contains_rows(const RowSpace<K>& s, const Mat<K>& m) {
    for (int i = 0; i < m.rows(); ++i)
        if (!contains_row(s, m.row(i))) return false;
    return true;
}

// Coordinates of v in the basis of s (requires membership): with RREF rows the
// coefficient of row i is just the entry of v at the i-th pivot column.
template <class K>
std::vector<K> coords_in(const RowSpace<K>& s, const std::vector<K>& v) {
    std::vector<K> c;
    c.reserve(s.dim());
    for (int i = 0; i < s.dim(); ++i) c.push_back(v[s.pivots[i]]);
    return c;
}

template <class K>
RowSpace<K> sum_spaces(const RowSpace<K>& a, const RowSpace<K>& b) {
    return row_space(a.basis.vstack(b.basis));
}

}  // namespace homcat
