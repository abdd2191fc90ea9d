#pragma once

#include "conjcount/partition.hpp"
#include "conjcount/rational.hpp"

#include <map>
#include <vector>

namespace conjcount {

/// Exact rational matrix. Rectangular allowed; minors require valid index
/// sets.
class RatMatrix {
  public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows, std::vector<Rat>(cols, Rat(0))) {}
    explicit RatMatrix(std::vector<std::vector<Rat>> rows)
        : rows_(static_cast<int>(rows.size())),
          cols_(rows.empty() ? 0 : static_cast<int>(rows[0].size())),
          a_(std::move(rows)) {
        for (const auto& r : a_)
            if (static_cast<int>(r.size()) != cols_)
                throw std::invalid_argument("RatMatrix: ragged rows");
    }

    static RatMatrix identity(int n) {
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.a_[i][i] = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int r, int c) { return a_[r][c]; }
    const Rat& at(int r, int c) const { return a_[r][c]; }

    RatMatrix submatrix(const std::vector<int>& I, const std::vector<int>& J) const {
        RatMatrix m(static_cast<int>(I.size()), static_cast<int>(J.size()));
        for (size_t r = 0; r < I.size(); ++r) {
            if (I[r] < 0 || I[r] >= rows_) throw std::invalid_argument("submatrix: row index");
            for (size_t c = 0; c < J.size(); ++c) {
                if (J[c] < 0 || J[c] >= cols_) throw std::invalid_argument("submatrix: col index");
                m.a_[r][c] = a_[I[r]][J[c]];
            }
        }
        return m;
    }

    Rat det() const {
        if (rows_ != cols_) throw std::invalid_argument("det: not square");
        auto a = a_;
        Rat out(1);
        for (int col = 0; col < cols_; ++col) {
            int piv = col;
            while (piv < rows_ && a[piv][col] == 0) ++piv;
            if (piv == rows_) return Rat(0);
            if (piv != col) {
                std::swap(a[piv], a[col]);
                out = -out;
            }
            out *= a[col][col];
            for (int r = col + 1; r < rows_; ++r) {
                if (a[r][col] == 0) continue;
                Rat f = a[r][col] / a[col][col];
                for (int c = col; c < cols_; ++c) a[r][c] -= f * a[col][c];
            }
        }
        return out;
    }

    Rat minor_det(const std::vector<int>& I, const std::vector<int>& J) const {
        return submatrix(I, J).det();
    }

    int rank() const {
        auto a = a_;
        int rk = 0;
        for (int col = 0; col < cols_ && rk < rows_; ++col) {
            int piv = rk;
            while (piv < rows_ && a[piv][col] == 0) ++piv;
            if (piv == rows_) continue;
            std::swap(a[piv], a[rk]);
            for (int r = rk + 1; r < rows_; ++r) {
                if (a[r][col] == 0) continue;
                Rat f = a[r][col] / a[rk][col];
                for (int c = col; c < cols_; ++c) a[r][c] -= f * a[rk][c];
            }
            ++rk;
        }
        return rk;
    }

    RatMatrix inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("inverse: not square");
        auto a = a_;
        RatMatrix inv = identity(rows_);
        for (int col = 0; col < cols_; ++col) {
            int piv = col;
            while (piv < rows_ && a[piv][col] == 0) ++piv;
            if (piv == rows_) throw std::invalid_argument("inverse: singular matrix");
            std::swap(a[piv], a[col]);
            std::swap(inv.a_[piv], inv.a_[col]);
            Rat d = a[col][col];
            for (int c = 0; c < cols_; ++c) {
                a[col][c] /= d;
                inv.a_[col][c] /= d;
            }
            for (int r = 0; r < rows_; ++r) {
                if (r == col || a[r][col] == 0) continue;
                Rat f = a[r][col];
                for (int c = 0; c < cols_; ++c) {
                    a[r][c] -= f * a[col][c];
                    inv.a_[r][c] -= f * inv.a_[col][c];
                }
            }
        }
        return inv;
    }

    friend RatMatrix operator*(const RatMatrix& x, const RatMatrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("matrix product: size mismatch");
        RatMatrix out(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                if (x.a_[i][k] == 0) continue;
                for (int j = 0; j < y.cols_; ++j) out.a_[i][j] += x.a_[i][k] * y.a_[k][j];
            }
        return out;
    }

    std::vector<Rat> apply(const std::vector<Rat>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("apply: size mismatch");
        std::vector<Rat> out(rows_, Rat(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (a_[i][j] != 0) out[i] += a_[i][j] * v[j];
        return out;
    }

    std::vector<Rat> apply_int(const std::vector<Int>& v) const {
        std::vector<Rat> rv(v.size());
        for (size_t i = 0; i < v.size(); ++i) rv[i] = Rat(v[i]);
        return apply(rv);
    }

    bool operator==(const RatMatrix& o) const { return a_ == o.a_; }

  private:
    int rows_, cols_;
    std::vector<std::vector<Rat>> a_;
};

/// All tau x tau minors over column sets J of the rows indexed by I: the
/// Plucker image of the span of those rows.
struct PluckerVector {
    int n = 0;   // columns are subsets of [0..n]
    int tau = 0; // subset size
    std::map<std::vector<int>, Rat> components;

    const Rat& at(const std::vector<int>& J) const {
        static const Rat zero(0);
        auto it = components.find(J);
        return it == components.end() ? zero : it->second;
    }
};

inline PluckerVector grass(const RatMatrix& A, const std::vector<int>& I) {
    int tau = static_cast<int>(I.size());
    if (tau < 1 || tau > A.cols() || tau > A.rows())
        throw std::invalid_argument("grass: invalid index set size");
    for (size_t i = 0; i + 1 < I.size(); ++i)
        if (I[i] >= I[i + 1]) throw std::invalid_argument("grass: indices must increase");
    PluckerVector out;
    out.n = A.cols() - 1;
    out.tau = tau;
    for (const auto& J : index_subsets(A.cols() - 1, tau))
        out.components[J] = A.minor_det(I, J);
    return out;
}

/// Cauchy-Binet: e_I component of A applied to the wedge of the columns of
/// an integer frame W, given W's minors. Returns sum_J det A_{I,J} det W_{J,*}.
inline Rat wedge_transform(const RatMatrix& A, const PluckerVector& w, const std::vector<int>& I) {
    if (w.n != A.cols() - 1 || static_cast<int>(I.size()) != w.tau)
        throw std::invalid_argument("wedge_transform: size mismatch");
    Rat out(0);
    for (const auto& [J, c] : w.components) {
        if (c == 0) continue;
        out += A.minor_det(I, J) * c;
    }
    return out;
}

} // namespace conjcount
