#include "young/matrix.hpp"

#include <algorithm>

#include "young/errors.hpp"

namespace young {

namespace {

void require_field(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw FieldMismatch("matrix fields differ: " + a.field().name() + " vs " + b.field().name());
}

// Dense accumulator with a touched-row list, reused across columns.
class Accumulator {
public:
    Accumulator(int n, const FieldDesc& f) : vals_(n, zero(f)), used_(n, false) {}
    void add(int i, const Scalar& v) {
        if (!used_[i]) {
            used_[i] = true;
            touched_.push_back(i);
            vals_[i] = v;
        } else {
            vals_[i] += v;
        }
    }
    SparseColumn take() {
        std::sort(touched_.begin(), touched_.end());
        SparseColumn c;
        for (int i : touched_) {
            if (!vals_[i].is_zero()) c.emplace_back(i, std::move(vals_[i]));
            used_[i] = false;
        }
        touched_.clear();
        return c;
    }

private:
    std::vector<Scalar> vals_;
    std::vector<bool> used_;
    std::vector<int> touched_;
};

}  // namespace

Matrix::Matrix(int rows, int cols, FieldDesc field) : rows_(rows), field_(field), cols_(cols) {
    if (rows < 0 || cols < 0) throw PreconditionError("negative matrix dimension");
}

Matrix Matrix::identity(int n, FieldDesc field) {
    Matrix m(n, n, field);
    for (int j = 0; j < n; ++j) m.cols_[j].emplace_back(j, one(field));
    return m;
}

Matrix Matrix::from_dense(const std::vector<std::vector<Scalar>>& rows, FieldDesc field) {
    int nr = static_cast<int>(rows.size());
    int nc = nr ? static_cast<int>(rows[0].size()) : 0;
    Matrix m(nr, nc, field);
    for (int i = 0; i < nr; ++i) {
        if (static_cast<int>(rows[i].size()) != nc) throw PreconditionError("ragged dense matrix");
        for (int j = 0; j < nc; ++j) {
            if (rows[i][j].field() != field) throw FieldMismatch("dense entry outside the matrix field");
            if (!rows[i][j].is_zero()) m.cols_[j].emplace_back(i, rows[i][j]);
        }
    }
    return m;
}

Matrix Matrix::from_rationals(const std::vector<std::vector<Rational>>& rows) {
    std::vector<std::vector<Scalar>> s;
    for (const auto& r : rows) s.emplace_back(r.begin(), r.end());
    return from_dense(s, FieldDesc::rational());
}

Matrix Matrix::diagonal(const std::vector<Scalar>& d, FieldDesc field) {
    int n = static_cast<int>(d.size());
    Matrix m(n, n, field);
    for (int j = 0; j < n; ++j) m.set(j, j, d[j]);
    return m;
}

void Matrix::set_column(int j, SparseColumn c) {
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k].first < 0 || c[k].first >= rows_) throw PreconditionError("row index out of range");
        if (k && c[k].first <= c[k - 1].first) throw PreconditionError("sparse column rows must ascend");
        if (c[k].second.field() != field_) throw FieldMismatch("column entry outside the matrix field");
    }
    std::erase_if(c, [](const auto& e) { return e.second.is_zero(); });
    cols_.at(j) = std::move(c);
}

Scalar Matrix::at(int i, int j) const {
    const auto& c = cols_.at(j);
    auto it = std::lower_bound(c.begin(), c.end(), i, [](const auto& e, int r) { return e.first < r; });
    return it != c.end() && it->first == i ? it->second : zero(field_);
}

void Matrix::set(int i, int j, const Scalar& v) {
    if (i < 0 || i >= rows_) throw PreconditionError("row index out of range");
    if (v.field() != field_) throw FieldMismatch("entry outside the matrix field");
    auto& c = cols_.at(j);
    auto it = std::lower_bound(c.begin(), c.end(), i, [](const auto& e, int r) { return e.first < r; });
    bool present = it != c.end() && it->first == i;
    if (v.is_zero()) {
        if (present) c.erase(it);
    } else if (present) {
        it->second = v;
    } else {
        c.insert(it, {i, v});
    }
}

std::size_t Matrix::nonzeros() const {
    std::size_t s = 0;
    for (const auto& c : cols_) s += c.size();
    return s;
}

std::vector<std::vector<Scalar>> Matrix::dense() const {
    std::vector<std::vector<Scalar>> d(rows_, std::vector<Scalar>(cols(), zero(field_)));
    for (int j = 0; j < cols(); ++j)
        for (const auto& [i, v] : cols_[j]) d[i][j] = v;
    return d;
}

Matrix Matrix::transposed() const {
    Matrix t(cols(), rows_, field_);
    for (int j = 0; j < cols(); ++j)
        for (const auto& [i, v] : cols_[j]) t.cols_[i].emplace_back(j, v);
    return t;
}

Matrix Matrix::permuted(const std::vector<int>& order) const {
    if (rows_ != cols() || static_cast<int>(order.size()) != rows_) throw PreconditionError("permutation does not match matrix");
    std::vector<int> where(order.size(), -1);
    for (std::size_t a = 0; a < order.size(); ++a) {
        if (order[a] < 0 || order[a] >= rows_ || where[order[a]] != -1) throw PreconditionError("invalid index permutation");
        where[order[a]] = static_cast<int>(a);
    }
    Matrix p(rows_, rows_, field_);
    for (int b = 0; b < rows_; ++b) {
        SparseColumn c;
        for (const auto& [i, v] : cols_[order[b]]) c.emplace_back(where[i], v);
        std::sort(c.begin(), c.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        p.cols_[b] = std::move(c);
    }
    if (!basis.empty())
        for (int a : order) p.basis.push_back(basis[a]);
    return p;
}

Matrix Matrix::map(const std::function<Scalar(const Scalar&)>& f, FieldDesc target) const {
    Matrix m(rows_, cols(), target);
    for (int j = 0; j < cols(); ++j) {
        SparseColumn c;
        for (const auto& [i, v] : cols_[j]) c.emplace_back(i, f(v));
        m.set_column(j, std::move(c));
    }
    m.basis = basis;
    return m;
}

bool Matrix::is_upper_triangular() const {
    for (int j = 0; j < cols(); ++j)
        if (!cols_[j].empty() && cols_[j].back().first > j) return false;
    return true;
}

bool Matrix::is_zero() const { return nonzeros() == 0; }

bool Matrix::is_identity() const {
    if (rows_ != cols()) return false;
    for (int j = 0; j < cols(); ++j)
        if (cols_[j].size() != 1 || cols_[j][0].first != j || !cols_[j][0].second.is_one()) return false;
    return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols() != b.cols() || a.field_ != b.field_) return false;
    for (int j = 0; j < a.cols(); ++j) {
        const auto& x = a.cols_[j];
        const auto& y = b.cols_[j];
        if (x.size() != y.size()) return false;
        for (std::size_t k = 0; k < x.size(); ++k)
            if (x[k].first != y[k].first || x[k].second != y[k].second) return false;
    }
    return true;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    require_field(a, b);
    if (a.cols() != b.rows()) throw PreconditionError("matrix dimensions do not match for multiplication");
    Matrix c(a.rows(), b.cols(), a.field());
    Accumulator acc(a.rows(), a.field());
    for (int j = 0; j < b.cols(); ++j) {
        for (const auto& [k, bv] : b.column(j))
            for (const auto& [i, av] : a.column(k)) acc.add(i, av * bv);
        c.set_column(j, acc.take());
    }
    return c;
}

SparseColumn apply(const Matrix& a, const SparseColumn& v) {
    Accumulator acc(a.rows(), a.field());
    for (const auto& [k, x] : v) {
        if (k < 0 || k >= a.cols()) throw PreconditionError("vector index out of range");
        for (const auto& [i, av] : a.column(k)) acc.add(i, av * x);
    }
    return acc.take();
}

namespace {

Matrix combine(const Matrix& a, const Matrix& b, bool subtract) {
    require_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw PreconditionError("matrix dimensions differ");
    Matrix c(a.rows(), a.cols(), a.field());
    for (int j = 0; j < a.cols(); ++j) {
        SparseColumn out;
        const auto& x = a.column(j);
        const auto& y = b.column(j);
        std::size_t p = 0, q = 0;
        while (p < x.size() || q < y.size()) {
            if (q == y.size() || (p < x.size() && x[p].first < y[q].first)) {
                out.push_back(x[p++]);
            } else if (p == x.size() || y[q].first < x[p].first) {
                out.emplace_back(y[q].first, subtract ? -y[q].second : y[q].second);
                ++q;
            } else {
                Scalar v = subtract ? x[p].second - y[q].second : x[p].second + y[q].second;
                if (!v.is_zero()) out.emplace_back(x[p].first, std::move(v));
                ++p;
                ++q;
            }
        }
        c.set_column(j, std::move(out));
    }
    return c;
}

}  // namespace

Matrix add(const Matrix& a, const Matrix& b) { return combine(a, b, false); }
Matrix sub(const Matrix& a, const Matrix& b) { return combine(a, b, true); }

Matrix scale(const Matrix& a, const Scalar& s) {
    if (s.field() != a.field()) throw FieldMismatch("scalar outside the matrix field");
    return a.map([&](const Scalar& v) { return v * s; }, a.field());
}

Matrix triangular_inverse(const Matrix& a) {
    const int n = a.rows();
    if (n != a.cols()) throw PreconditionError("triangular_inverse needs a square matrix");
    if (!a.is_upper_triangular()) throw PreconditionError("matrix is not upper triangular");
    std::vector<Scalar> inv_diag(n);
    for (int j = 0; j < n; ++j) {
        Scalar d = a.at(j, j);
        if (d.is_zero()) throw DivisionByZero("zero on the diagonal of a triangular matrix");
        inv_diag[j] = d.inverse();
    }
    // Row-major copy of the strictly upper part for back substitution.
    std::vector<SparseColumn> row(n);
    for (int j = 0; j < n; ++j)
        for (const auto& [i, v] : a.column(j))
            if (i < j) row[i].emplace_back(j, v);
    Matrix inv(n, n, a.field());
    std::vector<Scalar> x(n, zero(a.field()));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i <= j; ++i) x[i] = zero(a.field());
        x[j] = inv_diag[j];
        for (int i = j - 1; i >= 0; --i) {
            Scalar s = zero(a.field());
            for (const auto& [k, v] : row[i]) {
                if (k > j) break;
                if (!x[k].is_zero()) s += v * x[k];
            }
            x[i] = s.is_zero() ? s : -(s * inv_diag[i]);
        }
        SparseColumn c;
        for (int i = 0; i <= j; ++i)
            if (!x[i].is_zero()) c.emplace_back(i, x[i]);
        inv.set_column(j, std::move(c));
    }
    return inv;
}

Matrix tensor_product(const Matrix& a, const Matrix& b) {
    require_field(a, b);
    Matrix c(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
    for (int ja = 0; ja < a.cols(); ++ja)
        for (int jb = 0; jb < b.cols(); ++jb) {
            SparseColumn out;
            for (const auto& [ia, va] : a.column(ja))
                for (const auto& [ib, vb] : b.column(jb)) out.emplace_back(ia * b.rows() + ib, va * vb);
            c.set_column(ja * b.cols() + jb, std::move(out));
        }
    return c;
}

Matrix direct_sum(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) return Matrix(0, 0, FieldDesc::rational());
    int nr = 0, nc = 0;
    for (const auto& m : blocks) {
        require_field(m, blocks.front());
        nr += m.rows();
        nc += m.cols();
    }
    Matrix s(nr, nc, blocks.front().field());
    int r0 = 0, c0 = 0;
    for (const auto& m : blocks) {
        for (int j = 0; j < m.cols(); ++j) {
            SparseColumn out;
            for (const auto& [i, v] : m.column(j)) out.emplace_back(r0 + i, v);
            s.set_column(c0 + j, std::move(out));
        }
        r0 += m.rows();
        c0 += m.cols();
    }
    return s;
}

}  // namespace young
