#include "pnchow/matrix.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace pnchow {

QMatrix::QMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
    e_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
}

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    QMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument("ragged matrix rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

QMatrix QMatrix::transpose() const {
    QMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

bool QMatrix::is_alternating() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i) {
        if (at(i, i) != 0) return false;
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != -at(j, i)) return false;
    }
    return true;
}

bool QMatrix::is_zero() const {
    for (const Rat& x : e_)
        if (x != 0) return false;
    return true;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch in product");
    QMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            if (a.at(i, k) == 0) continue;
            for (int j = 0; j < b.cols_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

QMatrix operator*(const Rat& s, const QMatrix& a) {
    QMatrix r(a.rows_, a.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) r.at(i, j) = s * a.at(i, j);
    return r;
}

std::string QMatrix::str() const {
    std::ostringstream out;
    for (int i = 0; i < rows_; ++i) {
        out << (i ? "\n[" : "[");
        for (int j = 0; j < cols_; ++j) out << (j ? " " : "") << at(i, j).get_str();
        out << "]";
    }
    return out.str();
}

namespace {

// row echelon reduction; returns pivot columns
std::vector<int> echelonize(QMatrix& a) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < a.rows(); ++i)
            if (a.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(row, j));
        Rat lead = a.at(row, col);
        for (int j = col; j < a.cols(); ++j) a.at(row, j) /= lead;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == row || a.at(i, col) == 0) continue;
            Rat f = a.at(i, col);
            for (int j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int rank(const QMatrix& m) {
    QMatrix a = m;
    return static_cast<int>(echelonize(a).size());
}

std::vector<std::vector<Rat>> kernel_basis(const QMatrix& m) {
    QMatrix a = m;
    std::vector<int> pivots = echelonize(a);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<Rat> v(static_cast<std::size_t>(m.cols()));
        v[static_cast<std::size_t>(free)] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = -a.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rat det(const QMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    QMatrix a = m;
    Rat d = 1;
    for (int col = 0; col < a.cols(); ++col) {
        int piv = -1;
        for (int i = col; i < a.rows(); ++i)
            if (a.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != col) {
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(col, j));
            d = -d;
        }
        Rat lead = a.at(col, col);
        d *= lead;
        for (int i = col + 1; i < a.rows(); ++i) {
            if (a.at(i, col) == 0) continue;
            Rat f = a.at(i, col) / lead;
            for (int j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(col, j);
        }
    }
    return d;
}

namespace detail {

namespace {
Rat pf_rec(const QMatrix& m, std::vector<int> idx) {
    if (idx.empty()) return 1;
    Rat acc = 0;
    int i0 = idx[0];
    for (std::size_t t = 1; t < idx.size(); ++t) {
        const Rat& a = m.at(i0, idx[t]);
        if (a == 0) continue;
        std::vector<int> rest;
        rest.reserve(idx.size() - 2);
        for (std::size_t s = 1; s < idx.size(); ++s)
            if (s != t) rest.push_back(idx[s]);
        Rat term = a * pf_rec(m, std::move(rest));
        if (t % 2 == 0) term = -term;
        acc += term;
    }
    return acc;
}
}  // namespace

Rat pfaffian_expansion(const QMatrix& m) {
    std::vector<int> idx(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) idx[static_cast<std::size_t>(i)] = i;
    return pf_rec(m, std::move(idx));
}

Rat pfaffian_elimination(const QMatrix& m) {
    QMatrix a = m;
    const int sz = a.rows();
    Rat result = 1;
    for (int i = 0; i < sz; i += 2) {
        int piv = -1;
        for (int j = i + 1; j < sz; ++j)
            if (a.at(i, j) != 0) {
                piv = j;
                break;
            }
        if (piv < 0) return 0;
        if (piv != i + 1) {
            // simultaneous row and column swap is a congruence of sign -1
            for (int j = 0; j < sz; ++j) std::swap(a.at(piv, j), a.at(i + 1, j));
            for (int j = 0; j < sz; ++j) std::swap(a.at(j, piv), a.at(j, i + 1));
            result = -result;
        }
        Rat p = a.at(i, i + 1);
        result *= p;
        for (int r = i + 2; r < sz; ++r) {
            // congruences with unit determinant clearing rows/cols i, i+1
            Rat f1 = a.at(i, r) / p;
            if (f1 != 0) {
                for (int j = 0; j < sz; ++j) a.at(r, j) -= f1 * a.at(i + 1, j);
                for (int j = 0; j < sz; ++j) a.at(j, r) -= f1 * a.at(j, i + 1);
            }
            Rat f2 = a.at(i + 1, r) / p;
            if (f2 != 0) {
                for (int j = 0; j < sz; ++j) a.at(r, j) += f2 * a.at(i, j);
                for (int j = 0; j < sz; ++j) a.at(j, r) += f2 * a.at(j, i);
            }
        }
    }
    return result;
}

}  // namespace detail

Rat pfaffian(const QMatrix& m) {
    if (m.rows() != m.cols() || !m.is_alternating())
        throw not_alternating_error("pfaffian needs an alternating matrix");
    if (m.rows() % 2 != 0) throw odd_size_error("pfaffian needs even size");
    return m.rows() <= 6 ? detail::pfaffian_expansion(m)
                         : detail::pfaffian_elimination(m);
}

namespace {

Rat entry_from_json(const nlohmann::json& v) {
    if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
    if (v.is_string()) {
        Rat r;
        if (mpq_set_str(r.get_mpq_t(), v.get<std::string>().c_str(), 10) != 0)
            throw std::invalid_argument("bad rational entry: " + v.get<std::string>());
        if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
            throw std::invalid_argument("zero denominator in matrix entry");
        r.canonicalize();
        return r;
    }
    throw std::invalid_argument("matrix entries must be integers or \"p/q\" strings");
}

}  // namespace

QMatrix parse_matrix_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("matrix file must hold a non-empty array of rows");
    std::vector<std::vector<Rat>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw std::invalid_argument("matrix rows must be arrays");
        std::vector<Rat> r;
        for (const auto& v : row) r.push_back(entry_from_json(v));
        rows.push_back(std::move(r));
    }
    return QMatrix::from_rows(rows);
}

QMatrix read_matrix_json(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix_json(buf.str());
}

}  // namespace pnchow
