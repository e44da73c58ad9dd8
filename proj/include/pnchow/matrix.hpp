#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pnchow/errors.hpp"
#include "pnchow/numeric.hpp"

namespace pnchow {

// Dense matrix with exact rational entries.
class QMatrix {
  public:
    QMatrix(int rows, int cols);
    static QMatrix identity(int n);
    static QMatrix from_rows(const std::vector<std::vector<Rat>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const {
        return e_[static_cast<std::size_t>(i) * cols_ + j];
    }

    QMatrix transpose() const;
    bool is_alternating() const;
    bool is_zero() const;

    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator*(const Rat& s, const QMatrix& a);
    friend bool operator==(const QMatrix&, const QMatrix&) = default;

    std::string str() const;

  private:
    int rows_, cols_;
    std::vector<Rat> e_;
};

int rank(const QMatrix& m);

// basis of the right kernel, size cols - rank
std::vector<std::vector<Rat>> kernel_basis(const QMatrix& m);

Rat det(const QMatrix& m);

// Pfaffian of an alternating matrix of even size; its square is the
// determinant.  Combinatorial expansion for size <= 6, skew-symmetric
// elimination above; the expansion serves as an oracle for the other path.
Rat pfaffian(const QMatrix& m);

namespace detail {
Rat pfaffian_expansion(const QMatrix& m);
Rat pfaffian_elimination(const QMatrix& m);
}  // namespace detail

// matrix file format: JSON array of rows, entries integers or "p/q" strings
QMatrix read_matrix_json(std::istream& in);
QMatrix parse_matrix_json(const std::string& text);

}  // namespace pnchow
