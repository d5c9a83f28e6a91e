#ifndef VLKB_LINALG_HPP
#define VLKB_LINALG_HPP

#include "vlkb/field.hpp"

#include <map>
#include <vector>

namespace vlkb {
namespace linalg {

// Dense matrix; entries[i][j] is the coefficient of target basis vector j in
// the image of source basis vector i, so composition reads left to right:
// M(first steps) * M(later steps).
template <class K>
struct Matrix {
    std::vector<std::vector<K>> entries;

    int rows() const { return static_cast<int>(entries.size()); }
    int cols() const { return entries.empty() ? 0 : static_cast<int>(entries[0].size()); }

    static Matrix identity(int d, const K& zero, const K& one) {
        Matrix m;
        m.entries.assign(d, std::vector<K>(d, zero));
        for (int i = 0; i < d; ++i) m.entries[i][i] = one;
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        Matrix r;
        r.entries.assign(a.rows(), std::vector<K>(b.cols(), a.entries[0][0] - a.entries[0][0]));
        for (int i = 0; i < a.rows(); ++i)
            for (int k = 0; k < a.cols(); ++k) {
                const K& x = a.entries[i][k];
                if (coefIsZero(x)) continue;
                for (int j = 0; j < b.cols(); ++j) r.entries[i][j] += x * b.entries[k][j];
            }
        return r;
    }

    bool operator==(const Matrix& o) const { return entries == o.entries; }
};

using SparseRow = std::map<int, FieldElement>;

struct KernelResult {
    int rank = 0;
    std::vector<int> pivotCols;    // matrix pivot columns, ascending
    std::vector<int> basisPivots;  // leading column of each kernel basis vector
    std::vector<std::vector<FieldElement>> basis; // dense, length = ncols
};

// Exact kernel of the matrix whose rows are given sparsely over columns
// 0..ncols-1. Rows are cleared of denominators and eliminated fraction-free;
// the kernel basis is returned in reduced echelon form, so each vector has
// coefficient 1 at its (lexicographically first) leading column and the other
// basis vectors vanish there.
KernelResult kernelBasis(const GeneratorSet& gs, std::vector<SparseRow> rows, int ncols);

int rankOf(const GeneratorSet& gs, std::vector<SparseRow> rows, int ncols);

// Exact rank over the rationals (ordinary Gaussian elimination).
int ratRank(std::vector<std::vector<Rat>> m);

} // namespace linalg
} // namespace vlkb

#endif
