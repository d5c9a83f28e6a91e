#include "vlkb/linalg.hpp"

#include <algorithm>

namespace vlkb {
namespace linalg {

namespace {

using PolyRow = std::map<int, Poly>;

// Clears denominators of a sparse row, returning polynomial entries.
PolyRow clearRow(const GeneratorSet& gs, const SparseRow& row) {
    Poly common(gs.nvars(), 1);
    for (const auto& [j, x] : row) common = common * x.den();
    PolyRow out;
    for (const auto& [j, x] : row) {
        Poly scale = polyDivExact(common, x.den());
        Poly e = x.num() * scale;
        if (!e.isZero()) out.emplace(j, e);
    }
    return out;
}

// Strips the row's Laurent monomial content so Bareiss works with ordinary
// polynomials.
void normalizeRow(const GeneratorSet& gs, PolyRow& row) {
    if (row.empty()) return;
    Expo mins(gs.nvars(), 0);
    bool first = true;
    for (const auto& [j, p] : row) {
        Expo m = p.minExponents();
        if (first) { mins = m; first = false; continue; }
        for (int i = 0; i < gs.nvars(); ++i) mins[i] = std::min(mins[i], m[i]);
    }
    Expo shift(gs.nvars(), 0);
    bool any = false;
    for (int i = 0; i < gs.nvars(); ++i)
        if (gs.invertible(i) && mins[i] != 0) { shift[i] = -mins[i]; any = true; }
    if (!any) return;
    for (auto& [j, p] : row) p = p.shifted(shift);
}

// Divides the row by the gcd of its entries (integer content and polynomial
// part) to keep the fraction-free updates from blowing up.
void primitivizeRow(PolyRow& row) {
    if (row.empty()) return;
    Int ic = 0;
    for (const auto& [j, p] : row) {
        Rat c = p.content();
        Int cn = abs(c.get_num());
        mpz_gcd(ic.get_mpz_t(), ic.get_mpz_t(), cn.get_mpz_t());
        if (ic == 1) break;
    }
    Poly pg(row.begin()->second.nvars());
    for (const auto& [j, p] : row) {
        pg = polyGcd(pg, p);
        if (pg.isConstant()) break;
    }
    bool trivialPoly = pg.isConstant();
    if (ic == 1 && trivialPoly) return;
    for (auto& [j, p] : row) {
        if (!trivialPoly) p = polyDivExact(p, pg);
        if (ic != 1) p = p.scaled(Rat(1, ic));
    }
}

struct Elimination {
    std::vector<PolyRow> pivotRows; // echelon order
    std::vector<int> pivotCols;
};

// Fraction-free forward elimination (cross-multiplication with row content
// stripping), columns processed in ascending order.
Elimination eliminate(const GeneratorSet& gs, std::vector<SparseRow>&& rows, int ncols) {
    std::vector<PolyRow> work;
    work.reserve(rows.size());
    for (const auto& r : rows) {
        PolyRow pr = clearRow(gs, r);
        normalizeRow(gs, pr);
        primitivizeRow(pr);
        if (!pr.empty()) work.push_back(std::move(pr));
    }
    Elimination el;
    for (int col = 0; col < ncols && !work.empty(); ++col) {
        // First remaining row with a nonzero entry in this column.
        std::size_t pr = work.size();
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (work[i].count(col)) { pr = i; break; }
        }
        if (pr == work.size()) continue;
        PolyRow pivotRow = std::move(work[pr]);
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(pr));
        const Poly piv = pivotRow.at(col);
        for (auto& row : work) {
            auto it = row.find(col);
            if (it == row.end()) continue;
            Poly factor = it->second;
            row.erase(it);
            PolyRow next;
            // next = piv*row - factor*pivotRow
            for (auto& [j, p] : row) {
                Poly t = p * piv;
                auto pj = pivotRow.find(j);
                if (pj != pivotRow.end()) t -= factor * pj->second;
                if (!t.isZero()) next.emplace(j, std::move(t));
            }
            for (const auto& [j, p] : pivotRow) {
                if (j == col || row.count(j)) continue;
                Poly t = -(factor * p);
                if (!t.isZero()) next.emplace(j, std::move(t));
            }
            normalizeRow(gs, next);
            primitivizeRow(next);
            row = std::move(next);
        }
        std::erase_if(work, [](const PolyRow& r) { return r.empty(); });
        el.pivotRows.push_back(std::move(pivotRow));
        el.pivotCols.push_back(col);
    }
    return el;
}

} // namespace

KernelResult kernelBasis(const GeneratorSet& gs, std::vector<SparseRow> rows, int ncols) {
    Elimination el = eliminate(gs, std::move(rows), ncols);
    KernelResult res;
    res.rank = static_cast<int>(el.pivotCols.size());
    res.pivotCols = el.pivotCols;
    std::vector<int> freeCols;
    std::vector<bool> isPivot(static_cast<std::size_t>(ncols), false);
    for (int c : el.pivotCols) isPivot[static_cast<std::size_t>(c)] = true;
    for (int c = 0; c < ncols; ++c)
        if (!isPivot[static_cast<std::size_t>(c)]) freeCols.push_back(c);

    const FieldElement zero = FieldElement::zero(gs);
    const FieldElement one = FieldElement::one(gs);
    for (int f : freeCols) {
        std::vector<FieldElement> x(static_cast<std::size_t>(ncols), zero);
        x[static_cast<std::size_t>(f)] = one;
        // Echelon rows have increasing pivot columns; solve bottom-up.
        for (int i = res.rank - 1; i >= 0; --i) {
            const PolyRow& row = el.pivotRows[static_cast<std::size_t>(i)];
            int pc = el.pivotCols[static_cast<std::size_t>(i)];
            FieldElement acc = zero;
            for (const auto& [j, p] : row) {
                if (j == pc || x[static_cast<std::size_t>(j)].isZero()) continue;
                acc += FieldElement(gs, p, Poly(gs.nvars(), 1)) * x[static_cast<std::size_t>(j)];
            }
            if (!acc.isZero())
                x[static_cast<std::size_t>(pc)] =
                    -acc / FieldElement(gs, row.at(pc), Poly(gs.nvars(), 1));
        }
        res.basis.push_back(std::move(x));
    }
    // Reduce the kernel basis to its canonical echelon form: each vector has
    // coefficient 1 at its leading column and the other vectors vanish there.
    std::vector<int> lead(res.basis.size(), -1);
    for (std::size_t i = 0; i < res.basis.size(); ++i) {
        auto& vec = res.basis[i];
        int lc = -1;
        for (int c = 0; c < ncols; ++c) {
            bool taken = false;
            for (std::size_t t = 0; t < i; ++t)
                if (lead[t] == c) taken = true;
            if (!taken && !vec[static_cast<std::size_t>(c)].isZero()) { lc = c; break; }
        }
        if (lc < 0) continue; // dependent vector cannot occur for a kernel basis
        FieldElement inv = vec[static_cast<std::size_t>(lc)].inverse();
        for (auto& xj : vec) xj *= inv;
        lead[i] = lc;
        for (std::size_t t = 0; t < res.basis.size(); ++t) {
            if (t == i) continue;
            FieldElement c = res.basis[t][static_cast<std::size_t>(lc)];
            if (c.isZero()) continue;
            for (int j = 0; j < ncols; ++j) {
                FieldElement sub = c * vec[static_cast<std::size_t>(j)];
                if (!sub.isZero()) res.basis[t][static_cast<std::size_t>(j)] -= sub;
            }
        }
    }
    // Sort by leading column for a deterministic presentation.
    std::vector<std::size_t> order(res.basis.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return lead[a] < lead[b];
    });
    std::vector<std::vector<FieldElement>> sorted;
    std::vector<int> sortedLead;
    for (std::size_t i : order) {
        sorted.push_back(std::move(res.basis[i]));
        sortedLead.push_back(lead[i]);
    }
    res.basis = std::move(sorted);
    res.basisPivots = std::move(sortedLead);
    return res;
}

int rankOf(const GeneratorSet& gs, std::vector<SparseRow> rows, int ncols) {
    return static_cast<int>(eliminate(gs, std::move(rows), ncols).pivotCols.size());
}

int ratRank(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    std::size_t nrows = m.size(), ncols = m[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        std::size_t sel = nrows;
        for (std::size_t i = row; i < nrows; ++i)
            if (m[i][col] != 0) { sel = i; break; }
        if (sel == nrows) continue;
        std::swap(m[row], m[sel]);
        Rat inv = Rat(1) / m[row][col];
        for (std::size_t j = col; j < ncols; ++j) m[row][j] *= inv;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (std::size_t j = col; j < ncols; ++j) m[i][j] -= f * m[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace linalg
} // namespace vlkb
