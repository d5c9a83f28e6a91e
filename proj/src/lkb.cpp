#include "vlkb/lkb.hpp"

#include <algorithm>
#include <sstream>

namespace vlkb {
namespace lkb {

namespace {

std::string tensorName(const std::vector<int>& k) {
    std::ostringstream out;
    out << "m[";
    for (std::size_t i = 0; i < k.size(); ++i) out << (i ? "," : "") << k[i];
    out << "]";
    return out.str();
}

} // namespace

std::string LkbSpace::basisString(int i) const {
    std::ostringstream out;
    bool first = true;
    const auto& vec = basis[static_cast<std::size_t>(i)];
    for (std::size_t c = 0; c < vec.size(); ++c) {
        if (vec[c].isZero()) continue;
        std::string coef = vec[c].str();
        if (first) {
            if (coef == "1") out << tensorName(slice[c]);
            else if (coef == "-1") out << "-" << tensorName(slice[c]);
            else out << "(" << coef << ")*" << tensorName(slice[c]);
            first = false;
            continue;
        }
        if (coef == "1") out << " + " << tensorName(slice[c]);
        else if (coef == "-1") out << " - " << tensorName(slice[c]);
        else if (!coef.empty() && coef[0] == '-' && coef.find_first_of("+-", 1) == std::string::npos &&
                 coef.find('/') == std::string::npos)
            out << " - " << (coef.substr(1) == "1" ? "" : coef.substr(1) + "*") << tensorName(slice[c]);
        else out << " + (" << coef << ")*" << tensorName(slice[c]);
    }
    if (first) out << "0";
    return out.str();
}

LkbSpace lkbBasis(int n, int l, const std::vector<int>& colors) {
    if (static_cast<int>(colors.size()) != n)
        throw std::invalid_argument("lkbBasis: color count mismatch");
    int maxColor = *std::max_element(colors.begin(), colors.end());
    int minColor = *std::min_element(colors.begin(), colors.end());
    if (minColor < 1) throw std::invalid_argument("lkbBasis: colors are 1-based");
    LkbSpace space;
    space.n = n;
    space.l = l;
    space.colors = colors;
    space.gs = GeneratorSet::quantum(maxColor);
    auto hw = qgroup::highestWeightBasis(space.gs, n, l, colors);
    space.slice = std::move(hw.slice);
    space.pivots = std::move(hw.pivots);
    space.basis = std::move(hw.basis);
    return space;
}

namespace {

// Expresses a dense slice vector in the echelonized basis; the residual must
// vanish exactly.
template <class K>
std::vector<K> projectOntoBasis(const std::vector<std::vector<K>>& basis,
                                const std::vector<int>& pivots, std::vector<K> vec,
                                const K& zero) {
    std::vector<K> coords(basis.size(), zero);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const K c = vec[static_cast<std::size_t>(pivots[i])];
        if (coefIsZero(c)) continue;
        coords[i] = c;
        for (std::size_t j = 0; j < vec.size(); ++j) {
            K t = c * basis[i][j];
            if (!coefIsZero(t)) vec[j] -= t;
        }
    }
    for (const auto& x : vec)
        if (!coefIsZero(x))
            throw StabilityError("image leaves the highest-weight span");
    return coords;
}

} // namespace

RepMatrix wordMatrix(const braid::BraidWord& w, const LkbSpace& space) {
    if (!braid::isPure(w, braid::Partition::fromColors(space.colors)))
        throw PurityError("word is not pure on the color partition");
    braid::SymbolicCtx ctx(space.gs);
    auto read = braid::coloredRead(ctx, w, space.colors, space.l);
    const FieldElement zero = FieldElement::zero(space.gs);
    RepMatrix out;
    out.entries.reserve(space.basis.size());
    int cols = static_cast<int>(space.slice.size());
    for (const auto& b : space.basis) {
        std::vector<FieldElement> img(static_cast<std::size_t>(cols), zero);
        for (int c = 0; c < cols; ++c) {
            if (b[static_cast<std::size_t>(c)].isZero()) continue;
            for (int j = 0; j < cols; ++j) {
                const FieldElement& e = read.matrix.entries[static_cast<std::size_t>(c)]
                                                           [static_cast<std::size_t>(j)];
                if (e.isZero()) continue;
                img[static_cast<std::size_t>(j)] += b[static_cast<std::size_t>(c)] * e;
            }
        }
        out.entries.push_back(projectOntoBasis(space.basis, space.pivots, std::move(img), zero));
    }
    return out;
}

SpecializedSpace specializeSpace(const LkbSpace& space, const scalar::Specialization& sp) {
    SpecializedSpace out;
    out.shape = &space;
    out.ctx = braid::NumericCtx::fromSpecialization(sp);
    out.basis.reserve(space.basis.size());
    for (const auto& b : space.basis) {
        std::vector<Rat> row;
        row.reserve(b.size());
        for (const auto& x : b) row.push_back(scalar::specialize(x, sp));
        out.basis.push_back(std::move(row));
    }
    return out;
}

RatMatrix wordMatrixAt(const braid::BraidWord& w, const SpecializedSpace& space) {
    const LkbSpace& shape = *space.shape;
    if (!braid::isPure(w, braid::Partition::fromColors(shape.colors)))
        throw PurityError("word is not pure on the color partition");
    auto read = braid::coloredRead(space.ctx, w, shape.colors, shape.l);
    RatMatrix out;
    int cols = static_cast<int>(shape.slice.size());
    for (const auto& b : space.basis) {
        std::vector<Rat> img(static_cast<std::size_t>(cols), Rat(0));
        for (int c = 0; c < cols; ++c) {
            if (b[static_cast<std::size_t>(c)] == 0) continue;
            for (int j = 0; j < cols; ++j) {
                const Rat& e = read.matrix.entries[static_cast<std::size_t>(c)]
                                                  [static_cast<std::size_t>(j)];
                if (e == 0) continue;
                img[static_cast<std::size_t>(j)] += b[static_cast<std::size_t>(c)] * e;
            }
        }
        out.entries.push_back(projectOntoBasis(space.basis, shape.pivots, std::move(img), Rat(0)));
    }
    return out;
}

std::vector<braid::BraidWord> pureGenerators(int n, const braid::Partition& s) {
    if (s.n() != n) throw std::invalid_argument("pureGenerators: partition size mismatch");
    std::vector<braid::BraidWord> out;
    auto owner = s.blockOf();
    // bands A_{ij} for pairs in different blocks; same-block bands are words
    // in the same-block s_k generators added below
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (owner[static_cast<std::size_t>(i)] == owner[static_cast<std::size_t>(j)]) continue;
            braid::BraidWord w;
            w.n = n;
            for (int k = j - 1; k >= i + 1; --k) w.letters.push_back(k);
            w.letters.push_back(i);
            w.letters.push_back(i);
            for (int k = i + 1; k <= j - 1; ++k) w.letters.push_back(-k);
            out.push_back(std::move(w));
        }
    for (int k = 1; k < n; ++k) {
        if (owner[static_cast<std::size_t>(k)] != owner[static_cast<std::size_t>(k + 1)]) continue;
        braid::BraidWord w;
        w.n = n;
        w.letters.push_back(k);
        out.push_back(std::move(w));
    }
    for (const auto& w : out)
        if (!braid::isPure(w, s))
            throw std::logic_error("pureGenerators: generator fails the purity check");
    return out;
}

namespace {

// Rows of the Sylvester system X M - M X = 0 stacked over all M.
template <class K>
std::vector<std::vector<K>> sylvesterRows(const std::vector<linalg::Matrix<K>>& mats,
                                          const K& zero) {
    std::size_t d = mats.empty() ? 0 : static_cast<std::size_t>(mats[0].rows());
    std::vector<std::vector<K>> rows;
    for (const auto& M : mats) {
        if (static_cast<std::size_t>(M.rows()) != d || static_cast<std::size_t>(M.cols()) != d)
            throw std::invalid_argument("commutantDimension: matrices must be square, equal size");
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                std::vector<K> row(d * d, zero);
                // coefficient of X_{ab}: delta_{a,i} M_{b,j} - M_{i,a} delta_{b,j}
                for (std::size_t b = 0; b < d; ++b) row[i * d + b] += M.entries[b][j];
                for (std::size_t a = 0; a < d; ++a) row[a * d + j] -= M.entries[i][a];
                rows.push_back(std::move(row));
            }
    }
    return rows;
}

} // namespace

int commutantDimension(const std::vector<RatMatrix>& mats) {
    if (mats.empty()) throw std::invalid_argument("commutantDimension: no matrices");
    int d = mats[0].rows();
    auto rows = sylvesterRows(mats, Rat(0));
    int rank = linalg::ratRank(std::move(rows));
    return d * d - rank;
}

int commutantDimension(const std::vector<RepMatrix>& mats, const scalar::Specialization& sp) {
    std::vector<RatMatrix> specialized;
    specialized.reserve(mats.size());
    for (const auto& M : mats) {
        RatMatrix S;
        S.entries.reserve(static_cast<std::size_t>(M.rows()));
        for (const auto& row : M.entries) {
            std::vector<Rat> r;
            r.reserve(row.size());
            for (const auto& x : row) r.push_back(scalar::specialize(x, sp));
            S.entries.push_back(std::move(r));
        }
        specialized.push_back(std::move(S));
    }
    return commutantDimension(specialized);
}

int commutantDimensionSymbolic(const GeneratorSet& gs, const std::vector<RepMatrix>& mats) {
    if (mats.empty()) throw std::invalid_argument("commutantDimension: no matrices");
    int d = mats[0].rows();
    auto dense = sylvesterRows(mats, FieldElement::zero(gs));
    std::vector<linalg::SparseRow> rows;
    rows.reserve(dense.size());
    for (auto& r : dense) {
        linalg::SparseRow sr;
        for (std::size_t j = 0; j < r.size(); ++j)
            if (!r[j].isZero()) sr.emplace(static_cast<int>(j), std::move(r[j]));
        rows.push_back(std::move(sr));
    }
    int rank = linalg::rankOf(gs, std::move(rows), d * d);
    return d * d - rank;
}

SimplicityReport simplicityReport(int n, int l, const braid::Partition& s, int trials,
                                  std::uint64_t seed) {
    SimplicityReport rep;
    rep.n = n;
    rep.l = l;
    rep.partition = s.str();

    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    auto owner = s.blockOf();
    for (int p = 1; p <= n; ++p)
        colors[static_cast<std::size_t>(p - 1)] = owner[static_cast<std::size_t>(p)] + 1;

    LkbSpace space = lkbBasis(n, l, colors);
    rep.dim = space.dim();
    auto gens = pureGenerators(n, s);
    for (const auto& w : gens) rep.generators.push_back(braid::printWord(w));

    std::uint64_t cursor = seed;
    for (int t = 0; t < trials; ++t) {
        SimplicityTrial trial;
        bool done = false;
        for (int attempt = 0; attempt <= 16 && !done; ++attempt, ++cursor) {
            try {
                auto sp = scalar::Specialization::draw(space.gs, cursor);
                if (!scalar::isAdmissible(sp)) continue;
                auto sspace = specializeSpace(space, sp);
                std::vector<RatMatrix> mats;
                mats.reserve(gens.size());
                for (const auto& w : gens) mats.push_back(wordMatrixAt(w, sspace));
                trial.seedUsed = cursor;
                trial.values = sp.values;
                trial.commutantDim = commutantDimension(mats);
                done = true;
            } catch (const scalar::SpecializationSingular&) {
                trial.note = "singular draw skipped";
            }
        }
        if (!done) trial.note = "no usable specialization within retry budget";
        if (trial.commutantDim == 1) rep.simpleCertified = true;
        rep.trials.push_back(std::move(trial));
    }
    return rep;
}

} // namespace lkb
} // namespace vlkb
