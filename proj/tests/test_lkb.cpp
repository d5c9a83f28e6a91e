#include "vlkb/lkb.hpp"

#include <doctest.h>

using namespace vlkb;
using namespace vlkb::braid;
using namespace vlkb::lkb;

TEST_SUITE("lkb") {

TEST_CASE("space dimensions match the closed form") {
    CHECK(lkbBasis(2, 1, {1, 1}).dim() == 1);
    CHECK(lkbBasis(4, 2, {1, 2, 3, 4}).dim() == 6);
    for (int n = 2; n <= 6; ++n) CHECK(lkbBasis(n, 0, verma::identityColors(n)).dim() == 1);
    for (int n = 2; n <= 5; ++n)
        for (int l = 0; l <= 3; ++l)
            CHECK(Int(static_cast<long>(lkbBasis(n, l, verma::identityColors(n)).dim())) ==
                  scalar::binom(n + l - 2, l));
}

TEST_CASE("word matrices on small spaces") {
    auto space20 = lkbBasis(2, 0, {1, 2});
    auto id = wordMatrix(BraidWord{2, {}}, space20);
    CHECK(id.entries[0][0].isOne());
    auto sq = wordMatrix(parseWord("s1 s1", 2), space20);
    CHECK(sq.entries[0][0].isOne());

    // the one-strand-pair Burau value, frozen from the R-matrix computation:
    // sigma_1 acts on the 1-dim space W(2,1) with equal colors by -U1^{-2}
    auto space21 = lkbBasis(2, 1, {1, 1});
    auto burau = wordMatrix(parseWord("s1", 2), space21);
    CHECK(burau.entries[0][0] == -scalar::uPow(space21.gs, 1, -2));

    CHECK_THROWS_AS(wordMatrix(parseWord("s1", 2), space20), PurityError);
}

TEST_CASE("multiplicativity, inverses, matrix-level braid relation") {
    auto space = lkbBasis(3, 2, {1, 2, 3});
    REQUIRE(space.dim() == 3);
    auto gens = pureGenerators(3, Partition::finest(3));
    REQUIRE(gens.size() == 3);
    Rng rng(5);
    for (int t = 0; t < 4; ++t) {
        auto w1 = gens[rng.below(gens.size())];
        auto w2 = gens[rng.below(gens.size())];
        CHECK(wordMatrix(concatWords(w1, w2), space) ==
              wordMatrix(w1, space) * wordMatrix(w2, space));
        auto inv = wordMatrix(w1, space) * wordMatrix(inverseWord(w1), space);
        CHECK(inv == RepMatrix::identity(space.dim(), FieldElement::zero(space.gs),
                                         FieldElement::one(space.gs)));
    }
    // equal colors: the full braid group acts; braid relation at matrix level
    auto eq = lkbBasis(3, 2, {1, 1, 1});
    CHECK(wordMatrix(parseWord("s1 s2 s1", 3), eq) ==
          wordMatrix(parseWord("s2 s1 s2", 3), eq));
}

TEST_CASE("generator matrices on W(n,1) satisfy the Burau quadratic relation") {
    // (M - 1)(M + U^{-2}) = 0 with all colors equal
    for (int n : {3, 4}) {
        std::vector<int> colors(static_cast<std::size_t>(n), 1);
        auto space = lkbBasis(n, 1, colors);
        REQUIRE(space.dim() == n - 1);
        auto u2 = scalar::uPow(space.gs, 1, -2);
        auto zero = FieldElement::zero(space.gs);
        auto one = FieldElement::one(space.gs);
        for (int i = 1; i < n; ++i) {
            auto M = wordMatrix(BraidWord{n, {i}}, space);
            auto lhs = M * M;
            // M^2 = (1 - U^{-2}) M + U^{-2} I
            RepMatrix rhs = RepMatrix::identity(space.dim(), zero, one);
            for (int a = 0; a < space.dim(); ++a)
                for (int b = 0; b < space.dim(); ++b) {
                    rhs.entries[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                        (one - u2) * M.entries[static_cast<std::size_t>(a)]
                                              [static_cast<std::size_t>(b)] +
                        (a == b ? u2 : zero);
                }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("pure generators") {
    auto g2 = pureGenerators(2, Partition::finest(2));
    REQUIRE(g2.size() == 1);
    CHECK(printWord(g2[0]) == "s1 s1");
    auto g3 = pureGenerators(3, Partition::finest(3));
    CHECK(g3.size() == 3);
    for (const auto& w : g3) CHECK(isPure(w, Partition::finest(3)));
    auto full = pureGenerators(3, Partition::coarsest(3));
    REQUIRE(full.size() == 2);
    CHECK(printWord(full[0]) == "s1");
    CHECK(printWord(full[1]) == "s2");
    // handlebody: bands from the cores plus the block's elementary crossings
    auto hb = pureGenerators(5, handlebodyPartition(2, 3));
    for (const auto& w : hb) CHECK(isPure(w, handlebodyPartition(2, 3)));
}

TEST_CASE("commutant dimensions") {
    auto id3 = RatMatrix::identity(3, Rat(0), Rat(1));
    CHECK(commutantDimension({id3}) == 9);
    std::vector<RatMatrix> units;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            RatMatrix u;
            u.entries.assign(2, std::vector<Rat>(2, Rat(0)));
            u.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
            units.push_back(std::move(u));
        }
    CHECK(commutantDimension(units) == 1);
}

TEST_CASE("symbolic and specialized commutants agree on small spaces") {
    auto part = Partition::finest(3);
    auto space = lkbBasis(3, 1, {1, 2, 3});
    std::vector<RepMatrix> mats;
    for (const auto& w : pureGenerators(3, part)) mats.push_back(wordMatrix(w, space));
    CHECK(commutantDimensionSymbolic(space.gs, mats) == 1);
    auto sp = scalar::drawAdmissible(space.gs, 19);
    CHECK(commutantDimension(mats, sp) == 1);
}

TEST_CASE("simplicity certificates, small cases") {
    auto rep = simplicityReport(2, 1, Partition::finest(2), 2, 7);
    CHECK(rep.simpleCertified);
    for (const auto& t : rep.trials) CHECK(t.commutantDim == 1);
    auto rep31 = simplicityReport(3, 1, Partition::finest(3), 2, 11);
    CHECK(rep31.simpleCertified);
    // full braid group at (3,2)
    auto repFull = simplicityReport(3, 2, Partition::coarsest(3), 2, 13);
    CHECK(repFull.simpleCertified);
    // report reproducibility: same seed, same trials
    auto again = simplicityReport(3, 1, Partition::finest(3), 2, 11);
    CHECK(again.trials.size() == rep31.trials.size());
    for (std::size_t i = 0; i < again.trials.size(); ++i) {
        CHECK(again.trials[i].seedUsed == rep31.trials[i].seedUsed);
        CHECK(again.trials[i].values == rep31.trials[i].values);
        CHECK(again.trials[i].commutantDim == rep31.trials[i].commutantDim);
    }
}

TEST_CASE("basis strings") {
    auto space = lkbBasis(2, 1, {1, 2});
    CHECK(space.basisString(0) == "m[1,0] - U2*m[0,1]");
}

} // TEST_SUITE
