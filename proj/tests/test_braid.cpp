#include "vlkb/braid.hpp"
#include "vlkb/suites.hpp"

#include <doctest.h>

using namespace vlkb;
using namespace vlkb::braid;

TEST_SUITE("braid") {

TEST_CASE("word grammar") {
    auto w = parseWord("s1 s2^-1", 3);
    CHECK(w.letters == std::vector<int>({1, -2}));
    CHECK(parseWord("-1 1", 2).letters == std::vector<int>({-1, 1}));
    CHECK(parseWord("  ", 4).letters.empty());
    CHECK_THROWS_AS(parseWord("s3", 3), ParseError);
    CHECK_THROWS_AS(parseWord("s0", 3), ParseError);
    CHECK_THROWS_AS(parseWord("x2", 3), ParseError);
    CHECK_THROWS_AS(parseWord("s1^2", 3), ParseError);
    try {
        parseWord("s1 s7", 4);
    } catch (const ParseError& e) {
        CHECK(e.pos > 3); // points at the offending token
    }
    // round trip
    for (const char* text : {"s1 s2^-1 s1 s1", "s3 s3 s2^-1"}) {
        auto word = parseWord(text, 4);
        CHECK(parseWord(printWord(word), 4) == word);
    }
}

TEST_CASE("purity and partitions") {
    CHECK(isPure(parseWord("s1 s1", 2), Partition::finest(2)));
    CHECK_FALSE(isPure(parseWord("s1", 2), Partition::finest(2)));
    CHECK(isPure(parseWord("s1", 2), Partition::coarsest(2)));
    CHECK(finestPartition(parseWord("s1 s2", 3)) == Partition::coarsest(3));
    CHECK(finestPartition(parseWord("-1 1", 2)) == Partition::finest(2));
    CHECK(finestPartition(parseWord("s1 s1 s2 s2", 3)) == Partition::finest(3));

    auto p = Partition::parse("[3][1,2]", 3);
    CHECK(p.str() == "[1,2][3]");
    CHECK(p.blockOf() == std::vector<int>({-1, 0, 0, 1}));
    CHECK_THROWS_AS(Partition::parse("[1][2]", 3), ParseError);   // missing strand
    CHECK_THROWS_AS(Partition::parse("[1][1,2]", 2), ParseError); // repeated strand
    CHECK(Partition::fromColors({5, 7, 5}) == Partition::parse("[1,3][2]", 3));

    // handlebody preset: singleton cores plus one block of ordinary strands
    CHECK(handlebodyPartition(2, 3).str() == "[1][2][3,4,5]");
    CHECK(handlebodyColors(2, 3) == std::vector<int>({1, 1, 2, 2, 2}));
    CHECK(Partition::fromColors(handlebodyColors(2, 3)).str() == "[1,2][3,4,5]");
}

TEST_CASE("R matrix on small vectors") {
    auto gs = GeneratorSet::quantum(2);
    SymbolicCtx ctx(gs);
    auto t00 = rmatrixPair(ctx, 1, 1, 2, 0, 0);
    REQUIRE(t00.size() == 1);
    CHECK(std::get<0>(t00[0]) == 0);
    CHECK(std::get<1>(t00[0]) == 0);
    CHECK(std::get<2>(t00[0]).isOne());

    // R(m1 x m0) = v^{-mu_2} m0 x m1 + v^{-mu_1}(v - v^{-1})[mu_2] m1 x m0
    auto t10 = rmatrixPair(ctx, 1, 1, 2, 1, 0);
    REQUIRE(t10.size() == 2);
    FieldElement c01 = FieldElement::zero(gs), c10 = c01;
    for (const auto& [a, b, c] : t10) {
        if (a == 0 && b == 1) c01 = c;
        if (a == 1 && b == 0) c10 = c;
    }
    CHECK(c01 == scalar::uPow(gs, 2, -1));
    CHECK(c10 == scalar::uPow(gs, 1, -1) * (scalar::vPow(gs, 1) - scalar::vPow(gs, -1)) *
                     scalar::qnum(gs, 2, 0));

    // two-sided inverses up to degree 3 (also exercised by the suite below)
    for (int k = 0; k <= 3; ++k)
        for (int l = 0; k + l <= 3; ++l) {
            TwoVec x;
            x.add({k, l}, FieldElement::one(gs));
            CHECK(rmatrixStep(ctx, -1, 2, 1, rmatrixStep(ctx, 1, 1, 2, x)) == x);
            CHECK(rmatrixStep(ctx, 1, 2, 1, rmatrixStep(ctx, -1, 1, 2, x)) == x);
        }
}

TEST_CASE("colored reading basics") {
    auto gs = GeneratorSet::quantum(2);
    SymbolicCtx ctx(gs);
    // sigma_1^2 at level 0 is the 1x1 identity
    auto sq = coloredRead(ctx, parseWord("s1 s1", 2), {1, 2}, 0);
    CHECK(sq.matrix.rows() == 1);
    CHECK(sq.matrix.entries[0][0].isOne());
    CHECK(sq.targetColors == std::vector<int>({1, 2}));
    // the empty word is the identity on every slice
    for (int l = 0; l <= 3; ++l) {
        auto id = coloredRead(ctx, BraidWord{2, {}}, {1, 2}, l);
        CHECK(id.matrix ==
              linalg::Matrix<FieldElement>::identity(id.matrix.rows(), FieldElement::zero(gs),
                                                     FieldElement::one(gs)));
    }
    // a single crossing permutes the colors
    auto one = coloredRead(ctx, parseWord("s1", 2), {1, 2}, 1);
    CHECK(one.targetColors == std::vector<int>({2, 1}));
}

TEST_CASE("suite reports: braid relations and Yang-Baxter") {
    CHECK(suites::braidRelations(3, 2).pass());
    CHECK(suites::yangBaxter(2, 3).pass());
    CHECK(suites::braidRelations(4, 1).pass()); // includes far commutativity
}

TEST_CASE("colored reading commutes with the gl(2) action") {
    auto gs = GeneratorSet::quantum(2);
    SymbolicCtx ctx(gs);
    auto word = parseWord("s1", 2);
    auto sliceMatrix = [&](verma::Gl2 g, const std::vector<int>& colors, int lFrom, int lTo) {
        auto src = verma::tensorBasis(2, lFrom);
        auto tgt = verma::tensorBasis(2, lTo);
        std::map<std::vector<int>, int> idx;
        for (std::size_t i = 0; i < tgt.size(); ++i) idx[tgt[i]] = static_cast<int>(i);
        linalg::Matrix<FieldElement> M;
        M.entries.assign(src.size(),
                         std::vector<FieldElement>(tgt.size(), FieldElement::zero(gs)));
        for (std::size_t r = 0; r < src.size(); ++r) {
            auto img = actGl2(gs, g, verma::Monomial::fromTensorIndex(src[r]), colors);
            for (const auto& [mono, c] : img.terms())
                M.entries[r][static_cast<std::size_t>(idx.at(mono.s))] = c;
        }
        return M;
    };
    for (int l = 1; l <= 2; ++l) {
        // E lowers the level; R then E equals E then R
        auto r = coloredRead(ctx, word, {1, 2}, l);
        auto rLow = coloredRead(ctx, word, {1, 2}, l - 1);
        CHECK(sliceMatrix(verma::Gl2::E, {1, 2}, l, l - 1) * rLow.matrix ==
              r.matrix * sliceMatrix(verma::Gl2::E, {2, 1}, l, l - 1));
        // F raises the level
        auto rHigh = coloredRead(ctx, word, {1, 2}, l + 1);
        CHECK(sliceMatrix(verma::Gl2::F, {1, 2}, l, l + 1) * rHigh.matrix ==
              r.matrix * sliceMatrix(verma::Gl2::F, {2, 1}, l, l + 1));
        // K is diagonal on the slice
        CHECK(sliceMatrix(verma::Gl2::K, {1, 2}, l, l) * r.matrix ==
              r.matrix * sliceMatrix(verma::Gl2::K, {2, 1}, l, l));
    }
}

} // TEST_SUITE
