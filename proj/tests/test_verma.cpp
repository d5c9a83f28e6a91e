#include "vlkb/verma.hpp"

#include <doctest.h>

using namespace vlkb;
using namespace vlkb::verma;

namespace {

Monomial mono(std::vector<int> r, std::vector<int> s) { return Monomial{std::move(r), std::move(s)}; }

Vec single(const GeneratorSet& gs, const Monomial& m) {
    Vec v;
    v.add(m, FieldElement::one(gs));
    return v;
}

} // namespace

TEST_SUITE("verma") {

TEST_CASE("quantum gl2 action on the vacuum") {
    auto gs1 = GeneratorSet::quantum(1);
    Vec f = actGl2(gs1, Gl2::F, Monomial::vacuum(1));
    Vec expect;
    expect.add(mono({-1}, {1}), scalar::qnum(gs1, 1, 0));
    CHECK(f == expect);

    // E annihilates s = 0
    CHECK(actGl2(gs1, Gl2::E, mono({2}, {0})).isZero());

    auto gs2 = GeneratorSet::quantum(2);
    Vec f2 = actGl2(gs2, Gl2::F, Monomial::vacuum(2));
    Vec expect2;
    expect2.add(mono({-1, 0}, {1, 0}), scalar::qnum(gs2, 1, 0));
    expect2.add(mono({0, -1}, {0, 1}), scalar::uPow(gs2, 1, -1) * scalar::qnum(gs2, 2, 0));
    CHECK(f2 == expect2);
}

TEST_CASE("classical gl2 action") {
    auto gs = GeneratorSet::classical(1);
    Vec f = actGl2(gs, Gl2::F, Monomial::vacuum(1));
    Vec expect;
    expect.add(mono({-1}, {1}), scalar::lambdaVar(gs, 1));
    CHECK(f == expect);
    CHECK(actGl2(gs, Gl2::E, mono({3}, {0})).isZero());
    // l1 eigenvalue on X^{lambda-1} Y
    Vec l1 = actGl2(gs, Gl2::L1, mono({-1}, {1}));
    Vec expectL;
    expectL.add(mono({-1}, {1}), scalar::lambdaVar(gs, 1) - FieldElement::one(gs));
    CHECK(l1 == expectL);
    CHECK_THROWS_AS(actGl2(gs, Gl2::K, Monomial::vacuum(1)), ModeError);
}

TEST_CASE("weights and grades") {
    auto w0 = weightAndGrade(Monomial::vacuum(3));
    CHECK(w0.sumR == 0);
    CHECK(w0.sumS == 0);
    CHECK(w0.d == std::vector<int>({0, 0, 0}));
    auto wk = weightAndGrade(Monomial::fromTensorIndex({2, 0, 1}));
    CHECK(wk.sumR == -3);
    CHECK(wk.sumS == 3);
    CHECK(wk.d == std::vector<int>({0, 0, 0}));

    // every gl2 generator preserves the grade tuple
    for (Mode mode : {Mode::quantum, Mode::classical}) {
        auto gs = mode == Mode::quantum ? GeneratorSet::quantum(3) : GeneratorSet::classical(3);
        Rng rng(5);
        std::vector<Gl2> gens = {Gl2::E, Gl2::F, Gl2::L1, Gl2::L2};
        if (mode == Mode::quantum) gens.push_back(Gl2::K);
        for (int t = 0; t < 10; ++t) {
            Monomial m = randomMonomial(3, rng);
            auto d0 = weightAndGrade(m).d;
            for (auto g : gens) {
                Vec img = actGl2(gs, g, m);
                for (const auto& [tgt, c] : img.terms()) CHECK(weightAndGrade(tgt).d == d0);
            }
        }
    }
}

TEST_CASE("tensor basis enumeration") {
    auto b21 = tensorBasis(2, 1);
    CHECK(b21 == std::vector<std::vector<int>>({{1, 0}, {0, 1}}));
    CHECK(tensorBasis(3, 2).size() == 6);
    CHECK(tensorBasis(4, 3).size() == 20);
    // stars and bars against the closed form, plus distinctness
    for (int n = 1; n <= 5; ++n)
        for (int l = 0; l <= 4; ++l) {
            auto basis = tensorBasis(n, l);
            CHECK(Int(static_cast<long>(basis.size())) == scalar::binom(n + l - 1, l));
            for (const auto& k : basis) {
                int sum = 0;
                for (int x : k) sum += x;
                CHECK(sum == l);
            }
            auto sorted = basis;
            std::sort(sorted.begin(), sorted.end());
            sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
            CHECK(sorted.size() == basis.size());
        }
}

TEST_CASE("commutator [e, f] matches the Cartan element monomial-wise") {
    for (int n : {1, 2, 3}) {
        auto gs = GeneratorSet::quantum(n);
        Rng rng(17 + static_cast<std::uint64_t>(n));
        FieldElement denom = scalar::vPow(gs, 1) - scalar::vPow(gs, -1);
        for (int t = 0; t < 12; ++t) {
            Monomial m = randomMonomial(n, rng);
            Vec lhs = actGl2(gs, Gl2::E, actGl2(gs, Gl2::F, m));
            lhs -= actGl2(gs, Gl2::F, actGl2(gs, Gl2::E, m));
            FieldElement k = actGl2(gs, Gl2::K, m).coeff(m, FieldElement::zero(gs));
            Vec rhs;
            rhs.add(m, (k - k.inverse()) / denom);
            CHECK(lhs == rhs);
        }
        auto gc = GeneratorSet::classical(n);
        for (int t = 0; t < 12; ++t) {
            Monomial m = randomMonomial(n, rng);
            Vec lhs = actGl2(gc, Gl2::E, actGl2(gc, Gl2::F, m));
            lhs -= actGl2(gc, Gl2::F, actGl2(gc, Gl2::E, m));
            Vec rhs = actGl2(gc, Gl2::L1, m);
            rhs -= actGl2(gc, Gl2::L2, m);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("E is locally nilpotent") {
    for (Mode mode : {Mode::quantum, Mode::classical}) {
        auto gs = mode == Mode::quantum ? GeneratorSet::quantum(2) : GeneratorSet::classical(2);
        Rng rng(23);
        for (int t = 0; t < 8; ++t) {
            Monomial m = randomMonomial(2, rng);
            int bound = weightAndGrade(m).sumS + 1;
            Vec v = single(gs, m);
            for (int k = 0; k < bound; ++k) v = actGl2(gs, Gl2::E, v);
            CHECK(v.isZero());
        }
    }
}

TEST_CASE("n = 1 action matrices reproduce the interval picture") {
    auto gs = GeneratorSet::quantum(1);
    for (int i = 0; i <= 5; ++i) {
        Monomial mi = Monomial::fromTensorIndex({i});
        Vec e = actGl2(gs, Gl2::E, mi);
        if (i == 0) CHECK(e.isZero());
        else {
            Vec expect;
            expect.add(Monomial::fromTensorIndex({i - 1}), scalar::qnum(gs, i));
            CHECK(e == expect);
        }
        Vec f = actGl2(gs, Gl2::F, mi);
        Vec expectF;
        expectF.add(Monomial::fromTensorIndex({i + 1}), scalar::qnum(gs, 1, -i));
        CHECK(f == expectF);
        FieldElement k = actGl2(gs, Gl2::K, mi).coeff(mi, FieldElement::zero(gs));
        CHECK(k == scalar::uPow(gs, 1, 1) * scalar::vPow(gs, -2 * i));
    }
}

TEST_CASE("monomial string form") {
    CHECK(mono({-1, 2}, {0, 3}).str() == "X[-1,2]Y[0,3]");
}

} // TEST_SUITE
