#include "mutfan/mutmap.hpp"

#include <algorithm>
#include <random>

#include "doctest.h"

using namespace mutfan;

namespace {

ExchangeMatrix makeB(std::vector<std::vector<int>> rows) {
    std::vector<std::vector<Int>> conv;
    for (auto& r : rows) conv.emplace_back(r.begin(), r.end());
    return ExchangeMatrix::fromRows(conv);
}

RatVec rv(std::vector<int> v) { return RatVec(v.begin(), v.end()); }

ExchangeMatrix makeRank2B() { return makeB({{0, 1}, {-2, 0}}); }

ExchangeMatrix makeAffineRank3() {
    return makeB({{0, 2, 0}, {-1, 0, 1}, {0, -2, 0}});
}

// The six coefficient rows of the running rank-2 universal example.
ExtendedExchangeMatrix makeUniversalB2() {
    return ExtendedExchangeMatrix(makeRank2B(), {{"a", rv({1, 0})},
                                                 {"b", rv({0, 1})},
                                                 {"c", rv({-1, 0})},
                                                 {"d", rv({0, -1})},
                                                 {"e", rv({1, -1})},
                                                 {"f", rv({2, -1})}});
}

ExchangeMatrix randomExchange(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> entryDist(-3, 3);
    std::uniform_int_distribution<int> dDist(1, 3);
    std::vector<int> d(n);
    for (auto& v : d) v = dDist(rng);
    std::vector<std::vector<Int>> rows(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            int z = entryDist(rng);
            rows[i][j] = Int(z) * d[j];
            rows[j][i] = Int(-z) * d[i];
        }
    }
    return ExchangeMatrix::fromRows(rows);
}

RatVec randomVec(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> dist(-4, 4);
    RatVec out(n);
    for (auto& x : out) x = dist(rng);
    return out;
}

std::vector<int> randomSeq(std::mt19937& rng, int n, int maxLen) {
    std::uniform_int_distribution<int> lenDist(0, maxLen);
    std::uniform_int_distribution<int> kDist(1, n);
    std::vector<int> seq(lenDist(rng));
    for (auto& k : seq) k = kDist(rng);
    return seq;
}

LinearRelation makeRelation(std::vector<std::pair<int, RatVec>> terms) {
    LinearRelation rel;
    for (auto& [c, v] : terms) rel.terms.emplace_back(Rat(c), v);
    return rel;
}

}  // namespace

TEST_CASE("sign vectors and sign coherence") {
    CHECK(signVector(rv({3, 0, -2})) == SignVector{1, 0, -1});
    CHECK(signVector({Rat(1, 2), Rat(-1, 3)}) == SignVector{1, -1});
    CHECK(signCoherent({rv({1, 0}), rv({2, 0})}));
    CHECK(signCoherent({rv({1, 0}), rv({0, -1})}));
    CHECK(signCoherent({rv({1, 2}), rv({0, -1})}) == false);
    CHECK(signCoherent({rv({1, 0}), rv({-1, 0})}) == false);
    CHECK(signCoherent({rv({1, 0}), rv({0, 0})}));
    CHECK(signCoherent({}));
    CHECK(signCoherent({rv({-1, -2}), rv({0, -1}), rv({-3, 0})}));
}

TEST_CASE("single mutation map steps on the rank-2 example") {
    const auto b = makeRank2B();
    CHECK(eta(b, 1, rv({1, 0})) == rv({-1, 1}));
    CHECK(eta(b, 1, rv({1, -1})) == rv({-1, 0}));
    CHECK(eta(b, 2, rv({1, -1})) == rv({-1, 1}));
    CHECK(eta(b, 1, rv({3, -2})) == rv({-3, 1}));
    CHECK(eta(b, 2, rv({3, -2})) == rv({-1, 2}));
    CHECK(eta(b, 1, rv({0, 0})) == rv({0, 0}));
    CHECK(eta(b, 2, rv({0, 0})) == rv({0, 0}));

    CHECK_THROWS_AS(eta(b, 0, rv({1, 0})), std::invalid_argument);
    CHECK_THROWS_AS(eta(b, 3, rv({1, 0})), std::invalid_argument);
    CHECK_THROWS_AS(eta(b, 1, rv({1, 0, 0})), std::invalid_argument);
}

TEST_CASE("mutation maps agree with coefficient row mutation") {
    // The map applied to a vector must match mutating an extended matrix
    // that carries the same vector as a coefficient row. The two code
    // paths implement different forms of the same piecewise formula.
    const auto ext = makeUniversalB2();
    const auto& principal = ext.base();
    for (const auto& seq : canonicalSequences(2, 6)) {
        const auto mutated = mutateSeq(ext, seq);
        for (const auto& [label, row] : ext.rows())
            CHECK(etaSeq(principal, seq, row) == mutated.row(label));
    }

    const auto b3 = makeAffineRank3();
    const ExtendedExchangeMatrix ext3(
        b3, {{"u1", rv({1, 0, 0})}, {"u2", rv({0, 1, 0})}, {"u3", rv({0, 0, 1})}});
    for (const auto& seq : canonicalSequences(3, 4)) {
        const auto mutated = mutateSeq(ext3, seq);
        for (const auto& [label, row] : ext3.rows())
            CHECK(etaSeq(b3, seq, row) == mutated.row(label));
    }
}

TEST_CASE("composite maps invert by the reversed sequence") {
    CHECK(etaSeq(makeRank2B(), {}, rv({5, -7})) == rv({5, -7}));

    std::mt19937 rng(20240812);
    std::uniform_int_distribution<int> nDist(2, 4);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = nDist(rng);
        const auto b = randomExchange(rng, n);
        const auto a = randomVec(rng, n);
        const auto seq = randomSeq(rng, n, 5);
        const auto image = etaSeq(b, seq, a);
        std::vector<int> back(seq.rbegin(), seq.rend());
        CHECK(etaSeq(mutateSeq(b, seq), back, image) == a);

        // Single-step inverse.
        for (int k = 1; k <= n; ++k) CHECK(eta(mutate(b, k), k, eta(b, k, a)) == a);
    }
}

TEST_CASE("orbit of a ray generator stays on fan rays") {
    // (2,-1) spans a ray of the rank-2 fan. Its images under all composite
    // maps must span rays of the fans of the mutated matrices, which for
    // this mutation class means one of eight integer directions.
    const auto b = makeRank2B();
    const std::vector<RatVec> rays = {rv({1, 0}),  rv({0, 1}),  rv({-1, 0}), rv({0, -1}),
                                      rv({1, -1}), rv({2, -1}), rv({-1, 1}), rv({-2, 1})};
    for (const auto& seq : canonicalSequences(2, 6)) {
        const auto image = etaSeq(b, seq, rv({2, -1}));
        bool onRay = false;
        for (const auto& ray : rays) {
            // Positive proportionality: image = lambda * ray, lambda > 0.
            if (ray[0] * image[1] == ray[1] * image[0] &&
                (ray[0] * image[0] > 0 || ray[1] * image[1] > 0))
                onRay = true;
        }
        CHECK(onRay);
    }
}

TEST_CASE("positive scaling commutes with the mutation maps") {
    std::mt19937 rng(20240813);
    std::uniform_int_distribution<int> nDist(2, 4);
    std::uniform_int_distribution<int> numDist(1, 5);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = nDist(rng);
        const auto b = randomExchange(rng, n);
        const auto a = randomVec(rng, n);
        const auto seq = randomSeq(rng, n, 4);
        const Rat lambda(numDist(rng), numDist(rng));
        RatVec scaled(a);
        for (auto& x : scaled) x *= lambda;
        auto image = etaSeq(b, seq, a);
        for (auto& x : image) x *= lambda;
        CHECK(etaSeq(b, seq, scaled) == image);
    }
}

TEST_CASE("antipodal identity relates a matrix and its negative") {
    std::mt19937 rng(20240814);
    std::uniform_int_distribution<int> nDist(2, 4);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = nDist(rng);
        const auto b = randomExchange(rng, n);
        std::vector<std::vector<Int>> negRows(n, std::vector<Int>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) negRows[i][j] = -b.entry(i, j);
        const auto negB = ExchangeMatrix::fromRows(negRows);
        const auto a = randomVec(rng, n);
        const auto seq = randomSeq(rng, n, 4);

        RatVec negA(a);
        for (auto& x : negA) x = -x;
        auto other = etaSeq(negB, seq, negA);
        for (auto& x : other) x = -x;
        CHECK(etaSeq(b, seq, a) == other);
    }
}

TEST_CASE("permutation equivariance of single mutation steps") {
    std::mt19937 rng(20240815);
    std::uniform_int_distribution<int> nDist(2, 4);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = nDist(rng);
        const auto b = randomExchange(rng, n);
        const auto a = randomVec(rng, n);
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);

        std::vector<std::vector<Int>> permRows(n, std::vector<Int>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) permRows[perm[i]][perm[j]] = b.entry(i, j);
        const auto permB = ExchangeMatrix::fromRows(permRows);
        RatVec permA(n);
        for (int i = 0; i < n; ++i) permA[perm[i]] = a[i];

        for (int k = 1; k <= n; ++k) {
            const auto image = eta(b, k, a);
            RatVec permImage(n);
            for (int i = 0; i < n; ++i) permImage[perm[i]] = image[i];
            CHECK(eta(permB, perm[k - 1] + 1, permA) == permImage);
        }
    }
}

TEST_CASE("rescaling equivariance via a diagonal conjugation") {
    // B' = S^-1 B S for the diagonal S found by isRescaling; the maps for
    // B and B' are conjugate by right multiplication with S.
    const auto b = makeRank2B();
    const auto b2 = makeB({{0, 2}, {-1, 0}});
    const auto sigma = isRescaling(b, b2);
    REQUIRE(sigma.has_value());
    REQUIRE(*sigma == std::vector<Int>{1, 2});

    std::mt19937 rng(20240816);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = randomVec(rng, 2);
        const auto seq = randomSeq(rng, 2, 6);
        RatVec scaled(2);
        for (int i = 0; i < 2; ++i) scaled[i] = a[i] * Rat((*sigma)[i]);
        auto image = etaSeq(b, seq, a);
        for (int i = 0; i < 2; ++i) image[i] *= Rat((*sigma)[i]);
        CHECK(etaSeq(b2, seq, scaled) == image);
    }
}

TEST_CASE("canonical sequence enumeration") {
    CHECK(canonicalSequences(2, 0) == std::vector<std::vector<int>>{{}});
    CHECK(canonicalSequences(2, 3) ==
          std::vector<std::vector<int>>{{}, {1}, {2}, {1, 2}, {2, 1}, {1, 2, 1}, {2, 1, 2}});
    CHECK(canonicalSequences(3, 2) ==
          std::vector<std::vector<int>>{
              {}, {1}, {2}, {3}, {1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}});

    // 1 + 3 * (2^8 - 1) sequences for n = 3, depth 8.
    const auto all = canonicalSequences(3, 8);
    CHECK(all.size() == 766);
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = 1; j < all[i].size(); ++j) CHECK(all[i][j] != all[i][j - 1]);
        if (i > 0) {
            // Sorted by length, lexicographic within a length.
            const auto& prev = all[i - 1];
            const auto& cur = all[i];
            CHECK((prev.size() < cur.size() || (prev.size() == cur.size() && prev < cur)));
        }
    }
}

TEST_CASE("depth classes on the rank-2 example") {
    const auto b = makeRank2B();

    const auto cls = depthClass(b, rv({1, -1}), 2);
    REQUIRE(cls.signs.size() == 5);
    CHECK(cls.signs[0] == std::pair(std::vector<int>{}, SignVector{1, -1}));
    CHECK(cls.signs[1] == std::pair(std::vector<int>{1}, SignVector{-1, 0}));
    CHECK(cls.signs[2] == std::pair(std::vector<int>{2}, SignVector{-1, 1}));
    CHECK(cls.signs[3] == std::pair(std::vector<int>{1, 2}, SignVector{-1, 0}));
    CHECK(cls.signs[4] == std::pair(std::vector<int>{2, 1}, SignVector{1, 0}));

    // Depth 0 sees only the sign vector itself.
    CHECK(depthClass(b, rv({1, 1}), 0) != depthClass(b, rv({1, -1}), 0));
    CHECK(depthClass(b, rv({1, -1}), 0) == depthClass(b, rv({3, -2}), 0));

    // (1,-1) spans a ray while (3,-2) is interior to a two-dimensional
    // cone; one mutation step separates them.
    CHECK(depthClass(b, rv({1, -1}), 8) != depthClass(b, rv({3, -2}), 8));
    CHECK(eta(b, 1, rv({1, -1})) == rv({-1, 0}));
    CHECK(eta(b, 1, rv({3, -2})) == rv({-3, 1}));

    // Two interior points of the same cone stay together.
    CHECK(depthClass(b, rv({3, -2}), 8) == depthClass(b, rv({4, -3}), 8));
    CHECK(depthClass(b, rv({1, -1}), 8) != depthClass(b, rv({1, 0}), 8));

    // Classes are unions of rays from the origin.
    CHECK(depthClass(b, rv({3, -2}), 5) == depthClass(b, rv({9, -6}), 5));

    CHECK_THROWS_AS(depthClass(b, rv({1, 0}), -1), std::invalid_argument);
}

TEST_CASE("depth class agrees with direct enumeration") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + (trial % 2);
        const auto b = randomExchange(rng, n);
        const auto a = randomVec(rng, n);
        const auto cls = depthClass(b, a, 4);
        const auto seqs = canonicalSequences(n, 4);
        REQUIRE(cls.signs.size() == seqs.size());
        for (std::size_t i = 0; i < seqs.size(); ++i) {
            CHECK(cls.signs[i].first == seqs[i]);
            CHECK(cls.signs[i].second == signVector(etaSeq(b, seqs[i], a)));
        }
    }
}

TEST_CASE("cone membership tests up to depth") {
    const auto b = makeRank2B();
    const auto b3 = makeAffineRank3();

    CHECK(sameConeUpToDepth(b3, {rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})}, 8));
    CHECK(sameConeUpToDepth(b, {rv({1, 0}), rv({-1, 0})}, 0) == false);

    // A ray generator and an interior point of the cone it bounds share
    // the closed cone even though their depth classes differ.
    CHECK(sameConeUpToDepth(b, {rv({1, -1}), rv({3, -2})}, 8));
    CHECK(sameConeUpToDepth(b, {rv({3, -2}), rv({4, -3})}, 8));
    CHECK(sameConeUpToDepth(b, {rv({1, -1}), rv({0, 1})}, 8) == false);

    // The two limiting rays of the rank-3 affine fan bound distinct
    // maximal cones; the empty sequence already separates them.
    CHECK(sameConeUpToDepth(b3, {rv({0, 1, -1}), rv({1, -1, 0})}, 8) == false);
    CHECK(sameConeUpToDepth(b3, {rv({0, 1, -1}), rv({1, -1, 0})}, 0) == false);

    CHECK(sameConeUpToDepth(b, {rv({7, 3})}, 4));
    CHECK_THROWS_AS(sameConeUpToDepth(b, {}, 4), std::invalid_argument);

    // Standard basis vectors stay sign-coherent for every suite matrix.
    for (const auto& m : {makeB({{0, 1}, {-1, 0}}), makeRank2B()})
        CHECK(sameConeUpToDepth(m, {rv({1, 0}), rv({0, 1})}, 8));
    for (const auto& m : {b3, makeB({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}})})
        CHECK(sameConeUpToDepth(m, {rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})}, 8));
}

TEST_CASE("coherence checker accepts the universal rank-2 relations") {
    const auto b = makeRank2B();
    const RatVec vAlpha = rv({3, -2}), vBeta = rv({1, 2}), vGamma = rv({-1, 1});
    const RatVec vA = rv({1, 0}), vB = rv({0, 1}), vC = rv({-1, 0});
    const RatVec vE = rv({1, -1}), vF = rv({2, -1});

    for (bool verify : {false, true}) {
        const auto alpha =
            checkBCoherent(b, makeRelation({{1, vAlpha}, {-1, vE}, {-1, vF}}), 8, verify);
        CHECK(alpha.holds);
        CHECK(alpha.depth == 8);

        CHECK(checkBCoherent(b, makeRelation({{1, vBeta}, {-1, vA}, {-2, vB}}), 8, verify).holds);
        CHECK(checkBCoherent(b, makeRelation({{1, vGamma}, {-1, vB}, {-1, vC}}), 8, verify).holds);
        CHECK(checkBCoherent(b, makeRelation({{1, vAlpha}, {-1, vAlpha}}), 8, verify).holds);
    }

    CHECK_THROWS_AS(checkBCoherent(b, LinearRelation{}, 4), std::invalid_argument);
}

TEST_CASE("coherence checker refutes opposite basis vectors") {
    const auto b = makeRank2B();
    const auto rel = makeRelation({{1, rv({1, 0})}, {1, rv({-1, 0})}});

    // The full check sees the piecewise condition fail at the empty
    // sequence; the linear-only shortcut sees the implied linear failure
    // one extension later. Both refute, one step apart.
    const auto full = checkBCoherent(b, rel, 8, true);
    CHECK(full.holds == false);
    CHECK(full.depth == 0);
    CHECK(full.refutedAt == std::vector<int>{});
    CHECK(full.failedCondition == CoherenceVerdict::Condition::Piecewise);

    const auto shortcut = checkBCoherent(b, rel, 8, false);
    CHECK(shortcut.holds == false);
    CHECK(shortcut.depth == 1);
    CHECK(shortcut.refutedAt == std::vector<int>{1});
    CHECK(shortcut.failedCondition == CoherenceVerdict::Condition::Linear);
}

TEST_CASE("zero columns disable the linear-only shortcut") {
    // With a zero column the linear condition can hold at every sequence
    // while the piecewise condition fails, so the checker must always
    // evaluate both. Here every map only flips signs of single entries.
    const auto rel2 = makeRelation({{1, rv({1, 0})}, {1, rv({-1, 0})}});
    const auto verdict = checkBCoherent(makeB({{0, 0}, {0, 0}}), rel2, 8, false);
    CHECK(verdict.holds == false);
    CHECK(verdict.refutedAt == std::vector<int>{});
    CHECK(verdict.failedCondition == CoherenceVerdict::Condition::Piecewise);

    const auto rel1 = makeRelation({{1, rv({1})}, {1, rv({-1})}});
    const auto v1 = checkBCoherent(makeB({{0}}), rel1, 8, false);
    CHECK(v1.holds == false);
    CHECK(v1.failedCondition == CoherenceVerdict::Condition::Piecewise);
}

TEST_CASE("shortcut and full checks agree on random relations") {
    std::mt19937 rng(20240818);
    std::uniform_int_distribution<int> nDist(2, 3);
    std::uniform_int_distribution<int> mDist(2, 3);
    std::uniform_int_distribution<int> cDist(-2, 2);
    int refuted = 0, held = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int n = nDist(rng);
        const auto b = randomExchange(rng, n);
        if (b.hasZeroColumn()) continue;
        LinearRelation rel;
        const int m = mDist(rng);
        for (int i = 0; i < m; ++i) rel.terms.emplace_back(Rat(cDist(rng)), randomVec(rng, n));
        rel.terms.emplace_back(Rat(1), randomVec(rng, n));

        const auto full = checkBCoherent(b, rel, 3, true);
        const auto shortcut = checkBCoherent(b, rel, 4, false);
        if (full.holds) {
            // Piecewise conditions verified to depth 3, so no linear
            // violation can exist through depth 4.
            CHECK(shortcut.holds);
            ++held;
        } else {
            CHECK(shortcut.holds == false);
            ++refuted;
        }
        // A linear refutation is a refutation for both modes.
        const auto shallow = checkBCoherent(b, rel, 3, false);
        if (!shallow.holds) CHECK(checkBCoherent(b, rel, 3, true).holds == false);
    }
    CHECK(refuted > 0);
}

TEST_CASE("one-sided sign patterns force coefficients to vanish") {
    const auto b3 = makeAffineRank3();
    const RatVec vPlus = rv({0, 1, -1}), vInf = rv({1, 0, -1}), vMinus = rv({1, -1, 0});

    // In the second coordinate, vPlus is the only positive entry and
    // vMinus the only negative one, so neither can carry a nonzero
    // coefficient in a coherent relation; the empty sequence witnesses it.
    const auto hit = onePositiveRefutation(
        b3, makeRelation({{1, vPlus}, {1, vInf}, {1, vMinus}}), 8);
    REQUIRE(hit.has_value());
    CHECK(*hit == std::vector<int>{});

    // A single nonzero vector always presents the pattern.
    CHECK(onePositiveRefutation(b3, makeRelation({{2, vInf}}), 8).has_value());

    // Relations that hold to depth 8 admit no such pattern anywhere.
    const auto b = makeRank2B();
    CHECK(onePositiveRefutation(
              b, makeRelation({{1, rv({3, -2})}, {-1, rv({1, -1})}, {-1, rv({2, -1})}}), 8)
              .has_value() == false);
    CHECK(onePositiveRefutation(
              b, makeRelation({{1, rv({1, 2})}, {-1, rv({1, 0})}, {-2, rv({0, 1})}}), 8)
              .has_value() == false);

    // Whenever the fast path refutes, the full checker refutes too.
    std::mt19937 rng(20240819);
    std::uniform_int_distribution<int> nDist(2, 3);
    std::uniform_int_distribution<int> cDist(-2, 2);
    int agreed = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = nDist(rng);
        const auto b2 = randomExchange(rng, n);
        LinearRelation rel;
        for (int i = 0; i < 3; ++i) rel.terms.emplace_back(Rat(cDist(rng)), randomVec(rng, n));
        const auto fast = onePositiveRefutation(b2, rel, 3);
        if (!fast) continue;
        const auto full = checkBCoherent(b2, rel, static_cast<int>(fast->size()), true);
        CHECK(full.holds == false);
        ++agreed;
    }
    CHECK(agreed > 0);
}

TEST_CASE("local relation certificates") {
    const auto b = makeRank2B();

    const auto alpha = localRelationCertificate(
        b, makeRelation({{1, rv({3, -2})}, {-1, rv({1, -1})}, {-1, rv({2, -1})}}), 8);
    REQUIRE(alpha.has_value());
    CHECK(alpha->depth == 8);

    CHECK(localRelationCertificate(
              b, makeRelation({{1, rv({1, 2})}, {-1, rv({1, 0})}, {-2, rv({0, 1})}}), 8)
              .has_value());
    CHECK(localRelationCertificate(
              b, makeRelation({{1, rv({-1, 1})}, {-1, rv({0, 1})}, {-1, rv({-1, 0})}}), 8)
              .has_value());

    CHECK(localRelationCertificate(b, makeRelation({{1, rv({3, -2})}, {-1, rv({3, -2})}}), 8)
              .has_value());
    CHECK(localRelationCertificate(b, makeRelation({{0, rv({3, -2})}}), 8).has_value());

    // Nonzero sum: not a linear relation at all.
    CHECK(localRelationCertificate(b, makeRelation({{1, rv({3, -2})}, {-1, rv({1, -1})}}), 8)
              .has_value() == false);
    // Zero sum but the supports are separated at the empty sequence.
    CHECK(localRelationCertificate(b, makeRelation({{1, rv({1, 0})}, {1, rv({-1, 0})}}), 8)
              .has_value() == false);
}

TEST_CASE("results are identical across thread counts") {
    const auto b = makeRank2B();
    const auto b3 = makeAffineRank3();

    for (int threads : {2, 4}) {
        CHECK(sameConeUpToDepth(b3, {rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})}, 8, threads));
        CHECK(sameConeUpToDepth(b3, {rv({0, 1, -1}), rv({1, -1, 0})}, 8, threads) == false);

        const auto rel = makeRelation({{1, rv({1, 0})}, {1, rv({-1, 0})}});
        for (bool verify : {false, true}) {
            const auto one = checkBCoherent(b, rel, 8, verify, 1);
            const auto many = checkBCoherent(b, rel, 8, verify, threads);
            CHECK(one.holds == many.holds);
            CHECK(one.depth == many.depth);
            CHECK(one.refutedAt == many.refutedAt);
            CHECK((one.failedCondition == many.failedCondition));
        }
        const auto hold = makeRelation({{1, rv({3, -2})}, {-1, rv({1, -1})}, {-1, rv({2, -1})}});
        CHECK(checkBCoherent(b, hold, 8, true, threads).holds);
    }
}
