#include <quadbir/classifier.hpp>
#include <quadbir/report.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <vector>

using namespace quadbir;

namespace {

using ProfileTuple = std::array<Int, 4>;

std::vector<ProfileTuple> as_tuples(const std::vector<MapProfile>& profiles) {
    std::vector<ProfileTuple> out;
    for (const auto& p : profiles) out.push_back({p.n, p.m, p.r, p.rPrime});
    return out;
}

// Oracle: scan all (n, m, r, r') in [1, 20]^4 against the two profile
// identities r = (k - r' - 1)m - 1 and r' = (k - r - 1)n - 1.
std::vector<ProfileTuple> brute_force_profiles(int k) {
    std::vector<ProfileTuple> out;
    for (int n = 1; n <= 20; ++n)
        for (int m = 1; m <= 20; ++m)
            for (int r = 1; r <= 20; ++r)
                for (int rp = 1; rp <= 20; ++rp)
                    if (r == (k - rp - 1) * m - 1 && rp == (k - r - 1) * n - 1)
                        out.push_back({n, m, r, rp});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST(EnumerateProfiles, DimensionThreeAndFour) {
    const auto q3 = enumerate_profiles(3);
    ASSERT_EQ(q3.size(), 1u);
    EXPECT_EQ(q3[0], (MapProfile{3, 2, 2, 1, 1, true}));

    // The identities also admit the degenerate n = m = 1 solution for
    // k = 4; it cannot come from a map with nonempty base locus and is
    // flagged non-standard.
    const auto q4 = enumerate_profiles(4);
    ASSERT_EQ(q4.size(), 2u);
    EXPECT_EQ(q4[0], (MapProfile{4, 1, 1, 1, 1, false}));
    EXPECT_EQ(q4[1], (MapProfile{4, 3, 3, 2, 2, true}));
}

TEST(EnumerateProfiles, DimensionFive) {
    const auto q5 = as_tuples(enumerate_profiles(5));
    const std::vector<ProfileTuple> expected = {
        {1, 1, 1, 2}, {1, 1, 2, 1}, {2, 3, 2, 3}, {3, 2, 3, 2}, {4, 4, 3, 3}};
    EXPECT_EQ(q5, expected);
}

TEST(EnumerateProfiles, AgreesWithBruteForceOracle) {
    for (int k = 3; k <= 8; ++k)
        EXPECT_EQ(as_tuples(enumerate_profiles(k)), brute_force_profiles(k)) << "k = " << k;
}

TEST(EnumerateProfiles, RejectsSmallDimension) {
    EXPECT_THROW(enumerate_profiles(2), std::domain_error);
}

TEST(SolveQ3BaseLocus, RationalQuartic) {
    const Q3Solution s = solve_q3_base_locus();
    EXPECT_EQ(s.d, 4);
    EXPECT_EQ(s.g, 0);
    EXPECT_EQ(s.h0, 5);
}

TEST(Q4SurfaceRelations, KnownValues) {
    const Q4Relations r10 = q4_surface_relations(10);
    EXPECT_EQ(r10.hk, 2);
    EXPECT_EQ(r10.c2, 26);
    EXPECT_EQ(r10.pi, 7);
    EXPECT_EQ(r10.twelveChiPlusTwoAb, 74);

    const Q4Relations r8 = q4_surface_relations(8);
    EXPECT_EQ(r8.hk, -8);
    EXPECT_EQ(r8.c2, -24);
    EXPECT_EQ(r8.pi, 1);
    EXPECT_EQ(r8.twelveChiPlusTwoAb, -8);

    const Q4Relations r16 = q4_surface_relations(16);
    EXPECT_EQ(r16.hk, 32);
    EXPECT_EQ(r16.c2, 176);
    EXPECT_EQ(r16.pi, 25);
    EXPECT_EQ(r16.twelveChiPlusTwoAb, 368);
}

TEST(AdmissibleBidegrees, DivisibilityFilter) {
    EXPECT_EQ(admissible_bidegrees(10), (std::vector<std::pair<Int, Int>>{{5, 5}}));
    EXPECT_TRUE(admissible_bidegrees(8).empty());
    EXPECT_TRUE(admissible_bidegrees(9).empty());
}

TEST(EliminateDegree, FullTrace) {
    for (int d = 1; d <= 7; ++d)
        EXPECT_EQ(eliminate_degree(d).status, Verdict::GenusNonPositive) << d;
    EXPECT_EQ(eliminate_degree(8).status, Verdict::DivisibilityFail);
    EXPECT_EQ(eliminate_degree(9).status, Verdict::DivisibilityFail);

    const EliminationVerdict ten = eliminate_degree(10);
    EXPECT_EQ(ten.status, Verdict::Survives);
    EXPECT_EQ(ten.bidegrees, (std::vector<std::pair<Int, Int>>{{5, 5}}));

    const auto genusPair = [](int d) { return *eliminate_degree(d).genusPair; };
    EXPECT_EQ(eliminate_degree(13).status, Verdict::GenusBoundExceeded);
    EXPECT_EQ(genusPair(13), (std::pair<Int, Int>{16, 15}));
    EXPECT_EQ(eliminate_degree(14).status, Verdict::GenusBoundExceeded);
    EXPECT_EQ(genusPair(14), (std::pair<Int, Int>{19, 18}));
    EXPECT_EQ(eliminate_degree(15).status, Verdict::GenusBoundExceeded);
    EXPECT_EQ(genusPair(15), (std::pair<Int, Int>{22, 21}));

    for (const int d : {11, 12, 16, 17}) {
        EXPECT_EQ(eliminate_degree(d).status, Verdict::QuadraticComplexContradiction) << d;
        const auto [pi, pi1] = genusPair(d);
        EXPECT_EQ(pi, pi1);
    }
    EXPECT_EQ(genusPair(11).first, 10);
    EXPECT_EQ(genusPair(12).first, 13);
    EXPECT_EQ(genusPair(16).first, 25);
    EXPECT_EQ(genusPair(17).first, 28);
}

TEST(EliminateDegree, VerdictMatchesWitness) {
    // Survives iff the bidegree witness list is nonempty.
    for (int d = 1; d <= 17; ++d) {
        const EliminationVerdict v = eliminate_degree(d);
        EXPECT_EQ(v.status == Verdict::Survives, !v.bidegrees.empty()) << d;
    }
}

TEST(EliminateDegree, RejectsOutOfRange) {
    EXPECT_THROW(eliminate_degree(0), std::domain_error);
    EXPECT_THROW(eliminate_degree(18), std::domain_error);
}

TEST(ContractionArithmetic, DerivedValues) {
    const ContractionRecord rec = contraction_arithmetic(make_congruence(5, 5, 7, 2));
    EXPECT_EQ(rec.excDivisor, (DivisorClass{8, -3}));
    EXPECT_EQ(rec.lambda, 1);
    EXPECT_EQ(rec.surfaceImageCheck, -10);
    EXPECT_EQ(rec.fanoIndex, 1);
    EXPECT_EQ(rec.trisecantPairings, (std::array<Int, 3>{-1, 0, -1}));
}

TEST(PlaneFiberObstruction, DerivedValues) {
    const ObstructionRecord rec = plane_fiber_obstruction();
    EXPECT_EQ(rec.planeFiberCurveDegree, 5);
    EXPECT_EQ(rec.quadricFiberCurveDegree, 10);
    EXPECT_EQ(rec.xySolutions,
              (std::vector<XYSolution>{{-2, 0, 2}, {-1, -1, 0}, {0, -2, 2}}));
    EXPECT_EQ(rec.exclusionPair, (std::array<Int, 2>{0, 2}));
    EXPECT_FALSE(rec.quadricSystemSolvable);
}

TEST(Classify, DimensionThree) {
    const ClassificationReport r = classify(3);
    EXPECT_EQ(r.k, 3);
    EXPECT_EQ(r.profile, (MapProfile{3, 2, 2, 1, 1, true}));
    ASSERT_TRUE(r.curve.has_value());
    EXPECT_EQ(r.curve->d, 4);
    EXPECT_EQ(r.curve->g, 0);
    EXPECT_EQ(r.h0, 5);
    EXPECT_FALSE(r.surface.has_value());
}

TEST(Classify, DimensionFour) {
    const ClassificationReport r = classify(4);
    EXPECT_EQ(r.profile, (MapProfile{4, 3, 3, 2, 2, true}));
    EXPECT_EQ(r.h0, 6);

    ASSERT_TRUE(r.surface.has_value());
    EXPECT_EQ(r.surface->a, 5);
    EXPECT_EQ(r.surface->b, 5);
    EXPECT_EQ(r.surface->pi, 7);
    EXPECT_EQ(r.surface->chiO, 2);
    EXPECT_EQ(r.surface->hk, 2);
    EXPECT_EQ(r.surface->c2, 26);
    EXPECT_EQ(r.surface->Ksq, -2);
    ASSERT_TRUE(r.surfaceType.has_value());
    EXPECT_EQ(r.surfaceType->label, "Z_E_II");

    // The elimination trace is total and only degree 10 survives.
    ASSERT_EQ(r.elimination.size(), 17u);
    int survivors = 0;
    for (const auto& v : r.elimination) survivors += v.status == Verdict::Survives;
    EXPECT_EQ(survivors, 1);
    EXPECT_EQ(r.elimination[9].status, Verdict::Survives);

    ASSERT_TRUE(r.lattice.has_value());
    EXPECT_EQ(r.lattice->discriminant, (FiniteAbelianGroup{{12}}));
    EXPECT_EQ(r.lattice->multByFive.multiplier, 5);
    EXPECT_TRUE(r.lattice->multByFive.holds);
    EXPECT_TRUE(r.lattice->contradiction);
    EXPECT_TRUE(r.lattice->saturation.saturated);
    EXPECT_EQ(r.lattice->indexCandidates, (std::vector<Int>{1, 5}));
    EXPECT_FALSE(r.assumptions.empty());
}

TEST(Classify, RejectsOtherDimensions) {
    EXPECT_THROW(classify(2), std::domain_error);
    EXPECT_THROW(classify(5), std::domain_error);
}

TEST(Classify, ReportSerializationIsByteStable) {
    const std::string first =
        build_classification_document(classify(4), "classify --dim 4").dump();
    const std::string second =
        build_classification_document(classify(4), "classify --dim 4").dump();
    EXPECT_EQ(first, second);
    const std::string q3a = build_classification_document(classify(3), "classify --dim 3").dump();
    const std::string q3b = build_classification_document(classify(3), "classify --dim 3").dump();
    EXPECT_EQ(q3a, q3b);
}
