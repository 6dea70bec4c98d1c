#include "test_helpers.hpp"

namespace rotexp {
namespace {

using testing::MatNear;
using testing::random_generator;
using testing::random_vec;

TEST(So3, RodriguesFixesAxis) {
    const Vec<3> u = Vec<3>{{1, -2, 2}} / 3.0;
    const Vec<3> r = rodrigues_apply(1.234, u, u);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(r[i], u[i], 1e-15);
}

TEST(So3, RodriguesQuarterTurn) {
    const Vec<3> r = rodrigues_apply(kPi / 2, basis_vector<3>(3), basis_vector<3>(1));
    EXPECT_NEAR(r[0], 0.0, 1e-16);
    EXPECT_NEAR(r[1], 1.0, 1e-16);
    EXPECT_NEAR(r[2], 0.0, 1e-16);
}

TEST(So3, RodriguesRejectsNonUnitAxis) {
    EXPECT_THROW((void)rodrigues_apply(1.0, Vec<3>{{1, 1, 0}}, basis_vector<3>(1)), std::invalid_argument);
    EXPECT_THROW((void)rotation3(1.0, Vec<3>{{0, 0, 1.01}}), std::invalid_argument);
}

TEST(So3, Rotation3Fixtures) {
    const Vec<3> u = Vec<3>{{2, 3, 6}} / 7.0;
    EXPECT_TRUE(MatNear(rotation3(0.0, u), Mat<3>::identity(), 0.0));
    EXPECT_TRUE(MatNear(rotation3(kPi / 2, basis_vector<3>(3)), Mat<3>{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}, 1e-16));
    EXPECT_TRUE(MatNear(rotation3(kPi, basis_vector<3>(1)), Mat<3>::diagonal(Vec<3>{{1, -1, -1}}), 1e-15));
}

TEST(So3, ExpFixtures) {
    EXPECT_EQ(exp_so3(Mat<3>::zero()), Mat<3>::identity());
    const Vec<3> e3 = basis_vector<3>(3);
    EXPECT_TRUE(MatNear(exp_so3((kPi / 2) * lambda_map(e3)), rotation3(kPi / 2, e3), 1e-15));
    EXPECT_THROW((void)exp_so3(Mat<3>::identity()), std::invalid_argument);
}

TEST(So3, ExpTinyAngleKeepsFirstOrderTerm) {
    const Mat<3> f = 1e-9 * lambda_map(Vec<3>{{0.6, 0.0, 0.8}});
    EXPECT_TRUE(MatNear(exp_so3(f), oracle::series_exp(f), 1e-20));
}

TEST(So3Property, ExpMatchesSeries) {
    oracle::Rng rng(31);
    for (int k = 0; k < 1000; ++k) {
        const Mat<3> f = random_generator<3>(rng, 2 * kPi);
        ASSERT_TRUE(MatNear(exp_so3(f), oracle::series_exp(f), 1e-10));
    }
}

TEST(So3Property, ClosedFormMatchesRearrangedSeriesSum) {
    oracle::Rng rng(32);
    for (int k = 0; k < 1000; ++k) {
        const Vec<3> u     = oracle::random_unit_vector<3>(rng);
        const double theta = rng.uniform(-2 * kPi, 2 * kPi);
        const Mat<3> want  = Mat<3>::identity() + (std::cos(theta) - 1.0) * (Mat<3>::identity() - outer(u, u)) +
                            std::sin(theta) * lambda_map(u);
        const Mat<3> r = exp_so3(theta * lambda_map(u));
        ASSERT_TRUE(MatNear(r, want, 1e-12));
        ASSERT_LE(orthogonality_residual(r), 1e-12);
        ASSERT_NEAR(determinant(r), 1.0, 1e-12);
    }
}

TEST(So3Property, RodriguesAgreesWithMatrixForm) {
    oracle::Rng rng(33);
    for (int k = 0; k < 1000; ++k) {
        const Vec<3> u     = oracle::random_unit_vector<3>(rng);
        const Vec<3> v     = random_vec<3>(rng);
        const double theta = rng.uniform(-2 * kPi, 2 * kPi);
        const Vec<3> a = rodrigues_apply(theta, u, v), b = rotation3(theta, u) * v;
        for (std::size_t i = 0; i < 3; ++i) ASSERT_NEAR(a[i], b[i], 1e-12);
    }
}

TEST(So3, AngleOf) {
    EXPECT_EQ(angle_of(Mat<3>::identity()), 0.0);
    EXPECT_DOUBLE_EQ(angle_of(Mat<3>::diagonal(Vec<3>{{1, -1, -1}})), kPi);
    EXPECT_THROW((void)angle_of(Mat<3>::diagonal(Vec<3>{{1, 1, -1}})), std::invalid_argument);
}

TEST(So3Property, AngleAndAxisRoundTrip) {
    oracle::Rng rng(34);
    for (int k = 0; k < 1000; ++k) {
        const Vec<3> u     = oracle::random_unit_vector<3>(rng);
        const double theta = rng.uniform(0.01, kPi - 0.01);
        const Mat<3> r     = rotation3(theta, u);
        const double got   = angle_of(r);
        ASSERT_NEAR(got, theta, 1e-9);
        const Vec<3> axis = axis_of(r, got);
        for (std::size_t i = 0; i < 3; ++i) ASSERT_NEAR(axis[i], u[i], 1e-9);
    }
}

TEST(So3Property, AngleClampedUnderNoise) {
    oracle::Rng rng(35);
    for (int k = 0; k < 1000; ++k) {
        const Vec<3> u = oracle::random_unit_vector<3>(rng);
        Mat<3>       r = rotation3(k % 2 == 0 ? 0.0 : kPi, u);
        for (auto& x : r.data) x += rng.uniform(-1e-10, 1e-10);
        const double a = angle_of(r);
        ASSERT_GE(a, 0.0);
        ASSERT_LE(a, kPi);
    }
}

TEST(So3, AxisOfQuarterTurn) {
    const Vec<3> e3 = basis_vector<3>(3);
    EXPECT_EQ(axis_of(rotation3(kPi / 2, e3), kPi / 2), e3);
    EXPECT_THROW((void)axis_of(Mat<3>::identity(), 0.0), branch_error);
    EXPECT_THROW((void)axis_of(rotation3(kPi, e3), kPi), branch_error);
}

TEST(So3, LogBranches) {
    EXPECT_TRUE(std::holds_alternative<Log3Identity>(log_so3(Mat<3>::identity())));

    const Log3Outcome half = log_so3(Mat<3>::diagonal(Vec<3>{{1, -1, -1}}));
    ASSERT_TRUE(std::holds_alternative<Log3Pi>(half));
    const auto& pi = std::get<Log3Pi>(half);
    EXPECT_TRUE(MatNear(pi.proj, Mat<3>::diagonal(Vec<3>{{1, 0, 0}}), 0.0));
    EXPECT_EQ(pi.axis_up_to_sign, basis_vector<3>(1));

    const Vec<3>      u = Vec<3>{{-2, 3, 6}} / 7.0;
    const Log3Outcome g = log_so3(rotation3(0.8, u));
    ASSERT_TRUE(std::holds_alternative<Log3Generic>(g));
    EXPECT_NEAR(std::get<Log3Generic>(g).axis_angle.theta, 0.8, 1e-12);
    EXPECT_TRUE(MatNear(std::get<Log3Generic>(g).f, 0.8 * lambda_map(u), 1e-12));

    EXPECT_THROW((void)log_so3(2.0 * Mat<3>::identity()), std::invalid_argument);
}

TEST(So3, LogHalfTurnAxisSignIsCanonical) {
    const Vec<3> u = Vec<3>{{-2, 3, -6}} / 7.0;
    const auto   pi = std::get<Log3Pi>(log_so3(rotation3(kPi, u)));
    for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(pi.axis_up_to_sign[i], -u[i], 1e-15);
    EXPECT_NEAR(trace(pi.proj), 1.0, 1e-9);
    EXPECT_TRUE(MatNear(pi.proj * pi.proj, pi.proj, 1e-9));
    EXPECT_TRUE(MatNear(exp_so3(materialize(Log3Outcome{pi})), rotation3(kPi, u), 1e-12));
}

TEST(So3Property, LogRoundTrip) {
    oracle::Rng rng(36);
    for (int k = 0; k < 1000; ++k) {
        const Vec<3>      u     = oracle::random_unit_vector<3>(rng);
        const double      theta = rng.uniform(0.01, kPi - 0.01);
        const Mat<3>      r     = rotation3(theta, u);
        const Log3Outcome out   = log_so3(r);
        ASSERT_TRUE(std::holds_alternative<Log3Generic>(out));
        const auto& g = std::get<Log3Generic>(out);
        ASSERT_NEAR(g.axis_angle.theta, theta, 1e-9);
        for (std::size_t i = 0; i < 3; ++i) ASSERT_NEAR(g.axis_angle.axis[i], u[i], 1e-9);
        ASSERT_TRUE(MatNear(exp_so3(materialize(out)), r, 1e-9));
    }
}

TEST(So3Property, AngleAbovePiFlipsAxis) {
    oracle::Rng rng(37);
    for (int k = 0; k < 1000; ++k) {
        const Vec<3> u     = oracle::random_unit_vector<3>(rng);
        const double theta = rng.uniform(kPi + 0.01, 2 * kPi - 0.01);
        const auto   g     = std::get<Log3Generic>(log_so3(rotation3(theta, u)));
        ASSERT_NEAR(g.axis_angle.theta, 2 * kPi - theta, 1e-9);
        for (std::size_t i = 0; i < 3; ++i) ASSERT_NEAR(g.axis_angle.axis[i], -u[i], 1e-9);
    }
}

} // namespace
} // namespace rotexp
