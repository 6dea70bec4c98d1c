#include "test_helpers.hpp"

namespace rotexp {
namespace {

using testing::MatNear;
using testing::random_matrix;

TEST(SmallMat, MultiplyIdentity) {
    EXPECT_EQ(multiply(Mat<3>::identity(), Mat<3>::identity()), Mat<3>::identity());
    oracle::Rng rng(1);
    const auto  a = random_matrix<5>(rng);
    EXPECT_EQ(a * Mat<5>::identity(), a);
}

TEST(SmallMat, LambdaE3Squared) {
    const Mat<3> l = lambda_map(basis_vector<3>(3));
    EXPECT_EQ(l * l, Mat<3>::diagonal(Vec<3>{{-1.0, -1.0, 0.0}}));
}

TEST(SmallMat, Transpose) {
    EXPECT_EQ(transpose(Mat<4>::identity()), Mat<4>::identity());
    const Mat<3> l = lambda_map(Vec<3>{{0.3, -0.2, 0.9}});
    EXPECT_EQ(transpose(l), -l);
    oracle::Rng rng(2);
    const auto  a = random_matrix<4>(rng);
    EXPECT_EQ(transpose(transpose(a)), a);
}

TEST(SmallMat, Trace) {
    EXPECT_EQ(trace(Mat<3>::identity()), 3.0);
    const Vec<4> e1 = basis_vector<4>(1), e2 = basis_vector<4>(2);
    EXPECT_EQ(trace(wedge(Vec<4>{{1, 2, 3, 4}}, Vec<4>{{-1, 0.5, 2, 7}})), 0.0);
    EXPECT_EQ(trace(outer(e1, e2)), 0.0);
    EXPECT_EQ(trace(outer(e1, e1)), 1.0);
}

TEST(SmallMat, HalfTraceNorm) {
    EXPECT_EQ(half_trace_norm(Mat<5>::zero()), 0.0);
    EXPECT_DOUBLE_EQ(half_trace_norm(wedge(basis_vector<5>(1), basis_vector<5>(2))), 1.0);
    const Vec<3> u{{2.0 / 3.0, -1.0 / 3.0, 2.0 / 3.0}};
    EXPECT_NEAR(half_trace_norm(-1.7 * lambda_map(u)), 1.7, 1e-15);
}

TEST(SmallMat, HalfTraceNormZeroOnlyForZero) {
    Mat<4> a{};
    EXPECT_EQ(half_trace_norm(a), 0.0);
    a(2, 1) = 1e-150;
    EXPECT_GT(half_trace_norm(a), 0.0);
}

TEST(SmallMat, BasisVector) {
    EXPECT_EQ(basis_vector<3>(1), (Vec<3>{{1, 0, 0}}));
    EXPECT_EQ(basis_vector<5>(5), (Vec<5>{{0, 0, 0, 0, 1}}));
    EXPECT_THROW((void)basis_vector<4>(5), std::out_of_range);
    EXPECT_THROW((void)basis_vector<4>(0), std::out_of_range);
}

TEST(SmallMat, ApproxEq) {
    const Mat<3> i = Mat<3>::identity();
    EXPECT_TRUE(approx_eq(i, i, 1e-12));
    EXPECT_FALSE(approx_eq(i, Mat<3>::zero(), 1e-12));
    Mat<3> ones{};
    ones.data.fill(1.0);
    EXPECT_TRUE(approx_eq(i, i + 1e-13 * ones, 1e-12));
    EXPECT_THROW((void)approx_eq(i, i, 0.0), std::invalid_argument);
}

TEST(SmallMat, Determinant) {
    EXPECT_DOUBLE_EQ(determinant(Mat<5>::identity()), 1.0);
    EXPECT_DOUBLE_EQ(determinant(Mat<3>{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}), -1.0);
    EXPECT_DOUBLE_EQ(determinant(Mat<3>{{2, 0, 0}, {1, 3, 0}, {4, 5, 6}}), 36.0);
}

TEST(SmallMatProperty, TraceOfProductCommutes) {
    oracle::Rng rng(3);
    for (int k = 0; k < 1000; ++k) {
        const auto a = random_matrix<5>(rng), b = random_matrix<5>(rng);
        ASSERT_NEAR(trace(a * b), trace(b * a), 1e-12);
    }
}

TEST(SmallMatProperty, MultiplyAssociative) {
    oracle::Rng rng(4);
    for (int k = 0; k < 1000; ++k) {
        const auto a = random_matrix<5>(rng), b = random_matrix<5>(rng), c = random_matrix<5>(rng);
        ASSERT_TRUE(MatNear((a * b) * c, a * (b * c), 1e-12));
    }
}

TEST(SmallMat, ValidityChecks) {
    EXPECT_TRUE(is_rotation(Mat<4>::identity()));
    EXPECT_FALSE(is_rotation(Mat<3>{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
    EXPECT_TRUE(is_antisymmetric(lambda_map(Vec<3>{{1, 2, 3}})));
    EXPECT_FALSE(is_antisymmetric(Mat<3>::identity()));
}

} // namespace
} // namespace rotexp
