#include <gtest/gtest.h>

#include "support.hpp"
#include "trileib/errors.hpp"

using namespace trileib;

namespace {

LinMap rows(std::initializer_list<std::initializer_list<int>> r) {
  std::vector<Vec> out;
  std::size_t cols = 0;
  for (auto row : r) {
    Vec v;
    for (int x : row) v.emplace_back(x);
    cols = v.size();
    out.push_back(v);
  }
  return LinMap::from_rows(out, cols);
}

Vec vec(std::initializer_list<int> xs) {
  Vec v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST(Scalar, ParsesAndCanonicalizes) {
  EXPECT_EQ(parse_scalar("4/6"), Scalar(2, 3));
  EXPECT_EQ(parse_scalar(" -3/9 "), Scalar(-1, 3));
  EXPECT_EQ(parse_scalar("7"), Scalar(7));
  EXPECT_EQ(to_string(parse_scalar("10/-4")), "-5/2");
  EXPECT_EQ(to_string(Scalar(0)), "0");
}

TEST(Scalar, RejectsMalformed) {
  for (const char* bad : {"", "1/0", "1/2x", "abc", "1//2", "/3"}) {
    try {
      parse_scalar(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
    }
  }
}

TEST(Rref, Examples) {
  Echelon e = rref(LinMap::identity(3));
  EXPECT_EQ(e.rank, 3u);
  EXPECT_EQ(e.matrix, LinMap::identity(3));

  e = rref(LinMap::zero(2, 4));
  EXPECT_EQ(e.rank, 0u);
  EXPECT_EQ(e.matrix, LinMap::zero(2, 4));

  e = rref(rows({{1, 2}, {2, 4}}));
  EXPECT_EQ(e.rank, 1u);
  EXPECT_EQ(e.matrix, rows({{1, 2}, {0, 0}}));
  EXPECT_EQ(e.pivots, std::vector<std::size_t>{0});
}

TEST(Rref, RankMatchesOracle) {
  support::Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng.index(5), c = 1 + rng.index(5);
    LinMap M = rng.matrix(r, c, -1, 1);
    EXPECT_EQ(rref(M).rank, oracle::rank(support::dense(M)));
  }
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel_basis(LinMap::identity(4)).rank(), 0u);
  EXPECT_EQ(kernel_basis(LinMap::zero(3, 3)), Subspace::full(3));

  Subspace K = kernel_basis(rows({{1, 1, 0}}));
  EXPECT_EQ(K.rank(), 2u);
  EXPECT_TRUE(K.contains(vec({1, -1, 0})));
  EXPECT_TRUE(K.contains(vec({0, 0, 1})));
  for (const Vec& v : K.basis_vectors()) EXPECT_TRUE(is_zero(rows({{1, 1, 0}}).apply(v)));
}

TEST(Kernel, RankNullity) {
  support::Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng.index(5), c = 1 + rng.index(6);
    LinMap M = rng.matrix(r, c);
    Subspace K = kernel_basis(M);
    EXPECT_EQ(K.rank() + rref(M).rank, c);
    for (const Vec& v : K.basis_vectors()) EXPECT_TRUE(is_zero(M.apply(v)));
  }
}

TEST(Subspace, SumIntersectQuotient) {
  Subspace x = Subspace::span(3, {vec({1, 0, 0})}), y = Subspace::span(3, {vec({0, 1, 0})});
  EXPECT_EQ(sum(x, y).rank(), 2u);
  EXPECT_EQ(intersect(x, y).rank(), 0u);

  Subspace plane = Subspace::span(3, {vec({1, 1, 0}), vec({0, 1, 1})});
  EXPECT_EQ(intersect(plane, plane), plane);
  EXPECT_EQ(quotient_dim(Subspace::full(4), Subspace::span(4, {vec({1, 2, 3, 4})})), 3u);
}

TEST(Subspace, IntersectionDimensionFormula) {
  support::Rng rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Vec> a, b;
    for (std::size_t i = 0, k = rng.index(4); i < k; ++i) a.push_back(rng.matrix(1, 5).row_vec(0));
    for (std::size_t i = 0, k = rng.index(4); i < k; ++i) b.push_back(rng.matrix(1, 5).row_vec(0));
    Subspace A = Subspace::span(5, a), B = Subspace::span(5, b);
    Subspace I = intersect(A, B);
    EXPECT_EQ(I.rank() + sum(A, B).rank(), A.rank() + B.rank());
    EXPECT_TRUE(A.contains(I));
    EXPECT_TRUE(B.contains(I));
  }
}

TEST(Subspace, Errors) {
  try {
    sum(Subspace::full(2), Subspace::full(3));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AmbientMismatch);
  }
  try {
    quotient_dim(Subspace::span(3, {vec({1, 0, 0})}), Subspace::span(3, {vec({0, 1, 0})}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotContained);
  }
}

TEST(LinMap, InverseAndProducts) {
  support::Rng rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    LinMap P = rng.invertible(4);
    auto inv = inverse(P);
    ASSERT_TRUE(inv);
    EXPECT_EQ(P * *inv, LinMap::identity(4));
  }
  EXPECT_FALSE(inverse(rows({{1, 2}, {2, 4}})));
  try {
    LinMap::identity(2).apply(vec({1, 2, 3}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimMismatch);
  }
}

TEST(Tensor, Contraction) {
  const auto A0 = fixtures::abelian(3);
  EXPECT_TRUE(is_zero(A0(vec({1, 2, 3}), vec({0, 1, 0}), vec({5, 5, 5}))));

  const auto vp4 = fixtures::vp4();
  EXPECT_EQ(vp4(basis_vec(4, 0), basis_vec(4, 1), basis_vec(4, 2)), basis_vec(4, 3));
  const oracle::Tri3 lc = oracle::vector_product4();
  EXPECT_EQ(support::tri3(vp4.bracket).c, lc.c);

  support::Rng rng(15);
  for (int trial = 0; trial < 20; ++trial) {
    Vec x = rng.matrix(1, 4).row_vec(0), x2 = rng.matrix(1, 4).row_vec(0);
    Vec y = rng.matrix(1, 4).row_vec(0), z = rng.matrix(1, 4).row_vec(0);
    x[0] /= 3;
    EXPECT_EQ(vp4(x + x2, y, z), vp4(x, y, z) + vp4(x2, y, z));
    EXPECT_EQ(vp4(x, y, z), lc(x, y, z));
  }
  try {
    vp4(vec({1}), basis_vec(4, 0), basis_vec(4, 0));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimMismatch);
  }
}

TEST(ReportBuilder, CapAndTruncation) {
  CheckOptions o;
  o.violation_cap = 3;
  ReportBuilder rb(o);
  rb.family("everything", {4, 4}, [](const std::size_t*) { return Vec{Scalar(1)}; });
  CheckReport r = rb.finish();
  EXPECT_EQ(r.violations.size(), 3u);
  EXPECT_TRUE(r.truncated);

  o.violation_cap = 16;
  CheckReport exact = ReportBuilder(o).family("everything", {4, 4}, [](const std::size_t*) { return Vec{Scalar(1)}; }).finish();
  EXPECT_EQ(exact.violations.size(), 16u);
  EXPECT_FALSE(exact.truncated);
}

TEST(ReportBuilder, JobCountDoesNotChangeReport) {
  auto run = [](unsigned jobs) {
    CheckOptions o;
    o.jobs = jobs;
    o.violation_cap = 20;
    ReportBuilder rb(o);
    rb.family("sparse", {10, 10, 10}, [](const std::size_t* i) {
      return Vec{Scalar((i[0] * 7 + i[1] * 3 + i[2]) % 97 == 0 ? 1 : 0)};
    });
    rb.family("second", {30, 30}, [](const std::size_t* i) { return Vec{Scalar(i[0] == i[1] ? 1 : 0)}; });
    return rb.finish();
  };
  const CheckReport one = run(1);
  for (unsigned jobs : {2u, 3u, 8u}) {
    const CheckReport many = run(jobs);
    ASSERT_EQ(one.violations.size(), many.violations.size());
    EXPECT_EQ(one.truncated, many.truncated);
    for (std::size_t i = 0; i < one.violations.size(); ++i) {
      EXPECT_EQ(one.violations[i].family, many.violations[i].family);
      EXPECT_EQ(one.violations[i].tuple, many.violations[i].tuple);
    }
  }
}
