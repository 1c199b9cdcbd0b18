#include <gtest/gtest.h>

#include "support.hpp"
#include "trileib/errors.hpp"

using namespace trileib;
namespace fx = trileib::fixtures;

namespace {

struct Scenario {
  const char* name;
  ThreeLeibnizAlgebra A;
  Representation R;
  LinMap T;
};

std::vector<Scenario> scenarios() {
  return {{"deform_a", fx::deform_a(), adjoint_rep(fx::deform_a()), fx::deform_a_operator()},
          {"deform_b", fx::deform_b(), adjoint_rep(fx::deform_b()), fx::deform_b_operator()},
          {"deform_c", fx::deform_c(), adjoint_rep(fx::deform_c()), fx::deform_c_operator()},
          {"n2_id", fx::n2(), adjoint_rep(fx::n2()), LinMap::identity(2)},
          {"n2_d", fx::n2(), adjoint_rep(fx::n2()), fx::n2_differential()},
          {"vp4_id", fx::vp4(), adjoint_rep(fx::vp4()), LinMap::identity(4)}};
}

bool oracle_nij(const Vec& a, const Vec& b, const Scenario& s) {
  using support::tri3;
  return oracle::nijenhuis_element(oracle::V(a.begin(), a.end()), oracle::V(b.begin(), b.end()), support::dense(s.T),
                                   tri3(s.A.bracket), tri3(s.R.rho_l), tri3(s.R.rho_m), tri3(s.R.rho_r));
}

}  // namespace

TEST(Deformation, Examples) {
  const auto A = fx::vp4();
  const auto R = adjoint_rep(A);
  EXPECT_TRUE(deformation_check(LinMap::identity(4), LinMap::zero(4, 4), A, R).passed());
  support::Rng rng(61);
  const LinMap bad = rng.matrix(4, 4);
  EXPECT_FALSE(deformation_check(bad, LinMap::zero(4, 4), A, R).passed());
  // With T = 0 only the top coefficient survives: T1 must be an embedding tensor.
  EXPECT_TRUE(deformation_check(LinMap::zero(4, 4), LinMap::identity(4), A, R).passed());
  EXPECT_FALSE(deformation_check(LinMap::zero(4, 4), bad, A, R).passed());
}

TEST(Deformation, CoefficientsMatchDirectCheck) {
  support::Rng rng(62);
  for (const auto& s : scenarios()) {
    const CocycleSpace cs = cocycle_space(s.T, s.A, s.R);
    for (int trial = 0; trial < 10; ++trial) {
      LinMap T1;
      if (trial % 3 == 0) {
        T1 = rng.matrix(s.T.rows(), s.T.cols(), -1, 1);
      } else {
        // A random cocycle: first-order solutions, often not higher order.
        Vec v = zero_vec(cs.Z1.ambient_dim());
        for (const Vec& z : cs.Z1.basis_vectors()) axpy(v, Scalar(rng.small(-2, 2)), z);
        T1 = unflatten(v, s.T.rows(), s.T.cols());
      }
      bool direct = true;
      for (int t = 1; t <= 3; ++t) direct = direct && check_embedding_tensor(s.T + scaled(T1, Scalar(t)), s.A, s.R).passed();
      EXPECT_EQ(deformation_check(s.T, T1, s.A, s.R).passed(), direct) << s.name << " trial " << trial;
    }
  }
}

TEST(Cocycle, Examples) {
  const auto A = fx::vp4();
  const auto R = adjoint_rep(A);
  const LinMap id = LinMap::identity(4);
  EXPECT_TRUE(cocycle_check(id, id, A, R).passed());
  EXPECT_TRUE(cocycle_check(LinMap::zero(4, 4), id, A, R).passed());
  support::Rng rng(63);
  const CheckReport r = cocycle_check(rng.matrix(4, 4), id, A, R);
  ASSERT_FALSE(r.passed());
  EXPECT_EQ(r.violations.front().tuple.size(), 3u);
}

TEST(Cocycle, Coboundary) {
  const auto A = fx::vp4();
  EXPECT_TRUE(coboundary(zero_vec(4), basis_vec(4, 1), LinMap::identity(4), A, adjoint_rep(A)).is_zero());
  EXPECT_TRUE(coboundary(basis_vec(4, 0), basis_vec(4, 1), LinMap::identity(4), A, adjoint_rep(A)).is_zero());
  EXPECT_TRUE(coboundary(basis_vec(2, 0), basis_vec(2, 1), LinMap::zero(2, 3), fx::abelian(2),
                         Representation::zero(2, 3))
                  .is_zero());
  const LinMap d = coboundary(basis_vec(3, 0), basis_vec(3, 0), fx::deform_a_operator(), fx::deform_a(),
                              adjoint_rep(fx::deform_a()));
  EXPECT_FALSE(d.is_zero());
}

TEST(Cocycle, FlattenRoundTrip) {
  support::Rng rng(64);
  const LinMap M = rng.matrix(3, 5);
  const Vec v = flatten(M);
  EXPECT_EQ(v[1 * 5 + 2], M(1, 2));
  EXPECT_EQ(unflatten(v, 3, 5), M);
}

TEST(Cocycle, SpaceMatchesOracle) {
  auto compare = [](const LinMap& T, const ThreeLeibnizAlgebra& A, const Representation& R) {
    using support::tri3;
    const CocycleSpace cs = cocycle_space(T, A, R);
    const oracle::Cohomology o =
        oracle::cohomology(support::dense(T), tri3(A.bracket), tri3(R.rho_l), tri3(R.rho_m), tri3(R.rho_r));
    EXPECT_EQ(cs.Z1.rank(), o.z1);
    EXPECT_EQ(cs.B1_cap_Z1.rank(), o.b1_cap_z1);
    EXPECT_EQ(cs.h1_dim, o.h1);
    EXPECT_EQ(cs.h1_dim, cs.Z1.rank() - cs.B1_cap_Z1.rank());
    for (const Vec& z : cs.Z1.basis_vectors())
      EXPECT_TRUE(cocycle_check(unflatten(z, T.rows(), T.cols()), T, A, R).passed());
    return cs;
  };
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t m = 1; m <= 3; ++m) {
      const CocycleSpace cs = compare(LinMap::zero(n, m), fx::abelian(n), Representation::zero(n, m));
      EXPECT_EQ(cs.h1_dim, n * m);
      EXPECT_EQ(cs.B1.rank(), 0u);
    }
  for (const auto& s : scenarios()) compare(s.T, s.A, s.R);
  compare(sum_map(2, 2), fx::n2(), copies_representation(fx::n2(), 2));
}

TEST(Cocycle, RejectsNonTensor) {
  support::Rng rng(65);
  try {
    cocycle_space(rng.matrix(4, 4), fx::vp4(), adjoint_rep(fx::vp4()));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAnEmbeddingTensor);
  }
}

TEST(Equivalence, WitnessCheck) {
  const auto A = fx::deform_a();
  const auto R = adjoint_rep(A);
  const LinMap T = fx::deform_a_operator();
  const LinMap T1 = LinMap::identity(3);
  const Vec z = zero_vec(3), a = basis_vec(3, 0), b = basis_vec(3, 0);
  EXPECT_TRUE(equivalence_witness_check(T1, T1, z, z, T, A, R).passed());
  EXPECT_TRUE(equivalence_witness_check(T1, T1 + coboundary(a, b, T, A, R), a, b, T, A, R).passed());
  EXPECT_FALSE(equivalence_witness_check(T1, T1, a, b, T, A, R).passed());
}

TEST(Equivalence, HomomorphismCheck) {
  const auto A = fx::n2();
  const auto R = adjoint_rep(A);
  const LinMap T = fx::n2_differential(), id = LinMap::identity(2);
  EXPECT_TRUE(check_et_homomorphism(id, id, T, T, A, R).passed());

  const LinMap phi = fx::n2_automorphism(Scalar(2), Scalar(1));
  const Conjugate c = conjugate_et(T, phi, phi, A, R);
  EXPECT_TRUE(c.report.passed());
  EXPECT_TRUE(check_et_homomorphism(phi, phi, c.Tc, T, A, R).passed());

  LinMap psi = phi;
  psi(0, 1) += 1;
  EXPECT_FALSE(check_et_homomorphism(phi, psi, c.Tc, T, A, R).passed());
}

TEST(Equivalence, DeformationFamilies) {
  const auto A = fx::abelian(2);
  const auto R = Representation::zero(2, 2);
  const LinMap Z = LinMap::zero(2, 2), one = LinMap::identity(2);
  const Vec a = basis_vec(2, 0), b = basis_vec(2, 1);
  EXPECT_TRUE(deformation_equivalence_check(Z, one, one, a, b, A, R).passed());

  for (const auto& s : scenarios()) {
    const Vec z = zero_vec(s.A.dim());
    EXPECT_TRUE(deformation_equivalence_check(s.T, s.T, s.T, z, z, s.A, s.R).passed());
  }
  const Scenario s = scenarios().front();
  const Vec x = basis_vec(3, 0), y = basis_vec(3, 0);
  ASSERT_TRUE(check_nijenhuis_element(x, y, s.T, s.A, s.R).passed());
  const LinMap delta = coboundary(x, y, s.T, s.A, s.R);
  EXPECT_TRUE(deformation_equivalence_check(s.T, LinMap::zero(3, 3), delta, x, y, s.A, s.R).passed());
  EXPECT_FALSE(deformation_equivalence_check(s.T, delta, LinMap::zero(3, 3), x, y, s.A, s.R).passed());
}

TEST(Nijenhuis, ElementsMatchOracle) {
  for (const auto& s : scenarios()) {
    const std::size_t n = s.A.dim();
    EXPECT_TRUE(check_nijenhuis_element(zero_vec(n), zero_vec(n), s.T, s.A, s.R).passed());
    for (const auto& [a, b] : all_basis_pairs(n))
      EXPECT_EQ(check_nijenhuis_element(a, b, s.T, s.A, s.R).passed(), oracle_nij(a, b, s)) << s.name;
  }
  const auto A = fx::abelian(3);
  EXPECT_TRUE(check_nijenhuis_element(Vec{1, 2, 3}, Vec{0, -1, 5}, LinMap::zero(3, 2), A, Representation::zero(3, 2))
                  .passed());
}

TEST(Nijenhuis, ElementsOnCombinations) {
  support::Rng rng(66);
  for (const auto& s : scenarios()) {
    const std::size_t n = s.A.dim();
    for (int trial = 0; trial < 6; ++trial) {
      Vec a = zero_vec(n), b = zero_vec(n);
      for (std::size_t i = 0; i < n; ++i) {
        a[i] = rng.small(-1, 1);
        b[i] = rng.small(-1, 1);
      }
      EXPECT_EQ(check_nijenhuis_element(a, b, s.T, s.A, s.R).passed(), oracle_nij(a, b, s)) << s.name;
    }
  }
}

TEST(Nijenhuis, ScanAndTrivialDeformation) {
  const auto A = fx::abelian(2);
  EXPECT_EQ(nijenhuis_element_scan(LinMap::zero(2, 2), A, Representation::zero(2, 2), all_basis_pairs(2)).size(), 4u);
  EXPECT_TRUE(nijenhuis_element_scan(LinMap::identity(2), A, adjoint_rep(A), {}).empty());

  for (const auto& s : scenarios()) {
    const auto found = nijenhuis_element_scan(s.T, s.A, s.R, all_basis_pairs(s.A.dim()));
    std::size_t expected = 0;
    for (const auto& [a, b] : all_basis_pairs(s.A.dim())) expected += oracle_nij(a, b, s);
    EXPECT_EQ(found.size(), expected) << s.name;
    for (const auto& [a, b] : found) {
      const TrivialDeformation td = trivial_deformation(a, b, s.T, s.A, s.R);
      EXPECT_TRUE(td.report.passed()) << s.name;
      EXPECT_EQ(td.T1, coboundary(a, b, s.T, s.A, s.R));
      EXPECT_TRUE(deformation_check(s.T, td.T1, s.A, s.R).passed());
    }
  }
  const Vec z = zero_vec(3);
  EXPECT_TRUE(trivial_deformation(z, z, fx::deform_a_operator(), fx::deform_a(), adjoint_rep(fx::deform_a())).T1.is_zero());
}

TEST(Nijenhuis, NontrivialCoboundaries) {
  // Each deformation fixture has a Nijenhuis element with a nonzero coboundary.
  for (const auto& s : scenarios()) {
    if (std::string(s.name).rfind("deform", 0) != 0) continue;
    bool nonzero = false;
    for (const auto& [a, b] : nijenhuis_element_scan(s.T, s.A, s.R, all_basis_pairs(3)))
      nonzero = nonzero || !coboundary(a, b, s.T, s.A, s.R).is_zero();
    EXPECT_TRUE(nonzero) << s.name;
  }
}

TEST(Nijenhuis, RejectsNonElement) {
  const auto A = fx::vp4();
  const Vec a = basis_vec(4, 0), b = basis_vec(4, 1);
  ASSERT_FALSE(check_nijenhuis_element(a, b, LinMap::identity(4), A, adjoint_rep(A)).passed());
  try {
    trivial_deformation(a, b, LinMap::identity(4), A, adjoint_rep(A));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotANijenhuisElement);
  }
}

TEST(Conjugation, Examples) {
  const auto A = fx::vp4();
  const auto R = adjoint_rep(A);
  const LinMap id = LinMap::identity(4);
  EXPECT_EQ(conjugate_et(id, id, id, A, R).Tc, id);

  const auto Z = fx::abelian(2);
  const LinMap lambda = scaled(LinMap::identity(2), Scalar(3));
  const LinMap T = LinMap::zero(2, 2);
  EXPECT_EQ(conjugate_et(T, lambda, lambda, Z, Representation::zero(2, 2)).Tc, T);

  const LinMap P = fx::signed_permutation({1, 0, 2, 3}, {1, -1, 1, 1});
  ASSERT_TRUE(check_homomorphism(P, A, A).passed());
  const Conjugate c = conjugate_et(id, P, P, A, R);
  EXPECT_TRUE(c.report.passed());
  EXPECT_TRUE(check_averaging(c.Tc, A).passed());

  try {
    conjugate_et(id, LinMap::zero(4, 4), id, A, R);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInvertible);
  }
  const LinMap odd = fx::signed_permutation({1, 0, 2, 3}, {1, 1, 1, 1});
  try {
    conjugate_et(id, odd, odd, A, R);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IntertwiningFailure);
  }
}

TEST(Conjugation, AutomorphismsOfN2) {
  const auto A = fx::n2();
  const auto R = adjoint_rep(A);
  for (int alpha : {1, 2, -3})
    for (int beta : {0, 1, -2}) {
      const LinMap phi = fx::n2_automorphism(Scalar(alpha), Scalar(beta));
      for (const LinMap& T : {fx::n2_differential(), LinMap::identity(2)}) {
        const Conjugate c = conjugate_et(T, phi, phi, A, R);
        EXPECT_TRUE(c.report.passed());
        EXPECT_TRUE(support::oracle_et(c.Tc, A, R));
      }
    }
}
