#include <gtest/gtest.h>

#include <random>

#include "ela/harmonic.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace ela;

namespace {

double m3_diff(const SymTensor2& a, const oracle::M3& b) {
  return (a.matrix() - oracle::to_mat(b)).frobenius_norm();
}

// Lame tensor lambda 1(x)1 + 2 mu I.
ElasticityTensor lame(double lambda, double mu) {
  const SymTensor2 one = SymTensor2::identity();
  return ElasticityTensor::from(lambda * dyad(one, one) + 2.0 * mu * isotropic_projectors().I);
}

void expect_triplet_near(const HarmonicTriplet& a, const HarmonicTriplet& b, double tol) {
  EXPECT_NEAR(a.alpha(), b.alpha(), tol);
  EXPECT_NEAR(a.beta(), b.beta(), tol);
  EXPECT_LT((a.ha().tensor().matrix() - b.ha().tensor().matrix()).frobenius_norm(), tol);
  EXPECT_LT((a.hb().tensor().matrix() - b.hb().tensor().matrix()).frobenius_norm(), tol);
  EXPECT_LT((a.H().tensor() - b.H().tensor()).norm(), tol);
}

class BothSchemes : public ::testing::TestWithParam<Scheme> {};

}  // namespace

TEST(SplitSymAnti, TotallySymmetricInputHasNoAntiPart) {
  const SymTensor2 one = SymTensor2::identity();
  const auto s = split_sym_anti(ElasticityTensor::from(sym_product(one, one)));
  EXPECT_LT(s.anti.norm(), 1e-15);
  const auto a = split_sym_anti(ElasticityTensor::from(anti_product(one, one)));
  EXPECT_LT(a.sym.norm(), 1e-15);
}

TEST(SplitSymAnti, LameTraceAndOrthogonality) {
  const double lambda = 120.0, mu = 45.0;
  const auto s = split_sym_anti(lame(lambda, mu));
  EXPECT_NEAR(full_trace(s.sym), 5 * lambda + 10 * mu, 1e-11);
  std::mt19937_64 rng(30);
  for (int n = 0; n < 100; ++n) {
    const ElasticityTensor c = fixture::random_tensor(rng);
    const auto p = split_sym_anti(c);
    EXPECT_LT((p.sym + p.anti - c).kelvin().max_abs(), 1e-15);
    EXPECT_NEAR(quad_dot(p.sym, p.anti), 0.0, 1e-14);
    const oracle::T4 ts = oracle::from_kelvin(p.sym.kelvin());
    EXPECT_LT(oracle::max_diff(oracle::totally_symmetric(ts), ts), 1e-15);
  }
}

TEST(Decompose, CghdIsotropicCoordinates) {
  const double shear = 37.5, bulk = 140.0;
  const auto t = decompose(isotropic_tensor(2 * shear, 3 * bulk), Scheme::CGHD);
  EXPECT_NEAR(t.alpha(), 2 * shear, 1e-12);
  EXPECT_NEAR(t.beta(), 3 * bulk, 1e-12);
  EXPECT_LT(t.ha().norm() + t.hb().norm() + t.H().norm(), 1e-12);
}

TEST(Decompose, UncoupledExampleCghd) {
  const auto t = decompose(fixture::uti_example(), Scheme::CGHD);
  EXPECT_NEAR(t.beta(), 800.0, 1e-12);
  EXPECT_LT(t.hb().norm(), 1e-12);
}

TEST(Decompose, ConstantYoungExampleSwhd) {
  const auto t = decompose(fixture::iyti_example(), Scheme::SWHD);
  EXPECT_NEAR(t.beta(), 10.0, 1e-13);
  EXPECT_LT(t.hb().norm(), 1e-13);
  EXPECT_LT(t.H().norm(), 1e-13);
  // The two scalar conditions on that matrix, in index components.
  const ElasticityTensor& s = fixture::iyti_example();
  const double s1111 = s.component(0, 0, 0, 0), s3333 = s.component(2, 2, 2, 2),
               s1133 = s.component(0, 0, 2, 2), s1313 = s.component(0, 2, 0, 2);
  EXPECT_NEAR(4 * s1111 - 3 * s3333 - s1133 - 2 * s1313, 0.0, 1e-13);
  EXPECT_NEAR(s1111 + s3333 - 2 * s1133 - 4 * s1313, 0.0, 1e-13);
}

TEST(Decompose, MatchesIndexOracle) {
  std::mt19937_64 rng(31);
  for (int n = 0; n < 30; ++n) {
    const ElasticityTensor c = fixture::random_tensor(rng);
    const oracle::T4 tc = oracle::from_kelvin(c.kelvin());
    for (Scheme s : {Scheme::CGHD, Scheme::SWHD}) {
      const auto t = decompose(c, s);
      const oracle::Decomposition o = s == Scheme::CGHD ? oracle::cghd(tc) : oracle::swhd(tc);
      EXPECT_NEAR(t.alpha(), o.alpha, 1e-13);
      EXPECT_NEAR(t.beta(), o.beta, 1e-13);
      EXPECT_LT(m3_diff(t.ha(), o.ha), 1e-13);
      EXPECT_LT(m3_diff(t.hb(), o.hb), 1e-13);
      EXPECT_LT((t.H().kelvin() - oracle::to_kelvin(o.H)).max_abs(), 1e-13);
      // The oracle's H is harmonic on its own.
      EXPECT_LT(oracle::max_diff(oracle::totally_symmetric(o.H), o.H), 1e-13);
      for (double v : oracle::tr12(o.H)) EXPECT_NEAR(v, 0.0, 1e-13);
    }
  }
}

TEST(Reconstruct, CghdSphericalOnly) {
  const auto p = isotropic_projectors();
  const HarmonicTriplet t(Scheme::CGHD, 0.0, 3.0, {}, {}, {});
  EXPECT_LT((reconstruct(t).general() - 3.0 * p.K).norm(), 1e-15);
}

TEST(Reconstruct, SwhdLameCoordinates) {
  const double lambda = 70.0, mu = 26.0;
  const HarmonicTriplet t(Scheme::SWHD, lambda - mu, lambda + 2 * mu, {}, {}, {});
  EXPECT_LT(fixture::rel(reconstruct(t), lame(lambda, mu)), 1e-14);
  const auto back = decompose(lame(lambda, mu), Scheme::SWHD);
  EXPECT_NEAR(back.alpha(), lambda - mu, 1e-12);
  EXPECT_NEAR(back.beta(), lambda + 2 * mu, 1e-12);
}

TEST_P(BothSchemes, RoundTrip) {
  std::mt19937_64 rng(32);
  for (int n = 0; n < 1000; ++n) {
    const ElasticityTensor c = fixture::random_tensor(rng, 100.0);
    ASSERT_LT((reconstruct(decompose(c, GetParam())) - c).norm() / c.norm(), 1e-10);
  }
}

TEST_P(BothSchemes, Equivariance) {
  std::mt19937_64 rng(33);
  for (int n = 0; n < 200; ++n) {
    const ElasticityTensor c = fixture::random_tensor(rng);
    const Rotation g = random_rotation(rng);
    expect_triplet_near(decompose(rotate(c, g), GetParam()), rotate(decompose(c, GetParam()), g), 1e-9);
  }
}

TEST_P(BothSchemes, Linearity) {
  std::mt19937_64 rng(34);
  for (int n = 0; n < 50; ++n) {
    const ElasticityTensor a = fixture::random_tensor(rng), b = fixture::random_tensor(rng);
    const auto ta = decompose(a, GetParam()), tb = decompose(b, GetParam());
    const auto sum = decompose(a + 2.0 * b, GetParam());
    EXPECT_NEAR(sum.alpha(), ta.alpha() + 2 * tb.alpha(), 1e-14);
    EXPECT_NEAR(sum.beta(), ta.beta() + 2 * tb.beta(), 1e-14);
    EXPECT_LT((sum.H().tensor() - ta.H().tensor() - 2.0 * tb.H().tensor()).norm(), 1e-14);
  }
}

TEST_P(BothSchemes, HarmonicInvariantsOfParts) {
  std::mt19937_64 rng(35);
  for (int n = 0; n < 50; ++n) {
    const auto t = decompose(fixture::random_tensor(rng), GetParam());
    EXPECT_NEAR(t.ha().tensor().trace(), 0.0, 1e-15);
    EXPECT_NEAR(t.hb().tensor().trace(), 0.0, 1e-15);
    EXPECT_LT(tr12(t.H().tensor()).norm(), 1e-14);
    const oracle::T4 h = oracle::from_kelvin(t.H().kelvin());
    EXPECT_LT(oracle::max_diff(oracle::totally_symmetric(h), h), 1e-15);
  }
}

INSTANTIATE_TEST_SUITE_P(Schemes, BothSchemes, ::testing::Values(Scheme::CGHD, Scheme::SWHD),
                         [](const auto& info) { return to_string(info.param); });

TEST(SchemeConsistency, SameFourthOrderPart) {
  std::mt19937_64 rng(36);
  for (int n = 0; n < 100; ++n) {
    const ElasticityTensor c = fixture::random_tensor(rng);
    const auto a = decompose(c, Scheme::CGHD), b = decompose(c, Scheme::SWHD);
    EXPECT_LT((a.H().tensor() - b.H().tensor()).norm(), 1e-12 * c.norm());
  }
}

TEST(SchemeConsistency, ConvertRoundTrip) {
  std::mt19937_64 rng(37);
  const ElasticityTensor c = fixture::random_tensor(rng);
  const auto a = decompose(c, Scheme::CGHD);
  expect_triplet_near(convert(convert(a, Scheme::SWHD), Scheme::CGHD), a, 1e-13);
}

TEST(CghdBlocks, DeviatoricAndSphericalBlocks) {
  const auto p = isotropic_projectors();
  const SymTensor2 one = SymTensor2::identity();
  std::mt19937_64 rng(38);
  for (int n = 0; n < 50; ++n) {
    const ElasticityTensor c = fixture::random_tensor(rng);
    const auto t = decompose(c, Scheme::CGHD);
    const FourthOrderTensor dd = double_dot(double_dot(p.J, c), p.J);
    const FourthOrderTensor want = t.alpha() * p.J + box_product(t.ha(), one) + t.H().tensor();
    EXPECT_LT((dd - want).norm(), 1e-14);
    const FourthOrderTensor ss = double_dot(double_dot(p.K, c), p.K);
    EXPECT_LT((ss - t.beta() * p.K).norm(), 1e-14);
  }
}

TEST(HarmonicTypes, RejectInvalidInput) {
  EXPECT_THROW((void)H2Tensor::from(SymTensor2::identity()), ValidationError);
  EXPECT_THROW((void)H4Tensor::from(isotropic_projectors().I), ValidationError);
  EXPECT_THROW((void)parse_scheme("voigt"), ValidationError);
  EXPECT_EQ(parse_scheme("swhd"), Scheme::SWHD);
}
