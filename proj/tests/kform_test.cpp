#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "hodgeopt/kform.hpp"
#include "test_support.hpp"

namespace hodgeopt {
namespace {

using Form = KForm<double>;

Form e(int n, std::initializer_list<int> idx) { return Form::basis(MultiIndex(n, idx)); }

double max_diff(const Form& a, const Form& b) {
  double worst = 0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

TEST(KForm, ShapeValidation) {
  EXPECT_EQ(Form(5, 2).size(), 10u);
  EXPECT_EQ(Form(4, 0).size(), 1u);
  EXPECT_EQ(Form(4, 4).size(), 1u);
  EXPECT_THROW(Form(3, 4), DomainError);
  EXPECT_THROW(Form(3, -1), DomainError);
  EXPECT_THROW(Form(0, 0), DomainError);
  EXPECT_THROW(Form(3, 2, {1.0, 2.0}), DomainError);
}

TEST(KForm, FromVector) {
  const Form a = from_vector(std::vector<double>{1, 0, 0});
  EXPECT_EQ(a, e(3, {1}));
  EXPECT_TRUE(from_vector(std::vector<double>{0, 0, 0}).is_zero());
  const Form b = from_vector(std::vector<double>{2, -1, 5});
  EXPECT_EQ(std::vector<double>(b.coeffs().begin(), b.coeffs().end()), (std::vector<double>{2, -1, 5}));
  EXPECT_EQ(b.grade(), 1);
  EXPECT_THROW(from_vector(std::vector<double>{}), DomainError);
}

TEST(KForm, WedgeExamples) {
  const Form e12 = wedge(e(3, {1}), e(3, {2}));
  EXPECT_EQ(e12, e(3, {1, 2}));

  std::mt19937_64 rng(3);
  const Form v = testing::random_form(rng, 5, 1);
  EXPECT_TRUE(wedge(v, v).is_zero());

  const Form w = wedge(from_vector(std::vector<double>{1, 0, 0}), from_vector(std::vector<double>{0, 2, 0}));
  EXPECT_EQ(w, 2.0 * e(3, {1, 2}));
}

TEST(KForm, WedgeErrors) {
  EXPECT_THROW(wedge(Form(3, 1), Form(4, 1)), DomainError);
  EXPECT_THROW(wedge(Form(3, 2), Form(3, 2)), DomainError);
}

TEST(KForm, HodgeExamples) {
  EXPECT_EQ(hodge(e(3, {1})), e(3, {2, 3}));
  EXPECT_EQ(hodge(e(3, {1, 2, 3})), Form::scalar(3, 1.0));
  EXPECT_EQ(hodge(e(4, {1, 2})), e(4, {3, 4}));
  // (1,3,2) has one inversion.
  EXPECT_EQ(hodge(e(3, {1, 3})), -e(3, {2}));
}

TEST(KForm, InnerExamples) {
  EXPECT_EQ(inner(e(3, {1, 2}), e(3, {1, 2})), 1.0);
  EXPECT_EQ(inner(e(3, {1, 2}), e(3, {1, 3})), 0.0);
  EXPECT_EQ(inner(2.0 * e(3, {1}), 3.0 * e(3, {1})), 6.0);
  EXPECT_THROW(inner(Form(3, 1), Form(3, 2)), DomainError);
  EXPECT_THROW(inner(Form(3, 1), Form(4, 1)), DomainError);
}

TEST(KForm, ComponentIsAntisymmetric) {
  std::mt19937_64 rng(5);
  const Form w = testing::random_form(rng, 5, 3);
  for (const auto& subset : testing::lex_subsets(5, 3)) {
    std::vector<int> perm = subset;
    do {
      EXPECT_EQ(w.component(perm), testing::tensor_value(w, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  const std::vector<int> repeated{2, 4, 2};
  EXPECT_EQ(w.component(repeated), 0.0);
}

TEST(KForm, HodgeInvolutionOnAllBasisForms) {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      const double sign = (k * (n - k)) % 2 ? -1.0 : 1.0;
      for (std::size_t pos = 0; pos < binomial(n, k); ++pos) {
        const Form basis = Form::basis(unrank_multi_index(n, k, pos));
        EXPECT_EQ(hodge(hodge(basis)), sign * basis) << "n=" << n << " k=" << k << " pos=" << pos;
      }
    }
  }
}

TEST(KForm, HodgeInvolutionOnRandomForms) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const int k = static_cast<int>(rng() % (n + 1));
    const Form w = testing::random_form(rng, n, k);
    const double sign = (k * (n - k)) % 2 ? -1.0 : 1.0;
    EXPECT_EQ(max_diff(hodge(hodge(w)), sign * w), 0.0);
  }
}

TEST(KForm, HodgeMatchesLeviCivitaContraction) {
  std::mt19937_64 rng(23);
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      const Form w = testing::random_form(rng, n, k);
      EXPECT_LT(max_diff(hodge(w), testing::levi_civita_hodge(w)), 1e-12) << "n=" << n << " k=" << k;
    }
  }
}

TEST(KForm, GradedAnticommutativity) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const int k = static_cast<int>(rng() % (n + 1));
    const int l = static_cast<int>(rng() % (n - k + 1));
    const Form a = testing::random_form(rng, n, k);
    const Form b = testing::random_form(rng, n, l);
    const double sign = (k * l) % 2 ? -1.0 : 1.0;
    EXPECT_LT(max_diff(wedge(a, b), sign * wedge(b, a)), 1e-12);
  }
}

TEST(KForm, AssociativityOnOneForms) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const Form a = testing::random_form(rng, n, 1);
    const Form b = testing::random_form(rng, n, 1);
    const Form c = testing::random_form(rng, n, 1);
    EXPECT_LT(max_diff(wedge(wedge(a, b), c), wedge(a, wedge(b, c))), 1e-12);
  }
}

TEST(KForm, DependentOneFormsWedgeToZero) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const Form a = testing::random_form(rng, n, 1);
    const Form b = testing::random_form(rng, n, 1);
    const Form c = 2.0 * a - 0.5 * b;
    const Form w = wedge(wedge(a, b), c);
    EXPECT_LT(norm(w), 1e-12);
  }
  EXPECT_TRUE(wedge(e(4, {2}), -3.0 * e(4, {2})).is_zero());
}

TEST(KForm, CrossProductBridge) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const auto u = testing::gaussian_vector(rng, 3);
    const auto v = testing::gaussian_vector(rng, 3);
    const std::vector<double> cross{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
    const auto star = to_vector(hodge(wedge(from_vector(u), from_vector(v))));
    EXPECT_LT(testing::max_abs_diff(star, cross), 1e-14);
  }
}

TEST(KForm, WedgeOfRowsGivesMinors) {
  // rows (1,2,3), (4,5,6): minors on (1,2), (1,3), (2,3).
  const Form w = wedge(from_vector(std::vector<double>{1, 2, 3}), from_vector(std::vector<double>{4, 5, 6}));
  EXPECT_EQ(w, Form(3, 2, {1 * 5 - 2 * 4, 1 * 6 - 3 * 4, 2 * 6 - 3 * 5}));
}

TEST(KForm, Bilinearity) {
  std::mt19937_64 rng(43);
  const Form a = testing::random_form(rng, 6, 2);
  const Form b = testing::random_form(rng, 6, 2);
  const Form c = testing::random_form(rng, 6, 3);
  EXPECT_LT(max_diff(wedge(2.0 * a + b, c), 2.0 * wedge(a, c) + wedge(b, c)), 1e-12);
}

}  // namespace
}  // namespace hodgeopt
