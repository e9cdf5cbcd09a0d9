#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ghp/errors.hpp"
#include "ghp/roots.hpp"
#include "oracles.hpp"

using namespace ghp;

TEST_CASE("decompose examples") {
  const Decomposition d = decompose(build_diffdiff({3, 2}), {3, 2});
  CHECK(d.m == 1);
  REQUIRE(d.q_poly.size() == 2);
  CHECK(d.q_poly[0] == -6);
  CHECK(d.q_poly[1] == 9);

  const Decomposition d55 = decompose(build_diffdiff({5, 5}), {5, 5});
  CHECK(d55.m == 0);
  CHECK(d55.q_poly.size() == 5);

  for (int r = 2; r <= 6; ++r) {
    const Decomposition d1 = decompose(build_diffdiff({r, 1}), {r, 1});
    CHECK(d1.m == static_cast<std::size_t>(r - 1));
    REQUIRE(d1.q_poly.size() == 1);
    CHECK(d1.q_poly[0] == r);
  }
}

TEST_CASE("decompose rejects malformed input") {
  IntPoly p = build_diffdiff({3, 2});
  p.add_term(2, mpz_class(5));
  CHECK_THROWS_AS(decompose(p, {3, 2}), MalformedPolynomial);
  CHECK_THROWS_AS(decompose(IntPoly(), {3, 2}), MalformedPolynomial);
}

TEST_CASE("decomposition invariants") {
  for (int r = 2; r <= 6; ++r)
    for (int n = 0; n <= 15; ++n) {
      const FamilyParams p(r, n);
      const IntPoly h = build_diffdiff(p);
      const Decomposition d = decompose(h, p);
      CHECK(d.m == p.lowest_exponent());
      CHECK((d.q_poly.size() - 1) * r + d.m == p.degree());
      IntPoly rebuilt;
      for (std::size_t i = 0; i < d.q_poly.size(); ++i) rebuilt.add_term(d.m + r * i, d.q_poly[i]);
      CHECK(rebuilt == h);
    }
}

TEST_CASE("positive_real_roots examples") {
  Decomposition lin;
  lin.r = 3;
  lin.n = 2;
  lin.m = 1;
  lin.q_poly = {-6, 9};
  const auto roots = positive_real_roots(lin, 1e-12);
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].lo <= mpq_class(2, 3));
  CHECK(roots[0].hi >= mpq_class(2, 3));
  CHECK(roots[0].multiplicity == 1);

  Decomposition constant;
  constant.q_poly = {5};
  CHECK(positive_real_roots(constant, 1e-12).empty());

  const auto h6 = positive_real_roots(decompose(build_diffdiff({2, 6}), {2, 6}), 1e-14);
  REQUIRE(h6.size() == 3);
  const double expected[] = {0.436077411927617, 1.335849074013697, 2.350604973674492};
  for (int i = 0; i < 3; ++i) CHECK(std::sqrt(h6[i].hi.get_d()) == doctest::Approx(expected[i]).epsilon(1e-12));
}

TEST_CASE("repeated roots are reported once with multiplicity") {
  Decomposition d;
  d.r = 2;
  d.m = 0;
  d.q_poly = {-2, 5, -4, 1};  // (z - 1)^2 (z - 2)
  const auto roots = positive_real_roots(d, 1e-12);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].multiplicity == 2);
  CHECK(roots[1].multiplicity == 1);
}

TEST_CASE("non-real roots of Q are surfaced") {
  Decomposition d;
  d.r = 2;
  d.n = 0;
  d.m = 0;
  d.q_poly = {2, -2, 1};  // z^2 - 2z + 2, roots 1 +- i
  IntPoly poly;
  poly.add_term(0, mpz_class(2));
  poly.add_term(2, mpz_class(-2));
  poly.add_term(4, mpz_class(1));
  const RootSet set = roots_from_decomposition(d, poly, 1e-12);
  CHECK(set.orbits.empty());
  REQUIRE(set.non_real_q_roots.size() == 2);
  CHECK(std::abs(set.non_real_q_roots[0] - std::complex<double>(1, -1)) < 1e-12);
  CHECK(std::abs(set.non_real_q_roots[1] - std::complex<double>(1, 1)) < 1e-12);
  CHECK(set.total_multiplicity() == 4);
}

TEST_CASE("repeated non-real roots keep their multiplicity") {
  Decomposition d;
  d.r = 2;
  d.m = 0;
  d.q_poly = {4, -8, 8, -4, 1};  // (z^2 - 2z + 2)^2
  IntPoly poly;
  for (std::size_t i = 0; i < d.q_poly.size(); ++i) poly.add_term(2 * i, d.q_poly[i]);
  const RootSet set = roots_from_decomposition(d, poly, 1e-12);
  CHECK(set.non_real_q_roots.size() == 4);
  CHECK(set.total_multiplicity() == 8);
}

TEST_CASE("negative roots of Q become rotated orbits") {
  Decomposition d;
  d.r = 3;
  d.m = 0;
  d.q_poly = {8, 1};  // z + 8: x^3 = -8
  IntPoly poly;
  poly.add_term(0, mpz_class(8));
  poly.add_term(3, mpz_class(1));
  const RootSet set = roots_from_decomposition(d, poly, 1e-12);
  REQUIRE(set.orbits.size() == 1);
  CHECK(set.orbits[0].radius == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(set.orbits[0].base_angle == doctest::Approx(std::numbers::pi / 3));
  bool found_minus_two = false;
  for (const auto& root : set.expand())
    if (std::abs(root.value - std::complex<double>(-2, 0)) < 1e-12) found_minus_two = true;
  CHECK(found_minus_two);
}

TEST_CASE("all_roots examples") {
  const RootSet h21 = all_roots({2, 1});
  CHECK(h21.zero_multiplicity == 1);
  CHECK(h21.orbits.empty());

  const RootSet h55 = all_roots({5, 5});
  CHECK(h55.zero_multiplicity == 0);
  CHECK(h55.orbits.size() == 4);
  CHECK(h55.total_multiplicity() == 20);
  CHECK(h55.non_real_q_roots.empty());

  const RootSet h32 = all_roots({3, 2});
  CHECK(h32.zero_multiplicity == 1);
  REQUIRE(h32.orbits.size() == 1);
  CHECK(h32.orbits[0].radius == doctest::Approx(std::cbrt(2.0 / 3.0)).epsilon(1e-12));
  CHECK_THROWS_AS(all_roots({3, 0}), std::invalid_argument);
}

TEST_CASE("counts, backward error and rotation invariance") {
  const double tol = 1e-12;
  for (int r = 2; r <= 5; ++r)
    for (int n = 1; n <= 10; ++n) {
      const FamilyParams p(r, n);
      const RootSet set = all_roots(p, tol);
      CHECK(set.total_multiplicity() == static_cast<int>(p.degree()));
      CHECK(set.zero_multiplicity == static_cast<int>(p.lowest_exponent()));
      CHECK(set.non_real_q_roots.empty());
      for (std::size_t i = 0; i < set.orbits.size(); ++i) {
        CHECK(set.orbits[i].backward_error <= tol);
        if (i) CHECK(set.orbits[i - 1].radius < set.orbits[i].radius);
      }
      int expanded = 0;
      for (const auto& root : set.expand()) expanded += root.multiplicity;
      CHECK(expanded == static_cast<int>(p.degree()));
    }
}

TEST_CASE("r = 2 roots interlace for consecutive n") {
  auto positives = [](int n) {
    std::vector<double> out;
    for (const auto& o : all_roots({2, n}).orbits) out.push_back(o.radius);
    return out;
  };
  for (int n = 2; n <= 12; ++n) {
    // Full real root lists, sorted.
    auto full = [&](int k) {
      std::vector<double> xs;
      for (double v : positives(k)) {
        xs.push_back(v);
        xs.push_back(-v);
      }
      if (k % 2) xs.push_back(0.0);
      std::sort(xs.begin(), xs.end());
      return xs;
    };
    const auto a = full(n - 1), b = full(n);
    REQUIRE(b.size() == a.size() + 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(b[i] < a[i]);
      CHECK(a[i] < b[i + 1]);
    }
  }
}

TEST_CASE("r = 2, n = 6 against the bisection oracle") {
  const auto h6 = oracle::classical_hermite(6);
  auto f = [&h6](double x) {
    double acc = 0.0;
    for (const auto& [e, c] : h6) acc += c.get_d() * std::pow(x, static_cast<double>(e));
    return acc;
  };
  const auto expected = oracle::bisection_roots(f, 0.01, 4.0, 4000);
  const RootSet set = all_roots({2, 6});
  REQUIRE(set.orbits.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(std::abs(set.orbits[i].radius - expected[i]) < 1e-10);
}

TEST_CASE("serialization") {
  const RootSet set = all_roots({3, 2});
  const auto j = roots_to_json(set);
  CHECK(j["r"] == 3);
  CHECK(j["n"] == 2);
  CHECK(j["zero_multiplicity"] == 1);
  CHECK(j["orbits"].size() == 1);
  CHECK(j["non_real_q_roots"].empty());
  const std::string csv = roots_to_csv(set);
  CHECK(csv.rfind("re,im,multiplicity\n0.0000000000000000e+00,0.0000000000000000e+00,1\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 1 + 3);
}
