#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mukai/json_io.hpp"
#include "mukai/lattice.hpp"
#include "mukai/roots.hpp"
#include "oracle.hpp"

using namespace mukai;

namespace {

DivisorClass random_divisor(const Params& p, std::mt19937_64& rng, int64_t spread = 5) {
  std::uniform_int_distribution<int64_t> coord(-spread, spread);
  DivisorClass d = DivisorClass::zero(p);
  for (auto& v : d.h) v = coord(rng);
  for (auto& v : d.m) v = coord(rng);
  return d;
}

} // namespace

TEST_CASE("params validation") {
  CHECK_NOTHROW(Params(2, 1, 3));
  CHECK_NOTHROW(Params(3, 1, 2)); // c = 2 allowed when a > 2
  CHECK_THROWS_AS(Params(1, 1, 3), invalid_params);
  CHECK_THROWS_AS(Params(2, 0, 3), invalid_params);
  CHECK_THROWS_AS(Params(2, 1, 2), invalid_params);
  CHECK_THROWS_AS(Params(2, 1, 1), invalid_params);
}

TEST_CASE("derived constants and the kappa identity") {
  Params p(2, 3, 5);
  CHECK(p.rank() == 9);
  CHECK(p.dim() == 4);
  CHECK(p.kappa() == 3);
  // kappa = (a-1)(c-1) - 1 across the whole small range
  for (int64_t a = 2; a <= 30; ++a) {
    for (int64_t c = 2; c <= 30; ++c) {
      if (c == 2 && a <= 2) continue;
      Params q(a, 1, c);
      CHECK(q.kappa() == q.dim() - 1);
    }
  }
}

TEST_CASE("pairing on basis classes") {
  for (Params p : {Params(2, 3, 4), Params(3, 2, 3), Params(2, 1, 3), Params(4, 1, 5)}) {
    const auto e1 = DivisorClass::exceptional(p, 1);
    const auto h1 = DivisorClass::hyperplane(p, 1);
    CHECK(mukai_pairing(e1, e1, p) == -1);
    CHECK(mukai_pairing(h1, e1, p) == 0);
  }
  Params p234(2, 3, 4);
  CHECK(mukai_pairing(DivisorClass::hyperplane(p234, 1), DivisorClass::hyperplane(p234, 1),
                      p234) == 2);
  Params p323(3, 2, 3);
  CHECK(mukai_pairing(DivisorClass::hyperplane(p323, 1), DivisorClass::hyperplane(p323, 2),
                      p323) == 2);
}

TEST_CASE("gram matrix blocks match the pairing") {
  Params p(3, 2, 4);
  const auto g = mukai_gram(p);
  const auto rho = static_cast<std::size_t>(p.rank());
  REQUIRE(g.size() == rho);
  for (std::size_t i = 0; i < rho; ++i) {
    for (std::size_t j = 0; j < rho; ++j) {
      CHECK(g[i][j] == g[j][i]);
    }
  }
  for (std::size_t i = 0; i < 2; ++i) CHECK(g[i][i] == p.c - 2);
  for (std::size_t j = 2; j < rho; ++j) CHECK(g[j][j] == -1);

  // quadratic form through the gram matrix equals mukai_pairing
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = random_divisor(p, rng);
    const auto y = random_divisor(p, rng);
    // basis coefficients: (h, -m)
    std::vector<int64_t> vx = x.h, vy = y.h;
    for (int64_t m : x.m) vx.push_back(-m);
    for (int64_t m : y.m) vy.push_back(-m);
    int64_t acc = 0;
    for (std::size_t i = 0; i < rho; ++i) {
      for (std::size_t j = 0; j < rho; ++j) acc += vx[i] * g[i][j] * vy[j];
    }
    CHECK(acc == mukai_pairing(x, y, p));
  }
}

TEST_CASE("pairing is symmetric and bilinear") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int64_t> scalar(-4, 4);
  for (Params p : {Params(2, 3, 3), Params(3, 2, 4)}) {
    for (int trial = 0; trial < 30; ++trial) {
      const auto x = random_divisor(p, rng);
      const auto y = random_divisor(p, rng);
      const auto z = random_divisor(p, rng);
      const int64_t s = scalar(rng);
      CHECK(mukai_pairing(x, y, p) == mukai_pairing(y, x, p));
      CHECK(mukai_pairing(x + s * DivisorClass(y), z, p) ==
            mukai_pairing(x, z, p) + s * mukai_pairing(y, z, p));
    }
  }
}

TEST_CASE("pairing rejects incompatible divisors") {
  Params p(2, 3, 3), q(2, 3, 4);
  CHECK_THROWS_AS(mukai_pairing(DivisorClass::zero(p), DivisorClass::zero(q), p),
                  dimension_mismatch);
}

TEST_CASE("anticanonical class printed cases") {
  Params p234(2, 3, 4);
  const auto antik = anticanonical(p234);
  CHECK(antik == parse_divisor("[4 | 2,2,2,2,2,2,2]", p234));
  CHECK(antik == 2 * parse_divisor("[2 | 1,1,1,1,1,1,1]", p234));

  Params p323(3, 2, 3);
  CHECK(anticanonical(p323) == 3 * parse_divisor("[1,1 | 1,1,1,1,1]", p323));

  Params p233(2, 3, 3);
  CHECK(anticanonical(p233) == parse_divisor("[3 | 1,1,1,1,1,1]", p233));
}

TEST_CASE("anticanonical is the unique root-orthogonal class with h = c") {
  for (Params p : {Params(2, 3, 3), Params(3, 2, 4), Params(4, 1, 3)}) {
    const auto rs = simple_roots(p);
    const auto antik = anticanonical(p);
    for (const auto& alpha : rs.simple_roots) {
      CHECK(mukai_pairing(antik, alpha, p) == 0);
    }
    // the roots span a corank-1 sublattice, so orthogonality pins -K up to
    // scale; exact rank check over the rationals
    std::vector<std::vector<Rat>> rows;
    for (const auto& alpha : rs.simple_roots) {
      std::vector<Rat> row;
      for (int64_t v : alpha.h) row.emplace_back(v);
      for (int64_t v : alpha.m) row.emplace_back(v);
      rows.push_back(std::move(row));
    }
    CHECK(oracle::rank(rows) == static_cast<std::size_t>(p.rank() - 1));
  }
}

TEST_CASE("anticanonical degree") {
  for (Params p : {Params(2, 3, 4), Params(3, 2, 3), Params(2, 1, 3), Params(2, 2, 6)}) {
    for (int64_t j = 1; j <= p.num_points(); ++j) {
      CHECK(anticanonical_degree(DivisorClass::exceptional(p, j), p) == 1);
    }
  }
  Params p234(2, 3, 4);
  CHECK(anticanonical_degree(DivisorClass::hyperplane(p234, 1), p234) == 4);
  Params p233(2, 3, 3);
  CHECK(anticanonical_degree(anticanonical(p233), p233) == 3);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto x = random_divisor(p234, rng);
    const auto y = random_divisor(p234, rng);
    CHECK(anticanonical_degree(x + y, p234) ==
          anticanonical_degree(x, p234) + anticanonical_degree(y, p234));
  }
}

TEST_CASE("mori dream criterion") {
  CHECK(is_mori_dream(Params(2, 3, 5)));
  CHECK_FALSE(is_mori_dream(Params(3, 3, 3)));
  CHECK_FALSE(is_mori_dream(Params(2, 4, 4)));
  CHECK(is_mori_dream(Params(7, 1, 2))); // b = 1 is always finitely generated
}

TEST_CASE("mori dream agrees with Cartan positive definiteness") {
  for (int64_t a = 2; a <= 10; ++a) {
    for (int64_t b = 1; b <= 10; ++b) {
      for (int64_t c = 2; c <= 10; ++c) {
        if (a + b + c > 12) continue;
        if (c == 2 && a <= 2) continue;
        Params p(a, b, c);
        CHECK(is_mori_dream(p) == cartan_positive_definite(simple_roots(p)));
      }
    }
  }
}

TEST_CASE("case classification") {
  CHECK(classify_case(Params(2, 4, 3)) == CaseLabel::DelPezzoSurface);
  CHECK(classify_case(Params(3, 2, 3)) == CaseLabel::Sporadic);
  CHECK(classify_case(Params(3, 1, 2)) == CaseLabel::OneExtraPoint);
  CHECK(classify_case(Params(2, 2, 7)) == CaseLabel::TwoExtraPoints);
  CHECK(classify_case(Params(2, 3, 5)) == CaseLabel::Sporadic);
  CHECK(classify_case(Params(5, 3, 2)) == CaseLabel::Sporadic); // swaps to (2,3,5)
  CHECK_THROWS_AS(classify_case(Params(3, 3, 3)), not_mori_dream);

  // every Mori dream triple lands in exactly one case
  for (int64_t a = 2; a <= 12; ++a) {
    for (int64_t b = 1; b <= 12; ++b) {
      for (int64_t c = 2; c <= 12; ++c) {
        if (c == 2 && a <= 2) continue;
        Params p(a, b, c);
        if (!is_mori_dream(p)) continue;
        CHECK_NOTHROW(classify_case(p));
      }
    }
  }
}

TEST_CASE("divisor text format round trip") {
  Params p234(2, 3, 4);
  const auto l = parse_divisor("[2 | 1,1,1,1,1,1,1]", p234);
  CHECK(l.h == std::vector<int64_t>{2});
  CHECK(l.m == std::vector<int64_t>(7, 1));
  CHECK(format_divisor(l, p234) == "[2 | 1,1,1,1,1,1,1]");

  Params p213(2, 1, 3);
  CHECK(parse_divisor("[0 | 1,0,0,0]", p213) == -DivisorClass::exceptional(p213, 1));
  CHECK(parse_divisor("[0 | -1,0,0,0]", p213) == DivisorClass::exceptional(p213, 1));

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const auto d = random_divisor(p234, rng, 40);
    CHECK(parse_divisor(format_divisor(d, p234), p234) == d);
  }
}

TEST_CASE("divisor text format errors") {
  Params p(2, 1, 3);
  CHECK_THROWS_AS(parse_divisor("no brackets", p), parse_error);
  CHECK_THROWS_AS(parse_divisor("[1 | 2", p), parse_error);
  CHECK_THROWS_AS(parse_divisor("[1,2 | 1,1,1,1]", p), parse_error); // wrong h arity
  CHECK_THROWS_AS(parse_divisor("[1 | 1,1,1]", p), parse_error);     // wrong m arity
  CHECK_THROWS_AS(parse_divisor("[1 | 1,x,1,1]", p), parse_error);
  CHECK_THROWS_AS(parse_divisor("[1 , 1,1,1,1]", p), parse_error); // missing separator
}

TEST_CASE("coordinate overflow is detected, never wrapped") {
  Params p(2, 1, 3);
  DivisorClass big = DivisorClass::zero(p);
  big.h[0] = std::numeric_limits<int64_t>::max();
  CHECK_THROWS_AS(big + DivisorClass::hyperplane(p, 1), std::overflow_error);
  CHECK_THROWS_AS(mukai_pairing(big, big, p), std::overflow_error);
}
