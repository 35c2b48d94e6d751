#include "doctest.h"

#include <random>

#include "pgnlab/exterior.hpp"
#include "pgnlab/linalg.hpp"

using namespace pgnlab;

TEST_CASE("lexicographic subset order") {
  CHECK(subset_lex(3, 2, 1).members == std::vector<int>{1, 2});
  CHECK(subset_lex(3, 2, 2).members == std::vector<int>{1, 3});
  CHECK(subset_lex(3, 2, 3).members == std::vector<int>{2, 3});
  CHECK(rank_of(4, {2, 3}) == 4);  // {12},{13},{14},{23}
  CHECK_THROWS(subset_lex(3, 2, 4));
  CHECK_THROWS(subset_lex(3, 2, 0));
}

TEST_CASE("rank and unrank invert each other on all C(6,3) subsets") {
  for (long r = 1; r <= binom(6, 3); ++r) {
    auto s = subset_lex(6, 3, r);
    CHECK(rank_of(6, s.members) == r);
  }
}

TEST_CASE("wedge basics") {
  auto e1 = Multivector::basis_vector(3, 1);
  auto e2 = Multivector::basis_vector(3, 2);
  auto w = wedge(e1, e2);
  CHECK(w.p == 2);
  CHECK(w.coords(0) == 1);  // rank 1 in wedge^2(R^3) is {1,2}
  CHECK(w.coords(1) == 0);
  CHECK(w.coords(2) == 0);

  auto a = e1 + e2;           // (e1 + e2) ^ (e1 - e2) = -2 e1^e2
  auto b = e1 - e2;
  auto p = wedge(a, b);
  CHECK(p.at({1, 2}) == -2);

  auto v = Rat(3) * e1 + Rat(-5, 7) * e2;
  auto vv = wedge(v, v);
  for (long i = 0; i < vv.coords.size(); ++i) CHECK(vv.coords(i) == 0);
}

TEST_CASE("wedge is graded-anticommutative and associative") {
  std::mt19937_64 rng(7);
  auto rnd = [&] { return Rat(static_cast<long>(rng() % 11) - 5); };
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 4;
    Multivector a(d, 1), b(d, 2), c(d, 1);
    for (long i = 0; i < a.coords.size(); ++i) a.coords(i) = rnd();
    for (long i = 0; i < b.coords.size(); ++i) b.coords(i) = rnd();
    for (long i = 0; i < c.coords.size(); ++i) c.coords(i) = rnd();
    // a^b = (-1)^{1*2} b^a
    CHECK(wedge(a, b) == wedge(b, a));
    CHECK(wedge(a, c).coords == RatVector(-wedge(c, a).coords));
    CHECK(wedge(wedge(a, c), b) == wedge(a, wedge(c, b)));
  }
}

TEST_CASE("hodge star on basis elements") {
  auto s3 = hodge_star(wedge(Multivector::basis_vector(3, 1),
                             Multivector::basis_vector(3, 2)));
  CHECK(s3 == Multivector::basis_vector(3, 3));

  auto s4 = hodge_star(wedge(Multivector::basis_vector(4, 1),
                             Multivector::basis_vector(4, 3)));
  CHECK(s4.at({2, 4}) == -1);

  auto a = wedge(Multivector::basis_vector(4, 1), Multivector::basis_vector(4, 2));
  CHECK(hodge_star(hodge_star(a)) == a);  // (-1)^{2*2} = 1
}

TEST_CASE("star-star sign and integer bijection") {
  std::mt19937_64 rng(11);
  for (int d = 3; d <= 5; ++d)
    for (int p = 0; p <= d; ++p) {
      Multivector a(d, p);
      bool any_odd = false;
      for (long i = 0; i < a.coords.size(); ++i) {
        long v = static_cast<long>(rng() % 7) - 3;
        a.coords(i) = Rat(v);
        if (v % 2 != 0) any_odd = true;
      }
      (void)any_odd;
      auto ss = hodge_star(hodge_star(a));
      int sign = (p * (d - p)) % 2 == 0 ? 1 : -1;
      CHECK(ss.coords == RatVector(Rat(sign) * a.coords));
      // integer coords stay integer under the star
      auto st = hodge_star(a);
      for (long i = 0; i < st.coords.size(); ++i) CHECK(st.coords(i).get_den() == 1);
    }
}

TEST_CASE("pairing against the star: V ^ W vs <*V, W>") {
  std::mt19937_64 rng(13);
  const int d = 4, p = 2;
  for (int trial = 0; trial < 10; ++trial) {
    Multivector v(d, p), w(d, d - p);
    for (long i = 0; i < v.coords.size(); ++i) v.coords(i) = Rat(static_cast<long>(rng() % 9) - 4);
    for (long i = 0; i < w.coords.size(); ++i) w.coords(i) = Rat(static_cast<long>(rng() % 9) - 4);
    auto vw = wedge(v, w);
    Rat inner = 0;
    auto sv = hodge_star(v);
    for (long i = 0; i < sv.coords.size(); ++i) inner += sv.coords(i) * w.coords(i);
    CHECK(vw.coords(0) == inner);
  }
}

TEST_CASE("compounds of structured matrices") {
  RatMatrix id = RatMatrix::Identity(4, 4);
  CHECK(compound_matrix(id, 2) == RatMatrix::Identity(6, 6));

  RatMatrix diag = RatMatrix::Zero(3, 3);
  diag(0, 0) = Rat(2); diag(1, 1) = Rat(3); diag(2, 2) = Rat(5);
  RatMatrix c2 = compound_matrix(diag, 2);
  CHECK(c2(0, 0) == 6);   // {1,2}: 2*3
  CHECK(c2(1, 1) == 10);  // {1,3}: 2*5
  CHECK(c2(2, 2) == 15);  // {2,3}: 3*5
  CHECK(c2(0, 1) == 0);
}

TEST_CASE("compound multiplicativity and determinant identity") {
  std::mt19937_64 rng(17);
  auto rnd = [&] {
    Rat q(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
    q.canonicalize();
    return q;
  };
  for (int trial = 0; trial < 8; ++trial) {
    RatMatrix a(3, 3), b(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) { a(i, j) = rnd(); b(i, j) = rnd(); }
    CHECK(compound_matrix(RatMatrix(a * b), 2) ==
          RatMatrix(compound_matrix(a, 2) * compound_matrix(b, 2)));
    CHECK(determinant(compound_matrix(a, 2)) ==
          pow_int(determinant(a), binom(2, 1)));  // C(d-1, p-1) = C(2,1)
  }
}

TEST_CASE("compound problem of the flow") {
  RatMatrix th(2, 1);
  th << Rat(7, 10), Rat(3, 10);
  auto ctx = make_problem(1, 2, th);
  auto cp = compound_problem(ctx, 2);
  CHECK(cp.r == 3);
  CHECK(determinant(cp.basis) == 1);

  auto gp = weights_at(ctx, Rat(2));
  auto hatted = compound_weights(gp.weights, 2);
  CHECK(hatted(0) == 2);        // {1,2}: 4 * 1/2
  CHECK(hatted(1) == 2);        // {1,3}
  CHECK(hatted(2) == Rat(1, 4));  // {2,3}
  Rat prod = hatted(0) * hatted(1) * hatted(2);
  CHECK(prod == 1);

  auto ctx0 = make_problem(1, 2, RatMatrix::Zero(2, 1));
  CHECK(compound_problem(ctx0, 2).basis == RatMatrix::Identity(3, 3));
}
