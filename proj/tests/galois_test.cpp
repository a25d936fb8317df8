#include <doctest.h>

#include <numeric>

#include "tgrs/galois.hpp"

using namespace tgrs;

namespace {

// Independent inverse oracle for prime fields: extended Euclid on integers.
long long euclid_inverse(long long a, long long p) {
  long long t = 0, newt = 1, r = p, newr = a;
  while (newr != 0) {
    long long quot = r / newr;
    std::swap(t, newt);
    newt -= quot * t;
    std::swap(r, newr);
    newr -= quot * r;
  }
  return ((t % p) + p) % p;
}

// Multiplicative order by brute force.
std::uint64_t order_of(const Field& f, Gf x) {
  Gf y = x;
  std::uint64_t ord = 1;
  while (y != 1) {
    y = f.mul(y, x);
    ++ord;
  }
  return ord;
}

const std::uint32_t kSmallPrimePowers[][2] = {
    {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1},  {2, 3}, {3, 2}, {11, 1}, {13, 1},
    {2, 4}, {17, 1}, {19, 1}, {23, 1}, {5, 2}, {3, 3}, {29, 1}, {31, 1}, {2, 5},
    {37, 1}, {41, 1}, {43, 1}, {47, 1}, {7, 2}, {53, 1}, {59, 1}, {61, 1}, {2, 6},
};

}  // namespace

TEST_SUITE_BEGIN("galois");

TEST_CASE("make_field basics") {
  auto f5 = Field::make(5, 1);
  CHECK(f5->q() == 5);
  CHECK(f5->add(0, 3) == 3);
  CHECK(f5->mul(1, 4) == 4);

  auto f8 = Field::make(2, 3, std::vector<std::uint32_t>{1, 1, 0, 1});
  CHECK(f8->q() == 8);
  // default table picks the same polynomial: x^3 + x + 1 is the least
  auto f8d = Field::make(2, 3);
  CHECK(f8d->modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
  CHECK(*f8 == *f8d);

  CHECK_THROWS_WITH_AS(Field::make(2, 3, std::vector<std::uint32_t>{0, 0, 0, 1}),
                       doctest::Contains("ReducibleModulus"), Error);
  CHECK_THROWS_AS(Field::make(6, 1), Error);
  CHECK_THROWS_AS(Field::make(2, 17), Error);  // q > 2^16 without modulus
}

TEST_CASE("arithmetic examples") {
  auto f5 = Field::make(5, 1);
  CHECK(f5->mul(4, 4) == 1);  // 16 mod 5

  auto f8 = Field::make(2, 3);
  CHECK(f8->mul(2, 4) == 3);  // x * x^2 = x^3 = x + 1

  for (auto [p, m] : {std::pair<int, int>{5, 1}, {2, 3}, {3, 2}}) {
    auto f = Field::make(p, m);
    for (Gf x = 0; x < f->q(); ++x) CHECK(f->add(x, f->neg(x)) == 0);
  }
}

TEST_CASE("inverses") {
  auto f5 = Field::make(5, 1);
  CHECK(f5->inv(4) == 4);
  auto f7 = Field::make(7, 1);
  CHECK(f7->inv(6) == 6);
  CHECK(f7->inv(1) == 1);
  CHECK_THROWS_AS((void)f7->inv(0), Error);

  // oracle comparison over prime fields
  for (std::uint32_t p : {5u, 7u, 13u, 31u}) {
    auto f = Field::make(p, 1);
    for (Gf x = 1; x < p; ++x) CHECK(f->inv(x) == Gf(euclid_inverse(x, p)));
  }
}

TEST_CASE("pow") {
  auto f5 = Field::make(5, 1);
  CHECK(f5->pow(2, 3) == 3);
  CHECK(f5->pow(0, 0) == 1);
  CHECK(f5->pow(2, -1) == f5->inv(2));
  CHECK(f5->pow(0, 5) == 0);
  CHECK_THROWS_AS((void)f5->pow(0, -1), Error);

  auto f8 = Field::make(2, 3);
  for (Gf x = 1; x < 8; ++x) CHECK(f8->pow(x, 7) == 1);

  // Frobenius: x^q = x
  for (auto [p, m] : {std::pair<int, int>{2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {5, 2}}) {
    auto f = Field::make(p, m);
    for (Gf x = 0; x < f->q(); ++x) CHECK(f->pow(x, f->q()) == x);
  }
}

TEST_CASE("primitive element") {
  CHECK(Field::make(5, 1)->primitive_element() == 2);
  CHECK(Field::make(7, 1)->primitive_element() == 3);  // 2 has order 3
  CHECK(Field::make(2, 2)->primitive_element() == 2);

  for (auto [p, m] : {std::pair<int, int>{5, 1}, {7, 1}, {3, 2}, {2, 4}, {13, 1}}) {
    auto f = Field::make(p, m);
    Gf g = f->primitive_element();
    CHECK(order_of(*f, g) == f->q() - 1);
    // smallest-rep: nothing below it generates
    for (Gf x = 2; x < g; ++x) CHECK(order_of(*f, x) < f->q() - 1);
  }
}

TEST_CASE("quadratic character") {
  auto f7 = Field::make(7, 1);
  CHECK(f7->quadratic_character(2) == 1);   // 3^2 = 2
  CHECK(f7->quadratic_character(3) == -1);  // squares mod 7 are {1,2,4}
  CHECK(f7->quadratic_character(0) == 0);
  CHECK_THROWS_AS((void)Field::make(2, 3)->quadratic_character(1), Error);

  // multiplicativity
  for (auto [p, m] : {std::pair<int, int>{5, 1}, {7, 1}, {3, 2}, {5, 2}}) {
    auto f = Field::make(p, m);
    for (Gf x = 1; x < f->q(); ++x)
      for (Gf y = 1; y < f->q(); ++y)
        CHECK(f->quadratic_character(f->mul(x, y)) ==
              f->quadratic_character(x) * f->quadratic_character(y));
  }
}

TEST_CASE("square roots") {
  auto f5 = Field::make(5, 1);
  CHECK(f5->sqrt(4) == Gf(2));  // roots {2,3}, smaller wins
  CHECK(f5->sqrt(0) == Gf(0));

  auto f8 = Field::make(2, 3);
  for (Gf x = 0; x < 8; ++x) CHECK(f8->sqrt(x) == f8->pow(x, 4));

  auto f7 = Field::make(7, 1);
  CHECK_FALSE(f7->sqrt(3).has_value());

  for (auto [p, m] : {std::pair<int, int>{5, 1}, {7, 1}, {3, 2}, {5, 2}, {2, 4}}) {
    auto f = Field::make(p, m);
    std::size_t with_root = 0;
    for (Gf x = 1; x < f->q(); ++x) {
      auto r = f->sqrt(x);
      if (r) {
        CHECK(f->mul(*r, *r) == x);
        ++with_root;
      }
    }
    if (f->p() == 2)
      CHECK(with_root == f->q() - 1);
    else
      CHECK(with_root == (f->q() - 1) / 2);
  }
}

TEST_CASE("subfield elements") {
  auto f9 = Field::make(3, 2);
  auto s3 = f9->subfield_elements(1);
  CHECK(s3.size() == 3);
  for (Gf x : s3) CHECK(f9->pow(x, 3) == x);

  auto f4 = Field::make(2, 2);
  CHECK(f4->subfield_elements(1) == std::vector<Gf>{0, 1});

  auto f16 = Field::make(2, 4);
  auto s4 = f16->subfield_elements(2);
  CHECK(s4.size() == 4);
  for (Gf x : s4)
    for (Gf y : s4) {
      bool add_in = std::find(s4.begin(), s4.end(), f16->add(x, y)) != s4.end();
      bool mul_in = std::find(s4.begin(), s4.end(), f16->mul(x, y)) != s4.end();
      CHECK(add_in);
      CHECK(mul_in);
    }
  for (Gf x : s4)
    if (x != 0)
      CHECK(std::find(s4.begin(), s4.end(), f16->inv(x)) != s4.end());

  // subfield members are squares in an odd big field
  auto f25 = Field::make(5, 2);
  for (Gf x : f25->subfield_elements(1))
    if (x != 0) CHECK(f25->quadratic_character(x) == 1);

  CHECK_THROWS_AS((void)f9->subfield_elements(3), Error);
}

TEST_CASE("field axioms exhaustively for q <= 64") {
  for (auto [p, m] : kSmallPrimePowers) {
    auto fp = Field::make(p, m);
    const Field& f = *fp;
    const Gf q = f.q();
    for (Gf a = 0; a < q; ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      for (Gf b = 0; b < q; ++b)
        for (Gf c = 0; c < q; ++c) {
          CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
    }
  }
}

TEST_CASE("field spec parsing") {
  auto f8 = Field::parse("q=8");
  CHECK(f8->p() == 2);
  CHECK(f8->m() == 3);
  auto f8p = Field::parse("q=8,poly=1,1,0,1");
  CHECK(*f8 == *f8p);
  CHECK(Field::parse("q=13")->q() == 13);
  CHECK_THROWS_AS((void)Field::parse("q=12"), Error);
  CHECK_THROWS_AS((void)Field::parse("n=12"), Error);
}

TEST_SUITE_END();
