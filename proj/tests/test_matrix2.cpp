#include <doctest.h>

#include "ptdimer/matrix2.hpp"

using namespace ptdimer;

TEST_CASE("matrix2 algebra") {
  const Complex i{0.0, 1.0};
  const Matrix2c a{1.0, 2.0 * i, 3.0, 4.0 - i};
  const Matrix2c b{0.5, 1.0, -i, 2.0};

  CHECK(a(1, 2) == 2.0 * i);
  CHECK(a(2, 1) == Complex{3.0});
  CHECK(Matrix2c::identity() * a == a);
  CHECK(a * Matrix2c::identity() == a);

  const Matrix2c ab = a * b;
  CHECK(ab.m11 == 1.0 * 0.5 + 2.0 * i * -i);
  CHECK(ab.m22 == 3.0 * 1.0 + (4.0 - i) * 2.0);

  CHECK(det(a) == 1.0 * (4.0 - i) - 2.0 * i * 3.0);
  CHECK(trace(a) == 5.0 - i);
  CHECK(adjoint(a).m12 == Complex{3.0});
  CHECK(adjoint(a).m21 == -2.0 * i);
  CHECK(transpose(a).m12 == Complex{3.0});
  CHECK(conj(a).m12 == -2.0 * i);
  CHECK(max_abs(a - a) == 0.0);
  CHECK(max_abs(a) == doctest::Approx(std::abs(4.0 - i)));
  CHECK(is_finite(a));
  CHECK_FALSE(is_finite(Matrix2c{std::numeric_limits<double>::infinity(), 0.0, 0.0, 0.0}));
}
