#include <doctest.h>

#include "freedom/error.hpp"
#include "freedom/measures.hpp"
#include "freedom/oracle.hpp"
#include "support/generators.hpp"

namespace freedom::test {

TEST_CASE("vacuous region is the whole triangle") {
  const auto r = region_polygon(validate({0, 0, 0}, {1, 1, 1}));
  REQUIRE(r.vertices.size() == 3);
  CHECK(r.vertices[0] == std::array<double, 2>{0, 0});
  CHECK(r.vertices[1] == std::array<double, 2>{1, 0});
  CHECK(r.vertices[2] == std::array<double, 2>{0, 1});
  CHECK(r.area_fraction == 1.0);
}

TEST_CASE("half-bounded region") {
  const auto r = region_polygon(validate({0, 0, 0}, {0.5, 0.5, 0.5}));
  CHECK(r.area_fraction == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(r.vertices.size() == 3);  // the medial triangle
}

TEST_CASE("degenerate and wrong-size inputs") {
  const auto point = region_polygon(validate({0.2, 0.3, 0.5}, {0.2, 0.3, 0.5}));
  CHECK(point.area_fraction == 0.0);
  CHECK(point.vertices.size() <= 2);
  CHECK_THROWS_AS(region_polygon(validate({0, 0}, {1, 1})), Error);
  try {
    region_polygon(validate({0, 0, 0, 0}, {1, 1, 1, 1}));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WrongDimension);
  }
}

TEST_CASE("polygon area equals the closed form and stays inside the bounds") {
  testing::Rng rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = testing::random_assignment(rng, 3);
    const auto r = region_polygon(a);
    CHECK(std::abs(r.area_fraction - freedom(a)) <= 1e-9);
    double signed_area = 0.0;
    for (std::size_t i = 0; i < r.vertices.size(); ++i) {
      const auto& [x, y] = r.vertices[i];
      const auto& [nx, ny] = r.vertices[(i + 1) % r.vertices.size()];
      signed_area += x * ny - nx * y;
      CHECK(x >= a.ne(0) - 1e-9);
      CHECK(x <= a.po(0) + 1e-9);
      CHECK(y >= a.ne(1) - 1e-9);
      CHECK(y <= a.po(1) + 1e-9);
      CHECK(1.0 - x - y >= a.ne(2) - 1e-9);
      CHECK(1.0 - x - y <= a.po(2) + 1e-9);
    }
    CHECK(signed_area >= -1e-12);  // counter-clockwise
  }
}

}  // namespace freedom::test
