#include <doctest.h>

#include "freedom/assignment.hpp"
#include "freedom/error.hpp"
#include "freedom/oracle.hpp"
#include "support/generators.hpp"

namespace freedom::test {

namespace {

Error validation_error(const std::vector<double>& ne, const std::vector<double>& po) {
  try {
    validate(ne, po);
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected validation to fail");
  return Error(ErrorKind::DomainError, "unreachable");
}

}  // namespace

TEST_CASE("validate accepts consistent bounds") {
  const auto a = validate({0.6, 0.2}, {0.8, 0.4});
  CHECK(a.size() == 2);
  CHECK(a.ne(0) == 0.6);
  CHECK(a.po(1) == 0.4);
  CHECK(a.label(0) == "opt1");
  CHECK(a.label(1) == "opt2");

  const auto vac = validate({0.0, 0.0}, {1.0, 1.0}, {"a", "b"});
  CHECK(vac.label(1) == "b");
}

TEST_CASE("validate reports infeasible necessity mass") {
  const Error e = validation_error({0.7, 0.5}, {0.8, 0.6});
  CHECK(e.kind() == ErrorKind::Infeasible);
  CHECK(std::string(e.what()).find("Infeasible") != std::string::npos);
}

TEST_CASE("validate names every violated invariant") {
  const Error e = validation_error({0.9, 1.5, 0.2}, {0.1, 1.6, 0.3});
  CHECK(e.has(ErrorKind::BoundOrder));
  CHECK(e.has(ErrorKind::RangeError));
  CHECK(e.violations().size() >= 3);

  CHECK(validation_error({0.5}, {0.5}).kind() == ErrorKind::TooFewOptions);
  CHECK(validation_error({}, {}).kind() == ErrorKind::TooFewOptions);
  CHECK(validation_error({0.1, 0.1}, {0.3, 0.3}).kind() == ErrorKind::Infeasible);
  CHECK(validation_error({0.1, 0.1}, {0.3}).kind() == ErrorKind::ShapeMismatch);
}

TEST_CASE("validate absorbs decimal rounding within the tolerance") {
  CHECK_NOTHROW(validate({0.1, 0.2, 0.7}, {0.1, 0.2, 0.7}));
  CHECK_NOTHROW(validate({0.0, -5e-10}, {1.0 + 5e-10, 1.0}));
  const auto a = validate({0.0, -5e-10}, {1.0 + 5e-10, 1.0});
  CHECK(a.ne(1) == 0.0);
  CHECK(a.po(0) == 1.0);
}

TEST_CASE("tighten") {
  SUBCASE("already tight bounds are unchanged") {
    const auto a = validate({0.6, 0.2}, {0.8, 0.4});
    const auto t = tighten(a);
    CHECK(t.ne(0) == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(t.ne(1) == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(t.po(0) == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(t.po(1) == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(tighten(validate({0, 0}, {1, 1})) == validate({0, 0}, {1, 1}));
  }
  SUBCASE("two options collapse to the reachable point") {
    const auto t = tighten(validate({0.5, 0.4}, {0.5, 0.5}));
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK(t.ne(i) == doctest::Approx(0.5));
      CHECK(t.po(i) == doctest::Approx(0.5));
    }
  }
}

TEST_CASE("classify") {
  CHECK(classify(validate({0, 0}, {1, 1})) == AssignmentClass::vacuous);
  CHECK(classify(validate({0.3, 0.7}, {0.3, 0.7})) == AssignmentClass::point);
  CHECK(classify(validate({0.6, 0.2}, {0.8, 0.4})) == AssignmentClass::partial);
  // Raw bounds are loose but the sum constraint pins both options.
  CHECK(classify(validate({0.5, 0.4}, {0.5, 0.5})) == AssignmentClass::point);
  CHECK(to_string(AssignmentClass::partial) == "partial");
}

TEST_CASE("tighten properties over random assignments") {
  testing::Rng rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t m = 2 + trial % 6;
    const auto a = testing::random_assignment(rng, m);
    const auto t = tighten(a);
    const auto tt = tighten(t);
    for (std::size_t i = 0; i < m; ++i) {
      CHECK(t.ne(i) >= a.ne(i));
      CHECK(t.po(i) <= a.po(i));
      CHECK(tt.ne(i) == doctest::Approx(t.ne(i)).epsilon(1e-12));
      CHECK(tt.po(i) == doctest::Approx(t.po(i)).epsilon(1e-12));
    }
    const std::vector<double> ne(t.ne().begin(), t.ne().end());
    const std::vector<double> po(t.po().begin(), t.po().end());
    CHECK_NOTHROW(validate(ne, po));
  }
}

TEST_CASE("tightening leaves the sampled volume unchanged") {
  testing::Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = testing::random_assignment(rng, 3 + trial % 3);
    // Same seed, same samples: the acceptance sets coincide exactly.
    const auto raw = mc_freedom(a, 200'000, 5);
    const auto tight = mc_freedom(tighten(a), 200'000, 5);
    CHECK(std::abs(raw.mean - tight.mean) <= 4.0 * std::max(raw.std_error, 1e-6));
  }
}

}  // namespace freedom::test
