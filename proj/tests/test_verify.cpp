#include <doctest.h>

#include <string>

#include "jaco/error.hpp"
#include "jaco/verify.hpp"

TEST_CASE("catalogue ids are unique and aliases resolve") {
  const auto props = jaco::verify_properties();
  CHECK(props.size() >= 20);
  for (std::size_t i = 0; i < props.size(); ++i) {
    for (std::size_t j = i + 1; j < props.size(); ++j) CHECK(props[i].id != props[j].id);
  }
  jaco::VerifyConfig config;
  config.polynomials = {{1, 0, 0}};
  config.max_order = 60;
  config.properties = {"2.4.1", "hope-complete"};
  const auto report = jaco::run_verification(config);
  CHECK(report.passed());
  std::size_t checked_props = 0;
  for (const auto& r : report.results) {
    if (r.checked > 0) ++checked_props;
  }
  CHECK(checked_props == 2);
}

TEST_CASE("unknown property is rejected") {
  jaco::VerifyConfig config;
  config.properties = {"no-such-property"};
  CHECK_THROWS_AS(jaco::run_verification(config), jaco::Error);
}

TEST_CASE("small default-grid run passes") {
  jaco::VerifyConfig config;
  config.max_order = 25;
  config.colouring_max_order = 8;
  const auto report = jaco::run_verification(config);
  for (const auto& r : report.results) {
    INFO(r.info.id << ": " << r.first_failure);
    CHECK(r.passed());
  }
}

TEST_CASE("constant incidence components") {
  jaco::VerifyConfig config;
  config.polynomials = {{0, 0, 0}};
  config.max_order = 10;
  config.properties = {"components"};
  CHECK(jaco::run_verification(config).passed());
}
