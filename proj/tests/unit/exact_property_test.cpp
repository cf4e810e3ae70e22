#include "doctest.h"

#include "../support/properties.hpp"

using namespace logcert;
using namespace logcert::testing;

TEST_CASE("field axioms on random elements") { CHECK(field_axiom_failures(300, 11) == 0); }

TEST_CASE("quad_sign agrees with a 50-digit decimal oracle") { CHECK(quad_sign_failures(300, 12) == 0); }

TEST_CASE("int_nth_root certificate and mpz_root oracle") { CHECK(nth_root_failures(300, 13) == 0); }

TEST_CASE("decimal renderings agree with doubled precision to one ulp") {
  CHECK(decimal_consistency_failures(200, 14) == 0);
}

TEST_CASE("pow_cmp agrees with direct powering") { CHECK(pow_cmp_failures(300, 15) == 0); }
