#include <doctest.h>

#include <sstream>

#include "pdmc/io.hpp"

using namespace pdmc;

TEST_CASE("field spec strings") {
  CHECK(parse_field_spec("7")->order() == 7);
  CHECK(parse_field_spec("7^3")->order() == 343);
  auto f4 = parse_field_spec("2^2/1,1,1");
  CHECK(f4->order() == 4);
  CHECK(f4->modulus() == std::vector<Label>{1, 1, 1});
  CHECK(parse_field_spec(f4->spec_string())->order() == 4);
  CHECK_THROWS_AS(parse_field_spec("abc"), BadParamsError);
  CHECK_THROWS_AS(parse_field_spec("9"), NotPrimeError);
}

TEST_CASE("code description files") {
  auto f5 = make_field(5);
  auto code = rs_code(f5, 5, 3);
  std::stringstream ss;
  write_generator_code(ss, code);
  auto rt = read_code(ss);
  CHECK_FALSE(rt.bch.has_value());
  CHECK(rt.code.n == 5);
  CHECK(rt.code.k == 3);
  CHECK(rt.code.G == code.G);

  std::stringstream bs("bch 2 4 15 1 7\n");
  auto bch = read_code(bs);
  REQUIRE(bch.bch.has_value());
  CHECK(bch.code.k == 5);
  CHECK(bch.bch->spec.delta == 7);

  std::stringstream bad("what\n");
  CHECK_THROWS_AS(read_code(bad), BadParamsError);
}
