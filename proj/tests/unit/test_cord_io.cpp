#include <doctest.h>

#include "cordlasso/cord_io.hpp"
#include "cordlasso/errors.hpp"
#include "test_support.hpp"

using namespace cordlasso;
using cordlasso::testing::cords;

namespace {

const LeafSet kX{"a", "b", "c", "d"};

std::size_t error_line(std::string_view text) {
  try {
    parse_cord_file(text, kX);
  } catch (const ParseError& e) {
    return e.line();
  }
  FAIL("expected a ParseError");
  return 0;
}

}  // namespace

TEST_CASE("cord files") {
  const auto f = parse_cord_file("# header\nb a\n\n c d  # trailing\n", kX);
  CHECK(f.cords == cords({"ab", "cd"}));
  CHECK(f.distances.empty());
  CHECK(format_cords(f.cords) == "a b\nc d\n");
  CHECK(parse_cord_file("", kX).cords.empty());
}

TEST_CASE("partial distances") {
  const auto f = parse_cord_file("a b 2\nc d 1/2\na c\n", kX);
  CHECK(f.cords.size() == 3);
  CHECK(f.distances.size() == 2);
  CHECK(f.distances.at(Cord::make("c", "d")) == Rational(1, 2));
  CHECK(format_distances(f.distances) == "a b 2\nc d 1/2\n");
}

TEST_CASE("cord file errors") {
  CHECK(error_line("a b\na z\n") == 2);
  CHECK(error_line("a b\nb a\n") == 2);
  CHECK(error_line("a a\n") == 1);
  CHECK(error_line("a\n") == 1);
  CHECK(error_line("a b c d\n") == 1);
  CHECK(error_line("\n\na b 0\n") == 3);
  CHECK(error_line("a b -1\n") == 1);
  CHECK(error_line("a b x\n") == 1);
}

TEST_CASE("partition files") {
  const auto bp = parse_partition_file("# A then B\na b\nc d\n", kX);
  CHECK(bp.a_side == LeafSet{"a", "b"});
  CHECK(bp.b_side == LeafSet{"c", "d"});
  CHECK_THROWS_AS(parse_partition_file("a b\n", kX), ParseError);
  CHECK_THROWS_AS(parse_partition_file("a b\nc\n", kX), ParseError);
  CHECK_THROWS_AS(parse_partition_file("a b\nb c d\n", kX), ParseError);
  CHECK_THROWS_AS(parse_partition_file("a b\nc d\na\n", kX), ParseError);
}
