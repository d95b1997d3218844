#include <doctest.h>

#include "helpers.hpp"
#include "sccd/design_io.hpp"

using namespace sccd;

namespace {

ErrorCode code_of(const std::string& text, std::size_t* line = nullptr) {
  try {
    parse_design(text);
  } catch (const Error& e) {
    if (line) *line = e.line();
    return e.code();
  }
  FAIL("parse succeeded");
  return ErrorCode::invalid_design;
}

}  // namespace

TEST_CASE("serialize is the bit-exact format") {
  const Design d(Kind::linear, {{1, 2, 3}, {1, 2, 4}});
  CHECK(serialize_design(d) == "sccd linear v=4 k=3 b=2\n1 2 3\n1 2 4\n");
  CHECK(serialize_design(d, "note") == "sccd linear v=4 k=3 b=2\n# note\n1 2 3\n1 2 4\n");
}

TEST_CASE("round trip keeps label positions") {
  for (const auto& name : catalog_list()) {
    CAPTURE(name);
    const auto& d = cat(name.c_str());
    CHECK(parse_design(serialize_design(d)) == d);
    CHECK(parse_design(serialize_design(d, name)) == d);
  }
}

TEST_CASE("comments and trailing blank lines are accepted") {
  const auto d = parse_design("sccd circular v=3 k=2 b=3\n# a\n0 1\n# b\n1 2\n2 0\n\n");
  CHECK(d.b() == 3);
  CHECK(d.circular());
  CHECK(parse_design("sccd linear v=3 k=2 b=2\r\n0 1\r\n1 2").b() == 2);
}

TEST_CASE("syntax errors carry line numbers") {
  std::size_t line = 0;
  CHECK(code_of("", &line) == ErrorCode::syntax_error);
  CHECK(code_of("sccd spiral v=3 k=2 b=2\n0 1\n1 2\n", &line) == ErrorCode::syntax_error);
  CHECK(line == 1);
  CHECK(code_of("sccd linear v=3 k=2\n0 1\n1 2\n") == ErrorCode::syntax_error);
  CHECK(code_of("sccd linear v=3 k=2 b=2\n0 1 2\n1 2\n", &line) == ErrorCode::syntax_error);
  CHECK(line == 2);
  CHECK(code_of("sccd linear v=3 k=2 b=2\n0 x\n1 2\n", &line) == ErrorCode::syntax_error);
  CHECK(line == 2);
  CHECK(code_of("sccd linear v=3 k=2 b=2\n0 -1\n1 2\n") == ErrorCode::syntax_error);
  CHECK(code_of("sccd linear v=3 k=2 b=2\n0 1\n1 2\n2 0\n", &line) == ErrorCode::syntax_error);
  CHECK(line == 4);
  CHECK(code_of("sccd linear v=3 k=2 b=2\n0 1\n\n1 2\n") == ErrorCode::syntax_error);
}

TEST_CASE("header says b=10 but nine block lines follow") {
  auto text = serialize_design(cat("sccd_7_3_10"));
  text.erase(text.rfind('\n', text.size() - 2) + 1);
  CHECK(code_of(text) == ErrorCode::syntax_error);
}

TEST_CASE("invariant violations name the blocks") {
  auto blocks = cat("sccd_7_3_10").blocks();
  blocks[4] = {7, 3, 6};
  const auto text = serialize_design(Design(Kind::linear, blocks));
  try {
    parse_design(text);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invariant_violation);
    CHECK(e.line() == 6);
    CHECK(std::string(e.what()).find("blocks 4 and 5") != std::string::npos);
  }
  std::size_t line = 0;
  CHECK(code_of("sccd linear v=3 k=2 b=2\n0 0\n0 1\n", &line) == ErrorCode::invariant_violation);
  CHECK(line == 2);
  CHECK(code_of("sccd linear v=5 k=2 b=2\n0 1\n1 2\n", &line) == ErrorCode::invariant_violation);
  CHECK(line == 1);
  CHECK(code_of("sccd circular v=4 k=2 b=3\n0 1\n1 2\n2 3\n", &line) == ErrorCode::invariant_violation);
  CHECK(line == 4);
}
