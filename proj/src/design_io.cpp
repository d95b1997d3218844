#include "sccd/design_io.hpp"

#include <charconv>
#include <set>
#include <sstream>
#include <vector>

namespace sccd {

namespace {

[[noreturn]] void syntax(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::syntax_error, "line " + std::to_string(line) + ": " + what, line);
}

[[noreturn]] void violation(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::invariant_violation, "line " + std::to_string(line) + ": " + what, line);
}

std::vector<std::string_view> split_spaces(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::uint64_t> to_uint(std::string_view s) {
  std::uint64_t x = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) return std::nullopt;
  return x;
}

std::size_t header_field(std::string_view tok, std::string_view key, std::size_t line) {
  if (tok.substr(0, key.size()) != key) syntax(line, "expected " + std::string(key) + "<int>");
  auto x = to_uint(tok.substr(key.size()));
  if (!x) syntax(line, "bad integer in " + std::string(tok));
  return static_cast<std::size_t>(*x);
}

}  // namespace

Design parse_design(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t pos = 0;
  std::size_t number = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view ln = text.substr(pos, end - pos);
    if (!ln.empty() && ln.back() == '\r') ln.remove_suffix(1);
    lines.emplace_back(++number, ln);
    pos = end + 1;
  }
  if (lines.empty()) syntax(1, "empty input");

  const auto head = split_spaces(lines[0].second);
  if (head.size() != 5 || head[0] != "sccd") syntax(1, "header must be 'sccd <kind> v=<int> k=<int> b=<int>'");
  const auto kind = parse_kind(head[1]);
  if (!kind) syntax(1, "unknown kind '" + std::string(head[1]) + "'");
  const std::size_t v = header_field(head[2], "v=", 1);
  const std::size_t k = header_field(head[3], "k=", 1);
  const std::size_t b = header_field(head[4], "b=", 1);
  if (k == 0 || b == 0) syntax(1, "k and b must be positive");

  std::vector<Block> blocks;
  std::vector<std::size_t> where;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [n, ln] = lines[i];
    const auto toks = split_spaces(ln);
    if (toks.empty()) {
      // Blank lines are only tolerated after the last block.
      for (std::size_t j = i + 1; j < lines.size(); ++j)
        if (!split_spaces(lines[j].second).empty()) syntax(n, "blank line inside the block list");
      break;
    }
    if (toks[0].front() == '#') continue;
    if (blocks.size() == b) syntax(n, "more than b=" + std::to_string(b) + " block lines");
    if (toks.size() != k)
      syntax(n, "expected " + std::to_string(k) + " labels, found " + std::to_string(toks.size()));
    Block blk;
    for (auto t : toks) {
      auto x = to_uint(t);
      if (!x || *x > 0xffffffffULL) syntax(n, "bad label '" + std::string(t) + "'");
      blk.push_back(static_cast<Label>(*x));
    }
    if (std::set<Label>(blk.begin(), blk.end()).size() != k) violation(n, "block repeats a label");
    blocks.push_back(std::move(blk));
    where.push_back(n);
  }
  if (blocks.size() != b)
    syntax(lines.back().first, "expected b=" + std::to_string(b) + " block lines, found " + std::to_string(blocks.size()));

  for (std::size_t i = 0; i + 1 < b; ++i)
    if (!single_change(blocks[i], blocks[i + 1]))
      violation(where[i + 1], "blocks " + std::to_string(i + 1) + " and " + std::to_string(i + 2) +
                                  " do not differ by a single change");
  if (*kind == Kind::circular && b > 1 && !single_change(blocks[b - 1], blocks[0]))
    violation(where[b - 1], "blocks " + std::to_string(b) + " and 1 do not differ by a single change (wrap)");

  Design d(*kind, std::move(blocks));
  if (d.v() != v) violation(1, "header says v=" + std::to_string(v) + " but blocks use " + std::to_string(d.v()) + " labels");
  if (k > v) violation(1, "k exceeds v");
  return d;
}

std::string serialize_design(const Design& d, std::string_view comment) {
  std::ostringstream out;
  out << "sccd " << to_string(d.kind()) << " v=" << d.v() << " k=" << d.k() << " b=" << d.b() << '\n';
  if (!comment.empty()) out << "# " << comment << '\n';
  for (const Block& blk : d.blocks()) {
    for (std::size_t i = 0; i < blk.size(); ++i) out << (i ? " " : "") << blk[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace sccd
