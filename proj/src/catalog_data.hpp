#pragma once

#include <string_view>
#include <vector>

namespace sccd::detail {

struct EmbeddedFixture {
  std::string_view name;
  std::string_view text;
};

const std::vector<EmbeddedFixture>& embedded_fixtures();

}  // namespace sccd::detail
