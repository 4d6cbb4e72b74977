#include "gchar/group/subset.hpp"

#include "gchar/error.hpp"
#include "gchar/parse.hpp"

namespace gchar {

Subset full_subset(std::size_t n) {
  if (n > kMaxSubsetGroup) fail(ErrorKind::InvalidArgument, "group too large for subset labels");
  return n == 64 ? ~Subset{0} : (Subset{1} << n) - 1;
}

std::vector<std::size_t> subset_elements(Subset s) {
  std::vector<std::size_t> out;
  while (s) {
    out.push_back(static_cast<std::size_t>(__builtin_ctzll(s)));
    s &= s - 1;
  }
  return out;
}

Subset subset_of(const std::vector<std::size_t>& elements) {
  Subset s = 0;
  for (auto g : elements) {
    if (g >= kMaxSubsetGroup) fail(ErrorKind::InvalidArgument, "element index out of subset range");
    s |= singleton(g);
  }
  return s;
}

Subset subset_product(const AbelianGroup& g, Subset a, Subset b) {
  Subset out = 0;
  const auto ea = subset_elements(a);
  const auto eb = subset_elements(b);
  for (auto x : ea)
    for (auto y : eb) out |= singleton(g.mul(x, y));
  return out;
}

Subset subset_image(const std::vector<std::size_t>& map, Subset s) {
  Subset out = 0;
  for (auto x : subset_elements(s)) out |= singleton(map.at(x));
  return out;
}

Subset subset_translate(const AbelianGroup& g, std::size_t x, Subset s) {
  return subset_product(g, singleton(x), s);
}

std::string subset_string(const AbelianGroup& g, Subset s) {
  std::string out = "{";
  bool first = true;
  for (auto x : subset_elements(s)) {
    if (!first) out += ",";
    first = false;
    out += g.element_string(x);
  }
  return out + "}";
}

Subset parse_subset(const AbelianGroup& g, const std::string& text) {
  require_subset_group(g);
  const std::string inner = trim(strip_enclosing(text, '{', '}'));
  Subset s = 0;
  if (inner.empty()) return s;
  for (const auto& part : split_top_level(inner, ',')) {
    const std::size_t x = g.parse_element(part);
    if (subset_has(s, x)) fail(ErrorKind::Parse, "repeated element '" + part + "' in " + trim(text));
    s |= singleton(x);
  }
  return s;
}

void require_subset_group(const AbelianGroup& g) {
  if (g.size() > kMaxSubsetGroup) {
    fail(ErrorKind::InvalidArgument, "subset labels need |G| <= 64, got " + std::to_string(g.size()));
  }
}

}  // namespace gchar
