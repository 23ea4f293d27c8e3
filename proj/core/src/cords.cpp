#include "cordlasso/cords.hpp"

#include "cordlasso/errors.hpp"

namespace cordlasso {

Cord Cord::make(LeafLabel x, LeafLabel y) {
  if (x == y) throw InputError("cord '" + x + " " + y + "' has equal ends");
  if (y < x) std::swap(x, y);
  return Cord{std::move(x), std::move(y)};
}

void require_cords_in(const XTree& t, const CordSet& cords) {
  for (const auto& cord : cords) {
    if (!t.has_leaf(cord.a)) throw InputError("cord label '" + cord.a + "' is not a leaf");
    if (!t.has_leaf(cord.b)) throw InputError("cord label '" + cord.b + "' is not a leaf");
  }
}

CordSet all_cords(const std::vector<LeafLabel>& x_set) {
  CordSet out;
  for (std::size_t i = 0; i < x_set.size(); ++i) {
    for (std::size_t j = i + 1; j < x_set.size(); ++j) out.insert(Cord::make(x_set[i], x_set[j]));
  }
  return out;
}

std::string to_string(const Cord& cord) { return cord.a + " " + cord.b; }

}  // namespace cordlasso
