#include "fairdiv/bundle.h"

#include <stdexcept>

namespace fairdiv {

Bundle Bundle::FromItems(const std::vector<int>& items) {
  Bundle b;
  for (int g : items) {
    if (g < 0 || g >= kMaxItems) {
      throw std::out_of_range("item index out of range: " + std::to_string(g));
    }
    b = b.Plus(g);
  }
  return b;
}

std::vector<int> Bundle::Items() const {
  std::vector<int> items;
  items.reserve(size());
  for (int g : *this) items.push_back(g);
  return items;
}

std::string Bundle::ToString() const {
  std::string out = "{";
  bool first = true;
  for (int g : *this) {
    if (!first) out += ",";
    out += std::to_string(g);
    first = false;
  }
  return out + "}";
}

}  // namespace fairdiv
