#include "geoecon/types.hpp"

namespace geoecon {

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::plain: return "plain";
    case Variant::rounded: return "rounded";
    case Variant::windowed: return "windowed";
  }
  return "plain";
}

Variant variant_from_name(const std::string& name) {
  if (name == "plain") return Variant::plain;
  if (name == "rounded") return Variant::rounded;
  if (name == "windowed") return Variant::windowed;
  throw InputError("unknown variant '" + name + "' (expected plain|rounded|windowed)");
}

}  // namespace geoecon
