#include "arcsys/surface.hpp"

#include <cctype>

namespace arcsys {

Side parse_side(const std::string& s) {
  if (s == "U" || s == "Upper" || s == "u") return Side::Upper;
  if (s == "L" || s == "Lower" || s == "l") return Side::Lower;
  throw std::invalid_argument("side must be U or L, got '" + s + "'");
}

SurfaceSpec::SurfaceSpec(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("surface needs at least 2 punctures");
}

bool SurfaceSpec::neighbors(Puncture a, Puncture b) const {
  for (int g = 0; g < n_; ++g)
    if ((gap_left(g) == a.pos && gap_right(g) == b.pos) || (gap_left(g) == b.pos && gap_right(g) == a.pos))
      return true;
  return false;
}

std::string SurfaceSpec::label(Puncture u) const {
  if (u.is_q()) return "q";
  if (u.is_p()) return "p";
  return "r" + std::to_string(u.r_index());
}

Puncture SurfaceSpec::parse_puncture(const std::string& text) const {
  Puncture u{-1};
  if (text == "p") u = Puncture::p();
  else if (text == "q") u = Puncture::q();
  else if (text.size() >= 2 && (text[0] == 'r' || text[0] == 'R')) {
    std::string digits = text.substr(text[1] == '_' ? 2 : 1);
    if (digits.empty()) throw std::invalid_argument("bad puncture label '" + text + "'");
    for (char ch : digits)
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw std::invalid_argument("bad puncture label '" + text + "'");
    u = Puncture::r(std::stoi(digits));
    if (u.r_index() < 1) throw std::invalid_argument("bad puncture label '" + text + "'");
  } else {
    throw std::invalid_argument("bad puncture label '" + text + "'");
  }
  if (!valid_puncture(u)) throw std::invalid_argument("puncture " + text + " does not exist for n=" + std::to_string(n_));
  return u;
}

}  // namespace arcsys
