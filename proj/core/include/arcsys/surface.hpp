#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace arcsys {

enum class Side { Upper, Lower };

inline Side flip(Side s) { return s == Side::Upper ? Side::Lower : Side::Upper; }
inline char side_letter(Side s) { return s == Side::Upper ? 'U' : 'L'; }
Side parse_side(const std::string& s);

// Punctures sit on the reference circle at integer positions:
// q = 0, p = 1, r_k = k + 1. Gap g is the open interval (g, g + 1) mod n.
struct Puncture {
  int pos = 0;

  static constexpr Puncture q() { return {0}; }
  static constexpr Puncture p() { return {1}; }
  static constexpr Puncture r(int k) { return {k + 1}; }

  bool is_q() const { return pos == 0; }
  bool is_p() const { return pos == 1; }
  int r_index() const { return pos - 1; }

  friend auto operator<=>(const Puncture&, const Puncture&) = default;
};

class SurfaceSpec {
 public:
  SurfaceSpec() = default;
  explicit SurfaceSpec(int n);

  int n() const { return n_; }
  int gap_count() const { return n_; }
  bool valid_gap(int g) const { return g >= 0 && g < n_; }
  bool valid_puncture(Puncture u) const { return u.pos >= 0 && u.pos < n_; }

  int gap_left(int g) const { return g; }
  int gap_right(int g) const { return (g + 1) % n_; }
  bool adjacent(int g, Puncture u) const { return gap_left(g) == u.pos || gap_right(g) == u.pos; }
  // True when some gap has both punctures as its ends.
  bool neighbors(Puncture a, Puncture b) const;

  std::string label(Puncture u) const;
  Puncture parse_puncture(const std::string& text) const;

  friend bool operator==(const SurfaceSpec&, const SurfaceSpec&) = default;

 private:
  int n_ = 2;
};

}  // namespace arcsys
