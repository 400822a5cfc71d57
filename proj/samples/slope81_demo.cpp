// Two twisted torus knots with the same surface slope, their Seifert
// data, and a check that their braids are conjugate.

#include <iostream>

#include "braidkit/braidkit.hpp"

int main() {
  using namespace braidkit;

  const TwistedTorusKnot a{17, 5, 2, -1};
  const TwistedTorusKnot b{18, 5, 3, -1};
  for (const auto& k : {a, b}) {
    const Classification c = classify(k);
    const SurgeryResult s = surgery_description(k);
    std::cout << to_string(k) << "  slope " << surface_slope(k) << "  " << to_string(c.verdict);
    if (c.seifert_h) std::cout << "  (" << c.seifert_h->data.a1 << "," << c.seifert_h->data.a2 << ") over D^2";
    std::cout << "  " << to_string(s.kind) << "(" << s.multiplicities[0] << "," << s.multiplicities[1] << ","
              << s.multiplicities[2] << ")\n";
  }

  const BraidWord w1 = ttk_braid(a);
  const BraidWord w2 = ttk_braid(b);
  const BraidWord c = p1_conjugator(2);
  const bool conj = is_conjugate_by(w1, w2, c);
  std::cout << "c = " << to_string(c) << "\n"
            << "c^-1 w1 c == w2: " << (conj ? "yes" : "no") << "\n"
            << "Alexander polynomial: " << alexander(w1) << "\n";
  return conj ? 0 : 1;
}
