// Builds a small complemented poset by hand, lists its c-ideals and separates
// an ideal from a filter.
#include <cposet/cposet.hpp>

#include <iostream>

int main() {
  using namespace cposet;
  Poset p = build_poset({"0", "a", "b", "a'", "b'", "1"},
                        {{"0", "a"}, {"0", "b"}, {"a", "b'"}, {"b", "a'"}, {"a'", "1"}, {"b'", "1"}});
  ComplementedPoset cp = attach_complementation(
      p, {{"0", "1"}, {"a", "a'"}, {"b", "b'"}, {"a'", "a"}, {"b'", "b"}, {"1", "0"}});

  Harness h(cp);
  std::cout << "c-ideals:";
  for (ElementSet s : h.c_ideals()) std::cout << ' ' << principal_label(p, s, true);
  std::cout << '\n';

  const ElementSet ideal = p.down(element(p, "a"));
  const ElementSet filter = p.up(element(p, "b"));
  SeparationResult r = h.separate_first(ideal, filter);
  if (r.witness) {
    std::cout << "J = " << format_set(p, *r.witness) << '\n';
  } else {
    std::cout << "no separation: " << to_string(*r.failure) << '\n';
  }
}
