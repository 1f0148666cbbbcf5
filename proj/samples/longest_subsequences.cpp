// Reads longest decreasing/increasing subsequences of a permutation off its
// Viennot diagram, and the longest pattern of a matching off its up-down
// diagram.

#include <iostream>

#include "viennot/diagram.hpp"
#include "viennot/io.hpp"
#include "viennot/updown.hpp"

int main() {
  using namespace viennot;
  const Permutation w({2, 9, 1, 15, 4, 7, 13, 18, 11, 19, 5, 14, 3, 10, 6, 17, 8, 16, 12});
  const auto d = build_viennot(w);

  std::cout << "w = " << io::format_word(w) << "\n";
  std::cout << "colors used: " << d.max_color() << "\n";
  std::cout << "decreasing:";
  for (int t : lds_extract(d)) std::cout << ' ' << w(t);
  std::cout << "\nincreasing:";
  for (int t : lis_extract(d)) std::cout << ' ' << w(t);
  std::cout << "\n";

  const auto word = io::parse_matching_word("7,8,6,5,-8,3,-7,4,1,-6,2,-5,-4,-3,-2,-1");
  const auto pattern = longest_pattern(word);
  std::cout << "matching " << io::format_word(word) << "\n";
  std::cout << "longest pattern:";
  for (int s : pattern.strands) std::cout << ' ' << s;
  std::cout << "\n";
}
