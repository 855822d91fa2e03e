// Walks one lattice level and prints every socle, flagging split summands.
//
//   socle_tour [e] [n]      defaults: e=4, n=5

#include <cstdlib>
#include <iostream>
#include <string>

#include "dnbranch/dnbranch.hpp"

int main(int argc, char** argv) {
  using namespace dnbranch;
  try {
    const Modulus e = parse_e(argc > 1 ? argv[1] : "4");
    const std::size_t n = argc > 2 ? std::stoul(argv[2]) : 5;
    const auto params = classify_regime(n, e);
    const auto lattice = build_lattice(n, params);
    std::cout << params.describe() << ", " << lattice.level(n).size() << " Kleshchev bipartitions at level " << n << "\n";

    for (const auto& soc : branching_graph(n, lattice)) {
      std::cout << soc.source.to_string() << "\n";
      if (auto special = almost_symmetric(soc.source.rep, lattice))
        std::cout << "  almost symmetric, special node " << special->to_string() << "\n";
      for (const auto& s : soc.summands)
        std::cout << "  " << (s.kind == LabelKind::split ? "* " : "  ") << s.to_string() << "\n";
    }
  } catch (const std::exception& ex) {
    std::cerr << "socle_tour: " << ex.what() << "\n";
    return EXIT_FAILURE;
  }
  return EXIT_SUCCESS;
}
