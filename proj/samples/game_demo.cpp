// Plays a short builder-vs-adversary game and prints the audited outcome.

#include <iostream>

#include "solena/json_io.hpp"

using namespace solena;

int main(int argc, char** argv) {
  std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 7;
  Transcript t = play(builder_strategy(), random_adversary(seed), 12, seed);

  std::cout << "rounds: " << t.moves.size()
            << ", final window: " << t.moves.back().clopen.k
            << ", points: " << t.moves.back().certificate.points.size() << "\n";
  for (const auto& r : t.requirements)
    std::cout << "  requirement " << to_json(r).dump() << "\n";
  std::cout << "audit: " << to_json(audit(t)).dump() << "\n";
  return 0;
}
