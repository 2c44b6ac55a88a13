#include "fairstream/reservoir.hpp"

namespace fairstream {

std::vector<Reservoir> make_group_reservoirs(const FairnessSpec& spec, std::uint64_t seed) {
  const Rng root(seed);
  std::vector<Reservoir> reservoirs;
  reservoirs.reserve(spec.group_total());
  for (GroupId g = 0; g < spec.group_total(); ++g) {
    reservoirs.emplace_back(spec.budget(g), root.derive(g));
  }
  return reservoirs;
}

}  // namespace fairstream
