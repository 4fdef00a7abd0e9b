#include "support/fixtures.hpp"

#include <cmath>
#include <set>
#include <utility>

#include "pwt/rng.hpp"

namespace pwt::testing {

Instance toy4_instance() {
    Instance inst;
    inst.name = "toy4";
    inst.knapsack_data_type = "uncorrelated";
    inst.cities = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    inst.items = {{1, 50, 10, 2}, {2, 20, 5, 3}, {3, 30, 5, 4}};
    inst.capacity = 15;
    inst.renting_rate = 1;
    inst.v_min = 0.1;
    inst.v_max = 1.0;
    inst.edge_weight_kind = EdgeWeightKind::kEuc2D;
    return inst;
}

TourContext toy4_context() { return build_context(toy4_instance(), {1, 2, 3, 4}); }

std::string toy4_file_text() {
    return "PROBLEM NAME: toy4\n"
           "KNAPSACK DATA TYPE: uncorrelated\n"
           "DIMENSION: 4\n"
           "NUMBER OF ITEMS: 3\n"
           "CAPACITY OF KNAPSACK: 15\n"
           "MIN SPEED: 0.1\n"
           "MAX SPEED: 1.0\n"
           "RENTING RATIO: 1\n"
           "EDGE_WEIGHT_TYPE: EUC_2D\n"
           "NODE_COORD_SECTION\t(INDEX, X, Y):\n"
           "1 0 0\n"
           "2 1 0\n"
           "3 1 1\n"
           "4 0 1\n"
           "ITEMS SECTION\t(INDEX, PROFIT, WEIGHT, ASSIGNED NODE NUMBER):\n"
           "1 50 10 2\n"
           "2 20 5 3\n"
           "3 30 5 4\n";
}

Instance random_instance(std::uint64_t seed, const RandomInstanceParams& params) {
    Rng rng(seed);
    const int n = params.min_cities +
                  static_cast<int>(rng.next_below(params.max_cities - params.min_cities + 1));
    const int m = params.min_items +
                  static_cast<int>(rng.next_below(params.max_items - params.min_items + 1));

    Instance inst;
    inst.name = "rand" + std::to_string(seed);
    inst.knapsack_data_type = "uncorrelated";
    inst.edge_weight_kind =
        rng.next_below(2) == 0 ? EdgeWeightKind::kEuc2D : EdgeWeightKind::kCeil2D;
    inst.v_min = 0.1;
    inst.v_max = 1.0;
    inst.renting_rate = params.renting_rate;

    std::set<std::pair<int, int>> used;
    while (static_cast<int>(inst.cities.size()) < n) {
        const int x = static_cast<int>(rng.next_below(params.coordinate_span));
        const int y = static_cast<int>(rng.next_below(params.coordinate_span));
        if (!used.insert({x, y}).second) continue;  // keep coordinates distinct
        inst.cities.push_back({static_cast<double>(x), static_cast<double>(y)});
    }

    double total_weight = 0.0;
    for (int j = 1; j <= m; ++j) {
        Item item;
        item.id = j;
        item.profit = params.min_profit +
                      std::floor(rng.next_double() * (params.max_profit - params.min_profit));
        item.weight = params.min_weight +
                      std::floor(rng.next_double() * (params.max_weight - params.min_weight));
        item.city = 2 + static_cast<int>(rng.next_below(n - 1));
        total_weight += item.weight;
        inst.items.push_back(item);
    }
    const double fraction =
        params.min_capacity_fraction +
        rng.next_double() * (params.max_capacity_fraction - params.min_capacity_fraction);
    inst.capacity = std::max(1.0, std::floor(fraction * total_weight));
    inst.validate();
    return inst;
}

TourContext random_context(std::uint64_t seed, const RandomInstanceParams& params) {
    Instance inst = random_instance(seed, params);
    std::vector<int> tour = nn_tour(inst, mix_seed(seed, 7));
    return build_context(std::move(inst), std::move(tour));
}

}  // namespace pwt::testing
