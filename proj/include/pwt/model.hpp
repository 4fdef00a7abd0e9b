#ifndef PWT_MODEL_HPP
#define PWT_MODEL_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pwt {

enum class EdgeWeightKind { kCeil2D, kEuc2D };

const char* edge_weight_name(EdgeWeightKind kind);

struct City {
    double x = 0.0;
    double y = 0.0;
};

struct Item {
    int id = 0;       // 1-based, matches the instance file
    double profit = 0.0;
    double weight = 0.0;
    int city = 0;     // 1-based assigned city; never city 1
};

// A packing-while-travelling instance: the TSP component (cities), the
// knapsack component (items placed at cities), and the vehicle parameters.
struct Instance {
    std::string name;
    std::string knapsack_data_type;
    std::vector<City> cities;   // cities[i] holds city i+1
    std::vector<Item> items;    // ordered by item id
    double capacity = 0.0;      // B
    double renting_rate = 0.0;  // R
    double v_min = 0.0;
    double v_max = 0.0;
    EdgeWeightKind edge_weight_kind = EdgeWeightKind::kCeil2D;

    int num_cities() const { return static_cast<int>(cities.size()); }
    int num_items() const { return static_cast<int>(items.size()); }

    // Throws ValidationError on any violated invariant.
    void validate() const;
};

// Parses the TTP benchmark layout: a key/value header followed by
// NODE_COORD_SECTION (index x y) and ITEMS SECTION (index profit weight node).
// Separators may be tabs or spaces; section headers may carry trailing
// annotations. Throws ParseError / ValidationError.
Instance parse_instance(std::string_view text);

// Writes an instance back in the benchmark layout; parse_instance on the
// result reproduces the instance exactly.
std::string format_instance(const Instance& instance);

// Distance between cities i and j (1-based). Euclidean, rounded up to the
// next integer under CEIL_2D (exact integers are not re-rounded).
double distance(const Instance& instance, int i, int j);

// Accepts a plain whitespace-separated list of 1-based city indices or a
// TSPLIB-style file with a TOUR_SECTION terminated by -1. The result is a
// permutation of 1..n rotated so city 1 comes first.
std::vector<int> parse_tour(std::string_view text, int n);

double tour_length(const Instance& instance, const std::vector<int>& tour);

// Fixed tour plus everything the solvers need per city: tour positions,
// suffix distances d_i back to city 1, and the speed coefficient nu.
struct TourContext {
    Instance instance;
    std::vector<int> tour;              // tour[0] == 1
    std::vector<int> pos_of_city;       // size n+1; pos_of_city[city] = 0-based position
    std::vector<double> suffix_distance;  // size n+1, by city id
    std::vector<double> leg_length;     // leg_length[k] = dist(tour[k], tour[k+1 mod n])
    double total_distance = 0.0;
    double nu = 0.0;                    // (v_max - v_min) / B

    int num_cities() const { return instance.num_cities(); }
    int num_items() const { return instance.num_items(); }
};

// Validates the tour against the instance and precomputes suffix distances
// with a single backward pass.
TourContext build_context(Instance instance, std::vector<int> tour);

// Nearest-neighbour tour from city 1 with seeded random tie-breaking,
// improved by first-improvement 2-opt until no exchange helps.
// Deterministic for a given (instance, seed).
std::vector<int> nn_tour(const Instance& instance, std::uint64_t seed);

// First-improvement 2-opt to a local optimum. Never lengthens the tour.
std::vector<int> two_opt(const Instance& instance, std::vector<int> tour);

}  // namespace pwt

#endif  // PWT_MODEL_HPP
