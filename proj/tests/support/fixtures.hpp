#ifndef PWT_TESTS_FIXTURES_HPP
#define PWT_TESTS_FIXTURES_HPP

#include <cstdint>
#include <string>

#include "pwt/model.hpp"

namespace pwt::testing {

// Canonical 4-city fixture used throughout the suites: unit-square cities,
// tour 1-2-3-4, items e1=(50,10,@2) e2=(20,5,@3) e3=(30,5,@4), B=15, R=1,
// v in [0.1, 1], EUC_2D. Every objective and reward value is hand-checkable.
Instance toy4_instance();
TourContext toy4_context();
std::string toy4_file_text();

struct RandomInstanceParams {
    int min_cities = 4;
    int max_cities = 12;
    int min_items = 3;
    int max_items = 15;
    double min_capacity_fraction = 0.3;  // of total item weight
    double max_capacity_fraction = 0.8;
    double min_weight = 1.0;
    double max_weight = 100.0;
    double min_profit = 1.0;
    double max_profit = 100.0;
    double renting_rate = 1.0;
    int coordinate_span = 1000;
};

// Deterministic random instance with distinct integer coordinates and items
// on cities 2..n (several items may share a city).
Instance random_instance(std::uint64_t seed, const RandomInstanceParams& params = {});

// random_instance plus a generated tour.
TourContext random_context(std::uint64_t seed, const RandomInstanceParams& params = {});

}  // namespace pwt::testing

#endif  // PWT_TESTS_FIXTURES_HPP
