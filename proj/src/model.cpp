#include "pwt/model.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <utility>

#include "pwt/errors.hpp"
#include "pwt/rng.hpp"

namespace pwt {
namespace {

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

// Collapses interior whitespace runs to single spaces (benchmark files mix
// tabs and spaces inside header keys).
std::string squash_ws(std::string_view s) {
    std::string out;
    bool in_space = false;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            in_space = true;
            continue;
        }
        if (in_space && !out.empty()) out.push_back(' ');
        in_space = false;
        out.push_back(c);
    }
    return out;
}

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

double parse_number(const std::string& token, int line_no, const char* what) {
    try {
        size_t used = 0;
        double v = std::stod(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": expected a number for " +
                         std::string(what) + ", got '" + token + "'");
    }
}

long parse_int(const std::string& token, int line_no, const char* what) {
    try {
        size_t used = 0;
        long v = std::stol(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": expected an integer for " +
                         std::string(what) + ", got '" + token + "'");
    }
}

// Section headers in benchmark files carry trailing annotations like
// "NODE_COORD_SECTION	(INDEX, X, Y):" and mix tabs with spaces.
bool starts_with_keyword(const std::string& line, const char* keyword) {
    std::string squashed;
    for (char c : line)
        squashed.push_back(std::isspace(static_cast<unsigned char>(c)) ? ' ' : c);
    return squashed.rfind(keyword, 0) == 0;
}

// Shortest representation that parses back to the same double.
std::string format_double(double v) {
    char buffer[32];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, v);
    return std::string(buffer, result.ptr);
}

}  // namespace

const char* edge_weight_name(EdgeWeightKind kind) {
    return kind == EdgeWeightKind::kCeil2D ? "CEIL_2D" : "EUC_2D";
}

void Instance::validate() const {
    if (cities.empty()) throw ValidationError("instance has no cities");
    if (!(v_max > v_min) || !(v_min > 0.0))
        throw ValidationError("speeds must satisfy v_max > v_min > 0");
    // Zero capacity is a legal degenerate case (nothing ever fits).
    if (capacity < 0.0) throw ValidationError("capacity must be nonnegative");
    if (renting_rate < 0.0) throw ValidationError("renting rate must be nonnegative");
    const int n = num_cities();
    for (size_t j = 0; j < items.size(); ++j) {
        const Item& it = items[j];
        if (it.id != static_cast<int>(j) + 1)
            throw ValidationError("item ids must be consecutive from 1");
        if (it.city < 2 || it.city > n)
            throw ValidationError("item " + std::to_string(it.id) +
                                  " assigned to city " + std::to_string(it.city) +
                                  "; items live in cities 2.." + std::to_string(n));
        if (!(it.profit > 0.0))
            throw ValidationError("item " + std::to_string(it.id) + " has nonpositive profit");
        if (!(it.weight > 0.0))
            throw ValidationError("item " + std::to_string(it.id) + " has nonpositive weight");
    }
}

Instance parse_instance(std::string_view text) {
    Instance inst;
    std::map<std::string, std::string> header;
    enum class Section { kHeader, kNodes, kItems } section = Section::kHeader;

    std::vector<std::pair<int, City>> nodes;
    std::vector<Item> items;

    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw);
        if (line.empty() || line == "EOF") continue;

        if (starts_with_keyword(line, "NODE_COORD_SECTION")) {
            section = Section::kNodes;
            continue;
        }
        if (starts_with_keyword(line, "ITEMS SECTION")) {
            section = Section::kItems;
            continue;
        }

        if (section == Section::kHeader) {
            const size_t colon = line.find(':');
            if (colon == std::string::npos)
                throw ParseError("line " + std::to_string(line_no) +
                                 ": malformed header line '" + line + "'");
            header[squash_ws(line.substr(0, colon))] = trim(line.substr(colon + 1));
            continue;
        }

        const std::vector<std::string> tok = split_ws(line);
        if (section == Section::kNodes) {
            if (tok.size() != 3)
                throw ParseError("line " + std::to_string(line_no) +
                                 ": expected 'index x y', got '" + line + "'");
            const int idx = static_cast<int>(parse_int(tok[0], line_no, "node index"));
            nodes.push_back({idx, City{parse_number(tok[1], line_no, "x"),
                                       parse_number(tok[2], line_no, "y")}});
        } else {
            if (tok.size() != 4)
                throw ParseError("line " + std::to_string(line_no) +
                                 ": expected 'index profit weight node', got '" + line + "'");
            Item it;
            it.id = static_cast<int>(parse_int(tok[0], line_no, "item index"));
            it.profit = parse_number(tok[1], line_no, "profit");
            it.weight = parse_number(tok[2], line_no, "weight");
            it.city = static_cast<int>(parse_int(tok[3], line_no, "assigned node"));
            items.push_back(it);
        }
    }

    auto require = [&](const char* key) -> const std::string& {
        auto found = header.find(key);
        if (found == header.end())
            throw ParseError(std::string("missing header field '") + key + "'");
        return found->second;
    };

    inst.name = header.count("PROBLEM NAME") ? header["PROBLEM NAME"] : "";
    inst.knapsack_data_type =
        header.count("KNAPSACK DATA TYPE") ? header["KNAPSACK DATA TYPE"] : "";
    const int dimension = static_cast<int>(parse_int(require("DIMENSION"), 0, "DIMENSION"));
    const int declared_items =
        static_cast<int>(parse_int(require("NUMBER OF ITEMS"), 0, "NUMBER OF ITEMS"));
    inst.capacity = parse_number(require("CAPACITY OF KNAPSACK"), 0, "CAPACITY OF KNAPSACK");
    inst.v_min = parse_number(require("MIN SPEED"), 0, "MIN SPEED");
    inst.v_max = parse_number(require("MAX SPEED"), 0, "MAX SPEED");
    inst.renting_rate = parse_number(require("RENTING RATIO"), 0, "RENTING RATIO");

    const std::string& ewt = require("EDGE_WEIGHT_TYPE");
    if (ewt == "CEIL_2D") {
        inst.edge_weight_kind = EdgeWeightKind::kCeil2D;
    } else if (ewt == "EUC_2D") {
        inst.edge_weight_kind = EdgeWeightKind::kEuc2D;
    } else {
        throw ParseError("unsupported EDGE_WEIGHT_TYPE '" + ewt + "'");
    }

    if (static_cast<int>(nodes.size()) != dimension)
        throw ParseError("DIMENSION says " + std::to_string(dimension) + " cities but " +
                         std::to_string(nodes.size()) + " coordinate lines were found");
    inst.cities.assign(dimension, City{});
    std::vector<char> seen(dimension + 1, 0);
    for (const auto& [idx, city] : nodes) {
        if (idx < 1 || idx > dimension)
            throw ValidationError("node index " + std::to_string(idx) + " outside 1.." +
                                  std::to_string(dimension));
        if (seen[idx]) throw ValidationError("duplicate node index " + std::to_string(idx));
        seen[idx] = 1;
        inst.cities[idx - 1] = city;
    }

    if (static_cast<int>(items.size()) != declared_items)
        throw ParseError("NUMBER OF ITEMS says " + std::to_string(declared_items) + " but " +
                         std::to_string(items.size()) + " item lines were found");
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.id < b.id; });
    inst.items = std::move(items);

    inst.validate();
    return inst;
}

std::string format_instance(const Instance& instance) {
    std::ostringstream os;
    os << "PROBLEM NAME: " << instance.name << "\n";
    os << "KNAPSACK DATA TYPE: " << instance.knapsack_data_type << "\n";
    os << "DIMENSION: " << instance.num_cities() << "\n";
    os << "NUMBER OF ITEMS: " << instance.num_items() << "\n";
    os << "CAPACITY OF KNAPSACK: " << format_double(instance.capacity) << "\n";
    os << "MIN SPEED: " << format_double(instance.v_min) << "\n";
    os << "MAX SPEED: " << format_double(instance.v_max) << "\n";
    os << "RENTING RATIO: " << format_double(instance.renting_rate) << "\n";
    os << "EDGE_WEIGHT_TYPE: " << edge_weight_name(instance.edge_weight_kind) << "\n";
    os << "NODE_COORD_SECTION\t(INDEX, X, Y):\n";
    for (int i = 0; i < instance.num_cities(); ++i) {
        const City& c = instance.cities[i];
        os << (i + 1) << "\t" << format_double(c.x) << "\t" << format_double(c.y) << "\n";
    }
    os << "ITEMS SECTION\t(INDEX, PROFIT, WEIGHT, ASSIGNED NODE NUMBER):\n";
    for (const Item& it : instance.items) {
        os << it.id << "\t" << format_double(it.profit) << "\t" << format_double(it.weight)
           << "\t" << it.city << "\n";
    }
    return os.str();
}

double distance(const Instance& instance, int i, int j) {
    const int n = instance.num_cities();
    if (i < 1 || i > n || j < 1 || j > n)
        throw ValidationError("city index outside 1.." + std::to_string(n));
    const City& a = instance.cities[i - 1];
    const City& b = instance.cities[j - 1];
    const double d = std::hypot(a.x - b.x, a.y - b.y);
    return instance.edge_weight_kind == EdgeWeightKind::kCeil2D ? std::ceil(d) : d;
}

std::vector<int> parse_tour(std::string_view text, int n) {
    std::string body{text};
    const size_t section = body.find("TOUR_SECTION");
    std::vector<int> tour;
    if (section != std::string::npos) {
        std::istringstream in(body.substr(section + std::string("TOUR_SECTION").size()));
        std::string tok;
        while (in >> tok) {
            if (tok == "-1" || tok == "EOF") break;
            try {
                tour.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw ParseError("tour token '" + tok + "' is not a city index");
            }
        }
    } else {
        for (const std::string& tok : split_ws(body)) {
            if (tok == "EOF") break;
            try {
                tour.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw ParseError("tour token '" + tok + "' is not a city index");
            }
        }
    }

    if (static_cast<int>(tour.size()) != n)
        throw ValidationError("tour lists " + std::to_string(tour.size()) + " cities, expected " +
                              std::to_string(n));
    std::vector<char> seen(n + 1, 0);
    for (int c : tour) {
        if (c < 1 || c > n)
            throw ValidationError("tour city " + std::to_string(c) + " outside 1.." +
                                  std::to_string(n));
        if (seen[c]) throw ValidationError("tour visits city " + std::to_string(c) + " twice");
        seen[c] = 1;
    }

    // The tour is cyclic; anchor it at city 1.
    auto first = std::find(tour.begin(), tour.end(), 1);
    std::rotate(tour.begin(), first, tour.end());
    return tour;
}

double tour_length(const Instance& instance, const std::vector<int>& tour) {
    double total = 0.0;
    const int n = static_cast<int>(tour.size());
    for (int k = 0; k < n; ++k) total += distance(instance, tour[k], tour[(k + 1) % n]);
    return total;
}

TourContext build_context(Instance instance, std::vector<int> tour) {
    instance.validate();
    const int n = instance.num_cities();
    if (static_cast<int>(tour.size()) != n || tour.empty() || tour[0] != 1) {
        // Accept any rotation; parse_tour re-validates as a permutation.
        std::ostringstream os;
        for (int c : tour) os << c << ' ';
        tour = parse_tour(os.str(), n);
    }

    TourContext ctx;
    ctx.instance = std::move(instance);
    ctx.tour = std::move(tour);
    ctx.pos_of_city.assign(n + 1, -1);
    for (int k = 0; k < n; ++k) ctx.pos_of_city[ctx.tour[k]] = k;

    ctx.leg_length.assign(n, 0.0);
    for (int k = 0; k < n; ++k)
        ctx.leg_length[k] = distance(ctx.instance, ctx.tour[k], ctx.tour[(k + 1) % n]);

    // Backward pass: d_i = leg(i -> next) + d_next, last city's d is its
    // return leg to city 1.
    ctx.suffix_distance.assign(n + 1, 0.0);
    double acc = 0.0;
    for (int k = n - 1; k >= 0; --k) {
        acc += ctx.leg_length[k];
        ctx.suffix_distance[ctx.tour[k]] = acc;
    }
    ctx.total_distance = acc;
    ctx.nu = ctx.instance.capacity > 0.0
                 ? (ctx.instance.v_max - ctx.instance.v_min) / ctx.instance.capacity
                 : std::numeric_limits<double>::infinity();
    return ctx;
}

std::vector<int> nn_tour(const Instance& instance, std::uint64_t seed) {
    const int n = instance.num_cities();
    if (n < 2) throw ValidationError("tour generation needs at least 2 cities");
    Rng rng(seed);
    std::vector<char> visited(n + 1, 0);
    std::vector<int> tour;
    tour.reserve(n);
    int current = 1;
    visited[1] = 1;
    tour.push_back(1);
    std::vector<int> best_cities;
    for (int step = 1; step < n; ++step) {
        double best = 0.0;
        best_cities.clear();
        for (int c = 1; c <= n; ++c) {
            if (visited[c]) continue;
            const double d = distance(instance, current, c);
            if (best_cities.empty() || d < best) {
                best = d;
                best_cities.assign(1, c);
            } else if (d == best) {
                best_cities.push_back(c);
            }
        }
        current = best_cities[rng.next_below(best_cities.size())];
        visited[current] = 1;
        tour.push_back(current);
    }
    return two_opt(instance, std::move(tour));
}

std::vector<int> two_opt(const Instance& instance, std::vector<int> tour) {
    const int n = static_cast<int>(tour.size());
    if (n < 4) return tour;
    bool improved = true;
    while (improved) {
        improved = false;
        for (int i = 0; i < n - 1 && !improved; ++i) {
            for (int j = i + 2; j < n && !improved; ++j) {
                if (i == 0 && j == n - 1) continue;  // same edge pair
                const int a = tour[i], b = tour[i + 1];
                const int c = tour[j], d = tour[(j + 1) % n];
                const double gain = distance(instance, a, b) + distance(instance, c, d) -
                                    distance(instance, a, c) - distance(instance, b, d);
                if (gain > 1e-12) {
                    std::reverse(tour.begin() + i + 1, tour.begin() + j + 1);
                    improved = true;
                }
            }
        }
    }
    return tour;
}

}  // namespace pwt
