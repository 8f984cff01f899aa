#pragma once

// JSON spec files accepted by the CLI.
//
// Generic problem:
//   {"r": 2, "alpha": 3, "beta": 3,
//    "shelves": [{"m": 1, "n": 1}, ...],
//    "infinite_tail": {"family": "odd", "params": {"n": 1}}}
//
// Network problem:
//   {"N": 1, "H": 4, "M": 1, "H_star": 1,
//    "activation": {"family": "tanh"}, "point": "P1"}
//
// Unknown fields are rejected. A tail continues the explicit shelves with the
// family members priced above the last explicit shelf.

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "rlct/counting_core.hpp"
#include "rlct/nn_bounds.hpp"

namespace rlct::io {

using Json = nlohmann::ordered_json;

enum class Point { P1, P2 };

struct GenericRequest {
  ProblemSpec spec;
  Json provenance;
};

struct NetworkRequest {
  nn::NetworkShape shape;
  std::string activation;  // exp | swish | tanh | poly | custom
  std::vector<std::int64_t> exponents;
  Point point = Point::P1;
  Json provenance;
};

using SpecRequest = std::variant<GenericRequest, NetworkRequest>;

SpecRequest parse_spec(const Json& document);
SpecRequest load_spec_file(const std::string& path);

/// Shelf tail families: exp (1,2,3,..), swish (1,2,4,6,..), odd (1,3,5,..)
/// and arithmetic (start, start+step, ..), all with a constant inventory.
ShelfSequence::Generator tail_generator(std::string_view family, std::int64_t start,
                                        std::int64_t step, std::int64_t inventory,
                                        std::vector<Shelf> explicit_shelves);

/// exp, swish, tanh (or odd), poly and custom. Custom support continues the
/// listed exponents arithmetically with the last gap (gap 1 for a single
/// exponent).
nn::ActivationSupport make_support(std::string_view activation,
                                   const std::vector<std::int64_t>& exponents);

std::string_view to_string(Point point);

}  // namespace rlct::io
