#include "rlct/spec_file.hpp"

#include <fstream>
#include <initializer_list>
#include <set>

#include "rlct/error.hpp"

namespace rlct::io {

namespace {

[[noreturn]] void bad(const std::string& message) { throw Error(ErrorCode::InvalidSpecFile, message); }

void only_keys(const Json& object, std::initializer_list<std::string_view> allowed,
               const std::string& where) {
  if (!object.is_object()) bad(where + " must be an object");
  const std::set<std::string_view> keys(allowed);
  for (const auto& item : object.items()) {
    if (!keys.count(item.key())) bad("unknown field '" + item.key() + "' in " + where);
  }
}

std::int64_t integer_field(const Json& object, const char* key, const std::string& where) {
  if (!object.contains(key)) bad("missing field '" + std::string(key) + "' in " + where);
  const Json& value = object.at(key);
  if (!value.is_number_integer()) bad("field '" + std::string(key) + "' in " + where + " must be an integer");
  return value.get<std::int64_t>();
}

std::int64_t integer_field_or(const Json& object, const char* key, std::int64_t fallback,
                              const std::string& where) {
  return object.contains(key) ? integer_field(object, key, where) : fallback;
}

std::int64_t family_price(std::string_view family, std::int64_t start, std::int64_t step,
                          std::int64_t index) {
  if (family == "exp") return index + 1;
  if (family == "swish") return index == 0 ? 1 : 2 * index;
  if (family == "odd" || family == "tanh") return 2 * index + 1;
  return start + step * index;  // arithmetic
}

GenericRequest parse_generic(const Json& doc) {
  only_keys(doc, {"r", "alpha", "beta", "shelves", "infinite_tail"}, "spec");
  GenericRequest req;
  req.provenance = doc;
  req.spec.rank = integer_field(doc, "r", "spec");
  req.spec.demand = integer_field(doc, "alpha", "spec");
  req.spec.budget = integer_field(doc, "beta", "spec");

  std::vector<Shelf> shelves;
  if (doc.contains("shelves")) {
    if (!doc.at("shelves").is_array()) bad("'shelves' must be an array");
    for (const auto& item : doc.at("shelves")) {
      only_keys(item, {"m", "n"}, "shelf");
      shelves.push_back({integer_field(item, "m", "shelf"),
                         Integer(static_cast<long>(integer_field(item, "n", "shelf")))});
    }
  }

  if (!doc.contains("infinite_tail")) {
    if (shelves.empty()) bad("'shelves' must be non-empty without an infinite_tail");
    req.spec.shelves = ShelfSequence::finite(std::move(shelves));
    return req;
  }

  const Json& tail = doc.at("infinite_tail");
  only_keys(tail, {"family", "params"}, "infinite_tail");
  if (!tail.contains("family") || !tail.at("family").is_string()) bad("infinite_tail needs a family");
  const std::string family = tail.at("family").get<std::string>();
  const Json params = tail.contains("params") ? tail.at("params") : Json::object();
  std::int64_t start = 1;
  std::int64_t step = 1;
  if (family == "arithmetic") {
    only_keys(params, {"start", "step", "n"}, "arithmetic params");
    start = integer_field(params, "start", "arithmetic params");
    step = integer_field(params, "step", "arithmetic params");
    if (step < 1) bad("arithmetic step must be at least 1");
  } else if (family == "exp" || family == "swish" || family == "odd") {
    only_keys(params, {"n"}, family + " params");
  } else {
    bad("unknown tail family '" + family + "'");
  }
  const std::int64_t inventory = integer_field_or(params, "n", 1, "tail params");
  req.spec.shelves =
      ShelfSequence::infinite(tail_generator(family, start, step, inventory, std::move(shelves)));
  return req;
}

NetworkRequest parse_network(const Json& doc) {
  only_keys(doc, {"N", "H", "M", "H_star", "activation", "point"}, "network spec");
  NetworkRequest req;
  req.provenance = doc;
  req.shape.inputs = integer_field(doc, "N", "network spec");
  req.shape.hidden = integer_field(doc, "H", "network spec");
  req.shape.outputs = integer_field(doc, "M", "network spec");
  req.shape.true_hidden = integer_field(doc, "H_star", "network spec");

  if (!doc.contains("activation")) bad("network spec needs an activation");
  const Json& act = doc.at("activation");
  only_keys(act, {"family", "exponents"}, "activation");
  if (!act.contains("family") || !act.at("family").is_string()) bad("activation needs a family");
  req.activation = act.at("family").get<std::string>();
  if (act.contains("exponents")) {
    if (!act.at("exponents").is_array()) bad("exponents must be an array");
    for (const auto& e : act.at("exponents")) {
      if (!e.is_number_integer()) bad("exponents must be integers");
      req.exponents.push_back(e.get<std::int64_t>());
    }
  }

  const std::string point = doc.contains("point") && doc.at("point").is_string()
                                ? doc.at("point").get<std::string>()
                                : std::string();
  if (point == "P1") {
    req.point = Point::P1;
  } else if (point == "P2") {
    req.point = Point::P2;
  } else {
    bad("point must be \"P1\" or \"P2\"");
  }
  return req;
}

}  // namespace

std::string_view to_string(Point point) { return point == Point::P1 ? "P1" : "P2"; }

ShelfSequence::Generator tail_generator(std::string_view family_name, std::int64_t start,
                                        std::int64_t step, std::int64_t inventory,
                                        std::vector<Shelf> explicit_shelves) {
  const std::string family(family_name);
  // Skip family members that do not exceed the last explicit price.
  std::int64_t offset = 0;
  if (!explicit_shelves.empty()) {
    const std::int64_t last = explicit_shelves.back().price;
    while (family_price(family, start, step, offset) <= last) ++offset;
  }
  return [family, start, step, inventory, offset,
          shelves = std::move(explicit_shelves)](std::size_t index) {
    if (index < shelves.size()) return shelves[index];
    const auto k = static_cast<std::int64_t>(index - shelves.size()) + offset;
    return Shelf{family_price(family, start, step, k), Integer(static_cast<long>(inventory))};
  };
}

nn::ActivationSupport make_support(std::string_view activation,
                                   const std::vector<std::int64_t>& exponents) {
  if (activation == "exp") return nn::ActivationSupport::exp_type();
  if (activation == "swish") return nn::ActivationSupport::swish_type();
  if (activation == "tanh" || activation == "odd") return nn::ActivationSupport::odd_type();
  if (activation == "poly" || activation == "custom") {
    if (exponents.empty()) {
      throw Error(ErrorCode::InvalidArgument,
                  std::string(activation) + " activation needs --exponents");
    }
    if (activation == "poly") return nn::ActivationSupport::polynomial(exponents);
    // Reuse the polynomial checks on the listed prefix.
    nn::ActivationSupport::polynomial(exponents);
    const std::int64_t gap = exponents.size() > 1 ? exponents.back() - exponents[exponents.size() - 2] : 1;
    return nn::ActivationSupport::custom([exponents, gap](std::size_t i) {
      if (i < exponents.size()) return exponents[i];
      return exponents.back() + gap * static_cast<std::int64_t>(i - exponents.size() + 1);
    });
  }
  throw Error(ErrorCode::InvalidArgument, "unknown activation '" + std::string(activation) + "'");
}

SpecRequest parse_spec(const Json& document) {
  if (!document.is_object()) bad("spec must be a JSON object");
  if (document.contains("N") || document.contains("activation")) return parse_network(document);
  return parse_generic(document);
}

SpecRequest load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open spec file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
  return parse_spec(doc);
}

}  // namespace rlct::io
