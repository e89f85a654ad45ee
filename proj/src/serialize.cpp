#include "partalg/serialize.hpp"

#include <stdexcept>

namespace partalg {

namespace {

long long small_int(const BigInt& value) {
  if (value > BigInt(1) << 53 || value < -(BigInt(1) << 53))
    throw std::overflow_error("count too large for a JSON number");
  return static_cast<long long>(value);
}

std::string plain_blocks(const HalfDiagram& half) {
  std::string out;
  for (size_t b = 0; b < half.blocks().size(); ++b) {
    if (b) out += '|';
    const auto& block = half.blocks()[b];
    for (size_t i = 0; i < block.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(block[i] + 1);
    }
  }
  return out;
}

}  // namespace

Json to_json(const IntegerPartition& shape) {
  Json out = Json::array();
  for (int p : shape.parts) out.push_back(p);
  return out;
}

Json to_json(const AlgebraElement& element) {
  Json terms = Json::array();
  for (const auto& [diagram, coeff] : element.terms()) {
    Json poly = Json::object();
    for (const auto& [exponent, value] : coeff.coefficients())
      poly[std::to_string(exponent)] = format_rational(value);
    terms.push_back(Json{{"diagram", diagram.to_string()}, {"coeff", poly}});
  }
  return Json{{"n", element.n()}, {"terms", terms}};
}

Json to_json(const HalfDiagram& half) {
  Json labelled = Json::array();
  for (int b : half.labelled()) labelled.push_back(b);
  return Json{{"n", half.n()}, {"blocks", plain_blocks(half)},
              {"labelled", labelled}};
}

Json to_json(const WallTuple& tuple) {
  return Json::array({tuple.through_plain, tuple.through_labelled,
                      tuple.left_labelled, tuple.right_labelled});
}

Json to_json(const FiltrationRecord& record) {
  return Json{{"mu", to_json(record.mu)},
              {"muN", to_json(record.mu_plain)},
              {"muL", to_json(record.mu_labelled)},
              {"lamL", to_json(record.left_weight)},
              {"lamR", to_json(record.right_weight)},
              {"mult", small_int(record.multiplicity)}};
}

Json to_json(const RestrictionDecomposition& decomposition) {
  Json layers = Json::array();
  for (const auto& layer : decomposition.layers) {
    Json records = Json::array();
    for (const auto& record : layer.records) records.push_back(to_json(record));
    layers.push_back(Json{{"tuple", to_json(layer.tuple)}, {"records", records}});
  }
  Json cells = Json::array();
  for (const auto& [key, mult] : decomposition.cells) {
    cells.push_back(
        Json{{"left", Json::array({key.left_rank, to_json(key.left_shape)})},
             {"right", Json::array({key.right_rank, to_json(key.right_shape)})},
             {"mult", small_int(mult)}});
  }
  return Json{{"m", decomposition.m},
              {"n", decomposition.n},
              {"r", decomposition.r},
              {"lambda", to_json(decomposition.shape)},
              {"layers", layers},
              {"cells", cells}};
}

Json constants_json(const std::map<ClassLabel, BigInt>& constants) {
  Json rows = Json::array();
  for (const auto& [label, value] : constants)
    rows.push_back(Json{{"r", label.r},
                        {"lambda", to_json(label.shape)},
                        {"a", small_int(value)}});
  return Json{{"constants", rows}};
}

Json ring_table_json(const std::vector<RingTableRow>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    Json product = Json::array();
    for (const auto& [label, value] : row.product)
      product.push_back(Json{{"r", label.r},
                             {"lambda", to_json(label.shape)},
                             {"a", small_int(value)}});
    out.push_back(Json{
        {"x", Json{{"r", row.x.r}, {"lambda", to_json(row.x.shape)}}},
        {"y", Json{{"r", row.y.r}, {"lambda", to_json(row.y.shape)}}},
        {"product", product}});
  }
  return Json{{"rows", out}};
}

}  // namespace partalg
