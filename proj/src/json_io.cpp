#include "sphpart/json_io.hpp"

namespace sphpart {

Json to_json(const BigInt& value) {
  if (fits_int64(value)) return value.convert_to<std::int64_t>();
  return to_string(value);
}

Json to_json(const Rational& value) { return to_string(value); }

Json to_json(const RationalPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

Json to_json(const Partition& lambda) { return Json(lambda.parts()); }

Json to_json(const Permutation& sigma) { return Json(sigma.images()); }

Json to_json(const BiPartition& b) {
  Json out = Json::array();
  for (const auto& p : b.parts()) out.push_back({p.top, p.bottom});
  return out;
}

Json to_json(const GGForm& gg) {
  Json out;
  out["lambda_top"] = to_json(gg.lambda_top);
  out["lambda_bot"] = to_json(gg.lambda_bot);
  out["lambda_top_pro"] = to_json(gg.lambda_top_pro);
  out["lambda_bot_pro"] = to_json(gg.lambda_bot_pro);
  out["sigma"] = to_json(gg.sigma);
  out["nonprop_top"] = to_json(gg.nonprop_top);
  out["nonprop_bot"] = to_json(gg.nonprop_bot);
  return out;
}

Json to_json(const SetPartition2k& d) { return Json(d.blocks()); }

Json to_json(const LoewyLayers& layers) {
  Json out = Json::array();
  for (const auto& layer : layers) {
    Json row = Json::array();
    for (const auto& lambda : layer) row.push_back(to_json(lambda));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const TiltingDescriptor& t) {
  Json out;
  out["module"] = t.kind == TiltingDescriptor::Kind::Projective ? "P" : "Delta";
  out["label"] = to_json(t.label);
  out["layers"] = to_json(t.layers);
  return out;
}

Json to_json(const DecompositionReport& report) {
  Json out;
  out["k"] = report.k;
  out["n"] = report.n;
  out["poset"] = to_string(report.kind);
  out["labels"] = Json::array();
  for (const auto& lambda : report.labels) out["labels"].push_back(to_json(lambda));
  out["chains"] = report.chains;
  out["matrix"] = report.matrix;
  out["cell_dims"] = Json::array();
  for (const auto& d : report.cell_dims) out["cell_dims"].push_back(to_json(d));
  out["simple_dims"] = Json::array();
  for (const auto& d : report.simple_dims) out["simple_dims"].push_back(to_json(d));
  out["projectives"] = Json::array();
  for (const auto& p : report.projectives) out["projectives"].push_back(to_json(p));
  out["tiltings"] = Json::array();
  for (const auto& t : report.tiltings) out["tiltings"].push_back(to_json(t));
  out["truncations"] = Json::array();
  for (const auto& [lambda, mu] : report.truncations) out["truncations"].push_back({to_json(lambda), to_json(mu)});
  return out;
}

}  // namespace sphpart
