#include "nadyn/cli/serialize.hpp"

namespace nadyn::cli {

using localfield::Padic;

json Codec<Padic>::write(const Padic& x) {
  const long p = x.context().prime();
  json out{{"p", p}, {"valuation", x.valuation().to_string()}};
  out["digits"] = x.is_zero() ? std::vector<long>{} : x.digits();
  const auto abs = x.absolute_precision();
  out["precision"] = abs ? json(abs->get_num().get_si()) : json(nullptr);
  return out;
}

Padic Codec<Padic>::read(const localfield::PrimeContext& ctx, const json& j) {
  if (!j.is_object()) throw UsageError("capped element must be an object");
  if (j.at("p").get<long>() != ctx.prime()) throw UsageError("capped element has the wrong prime");
  const auto digits = j.at("digits").get<std::vector<long>>();
  const json& prec = j.at("precision");
  if (digits.empty()) {
    return prec.is_null() ? Padic::zero(ctx) : Padic::zero_to(ctx, prec.get<long>());
  }
  mpz_class unit = 0;
  mpz_class place = 1;
  for (long dgt : digits) {
    if (dgt < 0 || dgt >= ctx.prime()) throw UsageError("capped element digit out of range");
    unit += place * dgt;
    place *= ctx.prime();
  }
  const mpq_class v = localfield::parse_rational(j.at("valuation").get<std::string>());
  if (v.get_den() != 1) throw UsageError("capped element valuation must be an integer");
  return Padic::from_unit(ctx, v.get_num().get_si(), unit, static_cast<int>(digits.size()));
}

json polygon_json(const newton::NewtonPolygon& polygon) {
  auto points = [](const std::vector<newton::Point>& pts) {
    json a = json::array();
    for (const auto& pt : pts) a.push_back(json::array({pt.index, localfield::rational_string(pt.valuation)}));
    return a;
  };
  json segments = json::array();
  for (const auto& s : polygon.segments) {
    segments.push_back({{"slope", localfield::rational_string(s.slope)}, {"length", s.length}});
  }
  json roots = json::array();
  for (const auto& r : newton::root_valuations(polygon)) roots.push_back(localfield::rational_string(r));
  json cert = nullptr;
  if (auto c = newton::total_ramification_certificate(polygon)) {
    cert = {{"irreducible", true},
            {"degree", c->degree},
            {"ramification_index", c->ramification_index},
            {"slope", localfield::rational_string(c->slope)}};
  }
  return json{{"points", points(polygon.points)},
              {"vertices", points(polygon.hull)},
              {"segments", std::move(segments)},
              {"root_valuations", std::move(roots)},
              {"certificate", std::move(cert)}};
}

}  // namespace nadyn::cli
