#pragma once

#include <gmpxx.h>

#include <string>

#include "json.hpp"
#include "nadyn/errors.hpp"
#include "nadyn/localfield/exact.hpp"
#include "nadyn/localfield/padic.hpp"
#include "nadyn/newton/polygon.hpp"
#include "nadyn/series/tail_series.hpp"

namespace nadyn::cli {

using json = nlohmann::json;

template <class F>
struct Codec;

// Exact values travel as "num/den" strings.
template <>
struct Codec<localfield::ExactQp> {
  static json write(const localfield::ExactQp& x) { return x.to_string(); }
  static localfield::ExactQp read(const localfield::PrimeContext& ctx, const json& j) {
    if (!j.is_string()) throw UsageError("exact element must be a \"num/den\" string");
    return localfield::ExactQp(ctx, localfield::parse_rational(j.get<std::string>()));
  }
};

// Capped values: p, valuation, base-p digits of the unit (low first), and
// absolute precision (null for an exact zero).
template <>
struct Codec<localfield::Padic> {
  static json write(const localfield::Padic& x);
  static localfield::Padic read(const localfield::PrimeContext& ctx, const json& j);
};

template <class F>
json series_json(const series::TailSeries<F>& s) {
  json coeffs = json::array();
  for (int k = s.ord(); k < s.trunc(); ++k) coeffs.push_back(Codec<F>::write(s.coeff(k)));
  return json{{"ord", s.ord()}, {"trunc", s.trunc()}, {"coeffs", std::move(coeffs)}};
}

template <class F>
series::TailSeries<F> series_from_json(const localfield::PrimeContext& ctx, const json& j) {
  const int ord = j.at("ord").get<int>();
  const int trunc = j.at("trunc").get<int>();
  const auto& coeffs = j.at("coeffs");
  if (ord < 0 || ord > trunc || static_cast<int>(coeffs.size()) != trunc - ord) {
    throw UsageError("series JSON: coefficient count does not match ord/trunc");
  }
  std::vector<F> dense(static_cast<std::size_t>(trunc), F::zero(ctx));
  for (int k = ord; k < trunc; ++k) dense[static_cast<std::size_t>(k)] = Codec<F>::read(ctx, coeffs[k - ord]);
  return series::TailSeries<F>::from_coefficients(ctx, std::move(dense), trunc);
}

json polygon_json(const newton::NewtonPolygon& polygon);

}  // namespace nadyn::cli
