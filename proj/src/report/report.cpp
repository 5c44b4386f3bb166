#include "primerep/report.hpp"

namespace primerep {

namespace {

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? to_json(*v) : Json(nullptr);
}

Json real_json(long double v) { return static_cast<double>(v); }

}  // namespace

Json big_json(const BigInt& v) {
  if (const auto small = to_i64(v)) return *small;
  return v.get_str();
}

Json point_json(const Point& p) { return Json(p); }

Json values_json(const std::vector<BigInt>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(big_json(v));
  return out;
}

Json to_json(const Witness& w) {
  return Json{{"point", point_json(w.point)}, {"values", values_json(w.values)}, {"modulus", big_json(w.modulus)}};
}

Json to_json(const Verdict& v) {
  Json out{{"status", std::string(to_string(v.status))}, {"witness", optional_json(v.witness)}};
  if (v.obstruction) {
    out["obstruction"] = {
        {"kind", v.obstruction->kind == Obstruction::Kind::Divisor ? "divisor" : "value-envelope"},
        {"value", big_json(v.obstruction->value)}};
  } else {
    out["obstruction"] = nullptr;
  }
  out["horizon"] = v.horizon;
  return out;
}

Json to_json(const CoprimeSequence& s) {
  Json entries = Json::array();
  for (const auto& e : s.entries) entries.push_back({{"point", point_json(e.point)}, {"value", big_json(e.value)}});
  return Json{{"entries", entries}, {"horizon", s.horizon}, {"exhausted", s.exhausted}};
}

Json to_json(const ConditionReport& r) {
  auto per_prime = [](const auto& list) {
    Json out = Json::array();
    for (const auto& [p, v] : list) {
      Json e = to_json(v);
      e["prime"] = p;
      out.push_back(e);
    }
    return out;
  };
  return Json{{"modulus", big_json(r.modulus)},
              {"A", {{"requested", r.a_requested}, {"sequence", to_json(r.a)}}},
              {"B", to_json(r.b)},
              {"C", to_json(r.c)},
              {"D", per_prime(r.d)},
              {"E", to_json(r.e)},
              {"F", to_json(r.f)},
              {"G", per_prime(r.g)}};
}

Json to_json(const SystemConditionReport& r) {
  return Json{{"modulus", big_json(r.modulus)},
              {"H", {{"requested", r.h_requested}, {"sequence", to_json(r.h)}}},
              {"I", to_json(r.i)}};
}

Json to_json(const LeastWitnessRecord& r) {
  Json out{{"modulus", big_json(r.m)}};
  out["point"] = r.point ? point_json(*r.point) : Json(nullptr);
  out["values"] = values_json(r.values);
  Json prime = Json::array();
  for (const auto& v : r.values) prime.push_back(is_prime(v));
  out["prime"] = prime;
  out["conclusive"] = r.conclusive;
  out["horizon"] = r.horizon;
  return out;
}

Json to_json(const BoundCheck& c) {
  Json violations = Json::array();
  for (const auto& v : c.violations) {
    violations.push_back({{"m", v.m}, {"s", v.s ? Json(*v.s) : Json(nullptr)}});
  }
  return Json{{"kind", std::string(to_string(c.kind))},
              {"m_lo", c.m_lo},
              {"m_hi", c.m_hi},
              {"threshold", c.threshold ? big_json(*c.threshold) : Json(nullptr)},
              {"violations", violations},
              {"empirical_threshold", c.empirical_threshold ? Json(*c.empirical_threshold) : Json(nullptr)}};
}

Json to_json(const PhiResult& r) {
  return Json{{"n", big_json(r.n)}, {"count", r.count}, {"box", r.box}, {"exact", r.exact}};
}

Json to_json(const PiResult& r) {
  return Json{{"x", big_json(r.x)},
              {"value", r.value},
              {"method", std::string(to_string(r.method))},
              {"members", values_json(r.members)},
              {"complete_domain", r.complete_domain},
              {"horizon", r.horizon},
              {"core_size", r.core_size}};
}

Json to_json(const ImplicationCheck& c) {
  Json violations = Json::array();
  for (const auto& v : c.violations) {
    violations.push_back(
        {{"m", v.m}, {"pi", v.pi}, {"omega", v.omega}, {"phi", v.phi}, {"phi_exact", v.phi_exact}});
  }
  return Json{{"violations", violations}, {"undecided", c.undecided}, {"premise_count", c.premise_count}};
}

Json to_json(const AnalogyResult& r) {
  return Json{{"a", big_json(r.a)},
              {"b", big_json(r.b)},
              {"status", std::string(to_string(r.status))},
              {"side_a", to_json(r.side_a)},
              {"side_b", to_json(r.side_b)},
              {"side_ab", optional_json(r.side_ab)}};
}

Json to_json(const FermatFactorHit& h) {
  return Json{{"factor", big_json(h.factor)},
              {"k", h.k},
              {"euler_k", h.euler_k ? Json(*h.euler_k) : Json(nullptr)}};
}

Json to_json(const FactorizationCheck& c) {
  return Json{{"product_matches", c.product_matches},
              {"composite_factors", values_json(c.composite_factors)},
              {"probabilistic", c.probabilistic},
              {"ok", c.ok()}};
}

Json to_json(const FermatInZm& r) {
  return Json{{"x", r.x ? Json(*r.x) : Json(nullptr)},
              {"value", r.value ? big_json(*r.value) : Json(nullptr)},
              {"scanned", r.scanned}};
}

Json to_json(const FinitenessStep& s) {
  return Json{{"k", s.k},
              {"m", big_json(s.m)},
              {"telescoping", s.telescoping},
              {"in_zm", to_json(s.in_zm)},
              {"confirmed", s.confirmed()}};
}

Json to_json(const FermatRecord& r) {
  return Json{{"x", r.x},
              {"value", r.value ? big_json(*r.value) : Json(nullptr)},
              {"known_factors", values_json(r.known_factors)},
              {"status", std::string(to_string(r.status))},
              {"probabilistic", r.probabilistic}};
}

Json to_json(const BatemanHornConstant& c) {
  Json table = Json::object();
  for (const auto& [p, w] : c.omega_table) table[std::to_string(p)] = w;
  return Json{{"value", real_json(c.value)},
              {"cutoff", c.cutoff},
              {"primes_used", c.primes_used},
              {"last_decade_change", real_json(c.last_decade_change)},
              {"obstruction_prime", c.obstruction_prime ? Json(*c.obstruction_prime) : Json(nullptr)},
              {"omega", table}};
}

Json to_json(const PredictedCount& p) {
  return Json{{"sum_form", real_json(p.sum_form)},
              {"closed_form", real_json(p.closed_form)},
              {"constant", real_json(p.constant)},
              {"degree_product", p.degree_product}};
}

Json to_json(const ApLeastPrimeTable& t) {
  Json entries = Json::object();
  for (const auto& [l, p] : t.entries) entries[std::to_string(l)] = p;
  return Json{{"k", t.k},
              {"strict_positive_n", t.strict_positive_n},
              {"entries", entries},
              {"p_k", t.p_k},
              {"exponent", t.exponent}};
}

Json to_json(const ApProductCheck& c) {
  return Json{{"a", c.a},
              {"b", c.b},
              {"n_max", c.n_max},
              {"violations", c.violations},
              {"threshold", c.threshold}};
}

Json to_json(const FactorialWitness& w) {
  return Json{{"l", w.l},
              {"point", point_json(w.point)},
              {"values", values_json(w.values)},
              {"all_prime", w.all_prime},
              {"least_value_prime", w.least_value_prime}};
}

Json to_json(const FactorialSearch& s) {
  return Json{{"argument_least", optional_json(s.argument_least)},
              {"value_least", optional_json(s.value_least)},
              {"orders_differ", s.orders_differ()},
              {"conclusive", s.conclusive},
              {"horizon", s.horizon}};
}

Json to_json(const ProbeReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json j{{"index", e.index}};
    j["point"] = e.point ? point_json(*e.point) : Json(nullptr);
    j["values"] = values_json(e.values);
    j["all_prime"] = e.all_prime;
    j["least_value_prime"] = e.least_value_prime;
    j["argument_point"] = e.argument_point ? point_json(*e.argument_point) : Json(nullptr);
    j["conclusive"] = e.conclusive;
    entries.push_back(j);
  }
  return Json{{"lo", r.lo},
              {"hi", r.hi},
              {"horizon", r.horizon},
              {"entries", entries},
              {"r_estimate", r.r_estimate ? Json(*r.r_estimate) : Json(nullptr)},
              {"violations", r.violations},
              {"prime_fraction", r.prime_fraction()}};
}

Json to_json(const ModulusProbeReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"m", e.m},
                       {"factorial_index", e.factorial_index},
                       {"member", optional_json(e.member)},
                       {"prime", optional_json(e.prime)}});
  }
  return Json{{"horizon", r.horizon}, {"entries", entries}};
}

Json to_json(const Report& r) {
  return Json{{"schema_version", kSchemaVersion},
              {"command", r.command},
              {"config", r.config},
              {"results", r.results},
              {"conclusive", r.conclusive},
              {"elapsed_ms", r.elapsed_ms ? Json(*r.elapsed_ms) : Json(nullptr)}};
}

std::string render_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

}  // namespace primerep
