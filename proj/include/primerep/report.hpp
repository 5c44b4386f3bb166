#pragma once

// JSON encodings of every result type. Integers that may not fit in 64 bits
// are written as decimal strings.

#include <json.hpp>
#include <optional>
#include <string>

#include "primerep/conditions.hpp"
#include "primerep/counting.hpp"
#include "primerep/crt_analogy.hpp"
#include "primerep/density.hpp"
#include "primerep/factorial_probe.hpp"
#include "primerep/fermat.hpp"
#include "primerep/least_witness.hpp"

namespace primerep {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json big_json(const BigInt& v);
Json point_json(const Point& p);
Json values_json(const std::vector<BigInt>& values);

Json to_json(const Witness& w);
Json to_json(const Verdict& v);
Json to_json(const CoprimeSequence& s);
Json to_json(const ConditionReport& r);
Json to_json(const SystemConditionReport& r);
Json to_json(const LeastWitnessRecord& r);
Json to_json(const BoundCheck& c);
Json to_json(const PhiResult& r);
Json to_json(const PiResult& r);
Json to_json(const ImplicationCheck& c);
Json to_json(const AnalogyResult& r);
Json to_json(const FermatFactorHit& h);
Json to_json(const FactorizationCheck& c);
Json to_json(const FermatInZm& r);
Json to_json(const FinitenessStep& s);
Json to_json(const FermatRecord& r);
Json to_json(const BatemanHornConstant& c);
Json to_json(const PredictedCount& p);
Json to_json(const ApLeastPrimeTable& t);
Json to_json(const ApProductCheck& c);
Json to_json(const FactorialWitness& w);
Json to_json(const FactorialSearch& s);
Json to_json(const ProbeReport& r);
Json to_json(const ModulusProbeReport& r);

struct Report {
  std::string command;
  Json config = Json::object();
  Json results = Json::object();
  bool conclusive = true;
  std::optional<double> elapsed_ms;  // only with --timing
};

Json to_json(const Report& r);
std::string render_json(const Report& r);

}  // namespace primerep
