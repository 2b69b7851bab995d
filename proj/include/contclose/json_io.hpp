#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "contclose/closure_engine.hpp"
#include "contclose/witness_numeric.hpp"

namespace contclose::jsonio {

using nlohmann::json;

inline constexpr const char* kEngineVersion = "0.1.0";

json rational_to_json(const Rational& q);
Rational rational_from_json(const json& j);

json exponents_to_json(const ExponentVector& e);
ExponentVector exponents_from_json(const json& j);

json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

json ideal_to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const json& j);

json facet_to_json(const Facet& f);
Facet facet_from_json(const json& j);

json location_to_json(const PointLocation& loc);
PointLocation location_from_json(const json& j);

json power_witness_to_json(const PowerWitness& w);
PowerWitness power_witness_from_json(const json& j);

json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const json& j);

json equal_degree_to_json(const EqualDegreeResult& r);

json witness_report_to_json(const WitnessReport& rep);

json power_representation_to_json(const PowerRepresentation& rep);
PowerRepresentation power_representation_from_json(const json& j);

/// Complete response documents, schema
/// { "command", "input": {...}, "verdict" | "generators" | "report",
///   "certificate", "version" }.
json member_document(const MonomialIdeal& ideal, const ExponentVector& tau, ClosureKind kind,
                     const std::vector<std::string>& vars, const Verdict& verdict);
json equal_degree_document(const Polynomial& candidate, const std::vector<Polynomial>& gens,
                           ClosureKind kind, const std::vector<std::string>& vars,
                           const Verdict& verdict, const EqualDegreeResult& result);
json closure_document(const MonomialIdeal& ideal, const MonomialIdeal& closed,
                      const std::vector<std::string>& vars,
                      const std::vector<std::pair<ExponentVector, PointLocation>>& new_gens);
json witness_document(const json& input_echo, const WitnessReport& report);

struct VerifyStep {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOutcome {
    bool pass = true;
    std::vector<VerifyStep> steps;

    void add(const std::string& name, bool ok, const std::string& detail = "") {
        steps.push_back({name, ok, detail});
        pass = pass && ok;
    }
};

/// Replays the checkable content of a response document: exact span solves,
/// axes membership, exponent arithmetic and hull decompositions. Accepts
/// exactly the documents the member/closure/verify-representation commands
/// emit. Throws std::invalid_argument on malformed documents.
VerifyOutcome verify_document(const json& doc);

}  // namespace contclose::jsonio
