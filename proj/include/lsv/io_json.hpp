#pragma once

#include <json.hpp>

#include "lsv/corpus.hpp"
#include "lsv/osculation.hpp"
#include "lsv/verify.hpp"

// Rationals serialize as canonical "p" / "p/q" strings so every value
// round-trips exactly.
namespace nlohmann {
template <>
struct adl_serializer<mpq_class> {
    static void to_json(json& j, const mpq_class& r) {
        j = lsv::rat_to_string(r);
    }
    static void from_json(const json& j, mpq_class& r) {
        r = lsv::rat_from_string(j.get<std::string>());
    }
};
}  // namespace nlohmann

namespace lsv {

using nlohmann::json;

void to_json(json& j, const MultiIndex& m);
void from_json(const json& j, MultiIndex& m);

// Polynomials serialize as bare term lists [{"coeff": "p/q", "exps":
// [int,...]}, ...] in the canonical monomial order. The variable count is
// implied by the exponent vectors, so containers that know their dimension
// should parse through poly_from_json.
void to_json(json& j, const Polynomial& p);
void from_json(const json& j, Polynomial& p);
Polynomial poly_from_json(const json& j, int nvars);

void to_json(json& j, const Matrix& m);
void from_json(const json& j, Matrix& m);

void to_json(json& j, const Variety& v);
void from_json(const json& j, Variety& v);

void to_json(json& j, const LinearSpace& l);
void from_json(const json& j, LinearSpace& l);

void to_json(json& j, const QuadricSystem& s);
void from_json(const json& j, QuadricSystem& s);

void to_json(json& j, const GraphJet& jet);
void from_json(const json& j, GraphJet& jet);

void to_json(json& j, const GraphChart& chart);
void to_json(json& j, const FundamentalForm& f);
void to_json(json& j, const AdaptedSplit& s);
void to_json(json& j, const Obstruction& o);
void to_json(json& j, const OsculationReport& r);
void to_json(json& j, const GenericityReport& r);
void to_json(json& j, const GaussFiberReport& r);
void to_json(json& j, const PencilClassification& c);
void to_json(json& j, const SinglocBoundReport& r);
void to_json(json& j, const WedgeCubicReport& r);
void to_json(json& j, const PairingNormalizationReport& r);
void to_json(json& j, const Decision& d);
void to_json(json& j, const TrialRecord& r);
void to_json(json& j, const SuiteReport& r);
void to_json(json& j, const CorpusEntry& e);

std::string verdict_name(Verdict v);

}  // namespace lsv
