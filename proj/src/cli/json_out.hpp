#pragma once

#include "isodist/apex.hpp"
#include "isodist/base.hpp"
#include "isodist/omega.hpp"
#include "isodist/oracle.hpp"

#include <json.hpp>

#include <string>

namespace isodist::cli {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const ExactReal& x);
Json to_json(const RadicalSum& x);
/// {"digits": d, "value": "..."} so approximations are never mistaken for exact values.
Json approx_json(const RadicalSum& x, int digits);

Json to_json(const apex::ApexWitness& w);
Json to_json(const apex::Decision& d);
Json to_json(const apex::ApexCertificate& c, const apex::ApexTriangle& t, int digits);
Json to_json(const apex::Line& l);
Json to_json(const apex::LocusReport& r);

Json to_json(const base::BaseWitness& w);
Json to_json(const base::Decision& d);
Json to_json(const base::BasePoint& m, const base::BaseTriangle& t, int digits);

Json to_json(const omega::Representation& r);
Json to_json(const oracle::Hit& h);
Json to_json(const oracle::CrossCheck& c);

/// Indented "key: value" rendering of a result document.
std::string render_text(const Json& doc);

}  // namespace isodist::cli
