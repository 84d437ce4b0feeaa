#pragma once

#include <map>
#include <string>

#include "json.hpp"
#include "qmod/cycmatrix.hpp"
#include "qmod/fusion.hpp"
#include "qmod/macdonald.hpp"
#include "qmod/modular.hpp"
#include "qmod/report.hpp"

namespace qmod {

using Json = nlohmann::json;

Json to_json(const CycNum& x);
CycNum cycnum_from_json(const Json& j);
Json to_json(const QRatFn& f);
QRatFn qratfn_from_json(const Json& j);
Json to_json(const Weight& w);
Weight weight_from_json(const Json& j);
Json to_json(const ComplexF& z);

Json to_json(const CycMatrix& m);
Json to_json(const ComplexMatrix& m);

Json to_json(const ModularData& md);
Json to_json_float(const ModularData& md);
Json fusion_product_json(const Weight& lambda, const Weight& mu, const std::map<Weight, long>& result);
Json to_json(const FusionTable& table);
Json to_json(const QWPoly& p);
Json to_json(const SUData& su);
Json to_json_float(const SUData& su);
Json to_json(const VerificationReport& r, bool with_timing);

}  // namespace qmod
