#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "skewfree/freeness.hpp"
#include "skewfree/growth.hpp"
#include "skewfree/monomial.hpp"

namespace skewfree::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "skewfree/1";

/// {"schema": ..., "command": ...}
Json envelope(const std::string& command);

Json of(const QuadExt& q);
Json of(const Relation& r, bool verified);
Json of(const ClassificationReport& r);
Json of(const FreenessReport& r);
Json of(const ValuationCertificate& c, const IntMat2& m, int t_power);
Json of(const DoublingResult& d);
Json of(const GrowthSeries& s);
Json of(const GkEstimate& g);

/// One "dotted.key: value" line per leaf; scalar arrays joined by ", ".
std::string render_text(const Json& j);

}  // namespace skewfree::report
