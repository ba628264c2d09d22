#ifndef TOPSKIT_REPORT_HPP
#define TOPSKIT_REPORT_HPP

#include "topskit/gifs.hpp"
#include "topskit/rbw.hpp"
#include "topskit/tops.hpp"

#include <json.hpp>

namespace topskit {

// JSON reports. Exact numbers are always strings; key order is fixed so
// output is byte-identical across runs.
using Json = nlohmann::ordered_json;

Json to_json(const Interval& i);
Json to_json(const IntervalSet& s);
Json to_json(const ValidationReport& r);
Json to_json(const GraphIFS& g, const ComponentHulls& h);
Json to_json(const GraphIFS& g, const TopAddress& t);
Json to_json(const TopsClassification& c);
Json to_json(const GraphIFS& g, const UpsilonRegion& r);
Json to_json(const GraphIFS& g, const InvarianceVerdict& v);
Json to_json(const OrderingReport& r);
Json to_json(const RbwReport& r);

} // namespace topskit

#endif
