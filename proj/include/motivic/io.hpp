#pragma once

// JSON schemas shared by the command-line front end: descriptors, resolution
// data, arcs, and theorem reports. Every reader takes the JSON path of the
// value it reads so schema errors name the offending field.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "motivic/jet_engine.hpp"
#include "motivic/measure_engine.hpp"
#include "motivic/poly_core.hpp"
#include "motivic/resolution_analysis.hpp"

namespace motivic::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

class SchemaError : public Error {
public:
    SchemaError(const std::string& path, const std::string& what) : Error(path + ": " + what), path_(path) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

const Json& require(const Json& object, const std::string& key, const std::string& path);
std::int64_t read_int(const Json& value, const std::string& path);
std::string read_string(const Json& value, const std::string& path);
Rational read_rational(const Json& value, const std::string& path);
LaurentPoly read_laurent(const Json& value, const std::string& path);
MotiveSeries read_series(const Json& value, const std::string& path);
std::vector<std::int64_t> read_int_list(const Json& value, const std::string& path);

// {level, class, dim}
StableSetDescriptor read_stable(const Json& value, const std::string& path);
Json write_stable(const StableSetDescriptor& s);

// {level, class, dim, nonsingular?}
CylinderDescriptor read_cylinder(const Json& value, const std::string& path);

// {ambient_dim, strata: [{name, index_set, class, p_mults, q_mults?}]}
// q_mults are mandatory when require_q is set.
ResolutionDiagram read_diagram(const Json& value, const std::string& path, bool require_q);

// Arcs: arrays of rational-coefficient arrays.
ArcJet read_arc(const Json& value, const std::string& path, std::size_t cap);

Json write_verdict(const BoundednessVerdict& v);
Json write_report(const TheoremReport& report);

} // namespace motivic::io
