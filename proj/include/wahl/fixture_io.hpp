#pragma once

#include "wahl/jio.hpp"
#include "wahl/surface.hpp"
#include "wahl/verify.hpp"

#include <string>
#include <vector>

namespace wahl::io {

// JSON schemas (all "schema_version": 1, integers as JSON integers at
// arbitrary precision, rationals as {"num","den"} objects, never floats):
//
//   curve config   {"schema_version","curves":[{"id","self_int",
//                   "exceptional_of"?}],"pairings":[[idA,idB,k]...],
//                   "k_squared","picard_rank"}
//   blowup script  {"schema_version","config":<curve config>,
//                   "steps":[{"name","at":[{"curve","mult"}...]}...]}
//   fixture        see fixture_to_json; `wahl verify` consumes it
//   report         see report_to_json; stable output of `wahl verify`

jio::Value config_to_json(const surface::CurveConfig& cfg);
surface::CurveConfig config_from_json(const jio::Value& v);

struct BlowupStep {
    std::string name;
    surface::PointSpec point;
};

struct BlowupScript {
    surface::CurveConfig seed;
    std::vector<BlowupStep> steps;
};

BlowupScript script_from_json(const jio::Value& v);
surface::CurveConfig run_script(const BlowupScript& script);

jio::Value fixture_to_json(const verify::LeeParkFixture& fx);
verify::LeeParkFixture fixture_from_json(const jio::Value& v);

jio::Value report_to_json(const verify::VerificationReport& report);
std::string report_to_text(const verify::VerificationReport& report);

enum class Format { Text, Json };

std::string emit_report(const verify::VerificationReport& report, Format format);

} // namespace wahl::io
