// json_io.hpp — JSON wire formats for every toolkit value.
//
//   matrix        {"rows": R, "cols": C, "data": [[re, im], ...]}   row-major
//   bipartite     matrix keys plus {"dA": n, "dB": m}
//   channel       {"d_in": n, "d_out": m, "kraus": [matrix, ...]}
//   pure state    {"dA": n, "dB": m, "amplitudes": [[re, im], ...]}
//   decomposition {"weights": [...], "vectors": [pure state, ...]}
//   certificate   {"verdict", "method", "witnesses", "components"?, "children"}
//
// Emission uses insertion-ordered keys so identical values serialize to
// identical bytes.

#pragma once

#include "pptkit/fixtures.hpp"
#include "pptkit/report.hpp"
#include "pptkit/separability.hpp"

#include <json.hpp>

#include <string>

namespace pptkit::io {

using Json = nlohmann::ordered_json;

Json to_json(const Matrix& m);
Json to_json(const BipartiteOperator& x);
Json to_json(const KrausChannel& ch);
Json to_json(const PureState& v);
Json to_json(const PureDecomposition& dec);
Json to_json(const SeparabilityCertificate& cert);
Json to_json(const VerificationReport& report);

// Parsers throw std::invalid_argument naming the offending field.
Matrix matrix_from_json(const Json& j);
BipartiteOperator bipartite_from_json(const Json& j);
KrausChannel channel_from_json(const Json& j);
PureState pure_state_from_json(const Json& j);
PureDecomposition decomposition_from_json(const Json& j);

Json load_file(const std::string& path);
void write_file(const std::string& path, const Json& j);

}  // namespace pptkit::io
