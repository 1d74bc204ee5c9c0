#include "pptkit/json_io.hpp"

#include <fstream>
#include <sstream>

namespace pptkit::io {

namespace {

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
    throw std::invalid_argument("json: field '" + field + "' " + why);
}

const Json& require(const Json& j, const char* field) {
    if (!j.is_object() || !j.contains(field)) bad_field(field, "is missing");
    return j.at(field);
}

Index positive_index(const Json& j, const char* field) {
    const Json& v = require(j, field);
    if (!v.is_number_integer() || v.get<long long>() < 1)
        bad_field(field, "must be a positive integer");
    return v.get<Index>();
}

Complex complex_entry(const Json& v, const char* field) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        bad_field(field, "entries must be [re, im] pairs");
    return {v[0].get<double>(), v[1].get<double>()};
}

Json complex_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

}  // namespace

Json to_json(const Matrix& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json data = Json::array();
    for (Index r = 0; r < m.rows(); ++r)
        for (Index c = 0; c < m.cols(); ++c) data.push_back(complex_json(m(r, c)));
    j["data"] = std::move(data);
    return j;
}

Json to_json(const BipartiteOperator& x) {
    Json j = to_json(x.matrix);
    j["dA"] = x.dA;
    j["dB"] = x.dB;
    return j;
}

Json to_json(const KrausChannel& ch) {
    Json j;
    j["d_in"] = ch.d_in;
    j["d_out"] = ch.d_out;
    Json ops = Json::array();
    for (const Matrix& a : ch.kraus) ops.push_back(to_json(a));
    j["kraus"] = std::move(ops);
    return j;
}

Json to_json(const PureState& v) {
    Json j;
    j["dA"] = v.dA;
    j["dB"] = v.dB;
    Json amps = Json::array();
    for (Index i = 0; i < v.amplitudes.size(); ++i)
        amps.push_back(complex_json(v.amplitudes(i)));
    j["amplitudes"] = std::move(amps);
    return j;
}

Json to_json(const PureDecomposition& dec) {
    Json j;
    j["weights"] = dec.weights;
    Json vecs = Json::array();
    for (const PureState& v : dec.vectors) vecs.push_back(to_json(v));
    j["vectors"] = std::move(vecs);
    return j;
}

Json to_json(const SeparabilityCertificate& cert) {
    Json j;
    j["verdict"] = to_string(cert.verdict);
    j["method"] = cert.method;
    Json w = Json::object();
    for (const auto& [name, value] : cert.witnesses) w[name] = value;
    j["witnesses"] = std::move(w);
    if (!cert.components.empty()) {
        Json comps = Json::array();
        for (const auto& comp : cert.components) {
            Json c;
            c["weight"] = comp.weight;
            c["descriptor"] = comp.descriptor;
            c["dA"] = comp.op.dA;
            c["dB"] = comp.op.dB;
            comps.push_back(std::move(c));
        }
        j["components"] = std::move(comps);
    }
    Json children = Json::array();
    for (const auto& child : cert.children) children.push_back(to_json(child));
    j["children"] = std::move(children);
    return j;
}

Json to_json(const VerificationReport& report) {
    Json j;
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json jc;
        jc["name"] = c.name;
        jc["status"] = to_string(c.status);
        Json w = Json::object();
        for (const auto& [name, value] : c.witnesses) w[name] = value;
        jc["witnesses"] = std::move(w);
        jc["note"] = c.note;
        checks.push_back(std::move(jc));
    }
    j["checks"] = std::move(checks);
    j["passed"] = report.passed();
    return j;
}

Matrix matrix_from_json(const Json& j) {
    const Index rows = positive_index(j, "rows");
    const Index cols = positive_index(j, "cols");
    const Json& data = require(j, "data");
    if (!data.is_array() || Index(data.size()) != rows * cols)
        bad_field("data", "must be an array of length rows*cols");
    Matrix m(rows, cols);
    for (Index r = 0; r < rows; ++r)
        for (Index c = 0; c < cols; ++c) m(r, c) = complex_entry(data[r * cols + c], "data");
    return m;
}

BipartiteOperator bipartite_from_json(const Json& j) {
    const Index dA = positive_index(j, "dA");
    const Index dB = positive_index(j, "dB");
    Matrix m = matrix_from_json(j);
    if (m.rows() != m.cols() || m.rows() != dA * dB)
        bad_field("data", "must describe a square matrix of side dA*dB");
    return BipartiteOperator(dA, dB, std::move(m));
}

KrausChannel channel_from_json(const Json& j) {
    const Index d_in = positive_index(j, "d_in");
    const Index d_out = positive_index(j, "d_out");
    const Json& ops = require(j, "kraus");
    if (!ops.is_array() || ops.empty()) bad_field("kraus", "must be a nonempty array");
    std::vector<Matrix> kraus;
    kraus.reserve(ops.size());
    for (const Json& op : ops) kraus.push_back(matrix_from_json(op));
    KrausChannel ch = make_channel(std::move(kraus));
    if (ch.d_in != d_in || ch.d_out != d_out)
        bad_field("kraus", "operator shapes do not match d_out x d_in");
    return ch;
}

PureState pure_state_from_json(const Json& j) {
    const Index dA = positive_index(j, "dA");
    const Index dB = positive_index(j, "dB");
    const Json& amps = require(j, "amplitudes");
    if (!amps.is_array() || Index(amps.size()) != dA * dB)
        bad_field("amplitudes", "must be an array of length dA*dB");
    Vector v(dA * dB);
    for (Index i = 0; i < v.size(); ++i) v(i) = complex_entry(amps[i], "amplitudes");
    return {dA, dB, std::move(v)};
}

PureDecomposition decomposition_from_json(const Json& j) {
    const Json& weights = require(j, "weights");
    const Json& vectors = require(j, "vectors");
    if (!weights.is_array()) bad_field("weights", "must be an array");
    if (!vectors.is_array() || vectors.size() != weights.size())
        bad_field("vectors", "must be an array matching weights in length");
    PureDecomposition dec;
    for (const Json& w : weights) {
        if (!w.is_number() || w.get<double>() <= 0.0)
            bad_field("weights", "must be positive numbers");
        dec.weights.push_back(w.get<double>());
    }
    for (const Json& v : vectors) dec.vectors.push_back(pure_state_from_json(v));
    return dec;
}

Json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
    out << j.dump(2) << "\n";
}

}  // namespace pptkit::io
