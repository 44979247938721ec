#include "catpoly/json_io.hpp"

#include <stdexcept>

namespace catpoly {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument("json: " + msg); }

std::vector<int> int_array(const json& j, const char* what) {
    if (!j.is_array() || j.empty()) fail(std::string(what) + " must be a non-empty array");
    std::vector<int> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_integer()) fail(std::string(what) + " must contain integers");
        long long x = v.get<long long>();
        if (x < 1 || x > 1000000000) fail(std::string(what) + " entries must be in [1, 1e9]");
        out.push_back(static_cast<int>(x));
    }
    return out;
}

long long int_field(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
        fail(std::string("missing integer field \"") + key + "\"");
    return j.at(key).get<long long>();
}

ordered_json term_json(const Partition& lambda, long long coeff, int ypow) {
    ordered_json t;
    t["lambda"] = lambda.parts();
    t["coeff"] = coeff;
    if (ypow > 0) t["ypow"] = ypow;
    return t;
}

}  // namespace

ordered_json to_json(const Composition& c) { return ordered_json(c.parts()); }

ordered_json to_json(const Partition& p) { return ordered_json(p.parts()); }

ordered_json to_json(const PartitionPolynomial& p) {
    ordered_json j;
    j["n"] = p.empty() ? 0 : p.homogeneous_size();
    j["terms"] = ordered_json::array();
    for (const auto& [lambda, coeff] : p.terms()) j["terms"].push_back(term_json(lambda, coeff, 0));
    return j;
}

ordered_json to_json(const GraphUPolynomial& p) {
    ordered_json j;
    long long n = 0;
    for (const auto& [key, coeff] : p.terms()) {
        n = key.lambda.size();
        break;
    }
    j["n"] = n;
    j["terms"] = ordered_json::array();
    for (const auto& [key, coeff] : p.terms())
        j["terms"].push_back(term_json(key.lambda, coeff, key.ypow));
    return j;
}

ordered_json to_json(const Tree& t) {
    ordered_json j;
    j["vertex_count"] = t.vertex_count();
    j["edges"] = ordered_json::array();
    for (const auto& [u, v] : t.edges()) j["edges"].push_back(ordered_json::array({u, v}));
    return j;
}

ordered_json to_json(const WitnessData& w) {
    ordered_json j;
    j["alpha"] = to_json(w.alpha);
    j["beta"] = to_json(w.beta);
    j["gamma"] = to_json(w.gamma);
    j["k_alpha_beta"] = w.k_ab;
    j["k_gamma"] = w.k_g;
    j["a"] = w.a;
    j["b"] = w.b;
    j["delta1"] = w.delta1;
    j["delta2"] = w.delta2;
    j["lambda"] = to_json(w.lambda_witness);
    j["rho1"] = to_json(w.rho1);
    j["rho2"] = to_json(w.rho2);
    j["coeff_S"] = w.coeff_S;
    j["coeff_T"] = w.coeff_T;
    return j;
}

ordered_json to_json(const VerificationReport& r) {
    ordered_json j;
    j["check"] = r.check_name;
    j["n"] = r.parameter_n;
    if (r.seed) j["seed"] = *r.seed;
    j["instances"] = r.instances_checked;
    j["failures"] = r.failures;
    return j;
}

Composition composition_from_json(const json& j) {
    return Composition(int_array(j, "composition"));
}

PartitionPolynomial partition_polynomial_from_json(const json& j) {
    if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
        fail("expected an object with a \"terms\" array");
    long long n = int_field(j, "n");
    PartitionPolynomial p;
    for (const auto& t : j.at("terms")) {
        Partition lambda(int_array(t.at("lambda"), "lambda"));
        if (lambda.size() != n) fail("term size does not match \"n\"");
        long long coeff = int_field(t, "coeff");
        if (coeff == 0) fail("terms must have nonzero coefficients");
        if (t.contains("ypow")) fail("unexpected \"ypow\" in a partition polynomial");
        if (p.coefficient(lambda) != 0) fail("duplicate lambda " + to_text(lambda));
        p.add(lambda, coeff);
    }
    return p;
}

GraphUPolynomial graph_polynomial_from_json(const json& j) {
    if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
        fail("expected an object with a \"terms\" array");
    long long n = int_field(j, "n");
    GraphUPolynomial p;
    for (const auto& t : j.at("terms")) {
        Partition lambda(int_array(t.at("lambda"), "lambda"));
        if (lambda.size() != n) fail("term size does not match \"n\"");
        long long coeff = int_field(t, "coeff");
        if (coeff == 0) fail("terms must have nonzero coefficients");
        int ypow = 0;
        if (t.contains("ypow")) {
            long long y = int_field(t, "ypow");
            if (y < 1) fail("\"ypow\" must be >= 1 when present");
            ypow = static_cast<int>(y);
        }
        if (p.coefficient(lambda, ypow) != 0)
            fail("duplicate term for lambda " + to_text(lambda));
        p.add(lambda, ypow, coeff);
    }
    return p;
}

Tree tree_from_json(const json& j) {
    if (!j.is_object()) fail("expected an object with \"vertex_count\" and \"edges\"");
    long long n = int_field(j, "vertex_count");
    if (n < 1 || n > 1000000) fail("\"vertex_count\" must be in [1, 1e6]");
    if (!j.contains("edges") || !j.at("edges").is_array()) fail("missing \"edges\" array");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            fail("each edge must be a pair of integers");
        long long u = e[0].get<long long>(), v = e[1].get<long long>();
        if (u < 0 || u >= n || v < 0 || v >= n) fail("edge endpoint out of range");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Tree(static_cast<int>(n), std::move(edges));
}

std::string json_text(const ordered_json& j) { return j.dump(); }

}  // namespace catpoly
