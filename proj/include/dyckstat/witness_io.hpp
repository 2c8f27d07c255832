#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dyckstat/wreath.hpp"

namespace dyckstat {

/// Raw, schema-checked contents of a witness file. Semantic validation
/// (path validity, permutation validity, ordering, coverage) happens in
/// build_witness / verify_witness so that a malformed file and an invalid
/// witness stay distinguishable.
struct WitnessDocument {
    long long k = 0;
    std::string variant;
    std::vector<std::pair<std::string, std::vector<int>>> assignments; // (dyck, perm)
};

/// Witness file schema:
///   { "k": int, "variant": "weak"|"strong",
///     "assignments": [ { "dyck": "UUDD...", "perm": [0, ...] }, ... ] }
/// with assignments sorted by the lexicographic path order.
inline WitnessDocument read_witness_document(std::istream& in) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::domain_error(std::string("witness file is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("k") || !j.contains("variant") || !j.contains("assignments"))
        throw std::domain_error("witness file must be an object with keys k, variant, assignments");
    if (!j["k"].is_number_integer())
        throw std::domain_error("witness key 'k' must be an integer");
    if (!j["variant"].is_string())
        throw std::domain_error("witness key 'variant' must be a string");
    if (!j["assignments"].is_array())
        throw std::domain_error("witness key 'assignments' must be an array");
    WitnessDocument doc;
    doc.k = j["k"].get<long long>();
    doc.variant = j["variant"].get<std::string>();
    for (const auto& entry : j["assignments"]) {
        if (!entry.is_object() || !entry.contains("dyck") || !entry.contains("perm") ||
            !entry["dyck"].is_string() || !entry["perm"].is_array())
            throw std::domain_error("each assignment must be an object with a 'dyck' string and a 'perm' array");
        std::vector<int> perm;
        for (const auto& v : entry["perm"]) {
            if (!v.is_number_integer())
                throw std::domain_error("'perm' entries must be integers");
            perm.push_back(v.get<int>());
        }
        doc.assignments.emplace_back(entry["dyck"].get<std::string>(), std::move(perm));
    }
    return doc;
}

inline WitnessDocument read_witness_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot open witness file " + path);
    return read_witness_document(in);
}

/// Turns a schema-valid document into a typed witness. Failures here are
/// verification failures (an ill-formed path or permutation), reported via
/// CheckResult rather than thrown.
struct BuiltWitness {
    CheckResult result;
    WitnessVariant variant = WitnessVariant::Weak;
    WreathWitness witness;
};

inline BuiltWitness build_witness(const WitnessDocument& doc) {
    BuiltWitness out;
    try {
        out.variant = parse_variant(doc.variant);
    } catch (const std::domain_error& e) {
        out.result = CheckResult::fail(e.what());
        return out;
    }
    if (doc.k < 1 || doc.k > DyckPath::kMaxSemilength) {
        out.result = CheckResult::fail("witness k = " + std::to_string(doc.k) + " out of range");
        return out;
    }
    out.witness.k = static_cast<int>(doc.k);
    for (const auto& [text, perm] : doc.assignments) {
        try {
            DyckPath D = parse_dyck(text);
            if (D.semilength() != out.witness.k) {
                out.result = CheckResult::fail("path " + text + " has semilength " +
                                               std::to_string(D.semilength()) + ", expected " +
                                               std::to_string(out.witness.k));
                return out;
            }
            out.witness.assignments.emplace_back(std::move(D), Permutation(perm));
        } catch (const std::domain_error& e) {
            out.result = CheckResult::fail("assignment for '" + text + "': " + e.what());
            return out;
        }
    }
    return out;
}

inline nlohmann::ordered_json witness_to_json(const WreathWitness& w, WitnessVariant variant) {
    nlohmann::ordered_json j;
    j["k"] = w.k;
    j["variant"] = to_string(variant);
    j["assignments"] = nlohmann::ordered_json::array();
    for (const auto& [D, pi] : w.assignments) {
        nlohmann::ordered_json entry;
        entry["dyck"] = D.to_string();
        entry["perm"] = pi.images();
        j["assignments"].push_back(std::move(entry));
    }
    return j;
}

inline void write_witness(std::ostream& out, const WreathWitness& w, WitnessVariant variant) {
    out << witness_to_json(w, variant).dump(2) << '\n';
}

inline void write_witness_file(const std::string& path, const WreathWitness& w, WitnessVariant variant) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write witness file " + path);
    write_witness(out, w, variant);
}

} // namespace dyckstat
