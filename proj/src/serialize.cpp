#include "circ/serialize.hpp"

namespace circ {

using nlohmann::json;

json to_json(const Key& k) { return k.rows(); }

json to_json(const GeneralizedMultiplier& m) { return m.rows(); }

json to_json(const ConnectionSet& s) { return s.members(); }

json to_json(const ZnPartition& p) { return p.classes(); }

json to_json(const IsoVerdict& v) {
    json j{{"isomorphic", v.isomorphic},
           {"reason", to_string(v.reason)},
           {"key_s", to_json(v.key_s)},
           {"key_t", to_json(v.key_t)}};
    j["multiplier"] = v.witness_multiplier ? to_json(v.witness_multiplier->multiplier()) : json(nullptr);
    return j;
}

json to_json(const CiVerdict& v) {
    json j{{"ci", v.is_ci}, {"fast_path", to_string(v.fast_path)}};
    j["witness"] = v.witness ? to_json(*v.witness) : json(nullptr);
    return j;
}

json to_json(const CosetCase& c) {
    return {{"shape", to_string(c.shape)}, {"subgroup", c.subgroup}, {"s", c.s}, {"certifies_ci", c.certifies_ci}};
}

json to_json(const ClassificationReport& r) {
    json counter = json::array();
    for (const auto& c : r.counterexamples) counter.push_back({{"set", to_json(c.set)}, {"witness", to_json(c.witness)}});
    json j{{"n", r.n},
           {"m", r.m},
           {"mode", to_string(r.mode)},
           {"property", r.property_holds},
           {"agree", r.agreement},
           {"counterexamples", std::move(counter)}};
    j["predicate"] = r.predicate_value ? json(*r.predicate_value) : json(nullptr);
    return j;
}

std::string csv_header() { return "n,m,mode,property,predicate,agree,counterexamples"; }

namespace {

std::string space_separated(const ResidueSet& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(xs[i]);
    }
    return out;
}

}  // namespace

std::string to_csv_row(const ClassificationReport& r) {
    std::string counter;
    for (std::size_t i = 0; i < r.counterexamples.size(); ++i) {
        if (i) counter += ';';
        counter += space_separated(r.counterexamples[i].set.members()) + "->" +
                   space_separated(r.counterexamples[i].witness.members());
    }
    const std::string predicate = r.predicate_value ? (*r.predicate_value ? "true" : "false") : "";
    return std::to_string(r.n) + "," + std::to_string(r.m) + "," + std::string(to_string(r.mode)) + "," +
           (r.property_holds ? "true" : "false") + "," + predicate + "," + (r.agreement ? "true" : "false") + ",\"" +
           counter + "\"";
}

}  // namespace circ
