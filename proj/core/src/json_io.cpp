#include "ageal/json_io.hpp"

#include <limits>

#include "ageal/errors.hpp"
#include "json.hpp"

namespace ageal {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw input_error("malformed JSON document");
    return doc;
}

const json& field(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) throw input_error(std::string("missing JSON field: ") + key);
    return *it;
}

int int_field(const json& doc, const char* key) {
    const json& v = field(doc, key);
    if (!v.is_number_integer()) throw input_error(std::string("JSON field must be an integer: ") + key);
    return v.get<int>();
}

json structure_to_value(const FiniteStructure& s) {
    json sig = json::array();
    for (const RelationSpec& r : s.signature().relations)
        sig.push_back({{"name", r.name},
                       {"arity", r.arity},
                       {"symmetric", r.symmetric},
                       {"irreflexive", r.irreflexive}});
    json tuples = json::object();
    for (int rel = 0; rel < s.signature().size(); ++rel) {
        json list = json::array();
        for (const std::vector<int>& t : s.tuples(rel)) list.push_back(t);
        tuples[s.signature().relations[rel].name] = std::move(list);
    }
    return json{{"signature", std::move(sig)}, {"size", s.size()}, {"tuples", std::move(tuples)}};
}

FiniteStructure structure_from_value(const json& doc) {
    const json& sig_val = field(doc, "signature");
    if (!sig_val.is_array()) throw input_error("signature must be an array");
    std::vector<RelationSpec> rels;
    for (const json& r : sig_val) {
        RelationSpec spec;
        spec.name = field(r, "name").get<std::string>();
        spec.arity = int_field(r, "arity");
        spec.symmetric = r.value("symmetric", false);
        spec.irreflexive = r.value("irreflexive", spec.arity == 2);
        rels.push_back(std::move(spec));
    }
    int size = int_field(doc, "size");
    if (size < 0 || size > FiniteStructure::max_size) throw input_error("structure size out of range");
    FiniteStructure s(make_signature(std::move(rels)), size);

    const json& tuples = field(doc, "tuples");
    if (!tuples.is_object()) throw input_error("tuples must be an object keyed by relation name");
    for (auto it = tuples.begin(); it != tuples.end(); ++it) {
        int rel = s.signature().index_of(it.key());
        if (rel < 0) throw input_error("tuples for unknown relation: " + it.key());
        if (!it.value().is_array()) throw input_error("tuple list must be an array");
        for (const json& t : it.value()) {
            if (!t.is_array()) throw input_error("each tuple must be an array");
            std::vector<int> tuple;
            for (const json& x : t) {
                if (!x.is_number_integer()) throw input_error("tuple entries must be integers");
                tuple.push_back(x.get<int>());
            }
            s.add_tuple(rel, tuple);
        }
    }
    return s;
}

std::string dump(const json& doc, int indent) { return indent < 0 ? doc.dump() : doc.dump(indent); }

}  // namespace

std::string to_json(const FiniteStructure& s, int indent) { return dump(structure_to_value(s), indent); }

FiniteStructure structure_from_json(const std::string& text) {
    try {
        return structure_from_value(parse(text));
    } catch (const json::exception& e) {
        throw input_error(std::string("bad structure JSON: ") + e.what());
    }
}

std::string to_json(const Blueprint& b, int indent) {
    json blocks = json::array();
    for (const BlockSpec& spec : b.blocks()) {
        json entry;
        if (spec.is_infinite())
            entry["cardinality"] = "omega";
        else
            entry["cardinality"] = spec.cardinality;
        switch (spec.inner) {
            case InnerKind::empty: entry["inner"] = "empty"; break;
            case InnerKind::complete: entry["inner"] = "complete"; break;
            case InnerKind::chain: entry["inner"] = "chain"; break;
        }
        blocks.push_back(std::move(entry));
    }
    return dump(json{{"template", structure_to_value(b.template_structure())}, {"blocks", std::move(blocks)}},
                indent);
}

Blueprint blueprint_from_json(const std::string& text) {
    try {
        json doc = parse(text);
        FiniteStructure tmpl = structure_from_value(field(doc, "template"));
        const json& blocks_val = field(doc, "blocks");
        if (!blocks_val.is_array()) throw input_error("blocks must be an array");
        std::vector<BlockSpec> blocks;
        for (const json& entry : blocks_val) {
            BlockSpec spec;
            const json& card = field(entry, "cardinality");
            if (card.is_string() && card.get<std::string>() == "omega")
                spec.cardinality = BlockSpec::omega;
            else if (card.is_number_integer() && card.get<long>() >= 0)
                spec.cardinality = card.get<long>();
            else
                throw input_error("cardinality must be \"omega\" or a nonnegative integer");
            std::string inner = field(entry, "inner").get<std::string>();
            if (inner == "empty")
                spec.inner = InnerKind::empty;
            else if (inner == "complete")
                spec.inner = InnerKind::complete;
            else if (inner == "chain")
                spec.inner = InnerKind::chain;
            else
                throw input_error("inner must be empty, complete or chain");
            blocks.push_back(spec);
        }
        return Blueprint(std::move(tmpl), std::move(blocks));
    } catch (const json::exception& e) {
        throw input_error(std::string("bad blueprint JSON: ") + e.what());
    }
}

std::string to_json(const PermutationGroupoid& g, int indent) {
    json gens = json::array();
    for (const PartialInjection& f : g.elements) {
        json map = json::object();
        for (int i = 0; i < f.k(); ++i)
            if (f.img[i] >= 0) map[std::to_string(i + 1)] = f.img[i] + 1;
        gens.push_back(json{{"map", std::move(map)}});
    }
    return dump(json{{"k", g.k}, {"generators", std::move(gens)}}, indent);
}

PermutationGroupoid groupoid_from_json(const std::string& text) {
    try {
        json doc = parse(text);
        int k = int_field(doc, "k");
        if (k < 0 || k > groupoid_ground_cap) throw cap_exceeded("groupoid ground set out of range");
        const json& gens_val = field(doc, "generators");
        if (!gens_val.is_array()) throw input_error("generators must be an array");
        std::vector<PartialInjection> gens;
        for (const json& entry : gens_val) {
            const json& map = field(entry, "map");
            if (!map.is_object()) throw input_error("map must be an object from point to point");
            std::vector<std::pair<int, int>> pairs;
            for (auto it = map.begin(); it != map.end(); ++it) {
                int from;
                try {
                    from = std::stoi(it.key());
                } catch (const std::exception&) {
                    throw input_error("map keys must be integers: " + it.key());
                }
                if (!it.value().is_number_integer()) throw input_error("map values must be integers");
                pairs.emplace_back(from - 1, it.value().get<int>() - 1);
            }
            gens.push_back(PartialInjection::from_map(k, pairs));
        }
        return close(k, gens);
    } catch (const json::exception& e) {
        throw input_error(std::string("bad groupoid JSON: ") + e.what());
    }
}

std::string to_json(const SeriesPrefix& prefix, int indent) {
    json phi = json::array();
    for (const Int& x : prefix.phi) {
        if (x > Int(std::numeric_limits<long long>::max()))
            throw input_error("series value too large for JSON export");
        phi.push_back(x.convert_to<long long>());
    }
    return dump(json{{"phi", std::move(phi)}}, indent);
}

SeriesPrefix series_from_json(const std::string& text) {
    try {
        json doc = parse(text);
        const json& phi = field(doc, "phi");
        if (!phi.is_array()) throw input_error("phi must be an array");
        std::vector<Int> values;
        for (const json& x : phi) {
            if (!x.is_number_integer()) throw input_error("phi entries must be integers");
            values.push_back(Int(x.get<long long>()));
        }
        return SeriesPrefix::from_ints(std::move(values));
    } catch (const json::exception& e) {
        throw input_error(std::string("bad series JSON: ") + e.what());
    }
}

InputKind classify_input(const std::string& text) {
    json doc = parse(text);
    if (!doc.is_object()) throw input_error("input must be a JSON object");
    if (doc.contains("template")) return InputKind::blueprint;
    if (doc.contains("generators")) return InputKind::groupoid;
    if (doc.contains("signature")) return InputKind::structure;
    if (doc.contains("phi")) return InputKind::series;
    throw input_error("unrecognized input shape: expected template, generators, signature or phi");
}

}
