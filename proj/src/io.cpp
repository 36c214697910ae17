#include "wpm/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace wpm {

namespace {

using nlohmann::ordered_json;

int get_int(const ordered_json& j, const char* key, long long lo, long long hi) {
    if (!j.contains(key)) throw InvalidParams(std::string("missing field '") + key + "'");
    const auto& v = j.at(key);
    if (!v.is_number_integer())
        throw InvalidParams(std::string("field '") + key + "' must be an integer");
    const long long x = v.get<long long>();
    if (x < lo || x > hi)
        throw InvalidParams(std::string("field '") + key + "' out of range");
    return static_cast<int>(x);
}

std::vector<int> get_id_array(const ordered_json& j, const char* key, int m) {
    if (!j.contains(key)) throw InvalidParams(std::string("missing field '") + key + "'");
    const auto& v = j.at(key);
    if (!v.is_array()) throw InvalidParams(std::string("field '") + key + "' must be an array");
    std::vector<int> out;
    out.reserve(v.size());
    for (const auto& e : v) {
        if (!e.is_number_integer())
            throw InvalidParams(std::string("field '") + key + "' must contain integers");
        const long long x = e.get<long long>();
        if (x < 0 || x >= m)
            throw InvalidParams(std::string("item id ") + std::to_string(x) + " in '" + key +
                                "' out of range [0, m)");
        out.push_back(static_cast<int>(x));
    }
    return out;
}

std::vector<std::vector<int>> get_pref_rows(const ordered_json& j, const char* key, int m) {
    if (!j.contains(key)) throw InvalidParams(std::string("missing field '") + key + "'");
    const auto& v = j.at(key);
    if (!v.is_array()) throw InvalidParams(std::string("field '") + key + "' must be an array");
    std::vector<std::vector<int>> rows;
    rows.reserve(v.size());
    for (const auto& rowj : v) {
        if (!rowj.is_array())
            throw InvalidParams(std::string("field '") + key + "' must contain arrays");
        std::vector<int> row;
        std::vector<char> seen(m, 0);
        for (const auto& e : rowj) {
            if (!e.is_number_integer())
                throw InvalidParams(std::string("field '") + key + "' must contain integers");
            const long long x = e.get<long long>();
            if (x < 0 || x >= m)
                throw InvalidParams("item id " + std::to_string(x) + " in '" + key +
                                    "' out of range [0, m)");
            if (seen[x])
                throw InvalidParams(std::string("preference list in '") + key +
                                    "' repeats item " + std::to_string(x));
            seen[x] = 1;
            row.push_back(static_cast<int>(x));
        }
        if (static_cast<int>(row.size()) != m)
            throw InvalidParams(std::string("preference list in '") + key +
                                "' is not a permutation of 0..m-1");
        rows.push_back(std::move(row));
    }
    return rows;
}

void reject_unknown(const ordered_json& j, const std::set<std::string>& allowed) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw InvalidParams("unknown field '" + it.key() + "' in instance file");
}

}  // namespace

AnyInstance parse_instance(const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidParams(std::string("instance file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw InvalidParams("instance file must be a JSON object");

    if (get_int(j, "version", 1, 1) != 1)
        throw InvalidParams("unsupported instance file version");
    if (!j.contains("kind") || !j.at("kind").is_string())
        throw InvalidParams("missing or non-string field 'kind'");
    const std::string kind = j.at("kind").get<std::string>();

    const int m = get_int(j, "m", 1, 1 << 28);
    WeightConfig weights;
    weights.w1 = get_int(j, "w1", 1, INT32_MAX);
    weights.w2 = get_int(j, "w2", 1, INT32_MAX);
    if (!weights.valid()) throw InvalidParams("weights must satisfy w1 > w2 > 0");

    if (kind == "full") {
        reject_unknown(j, {"version", "kind", "m", "w1", "w2", "prefs_a1", "prefs_a2"});
        FullInstance inst;
        inst.m = m;
        inst.weights = weights;
        inst.prefs_a1 = get_pref_rows(j, "prefs_a1", m);
        inst.prefs_a2 = get_pref_rows(j, "prefs_a2", m);
        if (inst.n1() < 1 || inst.n2() < 1)
            throw InvalidParams("both categories must be nonempty");
        if (m < inst.n1() + inst.n2() + 1)
            throw InvalidParams("m must be >= n1+n2+1");
        return inst;
    }
    if (kind == "reduced") {
        reject_unknown(j, {"version", "kind", "m", "w1", "w2", "f1", "s1", "f2", "s2"});
        ReducedInstance inst;
        inst.m = m;
        inst.weights = weights;
        inst.f1 = get_id_array(j, "f1", m);
        inst.s1 = get_id_array(j, "s1", m);
        inst.f2 = get_id_array(j, "f2", m);
        inst.s2 = get_id_array(j, "s2", m);
        if (inst.f1.size() != inst.s1.size() || inst.f2.size() != inst.s2.size())
            throw InvalidParams("f/s arrays must have matching lengths per category");
        if (inst.n1() < 1 || inst.n2() < 1)
            throw InvalidParams("both categories must be nonempty");
        return inst;
    }
    throw InvalidParams("field 'kind' must be \"full\" or \"reduced\"");
}

AnyInstance read_instance(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidParams("cannot open instance file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

std::string instance_to_json(const FullInstance& inst) {
    ordered_json j;
    j["version"] = 1;
    j["kind"] = "full";
    j["m"] = inst.m;
    j["w1"] = inst.weights.w1;
    j["w2"] = inst.weights.w2;
    j["prefs_a1"] = inst.prefs_a1;
    j["prefs_a2"] = inst.prefs_a2;
    return j.dump(2) + "\n";
}

std::string instance_to_json(const ReducedInstance& inst) {
    ordered_json j;
    j["version"] = 1;
    j["kind"] = "reduced";
    j["m"] = inst.m;
    j["w1"] = inst.weights.w1;
    j["w2"] = inst.weights.w2;
    j["f1"] = inst.f1;
    j["s1"] = inst.s1;
    j["f2"] = inst.f2;
    j["s2"] = inst.s2;
    return j.dump(2) + "\n";
}

namespace {
void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidParams("cannot open output file: " + path);
    out << text;
}
}  // namespace

void write_instance(const std::string& path, const FullInstance& inst) {
    write_text(path, instance_to_json(inst));
}

void write_instance(const std::string& path, const ReducedInstance& inst) {
    write_text(path, instance_to_json(inst));
}

}  // namespace wpm
