#include "cgeo/specfile.hpp"

#include "cgeo/error.hpp"

#include <json.hpp>

namespace cgeo {

using nlohmann::json;

namespace {

[[noreturn]] void fail_at(ErrorCode code, const std::string& where, const std::string& what) {
    fail(code, where + ": " + what);
}

const json& field(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.is_object()) fail_at(ErrorCode::parse, where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail_at(ErrorCode::parse, where.empty() ? key : where + "." + key, "required");
    return *it;
}

std::string join(const std::string& where, const std::string& key) { return where.empty() ? key : where + "." + key; }

long get_int(const json& v, const std::string& where) {
    if (!v.is_number_integer()) fail_at(ErrorCode::parse, where, "expected an integer");
    return v.get<long>();
}

int sign_value(const json& v, const std::string& where) {
    long s = get_int(v, where);
    if (s != 1 && s != -1) fail_at(ErrorCode::invalid, where, "must be 1 or -1");
    return static_cast<int>(s);
}

// Rewrites core errors with a location prefix.
template <class F>
auto located(const std::string& where, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error& e) {
        fail_at(e.code(), where, e.what());
    }
}

Turn turn_value(const json& v, const std::string& where) {
    if (!v.is_string()) fail_at(ErrorCode::parse, where, "expected exact text such as \"1/3\" or \"(1/2)r{2}\"");
    return located(where, [&] { return Turn(ExactScalar::parse(v.get<std::string>())); });
}

Block parse_block(const json& b, const std::string& where) {
    const json& t = field(b, "type", where);
    if (!t.is_string()) fail_at(ErrorCode::parse, join(where, "type"), "expected a string");
    std::string type = t.get<std::string>();
    if (type == "N1") {
        int eig = sign_value(field(b, "eig", where), join(where, "eig"));
        long a = get_int(field(b, "a", where), join(where, "a"));
        if (a < -1 || a > 1) fail_at(ErrorCode::invalid, join(where, "a"), "must be -1, 0 or 1");
        if (eig > 0) return N1Plus{static_cast<int>(a)};
        return N1Minus{static_cast<int>(a)};
    }
    if (type == "R") return Rot{turn_value(field(b, "turn", where), join(where, "turn"))};
    if (type == "N2") {
        Turn turn = turn_value(field(b, "turn", where), join(where, "turn"));
        const json& nt = field(b, "nontrivial", where);
        if (!nt.is_boolean()) fail_at(ErrorCode::parse, join(where, "nontrivial"), "expected true or false");
        return N2Block{turn, nt.get<bool>()};
    }
    if (type == "H") return Hyp{sign_value(field(b, "sign", where), join(where, "sign"))};
    fail_at(ErrorCode::invalid, join(where, "type"), "unknown block type \"" + type + "\" (N1, R, N2 or H)");
}

json block_json(const Block& b) {
    if (auto* x = std::get_if<N1Plus>(&b)) return {{"type", "N1"}, {"eig", 1}, {"a", x->a}};
    if (auto* x = std::get_if<N1Minus>(&b)) return {{"type", "N1"}, {"eig", -1}, {"a", x->b}};
    if (auto* x = std::get_if<Rot>(&b)) return {{"type", "R"}, {"turn", x->turn.value().str()}};
    if (auto* x = std::get_if<N2Block>(&b))
        return {{"type", "N2"}, {"turn", x->turn.value().str()}, {"nontrivial", x->nontrivial}};
    return {{"type", "H"}, {"sign", std::get<Hyp>(b).sign}};
}

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorCode::parse, std::string("malformed JSON: ") + e.what());
    }
}

std::pair<int, int> parse_manifold(const json& m, const std::string& where) {
    int d = static_cast<int>(get_int(field(m, "d", where), join(where, "d")));
    int h = static_cast<int>(get_int(field(m, "h", where), join(where, "h")));
    located(where, [&] {
        require_valid_dh(d, h);
        return 0;
    });
    return {d, h};
}

GeodesicSpec parse_geodesic(const json& obj, const std::string& where, int d, int h) {
    int i1 = static_cast<int>(get_int(field(obj, "initial_index", where), join(where, "initial_index")));
    const json& bl = field(obj, "blocks", where);
    std::string bw = join(where, "blocks");
    if (!bl.is_array()) fail_at(ErrorCode::parse, bw, "expected an array");
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < bl.size(); ++i) blocks.push_back(parse_block(bl[i], bw + "[" + std::to_string(i) + "]"));
    return located(where.empty() ? "spec" : where, [&] { return GeodesicSpec(Decomposition(blocks), d * h, i1); });
}

KAssignment parse_kvectors(const json& kv, const std::string& where, const GeodesicSpec& spec) {
    if (!kv.is_array()) fail_at(ErrorCode::parse, where, "expected an array of arrays");
    KAssignment ka;
    ka.n = static_cast<std::int64_t>(kv.size());
    for (std::size_t i = 0; i < kv.size(); ++i) {
        std::string w = where + "[" + std::to_string(i) + "]";
        if (!kv[i].is_array()) fail_at(ErrorCode::parse, w, "expected an array of integers");
        KEntry e;
        e.m = static_cast<std::int64_t>(i) + 1;
        e.nu = spec.nullity(e.m);
        e.epsilon = ((spec.index(e.m) - spec.i1()) % 2 == 0) ? 1 : -1;
        for (std::size_t j = 0; j < kv[i].size(); ++j) e.kvec.push_back(get_int(kv[i][j], w + "[" + std::to_string(j) + "]"));
        ka.entries.push_back(std::move(e));
    }
    std::string bad = check_kassignment(spec, ka, 1 << 20);
    if (!bad.empty()) fail_at(ErrorCode::invalid, where, bad);
    return ka;
}

}  // namespace

SpecFile spec_from_json(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_object()) fail(ErrorCode::parse, "spec: expected an object");
    auto [d, h] = parse_manifold(field(j, "manifold", ""), "manifold");
    SpecFile sf{d, h, parse_geodesic(j, "", d, h), std::nullopt, false};
    if (j.contains("kvectors")) sf.kassign = parse_kvectors(j["kvectors"], "kvectors", sf.spec);
    if (j.contains("reversible")) {
        if (!j["reversible"].is_boolean()) fail(ErrorCode::parse, "reversible: expected true or false");
        sf.reversible = j["reversible"].get<bool>();
    }
    return sf;
}

std::string spec_to_json(const SpecFile& sf) {
    json j;
    j["manifold"] = {{"d", sf.d}, {"h", sf.h}};
    j["initial_index"] = sf.spec.i1();
    j["blocks"] = json::array();
    for (const auto& b : sf.spec.dec().blocks()) j["blocks"].push_back(block_json(b));
    if (sf.kassign) {
        j["kvectors"] = json::array();
        for (const auto& e : sf.kassign->entries) j["kvectors"].push_back(e.kvec);
    }
    if (sf.reversible) j["reversible"] = true;
    return j.dump(2);
}

std::string block_to_json(const Block& b) { return block_json(b).dump(); }

ModelsFile models_from_json(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_object()) fail(ErrorCode::parse, "models: expected an object");
    ModelsFile mf;
    std::optional<std::pair<int, int>> shared;
    if (j.contains("manifold")) shared = parse_manifold(j["manifold"], "manifold");
    if (j.contains("reversible")) {
        if (!j["reversible"].is_boolean()) fail(ErrorCode::parse, "reversible: expected true or false");
        mf.reversible = j["reversible"].get<bool>();
    }
    std::vector<std::pair<json, std::string>> items;
    if (j.contains("models")) {
        if (!j["models"].is_array() || j["models"].empty()) fail(ErrorCode::parse, "models: expected a nonempty array");
        for (std::size_t i = 0; i < j["models"].size(); ++i) items.emplace_back(j["models"][i], "models[" + std::to_string(i) + "]");
    } else {
        items.emplace_back(j, "");
    }
    for (const auto& [obj, where] : items) {
        std::pair<int, int> dh;
        if (obj.is_object() && obj.contains("manifold") && !where.empty())
            dh = parse_manifold(obj["manifold"], join(where, "manifold"));
        else if (shared)
            dh = *shared;
        else
            fail_at(ErrorCode::parse, join(where, "manifold"), "required");
        if (mf.models.empty()) {
            mf.d = dh.first;
            mf.h = dh.second;
        } else if (dh != std::pair{mf.d, mf.h}) {
            fail_at(ErrorCode::invalid, join(where, "manifold"), "all models must share one manifold");
        }
        GeodesicSpec spec = parse_geodesic(obj, where, dh.first, dh.second);
        KAssignment ka = parse_kvectors(field(obj, "kvectors", where), join(where, "kvectors"), spec);
        mf.models.push_back(GeodesicModel{std::move(spec), std::move(ka)});
    }
    return mf;
}

std::vector<ExactScalar> samples_from_json(const std::string& text) {
    json j = parse_text(text);
    std::string where = "samples";
    if (j.is_object()) j = field(j, "samples", "");
    if (!j.is_array()) fail(ErrorCode::parse, "samples: expected an array of exact values");
    std::vector<ExactScalar> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string w = where + "[" + std::to_string(i) + "]";
        if (!j[i].is_string()) fail_at(ErrorCode::parse, w, "expected exact text such as \"r{2} - 1\"");
        out.push_back(located(w, [&] { return ExactScalar::parse(j[i].get<std::string>()); }));
    }
    return out;
}

}  // namespace cgeo
