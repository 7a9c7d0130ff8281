#include "wsadist/cost_model.hpp"

#include "wsadist/error.hpp"
#include "wsadist/utf8.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

namespace wsadist {

using json = nlohmann::ordered_json;

namespace {

std::string describe(char32_t c) {
    std::string out = "'";
    utf8::append(out, c);
    out += "'";
    return out;
}

void check_cost(Cost cost, std::string_view what) {
    if (cost > kMaxEntryCost) {
        throw ValidationError(std::string(what) + ": cost " + std::to_string(cost) +
                              " exceeds " + std::to_string(kMaxEntryCost));
    }
}

void check_char(char32_t c) {
    if (c > 0x10FFFF || (c >= 0xD800 && c <= 0xDFFF)) {
        throw ValidationError("not a Unicode scalar value: " + std::to_string(c));
    }
}

} // namespace

Cost CostModel::indel(char32_t c) const {
    const auto it = indel_.find(c);
    return it == indel_.end() ? indel_default_ : it->second;
}

Cost CostModel::replace(char32_t from, char32_t to) const {
    if (from == to) {
        return 0;
    }
    const auto it = replace_.find({from, to});
    return it == replace_.end() ? replace_default_ : it->second;
}

Cost CostModel::to_whitespace(char32_t c) const {
    return std::min(indel(c), replace(c, whitespace_));
}

Cost CostModel::from_whitespace(char32_t c) const {
    return std::min(indel(c), replace(whitespace_, c));
}

CostModelBuilder& CostModelBuilder::indel_default(Cost cost) {
    check_cost(cost, "indel_default");
    model_.indel_default_ = cost;
    return *this;
}

CostModelBuilder& CostModelBuilder::replace_default(Cost cost) {
    check_cost(cost, "replace_default");
    model_.replace_default_ = cost;
    return *this;
}

CostModelBuilder& CostModelBuilder::whitespace_char(char32_t c) {
    check_char(c);
    model_.whitespace_ = c;
    return *this;
}

CostModelBuilder& CostModelBuilder::symmetric(bool value) {
    if (!model_.replace_.empty() && value != model_.symmetric_) {
        throw ValidationError("symmetry must be declared before replace entries");
    }
    model_.symmetric_ = value;
    return *this;
}

CostModelBuilder& CostModelBuilder::indel(char32_t c, Cost cost) {
    check_char(c);
    check_cost(cost, "indel " + describe(c));
    model_.indel_[c] = cost;
    return *this;
}

CostModelBuilder& CostModelBuilder::replace(char32_t from, char32_t to, Cost cost) {
    check_char(from);
    check_char(to);
    const std::string what = "replace " + describe(from) + " -> " + describe(to);
    check_cost(cost, what);
    if (from == to) {
        if (cost != 0) {
            throw ValidationError(what + ": identity replacement must cost 0, got " +
                                  std::to_string(cost));
        }
        return *this;
    }
    if (model_.symmetric_) {
        const auto mirror = model_.replace_.find({to, from});
        if (mirror != model_.replace_.end() && mirror->second != cost) {
            throw ValidationError(what + ": cost " + std::to_string(cost) +
                                  " contradicts mirrored entry " +
                                  std::to_string(mirror->second) + " in a symmetric model");
        }
        model_.replace_[{to, from}] = cost;
    }
    model_.replace_[{from, to}] = cost;
    return *this;
}

CostModel unit_model() {
    return CostModelBuilder{}.indel_default(1).replace_default(1).build();
}

CostModel appendix_model() {
    // Upper triangle of the matrix; symmetry fills in the rest and the
    // diagonal is implicit.
    constexpr std::array<char32_t, 8> kAlphabet = {U'a', U'A', U'9', U'(', U')', U',', U'$', U' '};
    constexpr Cost kRows[8][8] = {
        {0, 2, 4, 999, 999, 999, 999, 1},
        {2, 0, 4, 999, 999, 999, 999, 1},
        {4, 4, 0, 999, 999, 999, 999, 4},
        {999, 999, 999, 0, 999, 999, 999, 999},
        {999, 999, 999, 999, 0, 999, 999, 999},
        {999, 999, 999, 999, 999, 0, 999, 999},
        {999, 999, 999, 999, 999, 999, 0, 999},
        {1, 1, 4, 999, 999, 999, 999, 0},
    };
    CostModelBuilder builder;
    builder.indel_default(1).replace_default(999).whitespace_char(U' ').symmetric(true);
    for (std::size_t r = 0; r < kAlphabet.size(); ++r) {
        for (std::size_t c = r + 1; c < kAlphabet.size(); ++c) {
            builder.replace(kAlphabet[r], kAlphabet[c], kRows[r][c]);
        }
    }
    return builder.build();
}

namespace {

char32_t parse_char(const json& node, const std::string& key) {
    if (!node.is_string()) {
        throw ParseError(key + ": expected a one-character string");
    }
    const auto text = node.get<std::string>();
    char32_t c = 0;
    if (!utf8::single_code_point(text, c)) {
        throw ParseError(key + ": expected exactly one character, got \"" + text + "\"");
    }
    return c;
}

Cost parse_cost(const json& node, const std::string& key) {
    if (node.is_number_unsigned()) {
        return node.get<Cost>();
    }
    if (node.is_number_integer()) {
        throw ValidationError(key + ": negative cost " + std::to_string(node.get<std::int64_t>()));
    }
    throw ParseError(key + ": expected a non-negative integer");
}

// Re-raises builder errors with the document key that caused them.
template <typename F>
void at_key(const std::string& key, F&& apply) {
    try {
        apply();
    } catch (const ValidationError& e) {
        throw ValidationError(key + ": " + e.what());
    }
}

} // namespace

CostModel load_model(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("cost model: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("cost model: top-level value must be an object");
    }

    static constexpr std::array<std::string_view, 7> kKnown = {
        "indel_default", "indel", "replace_default", "replace_identity",
        "replace", "symmetric", "whitespace_char"};
    for (const auto& [key, value] : doc.items()) {
        if (std::find(kKnown.begin(), kKnown.end(), key) == kKnown.end()) {
            throw ParseError("cost model: unknown key \"" + key + "\"");
        }
    }

    CostModelBuilder builder;
    if (doc.contains("indel_default")) {
        const Cost cost = parse_cost(doc["indel_default"], "indel_default");
        at_key("indel_default", [&] { builder.indel_default(cost); });
    }
    if (doc.contains("replace_default")) {
        const Cost cost = parse_cost(doc["replace_default"], "replace_default");
        at_key("replace_default", [&] { builder.replace_default(cost); });
    }
    if (doc.contains("replace_identity")) {
        if (parse_cost(doc["replace_identity"], "replace_identity") != 0) {
            throw ValidationError("replace_identity: identity replacement must cost 0");
        }
    }
    if (doc.contains("whitespace_char")) {
        const char32_t ws = parse_char(doc["whitespace_char"], "whitespace_char");
        at_key("whitespace_char", [&] { builder.whitespace_char(ws); });
    }
    if (doc.contains("symmetric")) {
        if (!doc["symmetric"].is_boolean()) {
            throw ParseError("symmetric: expected a boolean");
        }
        builder.symmetric(doc["symmetric"].get<bool>());
    }
    if (doc.contains("indel")) {
        const auto& table = doc["indel"];
        if (!table.is_object()) {
            throw ParseError("indel: expected an object mapping characters to costs");
        }
        for (const auto& [ch, value] : table.items()) {
            const std::string key = "indel[\"" + ch + "\"]";
            const char32_t c = parse_char(json(ch), key);
            const Cost cost = parse_cost(value, key);
            at_key(key, [&] { builder.indel(c, cost); });
        }
    }
    if (doc.contains("replace")) {
        const auto& list = doc["replace"];
        if (!list.is_array()) {
            throw ParseError("replace: expected a list of {a, b, cost} records");
        }
        for (std::size_t k = 0; k < list.size(); ++k) {
            const std::string key = "replace[" + std::to_string(k) + "]";
            const auto& entry = list[k];
            if (!entry.is_object() || !entry.contains("a") || !entry.contains("b") ||
                !entry.contains("cost") || entry.size() != 3) {
                throw ParseError(key + ": expected exactly the fields a, b, cost");
            }
            const char32_t a = parse_char(entry["a"], key + ".a");
            const char32_t b = parse_char(entry["b"], key + ".b");
            const Cost cost = parse_cost(entry["cost"], key + ".cost");
            at_key(key, [&] { builder.replace(a, b, cost); });
        }
    }
    return builder.build();
}

CostModel load_model_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open cost model file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_model(buffer.str());
}

std::string serialize(const CostModel& model) {
    const auto chr = [](char32_t c) {
        std::string s;
        utf8::append(s, c);
        return s;
    };

    json doc;
    doc["indel_default"] = model.indel_default();
    json indel = json::object();
    for (const auto& [c, cost] : model.indel_entries()) {
        indel[chr(c)] = cost;
    }
    doc["indel"] = std::move(indel);
    doc["replace_default"] = model.replace_default();
    doc["symmetric"] = model.symmetric();
    json replace = json::array();
    for (const auto& [key, cost] : model.replace_entries()) {
        if (model.symmetric() && key.first > key.second) {
            continue;
        }
        replace.push_back({{"a", chr(key.first)}, {"b", chr(key.second)}, {"cost", cost}});
    }
    doc["replace"] = std::move(replace);
    doc["whitespace_char"] = chr(model.whitespace_char());
    return doc.dump(2) + "\n";
}

} // namespace wsadist
