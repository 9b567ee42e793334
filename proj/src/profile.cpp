#include "cheb/profile.hpp"

#include <json.hpp>

namespace cheb {

void GenerationProfile::validate() const {
    if (group_order < 1) throw Error("profile order must be positive");
    if (class_sizes.size() != class_densities.size())
        throw Error("profile class_sizes/class_densities length mismatch");
    Rational total = 0;
    for (size_t i = 0; i < class_densities.size(); ++i) {
        if (class_densities[i] <= 0) throw Error("class density must be positive");
        if (class_densities[i] != rat(class_sizes[i], group_order))
            throw Error("class density disagrees with class size");
        total += class_densities[i];
    }
    if (columns() > 0 && total != 1) throw Error("class densities must sum to 1");
    if (rows.size() > kMaxProfileRows)
        throw Error("profile has more than " + std::to_string(kMaxProfileRows) +
                    " maximal classes");
    for (const auto& row : rows) {
        if (row.n != columns()) throw Error("profile row width mismatch");
        if (row.count() == columns())
            throw Error("profile row meets every conjugacy class");  // impossible for proper H
    }
}

namespace {

Integer json_integer(const nlohmann::json& j, const char* what) {
    if (j.is_string()) {
        Integer v;
        if (v.set_str(j.get<std::string>(), 10) != 0)
            throw Error(std::string("bad integer string for ") + what);
        return v;
    }
    if (j.is_number_unsigned()) return Integer(j.get<uint64_t>());
    if (j.is_number_integer()) return Integer(j.get<int64_t>());
    throw Error(std::string("expected integer (number or string) for ") + what);
}

}  // namespace

GenerationProfile profile_from_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text, nullptr, false);
    if (j.is_discarded()) throw Error("invalid JSON in profile");
    if (!j.is_object() || !j.contains("order") || !j.contains("class_sizes") ||
        !j.contains("maximal_classes"))
        throw Error("profile JSON needs order, class_sizes, maximal_classes");
    GenerationProfile p;
    p.group_order = json_integer(j["order"], "order");
    for (const auto& s : j["class_sizes"]) {
        p.class_sizes.push_back(json_integer(s, "class size"));
        p.class_densities.push_back(rat(p.class_sizes.back(), p.group_order));
    }
    for (const auto& mc : j["maximal_classes"]) {
        if (!mc.contains("contains") || !mc["contains"].is_array())
            throw Error("maximal class entry needs a boolean \"contains\" array");
        DynBitset row(p.columns());
        const auto& arr = mc["contains"];
        if (arr.size() != p.columns())
            throw Error("maximal class \"contains\" width disagrees with class count");
        for (size_t i = 0; i < arr.size(); ++i)
            if (arr[i].get<bool>()) row.set(i);
        p.rows.push_back(std::move(row));
        p.labels.push_back(mc.value("label", "M" + std::to_string(p.rows.size() - 1)));
        p.orbit_sizes.push_back(mc.contains("orbit_size")
                                    ? json_integer(mc["orbit_size"], "orbit size")
                                    : Integer(1));
    }
    p.validate();
    return p;
}

std::string profile_to_json(const GenerationProfile& p) {
    nlohmann::json j;
    j["order"] = p.group_order.get_str();
    j["class_sizes"] = nlohmann::json::array();
    for (const auto& s : p.class_sizes) j["class_sizes"].push_back(s.get_str());
    j["maximal_classes"] = nlohmann::json::array();
    for (size_t k = 0; k < p.rows.size(); ++k) {
        nlohmann::json mc;
        mc["label"] = k < p.labels.size() ? p.labels[k] : "M" + std::to_string(k);
        mc["orbit_size"] = (k < p.orbit_sizes.size() ? p.orbit_sizes[k] : Integer(1)).get_str();
        std::vector<bool> contains(p.columns());
        for (size_t i = 0; i < p.columns(); ++i) contains[i] = p.rows[k].test(i);
        mc["contains"] = contains;
        j["maximal_classes"].push_back(std::move(mc));
    }
    return j.dump();
}

}  // namespace cheb
