#pragma once

#include "uqmn/version.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace uqmn {

struct CheckItem {
    std::string id;
    bool pass = true;
    std::string witness;  // empty iff pass
};

/// Result of one verification suite: an ordered list of named checks with
/// optional failure witnesses.  Serialization is deterministic.
struct CheckReport {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<CheckItem> checks;

    void add_pass(std::string id) { checks.push_back({std::move(id), true, {}}); }
    void add_fail(std::string id, std::string witness) {
        checks.push_back({std::move(id), false, std::move(witness)});
    }
    void add(std::string id, bool pass, std::string witness_if_fail) {
        if (pass) add_pass(std::move(id));
        else add_fail(std::move(id), std::move(witness_if_fail));
    }

    [[nodiscard]] size_t pass_count() const {
        size_t n = 0;
        for (const auto& c : checks) n += c.pass ? 1 : 0;
        return n;
    }
    [[nodiscard]] size_t fail_count() const { return checks.size() - pass_count(); }
    [[nodiscard]] bool all_pass() const { return fail_count() == 0; }

    [[nodiscard]] nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["suite"] = suite;
        nlohmann::ordered_json p = nlohmann::ordered_json::object();
        for (const auto& [k, v] : params) p[k] = v;
        j["params"] = p;
        nlohmann::ordered_json cs = nlohmann::ordered_json::array();
        for (const auto& c : checks) {
            nlohmann::ordered_json e;
            e["id"] = c.id;
            e["status"] = c.pass ? "pass" : "fail";
            if (!c.pass) e["witness"] = c.witness;
            cs.push_back(e);
        }
        j["checks"] = cs;
        j["summary"] = {{"pass", pass_count()}, {"fail", fail_count()}};
        j["version"] = kVersion;
        return j;
    }

    [[nodiscard]] std::string to_csv() const {
        std::string s = "id,status,witness\n";
        for (const auto& c : checks) {
            std::string w = c.witness;
            for (auto& ch : w)
                if (ch == ',' || ch == '\n') ch = ';';
            s += c.id + "," + (c.pass ? "pass" : "fail") + "," + w + "\n";
        }
        return s;
    }

    [[nodiscard]] std::string to_text() const {
        std::string s = "suite " + suite + " (";
        for (size_t i = 0; i < params.size(); ++i) {
            if (i) s += " ";
            s += params[i].first + "=" + params[i].second;
        }
        s += ")\n";
        for (const auto& c : checks) {
            s += std::string("  [") + (c.pass ? "pass" : "FAIL") + "] " + c.id;
            if (!c.pass) s += "  witness: " + c.witness;
            s += "\n";
        }
        s += "summary: " + std::to_string(pass_count()) + " pass, " +
             std::to_string(fail_count()) + " fail\n";
        return s;
    }
};

} // namespace uqmn
