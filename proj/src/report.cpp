#include "ggt/report.hpp"

#include <json.hpp>

#include <stdexcept>

namespace ggt::report {

using nlohmann::json;

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

Verdict verdict_from(const std::string& s) {
    if (s == "pass") return Verdict::Pass;
    if (s == "fail") return Verdict::Fail;
    if (s == "inconclusive") return Verdict::Inconclusive;
    throw std::invalid_argument("unknown verdict: " + s);
}

int Report::passes() const {
    int k = 0;
    for (const Item& i : items) k += i.verdict == Verdict::Pass;
    return k;
}

int Report::failures() const {
    int k = 0;
    for (const Item& i : items) k += i.verdict == Verdict::Fail;
    return k;
}

int Report::inconclusive() const {
    int k = 0;
    for (const Item& i : items) k += i.verdict == Verdict::Inconclusive;
    return k;
}

void Report::add(std::string condition, Verdict v, std::string detail) {
    items.push_back({std::move(condition), v, std::move(detail)});
}

void Report::add(std::string condition, bool pass, std::string detail) {
    add(std::move(condition), pass ? Verdict::Pass : Verdict::Fail, std::move(detail));
}

std::string Report::to_json() const {
    json j;
    j["schema_version"] = schema_version;
    j["suite"] = suite;
    j["subject"] = subject;
    j["seed"] = seed;
    j["budget"] = budget;
    j["timestamp"] = timestamp;
    json arr = json::array();
    for (const Item& i : items) {
        json it;
        it["condition"] = i.condition;
        it["verdict"] = verdict_name(i.verdict);
        it["detail"] = i.detail;
        arr.push_back(it);
    }
    j["items"] = arr;
    j["counts"] = {{"pass", passes()}, {"fail", failures()}, {"inconclusive", inconclusive()}};
    return j.dump(2) + "\n";
}

Report Report::from_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.contains("schema_version") || !j["schema_version"].is_number() ||
        j["schema_version"].get<int>() != 1)
        throw std::invalid_argument("report: unsupported or missing schema_version");
    for (const char* key : {"suite", "subject", "seed", "budget", "items"})
        if (!j.contains(key)) throw std::invalid_argument(std::string("report: missing field ") + key);
    Report r;
    r.schema_version = j["schema_version"].get<int>();
    r.suite = j["suite"].get<std::string>();
    r.subject = j["subject"].get<std::string>();
    r.seed = j["seed"].get<uint64_t>();
    r.budget = j["budget"].get<int>();
    r.timestamp = j.value("timestamp", "");
    for (const auto& it : j["items"]) {
        Item item;
        item.condition = it.at("condition").get<std::string>();
        item.verdict = verdict_from(it.at("verdict").get<std::string>());
        item.detail = it.value("detail", "");
        r.items.push_back(std::move(item));
    }
    return r;
}

std::string Report::render_text() const {
    std::string s;
    s += "suite: " + suite + "  subject: " + subject + "\n";
    s += "seed: " + std::to_string(seed) + "  budget: " + std::to_string(budget) + "\n";
    for (const Item& i : items) {
        std::string mark = i.verdict == Verdict::Pass          ? "  ok  "
                           : i.verdict == Verdict::Inconclusive ? " INC? "
                                                                : " FAIL ";
        s += "[" + mark + "] " + i.condition;
        if (!i.detail.empty()) s += "  -- " + i.detail;
        s += "\n";
    }
    s += "pass " + std::to_string(passes()) + ", fail " + std::to_string(failures()) +
         ", inconclusive " + std::to_string(inconclusive()) + "\n";
    return s;
}

} // namespace ggt::report
