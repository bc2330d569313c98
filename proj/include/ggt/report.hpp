#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ggt::report {

enum class Verdict { Pass, Fail, Inconclusive };

std::string verdict_name(Verdict v);
Verdict verdict_from(const std::string& s);

struct Item {
    std::string condition; // e.g. "(2T)", "Property (1)", "delta"
    Verdict verdict = Verdict::Pass;
    std::string detail;    // witnesses / measured values, serialized text
};

struct Report {
    int schema_version = 1;
    std::string suite;
    std::string subject;   // family name or graph description
    uint64_t seed = 0;
    int budget = 0;
    std::string timestamp; // excluded from determinism comparisons
    std::vector<Item> items;

    int passes() const;
    int failures() const;
    int inconclusive() const;

    void add(std::string condition, Verdict v, std::string detail = "");
    void add(std::string condition, bool pass, std::string detail = "");

    std::string to_json() const;           // pretty, sorted keys
    static Report from_json(const std::string& text); // throws on schema mismatch
    std::string render_text() const;       // human summary for `explain`
};

} // namespace ggt::report
