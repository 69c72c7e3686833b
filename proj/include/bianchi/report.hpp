#ifndef BIANCHI_REPORT_HPP
#define BIANCHI_REPORT_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bianchi/classify.hpp"

namespace bianchi {

inline constexpr const char* schema_version = "1.0";

struct KindEntry {
    std::string kind;
    bool exists = false;
    bool exists_in_some_maximal_order = false;
    std::optional<bool> host_split;
    std::optional<i64> gamma;
    std::vector<i64> failing_primes;
    friend bool operator==(const KindEntry&, const KindEntry&) = default;
};

struct ReportDocument {
    std::string schema_version = bianchi::schema_version;
    i64 d = 0;
    std::vector<KindEntry> kinds;
    std::vector<std::string> criteria;
    friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

inline ReportDocument make_document(const ClassificationReport& rep)
{
    ReportDocument doc;
    doc.d = rep.d;
    for (const KindReport& k : rep.kinds) {
        KindEntry e;
        e.kind = to_string(k.kind);
        e.exists = k.exists_in_psl2;
        e.exists_in_some_maximal_order = k.exists_in_some_maximal_order;
        e.host_split = k.host_split;
        e.gamma = k.gamma;
        e.failing_primes = k.failing_primes;
        doc.kinds.push_back(std::move(e));
    }
    doc.criteria = {"congruence conditions on the primes of d",
                    "host algebra from split ramification",
                    "class count in closed form",
                    "class count from embedding numbers and automorphism indices"};
    return doc;
}

inline nlohmann::json to_json(const KindEntry& e)
{
    nlohmann::json j;
    j["kind"] = e.kind;
    j["exists"] = e.exists;
    j["exists_in_some_maximal_order"] = e.exists_in_some_maximal_order;
    j["host_split"] = e.host_split ? nlohmann::json(*e.host_split) : nlohmann::json(nullptr);
    j["gamma"] = e.gamma ? nlohmann::json(*e.gamma) : nlohmann::json(nullptr);
    j["failing_primes"] = e.failing_primes;
    return j;
}

inline nlohmann::json to_json(const ReportDocument& doc)
{
    nlohmann::json j;
    j["schema_version"] = doc.schema_version;
    j["d"] = doc.d;
    j["kinds"] = nlohmann::json::array();
    for (const auto& e : doc.kinds) j["kinds"].push_back(to_json(e));
    j["provenance"] = {{"criteria", doc.criteria}};
    return j;
}

inline KindEntry kind_entry_from_json(const nlohmann::json& j)
{
    KindEntry e;
    e.kind = j.at("kind").get<std::string>();
    e.exists = j.at("exists").get<bool>();
    e.exists_in_some_maximal_order = j.at("exists_in_some_maximal_order").get<bool>();
    if (!j.at("host_split").is_null()) e.host_split = j.at("host_split").get<bool>();
    if (!j.at("gamma").is_null()) e.gamma = j.at("gamma").get<i64>();
    e.failing_primes = j.at("failing_primes").get<std::vector<i64>>();
    return e;
}

inline ReportDocument document_from_json(const nlohmann::json& j)
{
    ReportDocument doc;
    doc.schema_version = j.at("schema_version").get<std::string>();
    doc.d = j.at("d").get<i64>();
    for (const auto& k : j.at("kinds")) doc.kinds.push_back(kind_entry_from_json(k));
    doc.criteria = j.at("provenance").at("criteria").get<std::vector<std::string>>();
    return doc;
}

inline std::string render_json(const ReportDocument& doc) { return to_json(doc).dump(2); }

inline std::string render_table(const ReportDocument& doc)
{
    std::ostringstream os;
    os << "d = " << doc.d << "\n";
    os << "kind   in PSL2(o)  host      gamma  failing primes\n";
    for (const auto& e : doc.kinds) {
        std::string name = e.kind;
        name.resize(7, ' ');
        std::string host = !e.host_split ? "-" : (*e.host_split ? "M2(k)" : "division");
        host.resize(10, ' ');
        std::string g = e.gamma ? std::to_string(*e.gamma) : "-";
        g.resize(7, ' ');
        std::string fp;
        for (std::size_t i = 0; i < e.failing_primes.size(); ++i)
            fp += (i ? "," : "") + std::to_string(e.failing_primes[i]);
        os << name << (e.exists ? "✓" : "✗") << "           " << host << g << (fp.empty() ? "-" : fp) << "\n";
    }
    return os.str();
}

}

#endif
