#include "seaweed/report.hpp"

#include <json.hpp>

#include "seaweed/errors.hpp"

namespace seaweed {

using json = nlohmann::ordered_json;

namespace {

json multiset_json(const EigenvalueMultiset& ms) {
    json out = json::object();
    for (const auto& [k, v] : ms.counts()) out[std::to_string(k)] = v;
    return out;
}

json orbit_json(const std::vector<OrbitCount>& orbits) {
    json out = json::array();
    for (const auto& o : orbits) out.push_back({{"members", o.members}, {"pi_union", o.pi_union_count}});
    return out;
}

json seaweed_header(const Seaweed& s) {
    const auto [a, b] = to_compositions(s);
    return {{"literal", to_literal(s)},
            {"family", std::string(1, to_char(s.spec().family()))},
            {"rank", s.rank()},
            {"pi1", s.top()},
            {"pi2", s.bottom()},
            {"a", a.parts},
            {"b", b.parts}};
}

std::string dump(const json& j, int indent) { return j.dump(indent); }

}  // namespace

std::string to_json(const EigenvalueMultiset& ms) { return multiset_json(ms).dump(); }

std::string to_json(const SpectrumReport& r, int indent) {
    json out = seaweed_header(r.seaweed);
    out["frobenius"] = true;
    json simple = json::array();
    for (const auto& v : r.simple.values) simple.push_back(v.get_num().get_si());
    out["simple_eigenvalues"] = simple;
    json comps = json::array();
    for (const auto& c : r.per_component) {
        comps.push_back({{"side", std::string(to_string(c.component.side))},
                         {"indices", c.component.indices()},
                         {"kind", std::string(1, to_char(c.component.kind))},
                         {"multiset", multiset_json(c.multiset)}});
    }
    out["components"] = comps;
    out["spectrum"] = multiset_json(r.total);
    out["checks"] = {{"symmetric", r.checks.symmetric}, {"unbroken", r.checks.unbroken}};
    out["flags"] = r.flags;
    return dump(out, indent);
}

std::string to_json(const Seaweed& s, const FrobeniusWitness& w, int indent) {
    json out = seaweed_header(s);
    out["frobenius"] = w.frobenius;
    out["pi_union"] = pi_union(s);
    out["orbits"] = orbit_json(w.orbits);
    return dump(out, indent);
}

bool CensusRecord::passed() const {
    if (error) return false;
    for (const auto& [name, ok] : checks)
        if (!ok) return false;
    return true;
}

bool CensusRecord::operator==(const CensusRecord& o) const {
    auto orbits_equal = [](const std::vector<OrbitCount>& x, const std::vector<OrbitCount>& y) {
        if (x.size() != y.size()) return false;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i].members != y[i].members || x[i].pi_union_count != y[i].pi_union_count) return false;
        return true;
    };
    return literal == o.literal && family == o.family && rank == o.rank && pi1 == o.pi1 && pi2 == o.pi2 && a == o.a &&
           b == o.b && frobenius == o.frobenius && orbits_equal(orbits, o.orbits) &&
           simple_eigenvalues == o.simple_eigenvalues && spectrum == o.spectrum && checks == o.checks &&
           flags == o.flags && error == o.error && seconds == o.seconds;
}

std::string to_json_line(const CensusRecord& r) {
    json out = {{"literal", r.literal}, {"family", std::string(1, r.family)},
                {"rank", r.rank},       {"pi1", r.pi1},
                {"pi2", r.pi2},         {"a", r.a},
                {"b", r.b},             {"frobenius", r.frobenius},
                {"orbits", orbit_json(r.orbits)}};
    if (r.simple_eigenvalues) out["simple_eigenvalues"] = *r.simple_eigenvalues;
    if (r.spectrum) {
        json sp = json::object();
        for (const auto& [k, v] : *r.spectrum) sp[std::to_string(k)] = v;
        out["spectrum"] = sp;
    }
    out["checks"] = r.checks;
    out["flags"] = r.flags;
    if (r.error) out["error"] = *r.error;
    if (r.seconds) out["seconds"] = *r.seconds;
    return out.dump();
}

CensusRecord census_record_from_json(const std::string& line) {
    try {
        const json in = json::parse(line);
        CensusRecord r;
        r.literal = in.at("literal").get<std::string>();
        const auto fam = in.at("family").get<std::string>();
        if (fam.size() != 1) throw Error(ErrorCode::ParseError, "bad family '" + fam + "'");
        r.family = fam[0];
        r.rank = in.at("rank").get<int>();
        r.pi1 = in.at("pi1").get<std::vector<int>>();
        r.pi2 = in.at("pi2").get<std::vector<int>>();
        r.a = in.at("a").get<std::vector<int>>();
        r.b = in.at("b").get<std::vector<int>>();
        r.frobenius = in.at("frobenius").get<bool>();
        for (const auto& o : in.at("orbits"))
            r.orbits.push_back({o.at("members").get<std::vector<int>>(), o.at("pi_union").get<int>()});
        if (in.contains("simple_eigenvalues")) r.simple_eigenvalues = in["simple_eigenvalues"].get<std::vector<long long>>();
        if (in.contains("spectrum")) {
            std::map<long long, long long> sp;
            for (const auto& [k, v] : in["spectrum"].items()) sp[std::stoll(k)] = v.get<long long>();
            r.spectrum = std::move(sp);
        }
        r.checks = in.at("checks").get<std::map<std::string, bool>>();
        r.flags = in.at("flags").get<std::vector<std::string>>();
        if (in.contains("error")) r.error = in["error"].get<std::string>();
        if (in.contains("seconds")) r.seconds = in["seconds"].get<double>();
        return r;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("bad census record: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw Error(ErrorCode::ParseError, std::string("bad census record: ") + e.what());
    }
}

}  // namespace seaweed
