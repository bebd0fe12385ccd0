#include "rightsplit/groupspec.hpp"

#include <fstream>
#include <sstream>

namespace rsplit {

std::pair<std::int64_t, int> split_prime_power(std::int64_t q) {
    if (q < 2) throw Error("NotPrimePower", std::to_string(q) + " is not a prime power");
    for (std::int64_t p = 2; p * p <= q; ++p) {
        if (q % p != 0) continue;
        if (!is_prime64(p)) continue;
        std::int64_t rest = q;
        int r = 0;
        while (rest % p == 0) {
            rest /= p;
            ++r;
        }
        if (rest != 1) throw Error("NotPrimePower", std::to_string(q) + " is not a prime power");
        return {p, r};
    }
    return {q, 1}; // q itself prime
}

namespace {

std::pair<std::string, std::string> split_spec(const std::string& spec) {
    const auto pos = spec.find(':');
    if (pos == std::string::npos) return {spec, ""};
    return {spec.substr(0, pos), spec.substr(pos + 1)};
}

} // namespace

GroupPtr parse_group_spec(const std::string& spec) {
    const auto [kind, arg] = split_spec(spec);
    if (kind == "cyclic") return std::make_shared<CyclicGroup>(std::stoll(arg));
    if (kind == "sym") return std::make_shared<PermGroup>(std::stoi(arg));
    if (kind == "table") {
        std::ifstream in(arg);
        if (!in) throw Error("ParseError", "cannot open table file " + arg);
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_table(ss.str());
    }
    if (kind == "gl2" || kind == "sl2" || kind == "pgl2" || kind == "psl2") {
        const auto [p, r] = split_prime_power(std::stoll(arg));
        const Field f = Field::make(p, r);
        if (kind == "gl2") return gl2_group(f);
        if (kind == "sl2") return std::make_shared<SubgroupGroup>(sl2_subgroup(gl2_group(f)));
        if (kind == "pgl2") return pgl2_group(f);
        return psl2_group(f);
    }
    throw Error("ParseError", "unknown group spec '" + spec + "'");
}

Subgroup parse_subgroup_spec(const GroupPtr& g, const std::string& spec) {
    const auto [kind, arg] = split_spec(spec);
    if (kind == "full") {
        std::vector<Elem> all(g->order());
        for (Elem i = 0; i < g->order(); ++i) all[i] = i;
        return Subgroup(g, std::move(all));
    }
    if (kind == "derived") return derived_subgroup(g);
    if (kind == "det-power") {
        auto gl2 = std::dynamic_pointer_cast<const Gl2Group>(g);
        if (!gl2) throw Error("GroupMismatch", "det-power needs a gl2 group");
        return det_power_subgroup(gl2, std::stoll(arg));
    }
    if (kind == "gens") {
        std::vector<Elem> gens;
        std::stringstream ss(arg);
        std::string tok;
        while (std::getline(ss, tok, ',')) gens.push_back(std::stoll(tok));
        return subgroup_generated(g, gens);
    }
    throw Error("ParseError", "unknown subgroup spec '" + spec + "'");
}

} // namespace rsplit
