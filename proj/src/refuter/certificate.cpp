#include "edslrs/refuter.hpp"

#include "edslrs/error.hpp"

namespace edslrs::refute {

using nlohmann::json;

namespace {

std::string num(std::uint64_t v) { return std::to_string(v); }

std::uint64_t u64_field(const json& j, const char* key) {
    Int v = parse_int(j.at(key).get<std::string>());
    require(fits_u64(v), std::string("field ") + key + " out of range");
    return to_u64(v);
}

Window window_field(const json& j, const char* key) {
    const json& w = j.at(key);
    Window out;
    out.value = u64_field(w, "value");
    const json& range = w.at("window");
    require(range.is_array() && range.size() == 2, std::string(key) + ".window must be [1, end]");
    require(parse_int(range[0].get<std::string>()) == 1, std::string(key) + ".window must start at 1");
    Int end = parse_int(range[1].get<std::string>());
    require(fits_u64(end), std::string(key) + ".window end out of range");
    out.end = to_u64(end);
    return out;
}

}  // namespace

json to_json(const WitnessCertificate& c) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["curve"] = {{"A", to_dec(c.curve.a())}, {"B", to_dec(c.curve.b())}};
    j["point"] = {{"x", to_dec(c.point.x)}, {"y", to_dec(c.point.y)}, {"z", to_dec(c.point.z)}};
    json coeffs = json::array(), init = json::array();
    for (auto& v : c.spec.coeffs) coeffs.push_back(to_dec(v));
    for (auto& v : c.spec.initial) init.push_back(to_dec(v));
    j["lrs"] = {{"k", num(c.spec.order())}, {"coeffs", coeffs}, {"initial", init}};
    j["q"] = num(c.q);
    j["a"] = num(c.a);
    j["p"] = num(c.p);
    j["a_p"] = std::to_string(c.ap);
    j["group_order"] = num(c.group_order);
    j["ord_P"] = num(c.ord_p);
    j["T_z"] = {{"value", num(c.tz.value)}, {"window", {"1", num(c.tz.end)}}};
    j["T_u"] = {{"value", num(c.tu.value)}, {"window", {"1", num(c.tu.end)}}};
    j["q_divides_Tz"] = c.q_divides_tz;
    j["q_divides_Tu"] = c.q_divides_tu;
    j["mismatch_indices"] = c.mismatch_indices;
    j["sign_convention"] = kSignConvention;
    return j;
}

WitnessCertificate certificate_from_json(const json& j) {
    try {
        require(j.at("schema_version").get<int>() == kSchemaVersion, "unsupported certificate schema version");
        require(j.at("sign_convention").get<std::string>() == kSignConvention, "unknown sign convention");
        WitnessCertificate c;
        c.curve = ec::CurveQ(parse_int(j.at("curve").at("A").get<std::string>()),
                             parse_int(j.at("curve").at("B").get<std::string>()));
        const json& pt = j.at("point");
        c.point = ec::make_point(c.curve, parse_int(pt.at("x").get<std::string>()),
                                 parse_int(pt.at("y").get<std::string>()), parse_int(pt.at("z").get<std::string>()));
        const json& l = j.at("lrs");
        std::vector<Int> coeffs, init;
        for (auto& v : l.at("coeffs")) coeffs.push_back(parse_int(v.get<std::string>()));
        for (auto& v : l.at("initial")) init.push_back(parse_int(v.get<std::string>()));
        require(parse_int(l.at("k").get<std::string>()) == static_cast<unsigned long>(coeffs.size()),
                "lrs.k disagrees with the coefficient count");
        c.spec = lrs::make_spec(std::move(coeffs), std::move(init));
        c.q = u64_field(j, "q");
        c.a = u64_field(j, "a");
        c.p = u64_field(j, "p");
        Int ap = parse_int(j.at("a_p").get<std::string>());
        require(mpz_fits_slong_p(ap.get_mpz_t()) != 0, "a_p out of range");
        c.ap = ap.get_si();
        c.group_order = u64_field(j, "group_order");
        c.ord_p = u64_field(j, "ord_P");
        c.tz = window_field(j, "T_z");
        c.tu = window_field(j, "T_u");
        c.q_divides_tz = j.at("q_divides_Tz").get<bool>();
        c.q_divides_tu = j.at("q_divides_Tu").get<bool>();
        c.mismatch_indices = j.at("mismatch_indices").get<std::vector<std::uint64_t>>();
        return c;
    } catch (const json::exception& ex) {
        fail(ErrorKind::invalid_input, std::string("malformed certificate: ") + ex.what());
    }
}

std::map<std::string, std::uint64_t> ScanStats::as_map() const {
    return {{"primes_seen", primes_seen},
            {"wrong_residue", wrong_residue},
            {"bad_prime", bad_prime},
            {"excluded", excluded},
            {"trace_mismatch", trace_mismatch},
            {"order_not_divisible", order_not_divisible},
            {"period_unconfirmed", period_unconfirmed},
            {"q_divides_Tu", q_divides_tu},
            {"too_few_mismatches", too_few_mismatches}};
}

std::vector<std::string> VerifyResult::failed_fields() const {
    std::vector<std::string> out;
    for (auto& c : checks)
        if (!c.ok) out.push_back(c.field);
    return out;
}

}  // namespace edslrs::refute
