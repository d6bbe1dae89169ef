#include "ctidlab/serialize.hpp"

namespace ctidlab {

json to_json(const QPoly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.get_str());
    return a;
}

QPoly qpoly_from_json(const json& j) {
    if (!j.is_array()) throw BadParams("QPoly JSON must be an array of strings");
    std::vector<mpz_class> coeffs;
    for (const auto& e : j) {
        if (e.is_number_integer())
            coeffs.emplace_back(static_cast<long>(e.get<long long>()));
        else if (e.is_string())
            coeffs.emplace_back(e.get<std::string>());
        else
            throw BadParams("QPoly JSON coefficients must be strings or integers");
    }
    return QPoly::from_coeffs(std::move(coeffs));
}

json to_json(const BigRat& r) { return r.to_string(); }

BigRat bigrat_from_json(const json& j) {
    if (j.is_number_integer()) return BigRat(static_cast<long>(j.get<long long>()));
    if (!j.is_string()) throw BadParams("BigRat JSON must be a string");
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    if (slash == std::string::npos) return BigRat(mpz_class(s));
    return BigRat(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
}

json to_json(const Value& v) {
    if (std::holds_alternative<BigRat>(v)) return to_json(std::get<BigRat>(v));
    return to_json(std::get<QPoly>(v));
}

namespace {

template <class S>
json laurent_to_json(const LaurentPoly<S>& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.sorted_terms()) {
        json exps = json::array();
        for (std::size_t v = 0; v < e.size(); ++v) exps.push_back(e[v]);
        terms.push_back(json{{"exponents", exps}, {"coeff", to_json(c)}});
    }
    return json{{"nvars", p.nvars()}, {"terms", terms}};
}

} // namespace

json to_json(const LaurentPoly<BigRat>& p) { return laurent_to_json(p); }
json to_json(const LaurentPoly<QPoly>& p) { return laurent_to_json(p); }

json to_json(const ParamMatrix& B) { return json{{"n", B.n}, {"beta", B.beta}}; }

ParamMatrix param_matrix_from_json(const json& j) {
    ParamMatrix B;
    if (!j.contains("beta")) throw BadParams("matrix JSON needs a beta field");
    B.beta = j.at("beta").get<std::vector<std::vector<int>>>();
    B.n = j.contains("n") ? j.at("n").get<int>() : static_cast<int>(B.beta.size()) - 1;
    B.validate();
    return B;
}

json to_json(const IdentityCase& c) {
    json params = json::object();
    const CaseParams& p = c.params;
    if (has_vector_params(c.family))
        params["a"] = p.avec;
    else {
        params["n"] = p.n;
        params["a"] = p.a;
        params["b"] = p.b;
        params["k"] = p.k;
    }
    switch (c.family) {
        case Family::aomoto:
        case Family::q_aomoto:
            params["m"] = p.m;
            break;
        case Family::forrester:
        case Family::q_forrester:
            params["n0"] = p.n0;
            break;
        case Family::aomoto_forrester:
            params["n0"] = p.n0;
            params["m"] = p.m;
            break;
        case Family::kadell_main:
        case Family::kadell_sum:
            params["m"] = p.m;
            break;
        case Family::kadell_corollary:
            params["m"] = p.m;
            params["r"] = p.r;
            break;
        case Family::sills:
            params["r"] = p.r;
            params["s"] = p.s;
            break;
        case Family::xin_hr:
            params["r"] = p.r;
            break;
        default:
            break;
    }
    return json{{"family", std::string(family_name(c.family))},
                {"params", params},
                {"method", std::string(method_name(c.method))}};
}

IdentityCase identity_case_from_json(const json& j) {
    IdentityCase c;
    auto fam = family_from_name(j.at("family").get<std::string>());
    if (!fam) throw BadParams("unknown family: " + j.at("family").get<std::string>());
    c.family = *fam;
    if (j.contains("method")) {
        auto m = method_from_name(j.at("method").get<std::string>());
        if (!m) throw BadParams("unknown method: " + j.at("method").get<std::string>());
        c.method = *m;
    }
    if (j.contains("params")) {
        const json& p = j.at("params");
        if (p.contains("a")) {
            if (p.at("a").is_array())
                c.params.avec = p.at("a").get<std::vector<int>>();
            else
                c.params.a = p.at("a").get<int>();
        }
        for (auto [key, field] : {std::pair{"n", &CaseParams::n}, {"n0", &CaseParams::n0},
                                  {"m", &CaseParams::m}, {"b", &CaseParams::b},
                                  {"k", &CaseParams::k}, {"r", &CaseParams::r},
                                  {"s", &CaseParams::s}})
            if (p.contains(key)) c.params.*field = p.at(key).get<int>();
    }
    validate_case(c);
    return c;
}

json to_json(const VerifyReport& rep) {
    json j = to_json(rep.c);
    j["equal"] = rep.equal;
    j["status"] = rep.status;
    j["method"] = rep.method_used.empty() ? std::string(method_name(rep.c.method))
                                          : rep.method_used;
    if (rep.lhs)
        j["lhs"] = to_json(*rep.lhs);
    else if (rep.lhs_interp)
        j["lhs"] = to_json(*rep.lhs_interp);
    if (rep.lhs && rep.lhs_interp) j["lhs_interp"] = to_json(*rep.lhs_interp);
    if (rep.rhs_value) j["rhs"] = to_json(*rep.rhs_value);
    if (rep.conjecture) j["conjecture"] = true;
    if (!rep.error.empty()) j["error"] = rep.error;
    j["elapsed_ms"] = rep.elapsed_ms;
    j["terms"] = rep.terms;
    j["grid_points"] = rep.grid_points;
    return j;
}

json to_json(const SumsetInstance& inst) {
    json S = json::object();
    for (const auto& [ij, Sij] : inst.S)
        S[std::to_string(ij.first) + "," + std::to_string(ij.second)] = Sij;
    return json{{"p", inst.p}, {"A", inst.A}, {"S", S}};
}

SumsetInstance sumset_instance_from_json(const json& j) {
    SumsetInstance inst;
    inst.p = j.value("p", 0L);
    inst.A = j.at("A").get<std::vector<std::vector<long>>>();
    if (j.contains("S"))
        for (const auto& [key, val] : j.at("S").items()) {
            auto comma = key.find(',');
            if (comma == std::string::npos)
                throw BadParams("SumsetInstance: S keys must look like \"i,j\"");
            int i = std::stoi(key.substr(0, comma));
            int jj = std::stoi(key.substr(comma + 1));
            inst.S[{i, jj}] = val.get<std::vector<long>>();
        }
    inst.validate();
    return inst;
}

json to_json(const BoundReport& rep) {
    return json{{"size", rep.size},     {"bound", rep.bound}, {"meets", rep.meets},
                {"char_ok", rep.char_ok}, {"n", rep.n},        {"k", rep.k},
                {"s", rep.s}};
}

} // namespace ctidlab
