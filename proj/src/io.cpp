#include "abelian/io.hpp"

#include <stdexcept>

namespace abelian {

namespace {

std::vector<int> int_list(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array()) throw std::invalid_argument(std::string("missing array '") + key + "'");
    return j.at(key).get<std::vector<int>>();
}

std::vector<MultiIndex> index_list(const json& j, const char* key, const std::vector<int>& dims) {
    if (!j.contains(key) || !j.at(key).is_array()) throw std::invalid_argument(std::string("missing array '") + key + "'");
    std::vector<MultiIndex> out;
    for (const auto& e : j.at(key)) {
        auto v = e.get<MultiIndex>();
        if (v.size() != dims.size()) throw std::invalid_argument(std::string("entry of '") + key + "' has the wrong rank");
        if (!Box(dims).contains(v)) throw std::invalid_argument(std::string("entry of '") + key + "' is out of range");
        out.push_back(std::move(v));
    }
    return out;
}

json reps_json(const OrbitSet& D) {
    json r = json::array();
    for (const auto& rep : D.reps()) r.push_back(rep);
    return r;
}

}  // namespace

json to_json(const OrbitSet& D) { return json{{"dims", D.dims()}, {"q", D.q()}, {"reps", reps_json(D)}}; }

OrbitSet orbit_set_from_json(const json& j) {
    const auto dims = int_list(j, "dims");
    if (!j.contains("q")) throw std::invalid_argument("missing 'q'");
    return orbits_from_reps(index_list(j, "reps", dims), j.at("q").get<std::uint64_t>(), dims);
}

json to_json(const MultiPoly& f) {
    json c = json::array();
    for (std::size_t lin = 0; lin < f.box().size(); ++lin) {
        if (!f[lin]) continue;
        json e = f.box().coords(lin);
        e.push_back(f[lin]);
        c.push_back(std::move(e));
    }
    return json{{"dims", f.dims()}, {"coeffs", c}};
}

MultiPoly poly_from_json(const json& j, const FieldPtr& ctx) {
    const auto dims = int_list(j, "dims");
    MultiPoly f(ctx, dims);
    for (const auto& e : j.at("coeffs")) {
        auto v = e.get<std::vector<std::int64_t>>();
        if (v.size() != dims.size() + 1) throw std::invalid_argument("coefficient entry has the wrong length");
        MultiIndex i(v.begin(), v.end() - 1);
        if (!f.box().contains(i)) throw std::invalid_argument("coefficient index outside the box");
        if (v.back() < 0 || static_cast<std::uint64_t>(v.back()) >= ctx->size())
            throw std::invalid_argument("coefficient value outside the field");
        f.set(i, static_cast<std::uint32_t>(v.back()));
    }
    return f;
}

json to_json(const AbelianCode& C) {
    return json{{"p", C.ctx()->p()},
                {"m", C.ctx()->m()},
                {"dims", C.dims()},
                {"defining_reps", reps_json(C.defining_set())},
                {"roots", C.roots().u}};
}

AbelianCode code_from_json(const json& j) {
    for (const char* k : {"p", "m", "dims", "defining_reps"})
        if (!j.contains(k)) throw std::invalid_argument(std::string("code record lacks '") + k + "'");
    const auto dims = int_list(j, "dims");
    RootSelection roots;
    if (j.contains("roots")) roots.u = j.at("roots").get<std::vector<int>>();
    return AbelianCode::make(j.at("p").get<int>(), j.at("m").get<int>(), dims,
                             index_list(j, "defining_reps", dims), roots);
}

json to_json(const SupportHypermatrix& M) {
    return json{{"dims", M.dims()}, {"q", M.q()}, {"support_reps", reps_json(M.support_set())}};
}

SupportHypermatrix matrix_from_json(const json& j) {
    const auto dims = int_list(j, "dims");
    if (!j.contains("q")) throw std::invalid_argument("missing 'q'");
    const OrbitSet S = orbits_from_reps(index_list(j, "support_reps", dims), j.at("q").get<std::uint64_t>(), dims);
    return SupportHypermatrix(dims, S.q(), S.mask());
}

json to_json(const MadTrace& t) {
    json steps = json::array();
    for (std::size_t k = 0; k < t.steps.size(); ++k)
        steps.push_back(json{{"step", k},
                             {"support_reps", reps_json(t.steps[k].matrix.support_set())},
                             {"delta", t.steps[k].delta},
                             {"m", t.steps[k].m}});
    return steps;
}

json to_json(const BchSpec& s) { return json{{"gamma", s.gamma}, {"delta", s.delta}, {"b", s.b}}; }

json to_json(const Certificate& c) {
    return json{{"guaranteed_d", c.guaranteed_d},
                {"witness_weight", c.witness_weight},
                {"bmad", c.bmad},
                {"apparent", c.apparent},
                {"certified", c.certified}};
}

}  // namespace abelian
