#include "syang/json_io.hpp"

#include <stdexcept>

namespace syang {

namespace {

std::pair<int, int> parse_pair_key(const std::string& key) {
    auto comma = key.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("expected \"a,b\" action key, got " + key);
    return {std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1))};
}

std::string pair_key(int a, int b) { return std::to_string(a) + "," + std::to_string(b); }

template <class F, class ToJson>
Json sparse_to_json(const SparseMatrix<F>& m, ToJson f) {
    Json entries = Json::array();
    for (const auto& [rc, v] : m.entries())
        entries.push_back(Json::array({rc.first, rc.second, f(v)}));
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

template <class F, class FromJson>
SparseMatrix<F> sparse_from_json(const Json& j, FromJson f) {
    SparseMatrix<F> m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    for (const auto& e : j.at("entries"))
        m.set(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(), f(e.at(2)));
    return m;
}

} // namespace

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (!j.is_string()) throw std::invalid_argument("rational: expected \"p/q\" string");
    return Rational::parse(j.get<std::string>());
}

Json to_json(const Polynomial& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
    return Json{{"var", p.var().empty() ? "x" : p.var()}, {"coeffs", coeffs}};
}

Polynomial polynomial_from_json(const Json& j) {
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
    std::string var = j.contains("var") ? j.at("var").get<std::string>() : "x";
    return Polynomial(std::move(coeffs), var);
}

Json to_json(const RatFun& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

RatFun ratfun_from_json(const Json& j) {
    return RatFun(polynomial_from_json(j.at("num")), polynomial_from_json(j.at("den")));
}

Json to_json(const GradingContext& ctx) { return Json{{"M", ctx.M}, {"N", ctx.N}}; }

GradingContext ctx_from_json(const Json& j) {
    return GradingContext(j.at("M").get<int>(), j.at("N").get<int>());
}

Json to_json(const AlgebraElement& x) {
    Json terms = Json::array();
    for (const auto& [m, c] : x.terms()) {
        Json mono = Json::array();
        for (const auto& f : m.factors())
            mono.push_back(Json{{"a", f.a}, {"b", f.b}, {"n", f.n}, {"k", f.k}});
        terms.push_back(Json{{"coeff", to_json(c)}, {"monomial", mono}});
    }
    return Json{{"ctx", to_json(x.ctx())}, {"terms", terms}};
}

AlgebraElement algebra_element_from_json(const Json& j) {
    GradingContext ctx = ctx_from_json(j.at("ctx"));
    AlgebraElement x(ctx);
    for (const auto& t : j.at("terms")) {
        std::vector<PBWFactor> fs;
        for (const auto& f : t.at("monomial")) {
            PBWFactor pf{f.at("a").get<int>(), f.at("b").get<int>(), f.at("n").get<int>(),
                         f.contains("k") ? f.at("k").get<int>() : 1};
            ctx.check_index(pf.a);
            ctx.check_index(pf.b);
            if (pf.n < 1 || pf.k < 1) throw std::invalid_argument("bad monomial factor");
            fs.push_back(pf);
        }
        x.add(PBWMonomial(std::move(fs)), rational_from_json(t.at("coeff")));
    }
    return x;
}

Json to_json(const GlWeight& w) {
    Json a = Json::array();
    for (const auto& c : w.mu) a.push_back(to_json(c));
    return a;
}

GlWeight gl_weight_from_json(const Json& j) {
    GlWeight w;
    for (const auto& c : j) w.mu.push_back(rational_from_json(c));
    return w;
}

Json to_json(const GlModule& m) {
    Json action = Json::object();
    for (const auto& [ab, mat] : m.action)
        action[pair_key(ab.first, ab.second)] =
            sparse_to_json<Rational>(mat, [](const Rational& r) { return to_json(r); });
    Json weights = Json::array();
    for (const auto& w : m.weights) weights.push_back(to_json(w));
    return Json{{"ctx", to_json(m.ctx)},   {"dim", m.dim},       {"parity", m.parity},
                {"weights", weights},      {"action", action}};
}

GlModule gl_module_from_json(const Json& j) {
    GlModule m;
    m.ctx = ctx_from_json(j.at("ctx"));
    m.dim = j.at("dim").get<int>();
    m.parity = j.at("parity").get<std::vector<int>>();
    for (const auto& w : j.at("weights")) m.weights.push_back(gl_weight_from_json(w));
    for (const auto& [key, mat] : j.at("action").items()) {
        auto ab = parse_pair_key(key);
        m.action[ab] = sparse_from_json<Rational>(mat, rational_from_json);
    }
    return m;
}

Json to_json(const YModule& m) {
    Json action = Json::object();
    for (const auto& [ab, mat] : m.action)
        action[pair_key(ab.first, ab.second)] =
            sparse_to_json<RatFun>(mat, [](const RatFun& f) { return to_json(f); });
    Json weights = Json::array();
    for (const auto& w : m.weights) weights.push_back(to_json(w));
    Json alphas = Json::array();
    for (const auto& a : m.provenance.alphas) alphas.push_back(to_json(a));
    Json prov{{"kind", m.provenance.kind}, {"notes", m.provenance.notes}, {"alphas", alphas}};
    Json j{{"ctx", to_json(m.ctx)}, {"dim", m.dim},     {"parity", m.parity},
           {"weights", weights},    {"action", action}, {"provenance", prov}};
    if (!m.provenance.alphas.empty()) j["alphas"] = alphas;
    return j;
}

YModule y_module_from_json(const Json& j) {
    YModule m;
    m.ctx = ctx_from_json(j.at("ctx"));
    m.dim = j.at("dim").get<int>();
    m.parity = j.at("parity").get<std::vector<int>>();
    for (const auto& w : j.at("weights")) m.weights.push_back(gl_weight_from_json(w));
    for (const auto& [key, mat] : j.at("action").items()) {
        auto ab = parse_pair_key(key);
        m.ctx.check_index(ab.first);
        m.ctx.check_index(ab.second);
        m.action[ab] = sparse_from_json<RatFun>(mat, ratfun_from_json);
    }
    if (j.contains("provenance")) {
        const auto& p = j.at("provenance");
        m.provenance.kind = p.value("kind", std::string("loaded"));
        if (p.contains("notes")) m.provenance.notes = p.at("notes").get<std::vector<std::string>>();
        if (p.contains("alphas"))
            for (const auto& a : p.at("alphas")) m.provenance.alphas.push_back(rational_from_json(a));
    } else {
        m.provenance.kind = "loaded";
    }
    if (static_cast<int>(m.parity.size()) != m.dim ||
        static_cast<int>(m.weights.size()) != m.dim)
        throw std::invalid_argument("module: parity/weights length mismatch");
    return m;
}

Json to_json(const HighestWeight& w) {
    Json comps = Json::array();
    for (const auto& c : w.comps) comps.push_back(to_json(c));
    return Json{{"ctx", to_json(w.ctx)}, {"components", comps}};
}

HighestWeight highest_weight_from_json(const Json& j) {
    GradingContext ctx = ctx_from_json(j.at("ctx"));
    std::vector<RatFun> comps;
    for (const auto& c : j.at("components")) comps.push_back(ratfun_from_json(c));
    return HighestWeight(ctx, std::move(comps));
}

Json to_json(const DrinfeldData& d) {
    Json P = Json::object();
    for (const auto& [a, p] : d.P) P[std::to_string(a)] = to_json(p);
    return Json{{"P", P}, {"QtildeM", to_json(d.Qtilde)}, {"QM", to_json(d.Q)}, {"KM", d.KM}};
}

Json to_json(const FdVerdict& v) {
    Json j;
    switch (v.status) {
        case FdVerdict::Status::finite: j["status"] = "finite-dimensional"; break;
        case FdVerdict::Status::not_finite: j["status"] = "not-finite-dimensional"; break;
        case FdVerdict::Status::unsupported: j["status"] = "unsupported-factorization"; break;
    }
    if (v.data) j["drinfeld"] = to_json(*v.data);
    Json witness = Json::object();
    if (v.failed_component) witness["component"] = v.failed_component;
    if (!v.reason.empty()) witness["reason"] = v.reason;
    j["witness"] = witness;
    return j;
}

Json to_json(const WeightFactorization& f) {
    Json factors = Json::array();
    for (const auto& ff : f.factors)
        factors.push_back(Json{{"t", ff.t}, {"i", ff.i}, {"weight", to_json(ff.weight)}});
    return Json{{"twist", to_json(f.twist_fun)}, {"factors", factors}};
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace syang
