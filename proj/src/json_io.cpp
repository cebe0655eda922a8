#include "wittforge/json_io.hpp"

#include "wittforge/errors.hpp"

namespace wittforge::json_io {

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object()) throw ParseError(std::string("expected an object with key '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing key '") + key + "'");
    return *it;
}

const json& array_field(const json& j, const char* key) {
    const json& a = field(j, key);
    if (!a.is_array()) throw ParseError(std::string("'") + key + "' must be an array");
    return a;
}

std::array<Rational, 4> coords_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4) throw ParseError("quaternion coordinates must be an array of 4 rationals");
    return {rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2]), rational_from_json(j[3])};
}

json coords_to_json(const QuatElem& q) {
    json a = json::array();
    for (auto& c : q.coords()) a.push_back(to_json(c));
    return a;
}

json diag_to_json(const QuadForm& q) {
    json a = json::array();
    for (auto& c : q.diag()) a.push_back(to_json(c));
    return a;
}

json outcome_to_json(SearchOutcome o) {
    switch (o) {
        case SearchOutcome::witness: return "witness";
        case SearchOutcome::provably_none: return "provably-none";
        case SearchOutcome::unknown: break;
    }
    return "unknown";
}

}  // namespace

Rational rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ParseError("expected a rational as a string or an integer, got " + j.dump());
}

json to_json(const Rational& q) { return q.get_str(); }

json to_json(const SquareClass& c) { return c.str(); }

json to_json(const BrauerClass& b) {
    json places = json::array();
    for (auto& v : b.ramification()) places.push_back(v.str());
    return {{"ramified", places}};
}

json to_json(const H3Class& h) { return h.bit; }

QuadForm quadform_from_json(const json& j) {
    std::vector<Rational> diag;
    for (auto& x : array_field(j, "diag")) diag.push_back(rational_from_json(x));
    for (auto& x : diag) {
        if (x == 0) throw ParseError("diagonal entries must be nonzero");
    }
    return QuadForm(std::move(diag));
}

json to_json(const QuadForm& q) { return {{"diag", diag_to_json(q)}}; }

QuaternionAlgebra algebra_from_json(const json& j) {
    Rational a = rational_from_json(field(j, "a"));
    Rational b = rational_from_json(field(j, "b"));
    if (a == 0 || b == 0) throw ParseError("quaternion slots must be nonzero");
    return QuaternionAlgebra(a, b);
}

json to_json(const QuaternionAlgebra& h) { return {{"a", to_json(h.a())}, {"b", to_json(h.b())}}; }

QuatElem quatelem_from_json(const json& j) {
    return QuatElem(algebra_from_json(field(j, "alg")), coords_from_json(field(j, "coords")));
}

json to_json(const QuatElem& q) { return {{"alg", to_json(q.algebra())}, {"coords", coords_to_json(q)}}; }

SkewHermForm skewherm_from_json(const json& j) {
    const QuaternionAlgebra alg = algebra_from_json(field(j, "alg"));
    if (j.contains("multipliers")) {
        const QuatElem common(alg, coords_from_json(field(j, "common")));
        std::vector<Rational> mult;
        for (auto& x : array_field(j, "multipliers")) mult.push_back(rational_from_json(x));
        return SkewHermForm::scalar_multiples(common, mult);
    }
    std::vector<QuatElem> entries;
    for (auto& e : array_field(j, "entries")) entries.emplace_back(alg, coords_from_json(e));
    return SkewHermForm(alg, std::move(entries));
}

json to_json(const SkewHermForm& h) {
    json entries = json::array();
    for (auto& e : h.entries()) entries.push_back(coords_to_json(e));
    json out{{"alg", to_json(h.algebra())}, {"entries", entries}};
    if (h.shape()) {
        json mult = json::array();
        for (auto& m : h.shape()->multipliers) mult.push_back(to_json(m));
        out["common"] = coords_to_json(h.shape()->common);
        out["multipliers"] = mult;
    }
    return out;
}

ProductPresentation presentation_from_json(const json& j) {
    const json& a0j = field(j, "a0");
    std::optional<Deg6Invol> a0;
    if (a0j.contains("split")) {
        a0 = Deg6Invol::split(quadform_from_json(a0j["split"]));
    } else if (a0j.contains("m3h")) {
        a0 = Deg6Invol::m3h(skewherm_from_json(a0j["m3h"]));
    } else {
        throw ParseError("'a0' must contain 'split' or 'm3h'");
    }
    const json& hj = field(j, "h");
    const QuaternionAlgebra h = algebra_from_json(field(hj, "alg"));
    QuatElem i(h, coords_from_json(field(hj, "i")));
    return ProductPresentation{*a0, QuatInvol(h, i)};
}

json to_json(const ProductPresentation& p) {
    json a0 = p.a0.is_split_presented() ? json{{"split", to_json(p.a0.form())}}
                                        : json{{"m3h", to_json(p.a0.herm())}};
    return {{"a0", a0}, {"h", {{"alg", to_json(p.hrho.h)}, {"i", coords_to_json(p.hrho.i)}}}};
}

std::array<RamSymbol, 2> slots_from_json(const json& j) {
    const json& s = array_field(j, "slots");
    if (s.size() != 2) throw ParseError("'slots' must hold two symbols");
    std::array<RamSymbol, 2> out{};
    for (std::size_t a = 0; a < 2; ++a) {
        if (!s[a].is_array() || s[a].size() != 2) throw ParseError("each symbol must hold two slot vectors");
        for (std::size_t b = 0; b < 2; ++b) {
            const json& v = s[a][b];
            if (!v.is_array() || v.size() != 4) throw ParseError("slot vectors must have 4 integer entries");
            for (std::size_t c = 0; c < 4; ++c) {
                if (!v[c].is_number_integer()) throw ParseError("slot vector entries must be integers");
                out[a][b][c] = v[c].get<long>();
            }
        }
    }
    return out;
}

json to_json(const PfisterDecomposition& d) {
    json alphas = json::array();
    json betas = json::array();
    for (auto& a : d.alphas) alphas.push_back(to_json(a));
    for (auto& b : d.betas) betas.push_back(to_json(b));
    return {{"d", to_json(d.d)}, {"alphas", alphas}, {"betas", betas}};
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

json invariants_report(const QuadForm& q, long bound) {
    const WittClass w = witt_decompose(q, bound);
    json out{{"dim", q.dim()},
             {"diag", diag_to_json(q)},
             {"determinant", to_json(determinant(q))},
             {"e1", to_json(e1(q))},
             {"hasse", to_json(hasse_class(q))},
             {"signature", signature(q)},
             {"witt_index", w.witt_index},
             {"anisotropic_kernel", diag_to_json(w.kernel)}};
    const bool in_i2 = q.dim() % 2 == 0 && e1(q).is_trivial();
    out["e2"] = in_i2 ? to_json(e2(q)) : json(nullptr);
    out["e3"] = in_i2 && e2(q).is_zero() ? to_json(e3(q)) : json(nullptr);
    return out;
}

json decompose12_report(const QuadForm& psi, long bound) {
    const PfisterDecomposition dec = decompose_split12(psi, bound);
    const SquareClass prod = dec.betas[0] * dec.betas[1] * dec.betas[2];
    return {{"decomposition", to_json(dec)},
            {"six_dim", diag_to_json(dec.six_dim())},
            {"reconstruction", diag_to_json(dec.reconstruction())},
            {"beta_product", to_json(prod)},
            {"verified", isometric(dec.reconstruction(), psi) && prod.is_trivial()}};
}

json hyper_over_report(const QuadForm& q, const SquareClass& d) {
    return {{"d", to_json(d)}, {"hyperbolic_over", is_hyperbolic_over(q, d)}};
}

json f3_report(const ProductPresentation& p, long bound) {
    const ProductPresentation np = f3_normal_form(p);
    const H3Class by_norms = f3_via_norms(np, bound);
    const F3SymbolRoute by_symbol = f3_via_symbol(np, bound);
    const bool agree = by_norms == by_symbol.value;
    json out{{"d", to_json(np.d())},
             {"d0", to_json(np.d0())},
             {"brauer_h", to_json(np.brauer_h())},
             {"brauer_a0", to_json(np.a0.brauer())},
             {"brauer_a", to_json(np.brauer_a())},
             {"repaired", !(brauer_from_symbol(p.d(), p.d0()) == p.brauer_h())},
             {"normal_form", to_json(np)},
             {"f3_norms", to_json(by_norms)},
             {"f3_symbol", to_json(by_symbol.value)},
             {"symbol_route", {{"c", to_json(by_symbol.c)}, {"e", to_json(by_symbol.e)}}},
             {"agree", agree}};
    out["f3"] = agree ? to_json(by_norms) : json(nullptr);
    return out;
}

json exists_report(const QuaternionAlgebra& h1, const QuaternionAlgebra& h2, long bound) {
    const ExistenceResult r = exists_involution(h1, h2, bound);
    json out{{"h1", to_json(h1)}, {"h2", to_json(h2)}, {"outcome", outcome_to_json(r.outcome)}};
    if (r.presentation) {
        out["presentation"] = to_json(*r.presentation);
        out["witness"] = {{"q", coords_to_json(r.witness->q)}, {"j", coords_to_json(r.witness->j)},
                          {"norm", to_json(nrd(r.witness->q))}};
        out["trivial_invariants"] = has_trivial_invariants(*r.presentation);
    } else {
        out["bound"] = bound;
    }
    return out;
}

json additive_report(const ProductPresentation& p, long bound) {
    const AdditiveDecomposition a = additive_decomposition(p, bound);
    json blocks = json::array();
    for (int i = 0; i < 3; ++i) {
        blocks.push_back({{"a", to_json(a.a[i])},
                          {"b", to_json(a.b[i])},
                          {"H", to_json(a.h_blocks[i])},
                          {"Q", to_json(a.q_blocks[i])}});
    }
    json group = json::array();
    for (auto& g : a.group()) group.push_back(to_json(g));
    return {{"blocks", blocks}, {"Q", to_json(a.q)}, {"group", group}};
}

json obstruction_report(const std::array<RamSymbol, 2>& d) {
    const ObstructionReport r = obstruction_check(d);
    json rows = json::array();
    for (auto& row : r.rows) {
        rows.push_back({{"S", {row.s_gens[0], row.s_gens[1]}},
                        {"T", {row.t_gens[0], row.t_gens[1]}},
                        {"intersection_is_2gamma_f", row.intersection_trivial},
                        {"pure_norms_avoid_2gamma_f", row.pure_norms_avoid_f},
                        {"norms_in_2gamma", row.h_prime_norms_even},
                        {"obstructed", row.obstructed()}});
    }
    return {{"obstructed", r.obstructed}, {"split_factor", r.degenerate}, {"splittings", r.rows.size()},
            {"table", rows}};
}

}  // namespace wittforge::json_io
