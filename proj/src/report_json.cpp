#include "k3mw/report_json.hpp"

namespace k3mw {

namespace {

json coeffs_json(const DivisorClass& v) {
    json a = json::array();
    for (int i = 0; i < v.lat.rank; ++i) a.push_back(v.c[i]);
    return a;
}

json rational_json(const Rational& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

json index_json(const SectionIndex& idx, int arity) {
    if (arity == 1) return idx.a;
    return json::array({idx.a, idx.b});
}

} // namespace

json to_json(const FamilyReport& r) {
    json j;
    j["d"] = r.d;
    j["mw_rank"] = r.mw_rank;
    if (r.mw_generator_meets_zero) j["mw_generator_meets_zero"] = *r.mw_generator_meets_zero;
    j["has_reducible_fiber"] = r.has_reducible_fiber;
    j["torsion_trivial"] = r.torsion_trivial;
    j["unique_fibration"] = r.unique_fibration;
    if (r.rational_bisection) {
        j["rational_bisection"] = {{"x", r.rational_bisection->x},
                                   {"salient_generically", r.rational_bisection->salient_generically},
                                   {"bs_parity", r.rational_bisection->bs_parity}};
    }
    if (r.genus1_bisection) {
        j["genus1_bisection"] = {{"x", r.genus1_bisection->x},
                                 {"salient_generically", r.genus1_bisection->salient_generically}};
    }
    j["multisections"] = json::array();
    for (const auto& m : r.multisections)
        j["multisections"].push_back({{"m", m.m}, {"genus", m.genus}, {"x", m.x}});
    j["rank_jump_status"] = to_string(r.rank_jump_status);
    return j;
}

FamilyReport family_report_from_json(const json& j) {
    FamilyReport r;
    r.d = j.at("d").get<Int>();
    r.mw_rank = j.at("mw_rank").get<int>();
    if (j.contains("mw_generator_meets_zero"))
        r.mw_generator_meets_zero = j.at("mw_generator_meets_zero").get<Int>();
    r.has_reducible_fiber = j.at("has_reducible_fiber").get<bool>();
    r.torsion_trivial = j.at("torsion_trivial").get<bool>();
    r.unique_fibration = j.at("unique_fibration").get<bool>();
    if (j.contains("rational_bisection")) {
        const auto& b = j.at("rational_bisection");
        r.rational_bisection = RationalBisectionInfo{b.at("x").get<Int>(),
                                                     b.at("salient_generically").get<bool>(),
                                                     b.at("bs_parity").get<Int>()};
    }
    if (j.contains("genus1_bisection")) {
        const auto& b = j.at("genus1_bisection");
        r.genus1_bisection =
            Genus1BisectionInfo{b.at("x").get<Int>(), b.at("salient_generically").get<bool>()};
    }
    for (const auto& m : j.at("multisections"))
        r.multisections.push_back(
            {m.at("m").get<Int>(), m.at("genus").get<int>(), m.at("x").get<Int>()});
    std::string s = j.at("rank_jump_status").get<std::string>();
    for (auto st : {RankJumpStatus::JumpOverK, RankJumpStatus::PotentialDeg2,
                    RankJumpStatus::PotentialUnspecified, RankJumpStatus::NotEstablished})
        if (s == to_string(st)) r.rank_jump_status = st;
    return r;
}

json to_json(const SurfacePreset& p, const SplitVerdict& v, const DivisorClass& B) {
    json j;
    j["preset"] = p.name;
    j["class"] = coeffs_json(B);
    j["q_bound_used"] = v.q_cap;
    j["indices_enumerated"] = v.region_size;
    if (v.decomposed && v.decomposition) {
        json d;
        d["fiber_multiple"] = v.decomposition->fiber_multiple;
        d["component_multiples"] = v.decomposition->component_multiples;
        d["sections"] = json::array();
        for (const auto& idx : v.decomposition->sections)
            d["sections"].push_back(index_json(idx, p.family.arity()));
        j["verdict"] = "DECOMPOSES";
        j["decomposition"] = d;
    } else {
        j["verdict"] = "IRREDUCIBLE_BY_TEST";
    }
    return j;
}

json to_json(const std::vector<AuditEntry>& audit) {
    json arr = json::array();
    for (const auto& e : audit) {
        json j;
        j["lattice"] = e.lattice_name;
        j["gamma_block"] = e.gamma_block;
        j["verdict"] = e.verdict;
        if (!e.preset_name.empty()) j["preset"] = e.preset_name;
        if (!e.rebased_block.empty()) j["rebased_block"] = e.rebased_block;
        if (!e.class_coeffs.empty()) j["class"] = e.class_coeffs;
        if (e.decomposition) {
            json d;
            d["fiber_multiple"] = e.decomposition->fiber_multiple;
            d["component_multiples"] = e.decomposition->component_multiples;
            d["sections"] = json::array();
            for (const auto& idx : e.decomposition->sections)
                d["sections"].push_back(json::array({idx.a, idx.b}));
            j["decomposition"] = d;
        }
        arr.push_back(j);
    }
    return arr;
}

json orbit_json(Int d, const DivisorClass& v, const std::set<DivisorClass>& orb) {
    auto L = fibration_basis_lattice(d);
    DivisorClass F = DivisorClass::of(L, {1, 0, 0});
    DivisorClass O = DivisorClass::of(L, {0, 1, 0});
    json arr = json::array();
    for (const auto& w : orb) {
        json e;
        e["class"] = coeffs_json(w);
        e["pair_F"] = pair_value(w, F);
        e["pair_O"] = pair_value(w, O);
        e["self"] = self_pairing(w);
        arr.push_back(e);
    }
    json j;
    j["d"] = d;
    j["start"] = coeffs_json(v);
    j["orbit"] = arr;
    return j;
}

json to_json(const ConicResult& r) {
    json j;
    j["soluble"] = r.soluble;
    if (r.soluble) {
        j["point"] = json::array({r.point[0].str(), r.point[1].str(), r.point[2].str()});
    }
    j["symbols"] = json::array();
    for (const auto& s : r.symbols)
        j["symbols"].push_back({{"place", s.place}, {"symbol", s.symbol}});
    if (r.obstruction) j["obstruction"] = *r.obstruction;
    return j;
}

ConicResult conic_result_from_json(const json& j) {
    ConicResult r;
    r.soluble = j.at("soluble").get<bool>();
    if (j.contains("point")) {
        for (int i = 0; i < 3; ++i)
            r.point[i] = BigInt(j.at("point").at(i).get<std::string>());
    }
    for (const auto& s : j.at("symbols"))
        r.symbols.push_back({s.at("place").get<std::string>(), s.at("symbol").get<int>()});
    if (j.contains("obstruction")) r.obstruction = j.at("obstruction").get<std::string>();
    return r;
}

json to_json(const SingularityClass& c) {
    json j;
    switch (c.kind) {
        case SingKind::Smooth: j["kind"] = "smooth"; break;
        case SingKind::NodeA1: j["kind"] = "node_A1"; break;
        case SingKind::Degenerate: j["kind"] = "degenerate"; break;
    }
    if (c.kind == SingKind::NodeA1) {
        j["tangent_form"] = {{"A", rational_json(c.A)},
                             {"B", rational_json(c.B)},
                             {"C", rational_json(c.C)},
                             {"vars", {c.chart_vars[0], c.chart_vars[1]}}};
    }
    return j;
}

json to_json(const FibrationModel& m) {
    json j;
    j["base_parameter"] = m.base_parameter;
    j["quartic_coefficients"] = {{"a4", m.a[4].str()}, {"a3", m.a[3].str()},
                                 {"a2", m.a[2].str()}, {"a1", m.a[1].str()},
                                 {"a0", m.a[0].str()}};
    json node = json::array();
    for (const auto& v : m.node) node.push_back(rational_json(v));
    j["node"] = node;
    return j;
}

json to_json(const FiberProfile& p) {
    json j;
    json arr = json::array();
    for (const auto& e : p.entries) {
        json je;
        je["factor"] = e.factor.str();
        je["factor_degree"] = e.factor.deg();
        je["multiplicity"] = e.disc_multiplicity;
        je["pattern"] = e.gcd_pattern;
        je["type"] = to_string(e.type);
        je["euler"] = e.euler;
        arr.push_back(je);
    }
    j["entries"] = arr;
    if (p.infinity_entry) {
        json je;
        je["multiplicity"] = p.infinity_entry->disc_multiplicity;
        je["pattern"] = p.infinity_entry->gcd_pattern;
        je["type"] = to_string(p.infinity_entry->type);
        je["euler"] = p.infinity_entry->euler;
        j["infinity_entry"] = je;
    } else {
        j["infinity_entry"] = {{"smooth", true}, {"euler", 0}};
    }
    j["euler_sum"] = p.euler_sum;
    return j;
}

json to_json(const PrincipalTangents& t) {
    json j;
    j["tangent_form"] = {{"A", rational_json(t.A)}, {"B", rational_json(t.B)},
                         {"C", rational_json(t.C)}};
    j["disc_square_class"] = t.disc_square_class.str();
    if (t.rational_roots) {
        json arr = json::array();
        for (const auto& r : t.rational_params) arr.push_back(rational_json(r));
        j["rational_params"] = arr;
        if (t.has_infinite_tangent) j["infinite_tangent"] = true;
    } else {
        j["field_modulus"] = t.field->modulus().str("s");
        json arr = json::array();
        for (const auto& e : t.params) arr.push_back(nf_str(e));
        j["params"] = arr;
    }
    return j;
}

json to_json(const SalientReport& r) {
    json j;
    j["tangent_witnesses"] = r.tangent_witnesses;
    j["salient"] = r.overall;
    j["non_salient_specialization"] = r.non_salient_specialization;
    return j;
}

json to_json(const LineIntersection& li) {
    json j;
    j["multiplicities"] = li.multiplicities;
    json pts = json::array();
    for (const auto& [pt, m] : li.rational_points) {
        json p = json::array();
        for (const auto& v : pt) p.push_back(rational_json(v));
        pts.push_back({{"point", p}, {"multiplicity", m}});
    }
    j["rational_points"] = pts;
    j["splits"] = li.splits;
    if (li.splits) j["split_square_class"] = li.split_square_class.str();
    else {
        j["geometric_genus"] = li.geometric_genus;
        j["node_count"] = li.node_count;
    }
    return j;
}

json to_json(const Quadric44Report& r) {
    json j;
    j["pattern"] = r.pattern;
    switch (r.kind) {
        case BisectionKind::SmoothGenus1: j["kind"] = "smooth_genus1"; break;
        case BisectionKind::SingularRational: j["kind"] = "singular_rational"; break;
        case BisectionKind::Degenerate: j["kind"] = "degenerate"; break;
    }
    j["salient"] = r.salient;
    return j;
}

json to_json(const TrisectionReport& r) {
    json j;
    json pts = json::array();
    for (const auto& [pt, m] : r.pattern) {
        json p = json::array();
        for (const auto& v : pt) p.push_back(rational_json(v));
        pts.push_back({{"point", p}, {"multiplicity", m}});
    }
    j["pattern"] = pts;
    j["pattern_total"] = r.pattern_total;
    j["ramified"] = r.ramified;
    j["cubic_smooth"] = r.cubic_smooth;
    j["salient"] = r.salient;
    return j;
}

json to_json(const FieldTower& F, const std::vector<ModpSingularPoint>& pts) {
    json arr = json::array();
    for (const auto& sp : pts) {
        json e;
        e["point"] = census_point_str(F, sp.point);
        e["kind"] = sp.kind == ModpSingKind::A1 ? "A1" : "degenerate";
        e["tangent_form"] = json::array(
            {sp.tangent_form[0], sp.tangent_form[1], sp.tangent_form[2]});
        arr.push_back(e);
    }
    json j;
    j["p"] = F.p();
    j["n"] = F.n();
    j["q"] = F.q();
    j["singular_points"] = arr;
    return j;
}

json to_json(const TraceReport& r) {
    json j;
    j["p"] = r.p;
    json arr = json::array();
    for (const auto& [n, e] : r.entries) {
        arr.push_back({{"n", n},
                       {"q", e.q},
                       {"count", e.count},
                       {"trace", e.trace},
                       {"rational_nodes", e.rational_nodes},
                       {"weil_ok", e.weil_ok}});
    }
    j["counts"] = arr;
    j["weil_ok"] = r.weil_ok;
    j["note"] = r.note;
    return j;
}

json envelope(const std::string& command, json payload) {
    json j;
    j["schema"] = kSchema;
    j["command"] = command;
    j["result"] = std::move(payload);
    return j;
}

} // namespace k3mw
