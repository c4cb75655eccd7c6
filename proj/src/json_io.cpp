#include "ears/json_io.hpp"

#include <limits>
#include <stdexcept>

namespace ears {

namespace {

long long to_ll(const Int& x) {
    if (x > Int(std::numeric_limits<long long>::max()) ||
        x < Int(std::numeric_limits<long long>::min()))
        throw std::domain_error("json: integer too large");
    return static_cast<long long>(x);
}

json imat_to_json(const IMat& m) {
    json out = json::array();
    for (const auto& row : m) out.push_back(ivec_to_json(row));
    return out;
}

IMat imat_from_json(const json& j) {
    IMat out;
    for (const auto& row : j) out.push_back(ivec_from_json(row));
    return out;
}

} // namespace

json ivec_to_json(const IVec& v) {
    json out = json::array();
    for (const Int& x : v) out.push_back(to_ll(x));
    return out;
}

IVec ivec_from_json(const json& j) {
    IVec out;
    for (const auto& x : j) out.push_back(Int(x.get<long long>()));
    return out;
}

json qvec_to_json(const QVec& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

QVec qvec_from_json(const json& j) {
    QVec out;
    for (const auto& x : j) {
        if (x.is_number_integer()) out.push_back(Rational(x.get<long long>()));
        else out.push_back(Rational::parse(x.get<std::string>()));
    }
    return out;
}

json cyc_to_json(const Cyc& c) {
    json out = json::array();
    for (const auto& x : c.coeffs()) out.push_back(x.str());
    return out;
}

json lattice_to_json(const Lattice& l) {
    return json{{"rank", l.dim()}, {"basis", imat_to_json(l.basis())}};
}

Lattice lattice_from_json(const json& j) {
    return Lattice(j.at("rank").get<size_t>(), imat_from_json(j.at("basis")));
}

json semilattice_to_json(const Semilattice& s) {
    return json{{"rank", s.dim()},
                {"basis", imat_to_json(s.ambient().basis())},
                {"coset_reps", imat_to_json(s.reps01())}};
}

Semilattice semilattice_from_json(const json& j) {
    Lattice ambient(j.at("rank").get<size_t>(), imat_from_json(j.at("basis")));
    // representatives arrive in ambient coordinates; convert to global vectors
    std::vector<IVec> reps;
    for (const auto& row : j.at("coset_reps")) {
        IVec c = ivec_from_json(row);
        IVec global(ambient.dim(), Int(0));
        for (size_t i = 0; i < c.size() && i < ambient.rank(); ++i)
            if (c[i] != 0) global = add(global, scale(c[i], ambient.basis()[i]));
        reps.push_back(global);
    }
    return Semilattice(std::move(ambient), std::move(reps));
}

json datum_to_json(const EarsDatum& r) {
    json out{{"finite",
              {{"type", std::string(1, r.finite().type_label())}, {"rank", r.finite().rank()}}},
             {"nullity", r.nu()},
             {"S", semilattice_to_json(r.s())}};
    if (r.l()) out["L"] = semilattice_to_json(*r.l());
    return out;
}

EarsDatum datum_from_json(const json& j) {
    const auto& fin = j.at("finite");
    auto sys = build_finite(fin.at("type").get<std::string>().at(0), fin.at("rank").get<int>());
    Semilattice s = semilattice_from_json(j.at("S"));
    std::optional<Semilattice> l;
    if (j.contains("L") && !j.at("L").is_null()) l = semilattice_from_json(j.at("L"));
    if (j.contains("nullity") && j.at("nullity").get<size_t>() != s.dim())
        throw std::invalid_argument("datum: nullity disagrees with S rank");
    return EarsDatum(std::move(sys), std::move(s), std::move(l));
}

json ears_root_to_json(const EarsRoot& r) {
    return json{{"finite", qvec_to_json(r.finite)}, {"lattice", ivec_to_json(r.lattice)}};
}

EarsRoot ears_root_from_json(const json& j, size_t finite_dim, size_t nu) {
    EarsRoot r{qvec_from_json(j.at("finite")), ivec_from_json(j.at("lattice"))};
    if (r.finite.size() != finite_dim || r.lattice.size() != nu)
        throw std::invalid_argument("root: dimension mismatch");
    return r;
}

json axiom_report_to_json(const AxiomReport& r) {
    json checks = json::object();
    for (const auto& [axiom, what] : r.checks) checks[axiom] = what;
    json violations = json::array();
    for (const auto& v : r.violations)
        violations.push_back({{"axiom", v.axiom}, {"witness", v.witness}});
    return json{{"status", r.ok() ? "ok" : "fail"}, {"checks", checks},
                {"violations", violations}};
}

json closedness_report_to_json(const ClosednessReport& r) {
    json violations = json::array();
    for (const auto& v : r.violations)
        violations.push_back({{"mode", v.axiom}, {"witness", v.witness}});
    return json{{"status", r.closed ? "ok" : "fail"},
                {"pairs_checked", r.pairs_checked},
                {"violations", violations}};
}

json subsystem_to_json(const SubsystemView& v, int box) {
    json members = json::array();
    for (const auto& x : v.enumerate(box)) members.push_back(ears_root_to_json(x));
    json iso{{"modulus", imat_to_json(v.isotropic_modulus())},
             {"coset_reps", imat_to_json(v.isotropic_coset_reps())}};
    return json{{"nullity", v.nullity()},
                {"finite_parts_present", v.finite_parts_present().size()},
                {"all_finite_parts_present", v.all_finite_parts_present()},
                {"isotropic", iso},
                {"box", box},
                {"members_in_box", members}};
}

json lemma_report_to_json(const LemmaS1Report& r) {
    json out{{"status", r.ok() ? "ok" : "fail"},
             {"points_checked", r.points_checked},
             {"hypothesis_failures", r.hypothesis_failures}};
    json violations = json::array();
    for (const auto& v : r.violations)
        violations.push_back({{"side", v.axiom}, {"witness", v.witness}});
    out["violations"] = violations;
    return out;
}

json orbit_table_to_json(const OrbitTable& t) {
    json orbits = json::array();
    for (size_t i = 0; i < t.orbits.size(); ++i) {
        json members = json::array();
        for (const auto& r : t.orbits[i]) members.push_back(qvec_to_json(r));
        orbits.push_back({{"representative", qvec_to_json(t.representatives[i])},
                          {"members", members}});
    }
    return json{{"orbits", orbits}};
}

json separation_to_json(const SeparationReport& r) {
    json witnesses = json::array();
    for (const auto& [a, b] : r.witnesses)
        witnesses.push_back({qvec_to_json(a), qvec_to_json(b)});
    return json{{"separated", r.separated}, {"witnesses", witnesses}};
}

json affinized_to_json(const AffinizedData& d) {
    json real_rows = json::array();
    for (const auto& row : d.real_rows)
        real_rows.push_back({{"representative", qvec_to_json(row.rep)},
                             {"delta_multiple", row.n},
                             {"dim", row.dim}});
    json iso_rows = json::array();
    for (const auto& row : d.iso_rows)
        iso_rows.push_back({{"k", row.n}, {"dim", row.dim}});
    return json{{"real_rows", real_rows}, {"isotropic_rows", iso_rows},
                {"cartan_dim", d.cartan_dim}};
}

json bl_result_to_json(const BlIsotropicResult& r, int l, int nu, const IVec& sigma, int k) {
    return json{{"family", "bl"},    {"l", l},
                {"nu", nu},          {"sigma", ivec_to_json(sigma)},
                {"k", k},            {"dim", r.dim},
                {"expected", r.expected}, {"brackets_used", r.brackets_used},
                {"matches", r.matches()}};
}

json tkk_result_to_json(const TkkBracketResult& r) {
    return json{{"case", r.bracket_case == TkkBracketCase::Multiplication ? "multiplication"
                                                                          : "commutator"},
                {"agrees", r.agrees},
                {"observed_sign", r.observed_sign},
                {"nonzero", r.nonzero}};
}

json tkk_identity_report_to_json(const TkkIdentityReport& r) {
    json checks = json::object();
    for (const auto& [name, what] : r.checks) checks[name] = what;
    return json{{"status", r.ok() ? "ok" : "fail"}, {"checks", checks},
                {"violations", r.violations}};
}

} // namespace ears
