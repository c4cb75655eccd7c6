#pragma once

#include "ears/ears_core.hpp"
#include "ears/realize_bl.hpp"
#include "ears/realize_tkk.hpp"
#include "ears/realize_toroidal.hpp"
#include "ears/twist.hpp"

#include <json.hpp>

namespace ears {

using nlohmann::json;

json lattice_to_json(const Lattice& l);
Lattice lattice_from_json(const json& j);

/// {"rank": nu, "basis": [[..]], "coset_reps": [[..]]}; representatives are
/// coordinates relative to the ambient basis.
json semilattice_to_json(const Semilattice& s);
Semilattice semilattice_from_json(const json& j);

/// {"finite": {"type": "B", "rank": 2}, "nullity": 2, "S": {...}, "L": {...}}
json datum_to_json(const EarsDatum& r);
EarsDatum datum_from_json(const json& j);

/// {"finite": ["1","-1","0"], "lattice": [1, 0]}
json ears_root_to_json(const EarsRoot& r);
EarsRoot ears_root_from_json(const json& j, size_t finite_dim, size_t nu);

json qvec_to_json(const QVec& v);
QVec qvec_from_json(const json& j);
json ivec_to_json(const IVec& v);
IVec ivec_from_json(const json& j);
json cyc_to_json(const Cyc& c);

json axiom_report_to_json(const AxiomReport& r);
json closedness_report_to_json(const ClosednessReport& r);
json subsystem_to_json(const SubsystemView& v, int box);
json lemma_report_to_json(const LemmaS1Report& r);
json orbit_table_to_json(const OrbitTable& t);
json separation_to_json(const SeparationReport& r);
json affinized_to_json(const AffinizedData& d);
json bl_result_to_json(const BlIsotropicResult& r, int l, int nu, const IVec& sigma, int k);
json tkk_result_to_json(const TkkBracketResult& r);
json tkk_identity_report_to_json(const TkkIdentityReport& r);

} // namespace ears
