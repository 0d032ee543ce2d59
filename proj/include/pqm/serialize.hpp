#pragma once

#include <json.hpp>

#include "pqm/density.hpp"
#include "pqm/dsd.hpp"
#include "pqm/gf2_model.hpp"
#include "pqm/grouprep.hpp"
#include "pqm/prob.hpp"
#include "pqm/quantum.hpp"

namespace pqm {

/// Insertion-ordered JSON keeps CLI output byte-deterministic.
using Json = nlohmann::ordered_json;

Json to_json(const Rat& r);                     // {"num": .., "den": ..}
Rat rat_from_json(const Json& j);

Json to_json(const Complex& z);                 // [re, im]
Complex complex_from_json(const Json& j);

Json to_json(const Partition& p);               // {"n", "labels", "blocks"}
Partition partition_from_json(const Json& j);

Json to_json(const Attribute& a);               // {"n", "values"}
Attribute attribute_from_json(const Json& j);

Json to_json(const ProbDist& d);
ProbDist prob_dist_from_json(const Json& j);

Json to_json(const EntropyReport& r);

/// Entries as {"num","den","sqrt"}: the value itself when the radicand is a
/// perfect square (sqrt=false), otherwise the radicand under a sqrt flag.
Json to_json(const RealDensity& rho);

Json to_json(const ZeroedReport& r);

Json to_json(const CMat& m);                    // row-major [[ [re,im], ..], ..]
CMat cmat_from_json(const Json& j);

Json to_json(const Observable& obs);            // {"basis", "values"}
Observable observable_from_json(const Json& j, double tol = tolerance());

Json to_json(const QDensity& rho);

Json to_json(const Classification& c);

Json subspace_to_json(const Subspace<CxKernel>& s);
Json subspace_to_json(const Subspace<RatKernel>& s);
Json subspace_to_json(const Subspace<Gf2Kernel>& s);

template <class K>
Json dsd_to_json(const Dsd<K>& d) {
    Json parts = Json::array();
    for (const auto& p : d.parts) parts.push_back(subspace_to_json(p));
    return Json{{"ambient", d.ambient}, {"field", K::field_name}, {"parts", parts}};
}

Json to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

Json to_json(const SetRep& rep);
SetRep set_rep_from_json(const Json& j);

Json to_json(const SetRepReport& r);
Json to_json(const CompoundQle& c);

std::string format_complex(const Complex& z);   // "re+imi", 12 significant digits

}  // namespace pqm
