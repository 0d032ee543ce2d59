#include "pqm/serialize.hpp"

#include <cmath>
#include <sstream>

namespace pqm {

Json to_json(const Rat& r) {
    require(r.get_num().fits_slong_p() && r.get_den().fits_slong_p(), "Overflow",
            "rational too large for JSON integer fields");
    return Json{{"num", r.get_num().get_si()}, {"den", r.get_den().get_si()}};
}

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) return rat_parse(j.get<std::string>());
    require(j.contains("num") && j.contains("den"), "BadRational", "expected {num, den}");
    return rat(j["num"].get<long>(), j["den"].get<long>());
}

Json to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
    if (j.is_number()) return Complex{j.get<double>(), 0};
    require(j.is_array() && j.size() == 2, "BadComplex", "expected [re, im]");
    return Complex{j[0].get<double>(), j[1].get<double>()};
}

Json to_json(const Partition& p) {
    Json blocks = Json::array();
    for (std::uint64_t b : p.blocks) {
        Json block = Json::array();
        std::uint64_t m = b;
        while (m) {
            block.push_back(std::countr_zero(m));
            m &= m - 1;
        }
        blocks.push_back(block);
    }
    return Json{{"n", p.universe.n}, {"labels", p.universe.labels}, {"blocks", blocks}};
}

Partition partition_from_json(const Json& j) {
    Universe u = make_universe(j.at("n").get<int>(),
                               j.contains("labels") ? j["labels"].get<std::vector<std::string>>()
                                                    : std::vector<std::string>{});
    std::vector<std::vector<int>> blocks;
    for (const auto& blk : j.at("blocks")) blocks.push_back(blk.get<std::vector<int>>());
    return make_partition(u, blocks);
}

namespace {

Json attr_value_to_json(const AttrValue& v) {
    if (std::holds_alternative<Rat>(v)) return to_json(std::get<Rat>(v));
    return Json(std::get<std::string>(v));
}

AttrValue attr_value_from_json(const Json& j) {
    if (j.is_string()) return AttrValue{j.get<std::string>()};
    return AttrValue{rat_from_json(j)};
}

}  // namespace

Json to_json(const Attribute& a) {
    Json values = Json::array();
    for (const auto& v : a.values) values.push_back(attr_value_to_json(v));
    return Json{{"n", a.universe.n}, {"values", values}};
}

Attribute attribute_from_json(const Json& j) {
    Universe u = make_universe(j.at("n").get<int>(),
                               j.contains("labels") ? j["labels"].get<std::vector<std::string>>()
                                                    : std::vector<std::string>{});
    std::vector<AttrValue> values;
    for (const auto& v : j.at("values")) values.push_back(attr_value_from_json(v));
    return make_attribute(u, std::move(values));
}

Json to_json(const ProbDist& d) {
    Json p = Json::array();
    for (const Rat& x : d.p) p.push_back(to_json(x));
    return Json{{"n", d.universe.n}, {"p", p}};
}

ProbDist prob_dist_from_json(const Json& j) {
    Universe u = make_universe(j.at("n").get<int>());
    std::vector<Rat> p;
    for (const auto& x : j.at("p")) p.push_back(rat_from_json(x));
    return make_prob_dist(u, std::move(p));
}

Json to_json(const EntropyReport& r) {
    return Json{{"h_p", to_json(r.h_p)},
                {"h_q", to_json(r.h_q)},
                {"h_join", to_json(r.h_join)},
                {"h_p_given_q", to_json(r.h_p_given_q)},
                {"h_q_given_p", to_json(r.h_q_given_p)},
                {"mutual", to_json(r.mutual)}};
}

Json to_json(const RealDensity& rho) {
    Json rows = Json::array();
    for (int i = 0; i < rho.universe.n; ++i) {
        Json row = Json::array();
        for (int k = 0; k < rho.universe.n; ++k) {
            bool exact = false;
            Rat root = rat_sqrt(rho.radicands.at(i, k), exact);
            Json entry = exact ? to_json(root) : to_json(rho.radicands.at(i, k));
            entry["sqrt"] = !exact;
            row.push_back(entry);
        }
        rows.push_back(row);
    }
    return Json{{"n", rho.universe.n}, {"entries", rows}};
}

Json to_json(const ZeroedReport& r) {
    Json pairs = Json::array();
    for (auto [i, k] : r.zeroed_pairs) pairs.push_back(Json::array({i, k}));
    return Json{{"zeroed_pairs", pairs},
                {"sum_of_squares", to_json(r.sum_of_squares)},
                {"entropy_before", to_json(r.entropy_before)},
                {"entropy_after", to_json(r.entropy_after)}};
}

Json to_json(const CMat& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(to_json(m.at(r, c)));
        rows.push_back(row);
    }
    return rows;
}

CMat cmat_from_json(const Json& j) {
    require(j.is_array() && !j.empty(), "BadMatrix", "expected a non-empty array of rows");
    const int rows = static_cast<int>(j.size());
    const int cols = static_cast<int>(j[0].size());
    CMat m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        require(static_cast<int>(j[static_cast<size_t>(r)].size()) == cols, "BadMatrix",
                "ragged matrix rows");
        for (int c = 0; c < cols; ++c)
            m.at(r, c) = complex_from_json(j[static_cast<size_t>(r)][static_cast<size_t>(c)]);
    }
    return m;
}

Json to_json(const Observable& obs) {
    Json values = Json::array();
    for (double v : obs.values) values.push_back(v);
    return Json{{"basis", to_json(obs.eigenbasis)}, {"values", values}};
}

Observable observable_from_json(const Json& j, double tol) {
    CMat basis = cmat_from_json(j.at("basis"));
    std::vector<double> values = j.at("values").get<std::vector<double>>();
    return observable_from_attribute(basis, values, tol);
}

Json to_json(const QDensity& rho) {
    return Json{{"dim", rho.dim}, {"entries", to_json(rho.entries)}};
}

Json to_json(const Classification& c) {
    return Json{{"kind", compat_kind_name(c.kind)}, {"se_dim", c.se_dim}};
}

Json subspace_to_json(const Subspace<CxKernel>& s) {
    Json cols = Json::array();
    for (int c = 0; c < s.basis.cols(); ++c) {
        Json col = Json::array();
        for (int r = 0; r < s.basis.rows(); ++r) col.push_back(to_json(s.basis.at(r, c)));
        cols.push_back(col);
    }
    return Json{{"ambient", s.ambient}, {"field", "complex"}, {"basis", cols}};
}

Json subspace_to_json(const Subspace<RatKernel>& s) {
    Json cols = Json::array();
    for (int c = 0; c < s.basis.cols(); ++c) {
        Json col = Json::array();
        for (int r = 0; r < s.basis.rows(); ++r) col.push_back(to_json(s.basis.at(r, c)));
        cols.push_back(col);
    }
    return Json{{"ambient", s.ambient}, {"field", "rational"}, {"basis", cols}};
}

Json subspace_to_json(const Subspace<Gf2Kernel>& s) {
    Json cols = Json::array();
    for (std::uint64_t v : s.basis.cols) {
        Json col = Json::array();
        for (int r = 0; r < s.ambient; ++r) col.push_back((v >> r) & 1 ? 1 : 0);
        cols.push_back(col);
    }
    return Json{{"ambient", s.ambient}, {"field", "gf2"}, {"basis", cols}};
}

Json to_json(const FiniteGroup& g) {
    return Json{{"order", g.order}, {"table", g.table}, {"identity", g.identity}};
}

FiniteGroup group_from_json(const Json& j) {
    return make_group(j.at("table").get<std::vector<std::vector<int>>>(),
                      j.at("identity").get<int>());
}

Json to_json(const SetRep& rep) {
    Json j = to_json(rep.group);
    j["n"] = rep.n;
    j["maps"] = rep.maps;
    return j;
}

SetRep set_rep_from_json(const Json& j) {
    FiniteGroup g = group_from_json(j);
    return make_set_rep(std::move(g), j.at("n").get<int>(),
                        j.at("maps").get<std::vector<std::vector<int>>>());
}

Json to_json(const SetRepReport& r) {
    return Json{{"ok", r.ok()},
                {"reflexive", r.reflexive},
                {"symmetric", r.symmetric},
                {"transitive", r.transitive},
                {"homomorphic", r.homomorphic},
                {"failures", r.failures}};
}

Json to_json(const CompoundQle& c) {
    return Json{{"joint", c.joint},
                {"f_given_g", c.f_given_g},
                {"g_given_f", c.g_given_f},
                {"mutual", c.mutual}};
}

std::string format_complex(const Complex& z) {
    std::ostringstream out;
    out.precision(12);
    double re = z.real() == 0 ? 0.0 : z.real();  // normalize -0
    double im = z.imag() == 0 ? 0.0 : z.imag();
    out << re;
    out << (std::signbit(im) ? "-" : "+");
    out << std::abs(im) << "i";
    return out.str();
}

}  // namespace pqm
