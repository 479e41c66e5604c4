#pragma once

#include "wps/abelian.hpp"
#include "wps/cech.hpp"
#include "wps/cohomology.hpp"
#include "wps/divisors.hpp"
#include "wps/fan.hpp"
#include "wps/int_matrix.hpp"
#include "wps/int_types.hpp"
#include "wps/sweep.hpp"
#include "wps/weights.hpp"

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <string>

namespace wps {

using Json = nlohmann::json;

// Integers are emitted as JSON numbers while they are exactly representable
// in 64 bits and as decimal strings beyond that; reports stay byte-stable
// either way because the choice depends only on the value.
inline Json int_json(const Int& v) {
  if (v >= Int(std::numeric_limits<std::int64_t>::min()) &&
      v <= Int(std::numeric_limits<std::int64_t>::max()))
    return v.convert_to<std::int64_t>();
  return v.str();
}

inline Json vec_json(const IntVec& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(int_json(x));
  return a;
}

inline Json mat_json(const IntMat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vec_json(m.row(i)));
  return rows;
}

inline Json group_json(const FgAbelianGroup& g) {
  return Json{{"rank", g.free_rank}, {"torsion", vec_json(g.torsion)}};
}

inline Json fan_json(const Fan& f) {
  Json rays = Json::array();
  for (const IntVec& v : f.rays) rays.push_back(vec_json(v));
  return Json{{"weights", vec_json(f.weights.rho)},
              {"U", mat_json(f.u)},
              {"rays", rays},
              {"multiplicities", vec_json(f.multiplicities)}};
}

inline Json pages_json(const SpectralPages& pages) {
  Json e1 = Json::object(), e2 = Json::object();
  for (int p = -1; p <= pages.n(); ++p)
    for (int q = 0; q <= 1; ++q) {
      std::string key = std::to_string(p) + "," + std::to_string(q);
      e1[key] = group_json(pages.e1(p, q).group);
      e2[key] = group_json(pages.e2(p, q).group);
    }
  bool iso = true;
  for (int p = -1; p <= pages.n() - 2; ++p)
    if (!d2_map(pages, p).is_isomorphism) iso = false;
  return Json{{"E1", e1}, {"E2", e2}, {"d2_iso", iso}};
}

inline Json delorme_step_json(const DelormeStep& st) {
  return Json{{"d", vec_json(st.d)},
              {"s_each", vec_json(st.s_each)},
              {"s", int_json(st.s)},
              {"output", vec_json(st.output.rho)}};
}

inline Json normalization_json(const NormalizationReport& rep) {
  Json steps = Json::array();
  for (const DelormeStep& st : rep.steps) steps.push_back(delorme_step_json(st));
  return Json{{"input", vec_json(rep.input.rho)},
              {"gcd_divided", vec_json(rep.gcd_divided.rho)},
              {"steps", steps},
              {"normal_form", vec_json(rep.normal_form.rho)},
              {"total_s", int_json(rep.total_s)}};
}

inline Json twist_json(const TwistTransport& t) {
  return Json{{"ell", int_json(t.ell)},
              {"b", vec_json(t.b)},
              {"c", vec_json(t.c)},
              {"ell_prime", int_json(t.ell_prime)},
              {"monomial", vec_json(t.monomial)},
              {"reduced_twist", int_json(t.reduced_twist)},
              {"d", vec_json(t.d)},
              {"s_each", vec_json(t.s_each)},
              {"s", int_json(t.s)}};
}

inline Json class_groups_json(const ClassGroupData& cl, const PicardData& pic,
                              const StackComparison& st) {
  return Json{{"class_group",
               Json{{"rank", cl.group.free_rank}, {"degrees", vec_json(cl.ray_degrees)}}},
              {"picard_index", int_json(pic.index_in_class_group)},
              {"stack_pullback_multiplier", int_json(st.pullback_multiplier)}};
}

inline Json cohomology_json(const WeightVector& w, int i, const Int& ell, bool with_basis,
                            bool stack_variant) {
  Json out{{"i", i}, {"ell", int_json(ell)}, {"dim", int_json(h_dim(w, i, ell))}};
  if (stack_variant) out["variant"] = "stack";
  if (with_basis) {
    Json basis = Json::array();
    for (const IntVec& e : monomial_basis(w, i, ell)) basis.push_back(vec_json(e));
    out["basis"] = basis;
  }
  return out;
}

inline Json sweep_json(const SweepResult& res) {
  Json failures = Json::array();
  for (const SweepFailure& f : res.failures)
    failures.push_back(Json{{"weights", vec_json(f.weights)}, {"check", f.check}});
  return Json{{"checked", res.checked},
              {"all_brauer_trivial", res.all_brauer_trivial},
              {"failures", failures}};
}

}  // namespace wps
