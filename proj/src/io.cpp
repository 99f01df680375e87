#include "skcf/io.hpp"

namespace skcf::io {

json to_json(const Scalar& s) {
  if (s.is_exact()) return {{"re", s.exact().re.get_str()}, {"im", s.exact().im.get_str()}};
  auto z = s.to_complex();
  return {{"re", z.real()}, {"im", z.imag()}};
}

json to_json(const ExtScalar& z) {
  if (z.is_inf()) return "inf";
  return to_json(z.value());
}

namespace {

// Returns true when the component is exact.
bool read_component(const json& j, mpq_class* q, double* d) {
  if (j.is_string()) {
    *q = Scalar::parse_rational(j.get<std::string>());
    return true;
  }
  if (j.is_number_integer()) {
    *q = mpq_class(j.dump(), 10);
    return true;
  }
  if (j.is_number_float()) {
    *d = j.get<double>();
    return false;
  }
  throw InputError("scalar component must be a string or a number");
}

}  // namespace

Scalar scalar_from_json(const json& j) {
  if (j.is_number() || j.is_string()) return scalar_from_json(json{{"re", j}});
  if (!j.is_object() || !j.contains("re")) throw InputError("scalar must be an object with \"re\"");
  mpq_class re_q, im_q;
  double re_d = 0, im_d = 0;
  bool re_exact = read_component(j.at("re"), &re_q, &re_d);
  bool im_exact = true;
  if (j.contains("im")) im_exact = read_component(j.at("im"), &im_q, &im_d);
  if (re_exact && im_exact) return GaussRational(re_q, im_q);
  return Scalar::approx(re_exact ? re_q.get_d() : re_d, im_exact ? im_q.get_d() : im_d);
}

ExtScalar ext_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return ExtScalar::infinity();
  return ExtScalar(scalar_from_json(j));
}

json to_json(const State& s) {
  json amps = json::array();
  for (const auto& [idx, a] : s.amplitudes()) {
    json entry = to_json(a);
    entry["i"] = {idx[0], idx[1], idx[2]};
    amps.push_back(entry);
  }
  return {{"dims", {2, s.m(), s.n()}}, {"amps", amps}};
}

State state_from_json(const json& j) {
  try {
    const auto& dims = j.at("dims");
    if (!dims.is_array() || dims.size() != 3 || dims[0].get<int>() != 2)
      throw InputError("state dims must be [2, m, n]");
    long m = dims[1].get<long>(), n = dims[2].get<long>();
    if (m <= 0 || n <= 0) throw InputError("state dimensions must be positive");
    State st(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    for (const auto& a : j.at("amps")) {
      const auto& i = a.at("i");
      if (!i.is_array() || i.size() != 3) throw InputError("amplitude index must be [i, j, k]");
      State::Index idx{};
      for (int d = 0; d < 3; ++d) {
        long v = i[d].get<long>();
        if (v < 0) throw InputError("amplitude index out of range");
        idx[d] = static_cast<std::size_t>(v);
      }
      st.add(idx, scalar_from_json(a));
    }
    return st;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed state JSON: ") + e.what());
  }
}

json to_json(const Lft& l) {
  return {{"a", to_json(l.a())}, {"b", to_json(l.b())}, {"c", to_json(l.c())}, {"d", to_json(l.d())}};
}

json to_json(const KroneckerStructure& ks) {
  json eigs = json::array();
  for (const auto& rec : ks.eigs) eigs.push_back({{"value", to_json(rec.value)}, {"sizes", rec.signature}});
  return {{"h", ks.h}, {"g", ks.g}, {"eps", ks.eps}, {"nu", ks.nu}, {"eigs", eigs}};
}

json to_json(const CanonicalForm& cf) {
  json eta = json::array();
  for (const auto& grp : cf.eta) eta.push_back({{"sig", grp.sig}, {"count", grp.count}});
  json xhat = json::array();
  for (const auto& x : cf.xhat) xhat.push_back(to_json(x));
  return {{"h", cf.h},
          {"g", cf.g},
          {"eps", cf.eps},
          {"nu", cf.nu},
          {"eta", eta},
          {"xhat", xhat},
          {"meta", {{"mode", to_string(cf.mode)}, {"tol", cf.tol}, {"snapped", cf.snapped}}}};
}

}  // namespace skcf::io
