#include "dgas/report_json.hpp"

#include <algorithm>

namespace dgas {

namespace {

Json strings(const std::vector<BigInt>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(x.get_str());
  return out;
}

Json alpha_json(const AlphaParam& a) {
  return {{"alpha", a.to_string()}, {"c_alpha", a.c_alpha}, {"a", a.a}, {"b", a.b}};
}

Json member_json(const MateClass& cls) {
  Json members = Json::array();
  for (std::size_t i = 0; i < cls.members.size(); ++i)
    members.push_back({{"graph6", encode_graph6(cls.members[i])}, {"input_index", cls.input_indices[i]}});
  return members;
}

}  // namespace

std::string to_decimal(const Rational& q) {
  Rational r = q;
  r.canonicalize();
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Json to_json(const Factorization& f) {
  Json out = Json::array();
  for (const auto& pp : f.factors) out.push_back(Json::array({pp.prime.get_str(), pp.exponent}));
  return out;
}

Json to_json(const CriterionReport& r) {
  Json j;
  j["schema"] = kJsonSchemaVersion;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["connected"] = r.connected;
  j.update(alpha_json(r.alpha));
  j["det_walk"] = r.det_walk.get_str();
  j["abs_det_walk"] = BigInt(abs(r.det_walk)).get_str();
  j["reduced"] = to_decimal(r.reduced);
  j["reduced_integral"] = r.reduced_integral;
  j["reduced_odd"] = r.is_odd;
  j["square_free"] = r.is_square_free ? Json(*r.is_square_free) : Json(nullptr);
  j["square_witness"] = r.square_witness ? Json(r.square_witness->get_str()) : Json(nullptr);
  j["factorization"] = r.factorization ? to_json(*r.factorization) : Json(nullptr);
  Json ranks = Json::array();
  for (const auto& pr : r.prime_ranks) ranks.push_back(Json::array({pr.prime.get_str(), pr.rank}));
  j["prime_ranks"] = ranks;
  j["excluded_parity"] = r.excluded_parity;
  j["verdict"] = to_string(r.verdict);
  j["reason"] = r.reason;
  return j;
}

Json to_json(const SpectrumKey& key) {
  return {{"graph", strings(key.graph.coeffs)}, {"complement", strings(key.complement.coeffs)}};
}

Json to_json(const RationalMatrix& u) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < u.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < u.cols(); ++j) row.push_back(to_decimal(u(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const OrthogonalCertificate& cert) {
  return {{"source", cert.source},
          {"target", cert.target},
          {"level", cert.level.get_str()},
          {"u", to_json(cert.u)}};
}

Json to_json(const CertificateCheck& c) {
  Json j = to_json(c.cert);
  j["last_divisor"] = c.last_divisor.get_str();
  j["level_divides_last"] = c.level_divides_last;
  j["odd_prime_violations"] = strings(c.odd_prime_violations);
  j["source_in_family"] = c.source_in_family;
  j["parity_applies"] = c.parity_applies;
  j["level_odd"] = c.level_odd;
  j["ok"] = c.ok();
  return j;
}

Json to_json(const std::vector<MateClass>& classes) {
  Json out = Json::array();
  for (const auto& cls : classes)
    out.push_back({{"key", to_json(cls.key)}, {"members", member_json(cls)}});
  return out;
}

Json to_json(const VerificationReport& rep) {
  Json j;
  j["schema"] = kJsonSchemaVersion;
  j.update(alpha_json(rep.alpha));
  j["graphs"] = rep.reports.size();
  j["classes"] = rep.classes.size();

  Json certified = Json::array();
  for (auto i : rep.certified) {
    const auto& cls = rep.classes[rep.class_of[i]];
    certified.push_back({{"graph6", rep.reports[i].graph6},
                         {"input_index", i},
                         {"class_singleton", cls.members.size() == 1}});
  }
  j["certified"] = certified;

  Json mates = Json::array();
  for (std::size_t c = 0; c < rep.classes.size(); ++c) {
    const auto& cls = rep.classes[c];
    if (cls.members.size() < 2) continue;
    Json members = Json::array();
    for (auto idx : cls.input_indices)
      members.push_back({{"graph6", rep.reports[idx].graph6},
                         {"verdict", to_string(rep.reports[idx].verdict)}});
    const bool counterexample = std::find(rep.counterexample_classes.begin(),
                                          rep.counterexample_classes.end(),
                                          c) != rep.counterexample_classes.end();
    mates.push_back({{"key", to_json(cls.key)}, {"members", members}, {"counterexample", counterexample}});
  }
  j["mate_classes"] = mates;

  Json certs = Json::array();
  for (const auto& c : rep.certificates) certs.push_back(to_json(c));
  j["certificates"] = certs;
  j["singular_pairs_skipped"] = rep.singular_pairs_skipped;

  Json plain = Json::array();
  for (const auto& [g, h] : rep.plain_cospectral_only) plain.push_back(Json::array({g, h}));
  j["plain_cospectral_only"] = plain;

  j["counterexamples"] = rep.counterexample_classes.size();
  j["certificate_failures"] = rep.certificate_failures();
  j["ok"] = rep.ok();
  return j;
}

Json snf_json(const SNFDecomposition& snf, const SnfShape& shape) {
  Json j;
  j["schema"] = kJsonSchemaVersion;
  j["divisors"] = strings(snf.divisors);
  j["singular"] = shape.singular;
  j["shape_holds"] = shape.holds;
  j["b"] = shape.holds ? Json(shape.b.get_str()) : Json(nullptr);
  j["detail"] = shape.detail;
  return j;
}

}  // namespace dgas
