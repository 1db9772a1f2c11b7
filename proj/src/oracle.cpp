#include "dgas/oracle.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "dgas/errors.hpp"
#include "dgas/parallel.hpp"

namespace dgas {

namespace {

struct Keyed {
  SpectrumKey key;
  std::string canon;
};

std::vector<Keyed> key_all(std::span<const Graph> graphs, const AlphaParam& alpha,
                           std::size_t threads) {
  if (!graphs.empty()) {
    const std::size_t n = graphs.front().order();
    for (const auto& g : graphs)
      if (g.order() != n) throw DimensionError("mate search needs graphs of one order");
    if (n > kCanonicalOrderCap)
      throw DomainError("mate search supports n <= " + std::to_string(kCanonicalOrderCap));
  }
  std::vector<Keyed> out(graphs.size());
  parallel_for(graphs.size(), threads, [&](std::size_t i) {
    out[i] = {spectrum_key(graphs[i], alpha), canonical_form(graphs[i])};
  });
  return out;
}

std::vector<MateClass> group_classes(std::span<const Graph> graphs, const std::vector<Keyed>& keyed,
                                     std::vector<std::size_t>* class_of) {
  std::vector<MateClass> classes;
  std::map<SpectrumKey, std::size_t> by_key;
  std::vector<std::vector<std::string>> seen_canon;
  if (class_of) class_of->assign(graphs.size(), 0);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    auto [it, fresh] = by_key.try_emplace(keyed[i].key, classes.size());
    if (fresh) {
      classes.push_back({keyed[i].key, {}, {}});
      seen_canon.emplace_back();
    }
    const std::size_t c = it->second;
    if (class_of) (*class_of)[i] = c;
    auto& canon = seen_canon[c];
    if (std::find(canon.begin(), canon.end(), keyed[i].canon) != canon.end()) continue;
    canon.push_back(keyed[i].canon);
    classes[c].members.push_back(graphs[i]);
    classes[c].input_indices.push_back(i);
  }
  return classes;
}

}  // namespace

std::vector<MateClass> find_mate_classes(std::span<const Graph> graphs, const AlphaParam& alpha,
                                         std::size_t threads) {
  return group_classes(graphs, key_all(graphs, alpha, threads), nullptr);
}

BigInt level(const RationalMatrix& u) {
  BigInt l = 1;
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j) {
      Rational x = u(i, j);
      x.canonicalize();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
  return l;
}

OrthogonalCertificate build_u(const Graph& g, const Graph& h, const AlphaParam& alpha) {
  if (g.order() != h.order()) throw DimensionError("build_u: graphs of different order");
  if (spectrum_key(g, alpha) != spectrum_key(h, alpha))
    throw CertificateError("build_u: graphs do not share the generalized spectrum");
  if (det_bareiss(walk_matrix(g, alpha)) == 0)
    throw SingularMatrixError("build_u: walk matrix of the source graph is singular");

  const std::size_t n = g.order();
  const BigIntMatrix wg = unscaled_walk_matrix(g, alpha);
  const BigIntMatrix wh = unscaled_walk_matrix(h, alpha);

  // U^T W(g) = W(h) and U orthogonal give U = W(g) W(h)^{-1}.
  OrthogonalCertificate cert;
  cert.u = to_rational(wg) * rational_inverse(wh);
  cert.source = encode_graph6(g);
  cert.target = encode_graph6(h);

  const RationalMatrix ut = cert.u.transposed();
  if (!(ut * cert.u == RationalMatrix::identity(n)))
    throw CertificateError("build_u: U is not orthogonal");
  const std::vector<Rational> ones(n, Rational(1));
  if (cert.u * ones != ones) throw CertificateError("build_u: U 1 != 1");
  if (!(ut * to_rational(build_ac(g, alpha)) * cert.u == to_rational(build_ac(h, alpha))))
    throw CertificateError("build_u: U^T A_c(G) U != A_c(H)");
  if (!(ut * to_rational(wg) == to_rational(wh)))
    throw CertificateError("build_u: U^T W(G) != W(H)");

  cert.level = level(cert.u);
  return cert;
}

std::size_t VerificationReport::certificate_failures() const {
  std::size_t k = 0;
  for (const auto& c : certificates)
    if (!c.ok()) ++k;
  return k;
}

namespace {

CertificateCheck check_pair(const Graph& g, const Graph& h, const CriterionReport& source,
                            const AlphaParam& alpha, const FactorOptions& options) {
  CertificateCheck out;
  out.cert = build_u(g, h, alpha);
  const BigIntMatrix w = walk_matrix(g, alpha);
  out.last_divisor = smith_normal_form(w).last();
  out.level_divides_last = mpz_divisible_p(out.last_divisor.get_mpz_t(), out.cert.level.get_mpz_t());

  const BigInt det = abs(source.det_walk);
  for (const auto& p : odd_prime_divisors(out.cert.level, options)) {
    if (mpz_divisible_p(det.get_mpz_t(), BigInt(p * p).get_mpz_t())) continue;
    const bool divides_c = mpz_divisible_p(BigInt(static_cast<long>(alpha.c_alpha)).get_mpz_t(),
                                           p.get_mpz_t());
    if (divides_c && rank_mod_p(w, p) < g.order()) continue;
    out.odd_prime_violations.push_back(p);
  }

  out.source_in_family = source.arithmetic_passes();
  out.parity_applies =
      out.source_in_family && g.order() >= kMinCertifiableOrder && !source.excluded_parity;
  out.level_odd = mpz_odd_p(out.cert.level.get_mpz_t());
  return out;
}

}  // namespace

VerificationReport verify_theorem(std::span<const Graph> graphs, const AlphaParam& alpha,
                                  const OracleOptions& options) {
  VerificationReport rep;
  rep.alpha = alpha;
  const auto keyed = key_all(graphs, alpha, options.threads);
  rep.classes = group_classes(graphs, keyed, &rep.class_of);

  rep.reports.resize(graphs.size());
  parallel_for(graphs.size(), options.threads, [&](std::size_t i) {
    rep.reports[i] = criterion_check(graphs[i], alpha, options.factor);
  });

  for (std::size_t i = 0; i < graphs.size(); ++i)
    if (rep.reports[i].verdict == Verdict::kCertifiedDgas) rep.certified.push_back(i);

  struct Pair {
    std::size_t cls, from, to;
  };
  std::vector<Pair> pairs;
  for (std::size_t c = 0; c < rep.classes.size(); ++c) {
    const auto& cls = rep.classes[c];
    if (cls.members.size() < 2) continue;
    for (auto idx : cls.input_indices)
      if (rep.reports[idx].verdict == Verdict::kCertifiedDgas) {
        rep.counterexample_classes.push_back(c);
        break;
      }
    for (std::size_t a = 0; a < cls.members.size(); ++a)
      for (std::size_t b = 0; b < cls.members.size(); ++b) {
        if (a == b) continue;
        if (rep.reports[cls.input_indices[a]].det_walk == 0) {
          ++rep.singular_pairs_skipped;
          continue;
        }
        pairs.push_back({c, a, b});
      }
  }

  rep.certificates.resize(pairs.size());
  parallel_for(pairs.size(), options.threads, [&](std::size_t k) {
    const auto& cls = rep.classes[pairs[k].cls];
    const std::size_t src = pairs[k].from;
    rep.certificates[k] = check_pair(cls.members[src], cls.members[pairs[k].to],
                                     rep.reports[cls.input_indices[src]], alpha, options.factor);
  });

  // Plain cospectral mates: same charpoly of A_c(G), different complement charpoly.
  std::map<IntPolynomial, std::vector<std::size_t>> by_poly;
  std::unordered_map<std::string, bool> seen;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (!seen.try_emplace(keyed[i].canon, true).second) continue;
    by_poly[keyed[i].key.graph].push_back(i);
  }
  for (const auto& [poly, idx] : by_poly)
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a + 1; b < idx.size(); ++b)
        if (keyed[idx[a]].key.complement != keyed[idx[b]].key.complement)
          rep.plain_cospectral_only.emplace_back(rep.reports[idx[a]].graph6,
                                                 rep.reports[idx[b]].graph6);
  return rep;
}

}  // namespace dgas
