#include "toricsum/ordinariness.hpp"

#include <algorithm>

namespace toricsum {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Ordinary: return "Ordinary";
    case Verdict::NotNonDegenerate: return "NotNonDegenerate";
    case Verdict::Inconclusive: return "Inconclusive";
    case Verdict::Unsupported: return "Unsupported";
  }
  return "?";
}

LaurentPolySpec facet_restriction(const LaurentPolySpec& f, const Polytope& p,
                                  const Face& face) {
  if (face.containsOrigin)
    throw std::invalid_argument("facet_restriction: face contains the origin");
  LaurentPolySpec r;
  r.n = f.n;
  for (const LaurentTerm& t : f.terms)
    if (p.face_contains_point(face, t.exp)) r.terms.push_back(t);
  return r;
}

DiagonalReport diagonal_report(const LaurentPolySpec& f, const Polytope& p,
                               int facetId) {
  const auto& vsets = p.facet_vertex_sets_off_origin();
  if (facetId < 0 || facetId >= static_cast<int>(vsets.size()))
    throw std::out_of_range("diagonal_report: bad facet id");
  const Face* face = p.face_lattice().find(vsets[facetId]);
  if (face == nullptr)
    throw ConsistencyError("facet vertex set missing from face lattice");

  DiagonalReport rep;
  rep.facetId = facetId;
  rep.restriction = facet_restriction(f, p, *face);

  std::vector<IntVec> cols;
  for (const LaurentTerm& t : rep.restriction.terms) cols.push_back(t.exp);
  if (!cols.empty()) rep.vertexMatrix = IntMatrix::from_columns(cols);
  if (static_cast<int>(cols.size()) == f.n) {
    Int det = det_exact(rep.vertexMatrix);
    rep.detAbs = abs(det);
    if (rep.detAbs != 0) {
      rep.isDiagonal = true;
      SnfResult snf = smith_normal_form(rep.vertexMatrix);
      rep.invariantFactors = snf.diag;
    }
  }
  return rep;
}

bool diagonal_nondegenerate(const DiagonalReport& rep, const Int& prime) {
  if (!rep.isDiagonal)
    throw std::invalid_argument(
        "diagonal_nondegenerate: facet restriction is not diagonal");
  Int g;
  mpz_gcd(g.get_mpz_t(), prime.get_mpz_t(), rep.detAbs.get_mpz_t());
  return g == 1;
}

OrdinarinessVerdict diagonal_ordinary_verdict(const DiagonalReport& rep,
                                              const Int& prime) {
  if (!rep.isDiagonal)
    throw std::invalid_argument(
        "diagonal_ordinary_verdict: facet restriction is not diagonal");
  if (!diagonal_nondegenerate(rep, prime))
    return {Verdict::NotNonDegenerate,
            "p divides |det| = " + rep.detAbs.get_str()};
  const Int& dn = rep.largest_factor();
  if (dn == 1 || prime % dn == 1)
    return {Verdict::Ordinary, "p coprime to det and p = 1 (mod " +
                                   dn.get_str() + ")"};
  return {Verdict::Inconclusive,
          "p != 1 (mod " + dn.get_str() + "); the congruence test is "
          "sufficient only"};
}

GlobalOrdinariness global_ordinariness(const LaurentPolySpec& f,
                                       const Polytope& p, const Int& prime) {
  GlobalOrdinariness out;
  int count = static_cast<int>(p.facets_off_origin().size());
  bool anyInconclusive = false;
  for (int i = 0; i < count; ++i) {
    DiagonalReport rep = diagonal_report(f, p, i);
    if (!rep.isDiagonal) {
      out.reports.push_back(std::move(rep));
      out.facetVerdicts.push_back(
          {Verdict::Unsupported, "facet restriction is not diagonal"});
      out.global = {Verdict::Unsupported,
                    "facet " + std::to_string(i) +
                        " is not diagonal; the diagonal criteria do not apply"};
      return out;
    }
    OrdinarinessVerdict v = diagonal_ordinary_verdict(rep, prime);
    if (v.verdict == Verdict::NotNonDegenerate) {
      out.global = {Verdict::NotNonDegenerate,
                    "facet " + std::to_string(i) + ": " + v.reason};
      out.reports.push_back(std::move(rep));
      out.facetVerdicts.push_back(std::move(v));
      return out;
    }
    if (v.verdict == Verdict::Inconclusive) anyInconclusive = true;
    out.reports.push_back(std::move(rep));
    out.facetVerdicts.push_back(std::move(v));
  }
  out.global =
      anyInconclusive
          ? OrdinarinessVerdict{Verdict::Inconclusive,
                                "some facet verdict is inconclusive"}
          : OrdinarinessVerdict{Verdict::Ordinary,
                                "every off-origin facet is ordinary"};
  return out;
}

Int SlopePrediction::total_multiplicity() const {
  Int s = 0;
  for (const auto& [slope, mult] : slopes) s += mult;
  return s;
}

SlopePrediction predicted_slopes(const LaurentPolySpec& f, const Polytope& p,
                                 const Int& prime) {
  GlobalOrdinariness g = global_ordinariness(f, p, prime);
  if (g.global.verdict != Verdict::Ordinary)
    throw std::domain_error("predicted_slopes: verdict is " +
                            verdict_name(g.global.verdict) +
                            ", not Ordinary");
  Int d = p.denominator();
  std::vector<Int> h = hodge_numbers(p);
  SlopePrediction sp;
  for (size_t k = 0; k < h.size(); ++k)
    if (h[k] != 0) sp.slopes.emplace_back(make_rat(Int(k), d), h[k]);
  return sp;
}

SlopePrediction derived_slope_prediction(const Polytope& p) {
  if (!p.originIsVertex)
    throw std::domain_error(
        "derived_slope_prediction: origin must be a vertex (no trivial unit "
        "root otherwise)");
  Int d = p.denominator();
  std::vector<Int> h = hodge_numbers(p);
  if (h.empty() || h[0] < 1)
    throw ConsistencyError("expected a slope-0 segment to remove");
  SlopePrediction sp;
  sp.shift = Rat(-1);
  for (size_t k = 0; k < h.size(); ++k) {
    Int mult = h[k];
    if (k == 0) mult -= 1;  // the trivial unit root
    if (mult != 0)
      sp.slopes.emplace_back(make_rat(Int(k), d) - 1, mult);
  }
  return sp;
}

std::optional<UnitRootDescriptor> trivial_unit_root_descriptor(
    const LaurentPolySpec& f, const Polytope& p, const Int& prime) {
  if (!p.originIsVertex) return std::nullopt;
  UnitRootDescriptor d;
  std::optional<CoeffSpec> c = constant_term(f);
  if (!c) {
    d.t = 0;
    return d;
  }
  if (is_symbolic(*c))
    throw std::invalid_argument(
        "trivial_unit_root_descriptor: symbolic constant term; supply a "
        "concrete coefficient");
  Int v = std::get<Int>(*c) % prime;
  if (v < 0) v += prime;
  d.t = to_long(v);
  return d;
}

}  // namespace toricsum
