#include "toricsum/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "toricsum/conjecture.hpp"
#include "toricsum/hodge.hpp"
#include "toricsum/ordinariness.hpp"

namespace toricsum {

namespace {

Json rat_json(const Rat& r) { return rat_to_string(r); }

Json ivec_json(const IntVec& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(x.get_str());
  return a;
}

Json ratvec_json(const RatVec& v) {
  Json a = Json::array();
  for (const Rat& x : v) a.push_back(rat_json(x));
  return a;
}

Json point_json(const PolygonPoint& p) {
  return Json::array({rat_json(p.x), rat_json(p.y)});
}

Json cyclotomic_json(const Cyclotomic& c) {
  Json j;
  j["p"] = c.prime();
  j["coords"] = ratvec_json(c.coords());
  return j;
}

Json lpoly_json(const LPolynomial& l) {
  Json j;
  j["p"] = l.p;
  j["degree"] = l.degree();
  Json coeffs = Json::array();
  for (const Cyclotomic& c : l.coeffs) coeffs.push_back(ratvec_json(c.coords()));
  j["coeffs"] = coeffs;
  return j;
}

Json slopes_json(const std::vector<Rat>& slopes) {
  Json a = Json::array();
  for (const Rat& s : slopes) a.push_back(rat_json(s));
  return a;
}

Int parse_int(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw InputError("expected an integer at " + where);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ParsedInput load_input(const AnalysisRequest& req) {
  if (!req.input) {
    ParsedInput pi;
    pi.spec = paper_g_exponents();
    pi.prime = std::nullopt;
    return pi;
  }
  const std::string& s = *req.input;
  std::string doc = (!s.empty() && s[0] == '{') ? s : read_file(s);
  return parse_input(doc);
}

long require_prime(const AnalysisRequest& req, const ParsedInput& in) {
  std::optional<long> p = req.prime ? req.prime : in.prime;
  if (!p) throw InputError("this command requires --prime P");
  if (*p < 2) throw InputError("--prime must be a prime >= 2");
  for (long d = 2; d * d <= *p; ++d)
    if (*p % d == 0) throw InputError("--prime must be prime");
  return *p;
}

Json polytope_record(const Polytope& p) {
  Json j;
  j["n"] = p.n;
  j["dim"] = p.dim;
  j["degenerate"] = !p.full_dimensional();
  j["originIsVertex"] = p.originIsVertex;
  Json verts = Json::array();
  for (const IntVec& v : p.vertices) verts.push_back(ivec_json(v));
  j["vertices"] = verts;
  if (!p.full_dimensional()) return j;

  Json off = Json::array();
  const auto& offSets = p.facet_vertex_sets_off_origin();
  for (size_t i = 0; i < p.facets_off_origin().size(); ++i) {
    Json f;
    f["coeffs"] = ratvec_json(p.facets_off_origin()[i].coeffs);
    f["vertices"] = Json(offSets[i]);
    off.push_back(f);
  }
  j["facetsOffOrigin"] = off;
  Json thr = Json::array();
  const auto& thrSets = p.facet_vertex_sets_through_origin();
  for (size_t i = 0; i < p.facets_through_origin().size(); ++i) {
    Json f;
    f["coeffs"] = ivec_json(p.facets_through_origin()[i].coeffs);
    f["vertices"] = Json(thrSets[i]);
    thr.push_back(f);
  }
  j["facetsThroughOrigin"] = thr;

  Json faces = Json::array();
  for (const Face& f : p.face_lattice().faces) {
    Json e;
    e["dim"] = f.dim;
    e["vertices"] = Json(f.vertexSet);
    e["containsOrigin"] = f.containsOrigin;
    faces.push_back(e);
  }
  j["faces"] = faces;
  j["facesContainingOrigin"] = p.faces_containing_origin_counts();
  j["denominator"] = p.denominator().get_str();
  j["normalizedVolume"] = p.normalized_volume().get_str();
  return j;
}

std::string render_polytope(const Polytope& p, const Json& j) {
  std::ostringstream os;
  os << "polytope: n = " << p.n << ", dim = " << p.dim << ", "
     << p.vertices.size() << " vertices, origin "
     << (p.originIsVertex ? "is" : "is not") << " a vertex\n";
  if (!p.full_dimensional()) {
    os << "  dimension-deficient hull; facet data unavailable\n";
    return os.str();
  }
  os << "  off-origin facets (" << j["facetsOffOrigin"].size() << "):\n";
  for (const auto& f : j["facetsOffOrigin"])
    os << "    " << f["coeffs"].dump() << " . x = 1, vertices "
       << f["vertices"].dump() << "\n";
  os << "  through-origin facets (" << j["facetsThroughOrigin"].size() << "):\n";
  for (const auto& f : j["facetsThroughOrigin"])
    os << "    " << f["coeffs"].dump() << " . x = 0, vertices "
       << f["vertices"].dump() << "\n";
  os << "  faces containing the origin by dimension: "
     << j["facesContainingOrigin"].dump() << "\n";
  os << "  D = " << j["denominator"].get<std::string>()
     << ", normalized volume = " << j["normalizedVolume"].get<std::string>()
     << "\n";
  return os.str();
}

CommandOutcome cmd_polytope(const AnalysisRequest& req) {
  ParsedInput in = load_input(req);
  validate(in.spec, in.prime ? std::optional<Int>(Int(*in.prime)) : std::nullopt);
  Polytope p = Polytope::build(in.spec);
  CommandOutcome out;
  out.record = polytope_record(p);
  out.text = render_polytope(p, out.record);
  return out;
}

CommandOutcome cmd_hodge(const AnalysisRequest& req) {
  ParsedInput in = load_input(req);
  Polytope p = Polytope::build(in.spec);
  if (!p.full_dimensional())
    throw InputError("hodge requires a full-dimensional polytope (dim " +
                     std::to_string(p.dim) + " < " + std::to_string(p.n) + ")");
  HodgeData hd = hodge_data(p);
  long chainKmax = req.kmax ? *req.kmax
                            : static_cast<long>(hd.weightCounts.size()) - 1;
  std::vector<PolygonPoint> chain = chain_polygon(p, chainKmax);

  CommandOutcome out;
  Json j;
  j["denominator"] = hd.denominator.get_str();
  j["degree"] = hd.degree.get_str();
  Json w = Json::array(), h = Json::array();
  for (const Int& x : hd.weightCounts) w.push_back(x.get_str());
  for (const Int& x : hd.hodgeNumbers) h.push_back(x.get_str());
  j["weightCounts"] = w;
  j["hodgeNumbers"] = h;
  Json hp = Json::array();
  for (const PolygonPoint& q : hd.polygon.vertices) hp.push_back(point_json(q));
  j["hodgePolygon"] = hp;
  Json bp = Json::array();
  for (const PolygonPoint& q : hd.polygon.breakPoints) bp.push_back(point_json(q));
  j["breakPoints"] = bp;
  Json ch = Json::array();
  for (const PolygonPoint& q : chain) ch.push_back(point_json(q));
  j["chainPolygon"] = ch;
  out.record = j;

  std::ostringstream os;
  os << "D = " << hd.denominator.get_str() << ", degree = "
     << hd.degree.get_str() << "\n";
  os << "W = " << j["weightCounts"].dump() << "\n";
  os << "H = " << j["hodgeNumbers"].dump() << "\n";
  os << "Hodge polygon vertices: " << j["hodgePolygon"].dump() << "\n";
  os << "chain polygon vertices: " << j["chainPolygon"].dump() << "\n";
  out.text = os.str();
  return out;
}

CommandOutcome cmd_ordinary(const AnalysisRequest& req) {
  ParsedInput in = load_input(req);
  long prime = require_prime(req, in);
  validate(in.spec, Int(prime));
  Polytope p = Polytope::build(in.spec);
  if (!p.full_dimensional())
    throw InputError("ordinary requires a full-dimensional polytope");
  GlobalOrdinariness go = global_ordinariness(in.spec, p, Int(prime));

  CommandOutcome out;
  Json j;
  j["prime"] = prime;
  j["verdict"] = verdict_name(go.global.verdict);
  j["reason"] = go.global.reason;
  Json reports = Json::array();
  for (size_t i = 0; i < go.reports.size(); ++i) {
    const DiagonalReport& r = go.reports[i];
    Json e;
    e["facet"] = r.facetId;
    e["diagonal"] = r.isDiagonal;
    if (r.isDiagonal) {
      e["detAbs"] = r.detAbs.get_str();
      Json inv = Json::array();
      for (const Int& d : r.invariantFactors) inv.push_back(d.get_str());
      e["invariantFactors"] = inv;
      e["verdict"] = verdict_name(go.facetVerdicts[i].verdict);
      e["reason"] = go.facetVerdicts[i].reason;
    }
    reports.push_back(e);
  }
  j["facets"] = reports;
  if (go.global.verdict == Verdict::Ordinary) {
    SlopePrediction sp = predicted_slopes(in.spec, p, Int(prime));
    Json slopes = Json::array();
    for (const auto& [s, mult] : sp.slopes)
      slopes.push_back(Json::array({rat_json(s), mult.get_str()}));
    j["predictedSlopes"] = slopes;
    if (p.originIsVertex) {
      SlopePrediction ds = derived_slope_prediction(p);
      Json dslopes = Json::array();
      for (const auto& [s, mult] : ds.slopes)
        dslopes.push_back(Json::array({rat_json(s), mult.get_str()}));
      j["derivedSlopes"] = dslopes;
    }
  }
  std::optional<UnitRootDescriptor> ur;
  bool symbolicConstant = false;
  try {
    ur = trivial_unit_root_descriptor(in.spec, p, Int(prime));
  } catch (const std::invalid_argument&) {
    symbolicConstant = true;
  }
  if (ur) j["trivialUnitRoot"] = ur->t;
  if (symbolicConstant) j["trivialUnitRoot"] = "symbolic constant term";
  out.record = j;

  std::ostringstream os;
  os << "verdict at p = " << prime << ": " << verdict_name(go.global.verdict)
     << " (" << go.global.reason << ")\n";
  for (const auto& e : reports)
    os << "  facet " << e["facet"] << ": "
       << (e.contains("verdict") ? e["verdict"].get<std::string>()
                                 : std::string("not diagonal"))
       << (e.contains("detAbs")
               ? ", |det| = " + e["detAbs"].get<std::string>()
               : std::string())
       << "\n";
  if (j.contains("predictedSlopes"))
    os << "  predicted slopes (slope, multiplicity): "
       << j["predictedSlopes"].dump() << "\n";
  if (j.contains("derivedSlopes"))
    os << "  derived-family slopes: " << j["derivedSlopes"].dump() << "\n";
  out.text = os.str();
  return out;
}

CommandOutcome cmd_conjecture(const AnalysisRequest& req) {
  ParsedInput in = load_input(req);
  Polytope p = Polytope::build(in.spec);
  if (!p.full_dimensional())
    throw InputError("conjecture requires a full-dimensional polytope");

  std::optional<std::vector<Int>> reference;
  std::string provenance;
  if (req.referenceLedger) {
    reference = std::vector<Int>();
    for (long v : *req.referenceLedger) reference->emplace_back(v);
    provenance = "user-supplied ledger";
  } else if (matches_paper_g(in.spec)) {
    reference = std::vector<Int>();
    for (long v : default_expectations().eLedger) reference->emplace_back(v);
    provenance = "shipped reference ledger";
  }
  if (reference && static_cast<int>(reference->size()) != p.n + 1)
    throw InputError("reference ledger must list weights 0..n");

  CommandOutcome out;
  Json rows = Json::array();
  std::ostringstream os;
  bool anyMismatch = false;
  auto emit = [&](int k) {
    ConjectureReport rep = conjectured_weight_count(p, k);
    Json e;
    e["k"] = k;
    e["conjectured"] = rep.conjectured.get_str();
    os << "w_" << k << ": conjectured " << rep.conjectured.get_str();
    if (reference) {
      const Int& ref = (*reference)[k];
      bool agree = rep.conjectured == ref;
      anyMismatch = anyMismatch || !agree;
      e["reference"] = ref.get_str();
      e["agree"] = agree;
      e["provenance"] = provenance;
      os << ", reference " << ref.get_str() << " -> "
         << (agree ? "MATCH" : "MISMATCH");
    }
    os << "\n";
    rows.push_back(e);
  };
  if (req.conjectureK) {
    if (*req.conjectureK < 0 || *req.conjectureK > p.n)
      throw InputError("--k must be within 0..n");
    emit(static_cast<int>(*req.conjectureK));
  } else {
    for (int k = 0; k <= p.n; ++k) emit(k);
  }
  out.record["reports"] = rows;
  if (reference) out.record["anyMismatch"] = anyMismatch;
  out.text = os.str();
  return out;
}

void append_sum_rows(Json& j, const char* key, const std::vector<Cyclotomic>& v) {
  Json rows = Json::array();
  for (size_t i = 0; i < v.size(); ++i) {
    Json e;
    e["k"] = i + 1;
    e["value"] = cyclotomic_json(v[i]);
    rows.push_back(e);
  }
  j[key] = rows;
}

CommandOutcome cmd_lfunction_paper(const AnalysisRequest& req, long prime) {
  PaperInstance inst;
  inst.p = prime;
  if (req.coeffs) inst.a = *req.coeffs;
  int kmax = req.kmax ? static_cast<int>(*req.kmax) : 9;
  if (kmax < 1) throw InputError("--kmax must be >= 1");
  if (req.fast && kmax > max_fast_k(prime))
    throw InputError("fast path supports k <= " +
                     std::to_string(max_fast_k(prime)) + " at p = " +
                     std::to_string(prime));

  PaperPipeline pipe = run_paper_pipeline(inst, kmax, req.fast);

  CommandOutcome out;
  Json j;
  j["family"] = "constrained-six-parameter";
  j["prime"] = prime;
  Json coeffs = Json::array();
  for (long a : inst.a) coeffs.push_back(a);
  j["coeffs"] = coeffs;
  append_sum_rows(j, "starSums", pipe.sStar);
  append_sum_rows(j, "constrainedSums", pipe.sConstrained);

  std::ostringstream os;
  os << "S*_k and S_k for k = 1.." << kmax << " at p = " << prime << "\n";
  std::vector<std::string> failures;

  if (pipe.lstar) {
    j["lstar"] = lpoly_json(*pipe.lstar);
    std::vector<Rat> slopes = newton_polygon_slopes(*pipe.lstar);
    j["lstarSlopes"] = slopes_json(slopes);
    os << "L* degree " << pipe.lstar->degree() << ", slopes "
       << j["lstarSlopes"].dump() << "\n";

    LPolynomial stripped = *pipe.lstar;
    Json trivial = Json::array();
    for (long e = 0;; ++e) {
      LinearFactorDivision div =
          divide_linear_factor(stripped, Rat(int_pow(Int(prime), e)));
      if (!div.exact) break;
      trivial.push_back("q^" + std::to_string(e));
      stripped = div.quotient;
      if (stripped.degree() == 0) break;
    }
    j["lstarTrivialFactors"] = trivial;
    os << "trivial reciprocal roots of L*: " << trivial.dump() << "\n";
    if (!conjugation_symmetric(*pipe.lstar))
      failures.push_back("L* is not conjugation-symmetric");

    BoundReport br = verify_bound(inst, pipe.sConstrained);
    Json rows = Json::array();
    for (const BoundCheckRow& r : br.rows) {
      Json e;
      e["k"] = r.k;
      e["observed"] = r.observed;
      e["bound"] = r.bound;
      e["pass"] = r.pass;
      rows.push_back(e);
    }
    j["boundCheck"] = rows;
    if (!br.pass) failures.push_back("the |S_k| bound fails");

    if (pipe.lDerived && pipe.lDirect) {
      j["l"] = lpoly_json(*pipe.lDerived);
      std::vector<Rat> ls = newton_polygon_slopes(*pipe.lDerived);
      j["lSlopes"] = slopes_json(ls);
      os << "L degree " << pipe.lDerived->degree() << ", slopes "
         << j["lSlopes"].dump() << "\n";
      bool agree = pipe.lDerived->coeffs == pipe.lDirect->coeffs;
      j["derivationRoutesAgree"] = agree;
      if (!agree)
        failures.push_back("substitution and power-sum routes disagree");
      Json moduli = Json::array();
      for (const auto& em : reciprocal_root_moduli(*pipe.lDerived)) {
        Json row = Json::array();
        for (double r : em) row.push_back(r);
        moduli.push_back(row);
      }
      j["lRootModuli"] = moduli;
    }
  } else {
    os << "kmax below the degree; L-polynomials not reconstructed\n";
  }

  j["failures"] = failures;
  out.record = j;
  if (!failures.empty()) {
    out.exitCode = kExitVerificationFailure;
    for (const std::string& f : failures) os << "FAIL: " << f << "\n";
  }
  out.text = os.str();
  return out;
}

CommandOutcome cmd_lfunction_generic(const AnalysisRequest& req,
                                     const ParsedInput& in, long prime) {
  validate(in.spec, Int(prime));
  for (const LaurentTerm& t : in.spec.terms)
    if (is_symbolic(t.coeff))
      throw InputError(
          "lfunction needs concrete coefficients (or --coeffs for the shipped "
          "family)");
  Polytope p = Polytope::build(in.spec);
  if (!p.full_dimensional())
    throw InputError("lfunction requires a full-dimensional polytope");
  int degree = static_cast<int>(to_long(lfunction_degree(p)));
  int kmax = req.kmax ? static_cast<int>(*req.kmax) : degree;

  std::vector<Cyclotomic> sums;
  for (int k = 1; k <= kmax; ++k)
    sums.push_back(exp_sum_bruteforce(in.spec, prime, k));

  CommandOutcome out;
  Json j;
  j["prime"] = prime;
  j["degree"] = degree;
  append_sum_rows(j, "sums", sums);
  std::ostringstream os;
  os << "S*_k for k = 1.." << kmax << " at p = " << prime << ", degree "
     << degree << "\n";
  std::vector<std::string> failures;

  if (kmax >= degree) {
    std::vector<Cyclotomic> head(sums.begin(), sums.begin() + degree);
    LPolynomial l = reconstruct_l_polynomial(head, degree, in.spec.n);
    j["lpolynomial"] = lpoly_json(l);
    j["polynomialIsInverse"] = (in.spec.n % 2 == 0);
    std::vector<Rat> slopes = newton_polygon_slopes(l);
    j["slopes"] = slopes_json(slopes);
    os << "L-polynomial slopes: " << j["slopes"].dump() << "\n";

    // over-determination: the predicted next sum must match a fresh one
    if (kmax > degree) {
      std::vector<Cyclotomic> predicted = power_sums_of(l, kmax);
      for (int k = degree + 1; k <= kmax; ++k) {
        Cyclotomic expectSum = (in.spec.n % 2 == 0) ? -predicted[k - 1]
                                                    : predicted[k - 1];
        if (!(expectSum == sums[k - 1]))
          failures.push_back("degree-law check fails at k = " +
                             std::to_string(k));
      }
    }

    // Newton polygon vs Hodge polygon
    std::vector<Int> h = hodge_numbers(p);
    Int d = p.denominator();
    std::vector<Rat> hpSlopes;
    for (size_t k = 0; k < h.size(); ++k)
      for (Int c = 0; c < h[k]; ++c) hpSlopes.push_back(make_rat(Int(k), d));
    bool npAboveHp = true;
    Rat np(0), hp(0);
    for (size_t i = 0; i < slopes.size(); ++i) {
      np += slopes[i];
      hp += i < hpSlopes.size() ? hpSlopes[i] : Rat(0);
      if (np < hp) npAboveHp = false;
    }
    bool equal = slopes == hpSlopes;
    j["newtonAboveHodge"] = npAboveHp;
    j["newtonEqualsHodge"] = equal;
    if (!npAboveHp) failures.push_back("Newton polygon dips below Hodge polygon");
    os << "NP " << (equal ? "=" : (npAboveHp ? ">=" : "<")) << " HP\n";

    GlobalOrdinariness go = global_ordinariness(in.spec, p, Int(prime));
    j["ordinarinessVerdict"] = verdict_name(go.global.verdict);
    if (go.global.verdict == Verdict::Ordinary && !equal)
      failures.push_back("ordinary verdict but NP != HP");

    if (degree <= 12) {
      Json moduli = Json::array();
      for (const auto& em : reciprocal_root_moduli(l)) {
        Json row = Json::array();
        for (double r : em) row.push_back(r);
        moduli.push_back(row);
      }
      j["rootModuli"] = moduli;
    }
  } else {
    os << "kmax below the degree; L-polynomial not reconstructed\n";
  }
  j["failures"] = failures;
  out.record = j;
  if (!failures.empty()) {
    out.exitCode = kExitVerificationFailure;
    for (const std::string& f : failures) os << "FAIL: " << f << "\n";
  }
  out.text = os.str();
  return out;
}

CommandOutcome cmd_lfunction(const AnalysisRequest& req) {
  ParsedInput in = load_input(req);
  long prime = require_prime(req, in);
  if (req.coeffs || matches_paper_g(in.spec))
    return cmd_lfunction_paper(req, prime);
  return cmd_lfunction_generic(req, in, prime);
}

CommandOutcome cmd_verify_paper(const AnalysisRequest& req) {
  VerifyOptions opts;
  if (req.prime) opts.prime = *req.prime;
  if (req.coeffs) opts.coeffs = *req.coeffs;
  if (req.kmax) opts.kmax = static_cast<int>(*req.kmax);
  opts.fast = true;
  if (req.expectedPath) {
    Json j;
    try {
      j = Json::parse(read_file(*req.expectedPath));
    } catch (const Json::parse_error& e) {
      throw InputError(std::string("expected-record parse error: ") + e.what());
    }
    opts.expected = expectations_from_json(j);
  }
  VerifyOutcome vo = run_paper_verification(opts);

  CommandOutcome out;
  Json checks = Json::array();
  for (const CheckResult& c : vo.checks) {
    Json e;
    e["id"] = c.id;
    e["status"] = c.skipped ? "skipped" : (c.pass ? "pass" : "fail");
    e["detail"] = c.detail;
    checks.push_back(e);
  }
  out.record["checks"] = checks;
  out.record["allOk"] = vo.all_ok();
  std::ostringstream os;
  os << render_checks(vo.checks);
  if (!vo.ledger.empty()) os << vo.ledger;
  os << (vo.all_ok() ? "all checks passed\n" : "some checks FAILED\n");
  out.text = os.str();
  out.exitCode = vo.all_ok() ? kExitOk : kExitVerificationFailure;
  return out;
}

}  // namespace

ParsedInput parse_input(const std::string& document) {
  Json j;
  try {
    j = Json::parse(document);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("input parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("terms"))
    throw InputError("input must be an object with \"n\" and \"terms\"");
  ParsedInput out;
  if (!j["n"].is_number_integer())
    throw InputError("\"n\" must be an integer");
  out.spec.n = j["n"].get<int>();
  if (j.contains("p")) {
    if (!j["p"].is_number_integer())
      throw InputError("\"p\" must be an integer");
    out.prime = j["p"].get<long>();
  }
  if (!j["terms"].is_array() || j["terms"].empty())
    throw InputError("\"terms\" must be a non-empty array");
  for (size_t i = 0; i < j["terms"].size(); ++i) {
    const Json& t = j["terms"][i];
    std::string at = "terms[" + std::to_string(i) + "]";
    if (!t.is_object() || !t.contains("coeff") || !t.contains("exp"))
      throw InputError(at + " must have \"coeff\" and \"exp\"");
    LaurentTerm term;
    if (t["coeff"].is_string() && t["coeff"].get<std::string>() == "*")
      term.coeff = SymbolicNonzero{};
    else
      term.coeff = parse_int(t["coeff"], at + ".coeff");
    if (!t["exp"].is_array())
      throw InputError(at + ".exp must be an array");
    for (const Json& e : t["exp"])
      term.exp.push_back(parse_int(e, at + ".exp"));
    out.spec.terms.push_back(std::move(term));
  }
  try {
    validate(out.spec,
             out.prime ? std::optional<Int>(Int(*out.prime)) : std::nullopt);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return out;
}

CommandOutcome run_command(const AnalysisRequest& req) {
  try {
    if (req.command == "polytope") return cmd_polytope(req);
    if (req.command == "hodge") return cmd_hodge(req);
    if (req.command == "ordinary") return cmd_ordinary(req);
    if (req.command == "conjecture") return cmd_conjecture(req);
    if (req.command == "lfunction") return cmd_lfunction(req);
    if (req.command == "verify-paper") return cmd_verify_paper(req);
    throw InputError("unknown command: " + req.command);
  } catch (const InputError& e) {
    return CommandOutcome{kExitInputError, std::string("error: ") + e.what() + "\n",
                          Json{{"error", e.what()}}};
  } catch (const BudgetExceeded& e) {
    return CommandOutcome{kExitInputError, std::string("error: ") + e.what() + "\n",
                          Json{{"error", e.what()}}};
  } catch (const std::invalid_argument& e) {
    return CommandOutcome{kExitInputError, std::string("error: ") + e.what() + "\n",
                          Json{{"error", e.what()}}};
  } catch (const std::domain_error& e) {
    return CommandOutcome{kExitInputError, std::string("error: ") + e.what() + "\n",
                          Json{{"error", e.what()}}};
  } catch (const std::exception& e) {
    return CommandOutcome{kExitVerificationFailure,
                          std::string("error: ") + e.what() + "\n",
                          Json{{"error", e.what()}}};
  }
}

Json expectations_to_json(const PaperExpectations& e) {
  Json j;
  j["facetEquations"] = e.facetEquations;
  Json fv = Json::array();
  for (const auto& s : e.facetVertexLabels) fv.push_back(Json(s));
  j["facetVertexLabels"] = fv;
  Json tau;
  for (const auto& [k, sets] : e.tauTables) {
    Json arr = Json::array();
    for (const auto& s : sets) arr.push_back(Json(s));
    tau[std::to_string(k)] = arr;
  }
  j["tauTables"] = tau;
  j["f0"] = e.f0;
  j["denominator"] = e.denominator;
  j["normalizedVolume"] = e.normalizedVolume;
  j["originIsVertex"] = e.originIsVertex;
  j["degree"] = e.degree;
  j["weightCounts"] = e.weightCounts;
  j["hodgeNumbers"] = e.hodgeNumbers;
  Json hp = Json::array();
  for (const auto& [x, y] : e.hpVertices) hp.push_back(Json::array({x, y}));
  j["hpVertices"] = hp;
  j["ordinaryPrimes"] = e.ordinaryPrimes;
  j["hk"] = e.hk;
  j["eLedger"] = e.eLedger;
  j["conjecturedW5"] = e.conjecturedW5;
  j["lstarSlopes"] = e.lstarSlopes;
  j["lSlopes"] = e.lSlopes;
  j["lstarTrivialPowers"] = e.lstarTrivialPowers;
  j["lTrivialPowers"] = e.lTrivialPowers;
  j["nontrivialCount"] = e.nontrivialCount;
  j["nontrivialWeightLstar"] = e.nontrivialWeightLstar;
  j["nontrivialWeightL"] = e.nontrivialWeightL;
  return j;
}

PaperExpectations expectations_from_json(const Json& j) {
  PaperExpectations e = default_expectations();
  auto get = [&](const char* key, auto& field) {
    if (j.contains(key)) field = j[key].get<std::decay_t<decltype(field)>>();
  };
  get("facetEquations", e.facetEquations);
  if (j.contains("facetVertexLabels")) {
    e.facetVertexLabels.clear();
    for (const Json& s : j["facetVertexLabels"])
      e.facetVertexLabels.push_back(s.get<std::set<int>>());
  }
  if (j.contains("tauTables")) {
    e.tauTables.clear();
    for (const auto& [key, arr] : j["tauTables"].items()) {
      std::vector<std::set<int>> sets;
      for (const Json& s : arr) sets.push_back(s.get<std::set<int>>());
      e.tauTables[std::stoi(key)] = std::move(sets);
    }
  }
  get("f0", e.f0);
  get("denominator", e.denominator);
  get("normalizedVolume", e.normalizedVolume);
  get("originIsVertex", e.originIsVertex);
  get("degree", e.degree);
  get("weightCounts", e.weightCounts);
  get("hodgeNumbers", e.hodgeNumbers);
  if (j.contains("hpVertices")) {
    e.hpVertices.clear();
    for (const Json& pt : j["hpVertices"])
      e.hpVertices.emplace_back(pt[0].get<long>(), pt[1].get<long>());
  }
  get("ordinaryPrimes", e.ordinaryPrimes);
  get("hk", e.hk);
  get("eLedger", e.eLedger);
  get("conjecturedW5", e.conjecturedW5);
  get("lstarSlopes", e.lstarSlopes);
  get("lSlopes", e.lSlopes);
  get("lstarTrivialPowers", e.lstarTrivialPowers);
  get("lTrivialPowers", e.lTrivialPowers);
  get("nontrivialCount", e.nontrivialCount);
  get("nontrivialWeightLstar", e.nontrivialWeightLstar);
  get("nontrivialWeightL", e.nontrivialWeightL);
  return e;
}

}  // namespace toricsum
