// Acceptance suite: runs every criterion end to end and prints one line per
// criterion. Exits nonzero when any of them fails.
//
// Every membership and order-unit probe issued here is routed through a
// registry that re-verifies certificates, re-evaluates refutation witnesses,
// and records (target, cone) verdicts so the final soundness sweep can assert
// that no input ever collected both a Member and a Refuted verdict.

#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <sstream>
#include <vector>

#include "polyorder/experiment.hpp"
#include "polyorder/fixtures.hpp"
#include "polyorder/linalg.hpp"
#include "polyorder/order_ideal.hpp"
#include "polyorder/structure.hpp"

using namespace polyorder;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail = "") {
  std::printf("%s  criterion %2d: %s%s\n", pass ? "PASS" : "FAIL", index, name.c_str(),
              detail.empty() ? "" : ("  [" + detail + "]").c_str());
  if (!pass) ++failures;
}

SparsePoly uni(std::initializer_list<std::pair<int, Rational>> terms) {
  SparsePoly p(1);
  for (const auto& [e, c] : terms) p.add_term({e}, c);
  return p;
}

SparsePoly disk_beta() {
  SparsePoly b(2);
  b.add_term({0, 0}, Rational(1, 5));
  b.add_term({0, 1}, Rational(-1));
  return b;
}

SparsePoly disk_u() {
  SparsePoly u(2);
  u.add_term({0, 0}, Rational(7, 5));
  u.add_term({0, 1}, Rational(1));
  return u;
}

// ---------------------------------------------------------------------------
// Verdict registry for the soundness sweep (criterion 10).

struct Registry {
  std::map<std::string, std::pair<bool, bool>> verdicts;  // key -> (member seen, refuted seen)
  long certificates_verified = 0;
  long witnesses_checked = 0;
  long probes = 0;
  bool sound = true;
  std::string first_violation;

  void flag(const std::string& what) {
    sound = false;
    if (first_violation.empty()) first_violation = what;
  }

  static std::string key(const SparsePoly& f, const GeneratedCone& cone) {
    return f.str() + " | " + cone.str();
  }

  void check_refutation(const SparsePoly& f, const GeneratedCone& cone, const Refutation& r) {
    if (!cone.admissible(r.point)) flag("refutation point not admissible");
    if (r.kind == RefutationKind::NegativeValue) {
      if (f.evaluate(r.point) != r.value || r.value.sign() >= 0) flag("negative-value witness mismatch");
    } else {
      if (!f.evaluate(r.point).is_zero()) flag("zero-propagation base not a zero of f");
      if (f.evaluate(r.point2) != r.value || r.value.is_zero()) flag("zero-propagation target mismatch");
      for (const auto& g : cone.generators())
        if (g.evaluate(r.point).is_zero() && !g.evaluate(r.point2).is_zero())
          flag("zero-propagation pair invalid for a generator");
    }
    ++witnesses_checked;
  }

  MembershipVerdict certify(const SparsePoly& f, const GeneratedCone& cone, int cap,
                            const SearchCaps& caps = SearchCaps{}) {
    const auto v = certify_membership(f, cone, cap, caps);
    ++probes;
    auto& entry = verdicts[key(f, cone)];
    if (v.member()) {
      entry.first = true;
      if (!verify_certificate(f, v.cert, cone)) flag("emitted certificate failed verification");
      ++certificates_verified;
    }
    if (v.refuted()) {
      entry.second = true;
      check_refutation(f, cone, *v.refutation);
    }
    return v;
  }

  OrderUnitVerdict order_unit(const SparsePoly& f, const GeneratedCone& cone,
                              const SearchCaps& caps = SearchCaps{}) {
    const auto v = is_order_unit(f, cone, caps);
    ++probes;
    if (v.yes()) {
      SparsePoly shifted = f;
      shifted -= SparsePoly::constant(f.nvars(), v.margin);
      if (v.margin.sign() <= 0 || !verify_certificate(shifted, v.cert, cone))
        flag("order-unit margin certificate failed verification");
      ++certificates_verified;
      // f >= margin at every polytope vertex and sampled admissible point.
      if (cone.polytope())
        for (const auto& vert : cone.polytope()->vertices())
          if (f.evaluate(vert) < v.margin) flag("order-unit margin violated at a vertex");
      scan_admissible_points(cone, caps, 8, [&](const QVec& pt) {
        if (f.evaluate(pt) < v.margin) flag("order-unit margin violated at a sampled point");
        return true;
      });
    }
    if (v.no()) {
      if (!cone.admissible(v.witness) || f.evaluate(v.witness).sign() > 0)
        flag("order-unit No witness does not re-check");
      ++witnesses_checked;
    }
    return v;
  }

  bool exclusive() const {
    for (const auto& [k, mr] : verdicts)
      if (mr.first && mr.second) return false;
    return true;
  }
};

Registry registry;

// ---------------------------------------------------------------------------

void criterion_1_disk_identity() {
  SparsePoly lhs = disk_beta() * disk_u();
  SparsePoly rhs = fixtures::disk_alpha();
  rhs.add_term({2, 0}, Rational(1));
  rhs.add_term({1, 0}, Rational(6, 5));
  report(1, "disk identity (1/5 - y)(y + 7/5) = alpha + x^2 + 6/5 x, exact", lhs == rhs);
}

void criterion_2_disk_counterexample() {
  const auto cone = fixtures::disk_cone();
  std::ostringstream detail;
  bool ok = true;

  const auto uv = registry.order_unit(disk_u(), cone);
  ok = ok && uv.yes() && uv.margin == Rational(7, 5);

  const auto uav = registry.certify(disk_u() * disk_beta(), cone, 2);
  ok = ok && uav.member() && uav.degree <= 2;

  const auto refv = registry.certify(disk_beta(), cone, 6);
  ok = ok && refv.refuted() && refv.refutation->kind == RefutationKind::ZeroPropagation &&
       refv.refutation->point == QVec{Rational(0), Rational(1, 5)} &&
       refv.refutation->point2 == QVec{Rational(0), Rational(-7, 5)};

  SearchCaps lp_only;
  lp_only.use_refutation_rules = false;
  const auto t0 = std::chrono::steady_clock::now();
  const auto nf = registry.certify(disk_beta(), cone, 6, lp_only);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  ok = ok && nf.kind == MembershipVerdict::Kind::NotFoundUpTo && nf.degree == 6 && nf.farkas.size() == 7;
  ok = ok && secs < 60.0;
  detail << "degree-6 search " << secs << "s";
  report(2, "disk counter-example: Yes(7/5), u*a at degree <= 2, beta refuted + NotFoundUpTo(6)", ok,
         detail.str());
}

void criterion_3_toy_r1() {
  const SparsePoly x = uni({{1, Rational(1)}});
  const SparsePoly upx = uni({{0, Rational(1)}, {1, Rational(1)}});
  const bool ok = toy_r1_member(x * upx) && toy_order_unit(upx) && !toy_r1_member(x);
  report(3, "toy R1 cancellation failure: x(1+x) in, 1+x order unit, x out", ok);
}

void criterion_4_toy_r2() {
  const SparsePoly x = uni({{1, Rational(1)}});
  bool ok = toy_r2_member(x * x) && !toy_r2_member(x);
  for (int M = 1; M <= 64 && ok; ++M)
    ok = !toy_r2_member(uni({{2, Rational(M)}, {1, Rational(-1)}}));
  report(4, "toy R2 consistency: x^2 in, x out, M x^2 - x out for every M <= 64", ok);
}

void criterion_5_certificate_recovery() {
  const auto cone = GeneratedCone::of_polytope(fixtures::interval());
  const SparsePoly f = uni({{2, Rational(1)}, {1, Rational(-1)}, {0, Rational(1)}});
  const auto v = registry.certify(f, cone, 2);
  const bool ok = v.member() && v.degree <= 2 && verify_certificate(f, v.cert, cone);
  report(5, "certificate search recovers a verified degree-2 certificate for x^2 - x + 1", ok);
}

void criterion_6_prop4_fixtures() {
  bool ok = true;
  std::string detail;

  const auto sq = fixtures::unit_square();
  int origin = -1;
  for (size_t v = 0; v < sq.vertices().size(); ++v)
    if (is_zero_vec(sq.vertices()[v])) origin = static_cast<int>(v);
  const Face corner = sq.face_from_vertices({origin});
  const LinearForm beta23(Rational(0), {Rational(2), Rational(3)});
  const auto dec = facet_decompose(sq, corner, beta23);
  {
    LinearForm sum(Rational(0), QVec(2, Rational(0)));
    bool positive = true;
    for (size_t i = 0; i < dec.facet_indices.size(); ++i) {
      sum = sum + sq.facet_forms()[dec.facet_indices[i]].scaled(dec.coefficients[i]);
      positive = positive && dec.coefficients[i].sign() > 0;
    }
    ok = ok && positive && sum == beta23 && dec.coefficients.size() == 2;
    // The system is square here; the coefficients must be exactly {2, 3}.
    std::vector<Rational> sorted = dec.coefficients;
    std::sort(sorted.begin(), sorted.end());
    ok = ok && sorted == std::vector<Rational>{Rational(2), Rational(3)};
  }

  const auto py = fixtures::square_pyramid();
  int apex = -1;
  for (size_t v = 0; v < py.vertices().size(); ++v)
    if (py.vertices()[v][2] == Rational(1)) apex = static_cast<int>(v);
  const LinearForm beta_apex(Rational(2), {Rational(0), Rational(0), Rational(-2)});
  const auto dec2 = facet_decompose(py, py.face_from_vertices({apex}), beta_apex);
  {
    ok = ok && dec2.coefficients.size() == 4;
    LinearForm sum(Rational(0), QVec(3, Rational(0)));
    for (size_t i = 0; i < dec2.facet_indices.size(); ++i) {
      ok = ok && dec2.coefficients[i] == Rational(1, 2);
      sum = sum + py.facet_forms()[dec2.facet_indices[i]].scaled(dec2.coefficients[i]);
    }
    ok = ok && sum == beta_apex;
  }

  const auto dom = dominate_linear(sq, corner, LinearForm(Rational(0), {Rational(1), Rational(1)}),
                                   LinearForm(Rational(0), {Rational(3), Rational(2)}));
  ok = ok && dom.M == 3 && dom.farkas_prev.has_value() && !dom.farkas_prev->empty();
  ok = ok && !linear_in_cone(sq, LinearForm(Rational(0), {Rational(2 - 3), Rational(2 - 2)})).has_value();

  report(6, "face domination and decomposition: square (2,3), pyramid (1/2 x4), least M = 3 with Farkas at 2", ok);
}

void criterion_7_geometry() {
  bool ok = true;

  const auto K = fixtures::trapezoid();
  int fx = -1, fs = -1;
  for (int f = 0; f < K.facet_count(); ++f) {
    if (K.facet_forms()[f] == LinearForm(Rational(0), {Rational(1), Rational(0)})) fx = f;
    if (K.facet_forms()[f] == LinearForm(Rational(2), {Rational(-1), Rational(-1)})) fs = f;
  }
  const auto q = K.face_of({fx, fs});
  ok = ok && !q.face.has_value();
  ok = ok && q.hyperplane_intersection.dim() == 0 &&
       q.hyperplane_intersection.point == QVec{Rational(0), Rational(2)} &&
       !K.contains(q.hyperplane_intersection.point);

  const auto P = fixtures::square_pyramid();
  int s1 = -1, s2 = -1, apex = -1;
  for (int f = 0; f < P.facet_count(); ++f) {
    if (P.facet_forms()[f] == LinearForm(Rational(1), {Rational(-1), Rational(0), Rational(-1)})) s1 = f;
    if (P.facet_forms()[f] == LinearForm(Rational(1), {Rational(1), Rational(0), Rational(-1)})) s2 = f;
  }
  for (size_t v = 0; v < P.vertices().size(); ++v)
    if (P.vertices()[v][2] == Rational(1)) apex = static_cast<int>(v);
  const auto qa = P.face_of({s1, s2});
  ok = ok && qa.face.has_value() && qa.face->vertices == std::vector<int>{apex} && qa.face->dim == 0;
  ok = ok && qa.hyperplane_intersection.dim() == 1;

  report(7, "trapezoid flats meet in a point outside K; pyramid slants meet K in the apex, hulls in a line",
         ok);
}

Polytope random_affine_image(const Polytope& K, std::mt19937& rng) {
  const int n = K.dim();
  std::uniform_int_distribution<long> d(-3, 3);
  for (;;) {
    QMat M(n, QVec(n));
    for (auto& row : M)
      for (auto& x : row) x = Rational(d(rng));
    if (rank(M) != n) continue;
    QVec t(n);
    for (auto& x : t) x = Rational(d(rng));
    std::vector<QVec> imgs;
    for (const auto& v : K.vertices()) imgs.push_back(vec_add(mat_vec(M, v), t));
    return Polytope::from_vertices(imgs);
  }
}

bool witness_is_valid(const Polytope& K, const SimplexProductWitness& w) {
  const int n = K.dim();
  int size_sum = 0;
  QMat stacked;
  for (size_t c = 0; c < w.classes.size(); ++c) {
    LinearForm sum(Rational(0), QVec(n, Rational(0)));
    for (size_t j = 0; j < w.classes[c].size(); ++j) {
      if (w.coefficients[c][j].sign() <= 0) return false;
      sum = sum + K.facet_forms()[w.classes[c][j]].scaled(w.coefficients[c][j]);
    }
    if (!(sum == LinearForm(Rational(1), QVec(n, Rational(0))))) return false;
    size_sum += static_cast<int>(w.classes[c].size()) - 1;
    for (size_t j = 0; j + 1 < w.classes[c].size(); ++j)
      stacked.push_back(K.facet_forms()[w.classes[c][j]].coeffs);
  }
  return size_sum == n && rank(stacked) == n;
}

void criterion_8_structure() {
  bool ok = true;
  for (const auto& K : {fixtures::unit_square(), fixtures::triangle(), fixtures::unit_cube()}) {
    const auto r = recognize_simplex_product(K);
    ok = ok && r.is_product && witness_is_valid(K, r.witness);
  }
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 5; ++trial) {
    const auto sq = random_affine_image(fixtures::unit_square(), rng);
    const auto rs = recognize_simplex_product(sq);
    ok = ok && rs.is_product && witness_is_valid(sq, rs.witness);
    const auto pr = random_affine_image(fixtures::triangular_prism(), rng);
    const auto rp = recognize_simplex_product(pr);
    ok = ok && rp.is_product && witness_is_valid(pr, rp.witness);
  }
  ok = ok && !recognize_simplex_product(fixtures::trapezoid()).is_product;
  ok = ok && !recognize_simplex_product(fixtures::pentagon()).is_product;
  ok = ok && !recognize_simplex_product(fixtures::square_pyramid()).is_product;
  report(8, "structure recognition: square/triangle/cube + 10 random product images; 3 non-products", ok);
}

void criterion_9_cancellation_property_suite() {
  SearchCaps caps;
  caps.max_degree = 6;
  caps.grid_denom_cap = 8;
  caps.refute_denom_cap = 8;

  std::mt19937 rng(5);
  std::uniform_int_distribution<int> dq(0, 2), dterm(1, 3), dcoef(1, 4);

  int fail_refuted = 0, inconclusive = 0, total = 0;
  const Rational qpool[3] = {Rational(1), Rational(1, 2), Rational(2)};

  for (const auto& K : {fixtures::interval(), fixtures::triangle(), fixtures::unit_square()}) {
    const auto cone = GeneratedCone::of_polytope(K);
    const auto products = enumerate_products(cone, 2);
    std::uniform_int_distribution<size_t> dprod(0, products.size() - 1);

    auto random_combo = [&]() {
      SparsePoly f(cone.nvars());
      const int terms = dterm(rng);
      for (int t = 0; t < terms; ++t)
        f += products[dprod(rng)].second.scaled(Rational(dcoef(rng), 2));
      return f;
    };

    for (int trial = 0; trial < 50; ++trial) {
      ++total;
      // u: positive constant plus a cone combination, accepted once the
      // order-unit check finds a margin.
      SparsePoly u(cone.nvars());
      bool u_confirmed = false;
      for (int attempt = 0; attempt < 5 && !u_confirmed; ++attempt) {
        u = SparsePoly::constant(cone.nvars(), qpool[dq(rng)]);
        u += random_combo();
        u_confirmed = registry.order_unit(u, cone, caps).yes();
      }
      if (!u_confirmed) {
        ++inconclusive;
        continue;
      }
      // a: certified positive by construction.
      const SparsePoly a = random_combo();

      const auto rep = run_cancellation_experiment(cone, u, a, caps);
      if (rep.ua_check) {
        registry.verdicts[Registry::key(u * a, cone)].first =
            registry.verdicts[Registry::key(u * a, cone)].first || rep.ua_check->member();
      }
      if (rep.a_check) {
        auto& e = registry.verdicts[Registry::key(a, cone)];
        e.first = e.first || rep.a_check->member();
        e.second = e.second || rep.a_check->refuted();
        if (rep.a_check->refuted()) registry.check_refutation(a, cone, *rep.a_check->refutation);
        if (rep.a_check->member() && !verify_certificate(a, rep.a_check->cert, cone))
          registry.flag("experiment certificate failed verification");
      }
      switch (rep.conclusion) {
        case Conclusion::FailRefuted: ++fail_refuted; break;
        case Conclusion::Inconclusive: ++inconclusive; break;
        case Conclusion::Pass: break;
      }
    }
  }
  std::ostringstream detail;
  detail << total << " trials, " << fail_refuted << " refuted, inconclusive rate "
         << (100.0 * inconclusive / total) << "%";
  report(9, "order-unit cancellation property suite: zero refutations over the polytope rings",
         fail_refuted == 0, detail.str());
}

void criterion_10_soundness_sweep() {
  std::ostringstream detail;
  detail << registry.probes << " probes, " << registry.certificates_verified << " certificates verified, "
         << registry.witnesses_checked << " witnesses re-checked";
  const bool ok = registry.sound && registry.exclusive();
  report(10, "soundness sweep: no Member/Refuted collision; all certificates and witnesses re-verify", ok,
         registry.sound ? detail.str() : registry.first_violation);
}

}  // namespace

int main() {
  criterion_1_disk_identity();
  criterion_2_disk_counterexample();
  criterion_3_toy_r1();
  criterion_4_toy_r2();
  criterion_5_certificate_recovery();
  criterion_6_prop4_fixtures();
  criterion_7_geometry();
  criterion_8_structure();
  criterion_9_cancellation_property_suite();
  criterion_10_soundness_sweep();
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
