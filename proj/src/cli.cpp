#include "knotcert/cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "knotcert/acceptance.hpp"
#include "knotcert/constructions.hpp"
#include "knotcert/errors.hpp"
#include "knotcert/fox.hpp"
#include "knotcert/report.hpp"
#include "knotcert/textio.hpp"
#include "knotcert/torus.hpp"

namespace knotcert {

namespace {

const char* yes_no(bool b) { return b ? "true" : "false"; }

int cmd_present(int p, const std::string& form, std::ostream& out) {
  if (form == "wirtinger") {
    out << print_presentation(torus_wirtinger(p));
  } else if (form == "standard") {
    out << print_presentation(standard_presentation(TorusKnotParams::make(p, p + 1)));
  } else if (form == "gamma") {
    out << print_presentation(gamma_presentation(p));
  } else if (form == "gamma-tab") {
    out << print_presentation(gamma_tab_presentation(p));
  } else {
    const DoubledKnot d = double_presentation(p);
    out << "# connected-sum word: " << print_word(d.connected_sum_word) << "\n";
    out << print_presentation(d.presentation);
  }
  return kExitOk;
}

int cmd_alexander(const std::string& path, std::ostream& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const Presentation pres = parse_presentation(buf.str());
  out << coefficient_line(canonicalize(alexander_polynomial(pres))) << "\n";
  return kExitOk;
}

int cmd_gamma(int p, bool as_json, std::ostream& out) {
  const GammaArtifacts g = gamma_artifacts(p);
  const bool ok = g.module_matches_fox && g.fox_e1_gcd_matches &&
                  g.alexander_polynomial == g.p_poly && g.abelianization.is_infinite_cyclic() &&
                  (p < 2 || g.root_of_unity_in_both);
  if (as_json) {
    json j = gamma_artifacts_to_json(g);
    j["status"] = ok ? "verified" : "refuted";
    out << j.dump(2) << "\n";
    return ok ? kExitOk : kExitRefuted;
  }
  out << "p: " << p << "\n";
  out << "presentation:\n" << print_presentation(g.presentation);
  out << "tab_presentation:\n" << print_presentation(g.tab_presentation);
  out << "p_poly: " << g.p_poly.to_string() << "\n";
  out << "module_presentation: <a, b | P a, P b, (1-t) a - (1-t) b>\n";
  out << "order_ideal:";
  for (const auto& f : g.order_ideal.gens) out << " (" << f.to_string() << ")";
  out << "\n";
  out << "fox_e1:";
  for (const auto& f : g.fox_e1.gens) out << " (" << f.to_string() << ")";
  out << "\n";
  out << "alexander_polynomial: " << g.alexander_polynomial.to_string() << "\n";
  out << "abelianization_infinite_cyclic: " << yes_no(g.abelianization.is_infinite_cyclic()) << "\n";
  out << "module_matches_fox: " << yes_no(g.module_matches_fox) << "\n";
  out << "fox_e1_gcd_matches: " << yes_no(g.fox_e1_gcd_matches) << "\n";
  if (p >= 2) out << "root_of_unity_in_both: " << yes_no(g.root_of_unity_in_both) << "\n";
  out << "framing_defect: " << g.framing_defect << "\n";
  out << "status: " << (ok ? "verified" : "refuted") << "\n";
  return ok ? kExitOk : kExitRefuted;
}

void print_certificate_text(const DistinctnessCertificate& c, std::ostream& out) {
  out << "p: " << c.p << "\n"
      << "k: " << c.k << "\n"
      << "mode: " << to_string(c.mode) << "\n"
      << "phi_index: " << c.phi_index << "\n"
      << "phi: " << c.phi.to_string() << "\n"
      << "p_poly_p: " << c.p_poly_p.to_string() << "\n"
      << "p_poly_k: " << c.p_poly_k.to_string() << "\n"
      << "divides_in_k: " << yes_no(c.divides_in_k) << "\n"
      << "divides_in_p: " << yes_no(c.divides_in_p) << "\n"
      << "valid: " << yes_no(c.valid()) << "\n";
}

int cmd_distinct(int p, int k, bool as_json, std::ostream& out) {
  const DistinctnessCertificate c = distinctness_certificate(p, k);
  if (as_json)
    out << emit_certificate_json(c);
  else
    print_certificate_text(c, out);
  return c.valid() ? kExitOk : kExitRefuted;
}

int cmd_distinct_range(int lo, int hi, unsigned jobs, bool as_json, std::ostream& out) {
  if (lo < 1 || hi <= lo)
    throw BadPair("need 1 <= min < max, got min = " + std::to_string(lo) +
                  ", max = " + std::to_string(hi));
  std::vector<std::pair<int, int>> pairs;
  for (int p = lo; p <= hi; ++p)
    for (int k = p + 1; k <= hi; ++k) pairs.emplace_back(p, k);

  // Fan out in batches; results land in pair order regardless of scheduling.
  std::vector<DistinctnessCertificate> certs(pairs.size());
  if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
  for (std::size_t base = 0; base < pairs.size(); base += jobs) {
    std::vector<std::future<DistinctnessCertificate>> batch;
    for (std::size_t i = base; i < std::min(pairs.size(), base + jobs); ++i)
      batch.push_back(std::async(std::launch::async, distinctness_certificate, pairs[i].first,
                                 pairs[i].second));
    for (std::size_t i = 0; i < batch.size(); ++i) certs[base + i] = batch[i].get();
  }

  const auto valid = static_cast<std::size_t>(
      std::count_if(certs.begin(), certs.end(), [](const auto& c) { return c.valid(); }));
  if (as_json) {
    json arr = json::array();
    for (const auto& c : certs) arr.push_back(certificate_to_json(c));
    out << json{{"certificates", std::move(arr)},
                {"summary", {{"pairs", certs.size()}, {"valid", valid}}}}
               .dump(2)
        << "\n";
  } else {
    for (const auto& c : certs)
      out << "p=" << c.p << " k=" << c.k << " mode=" << to_string(c.mode)
          << " phi_index=" << c.phi_index << " divides_in_k=" << yes_no(c.divides_in_k)
          << " divides_in_p=" << yes_no(c.divides_in_p) << " valid=" << yes_no(c.valid()) << "\n";
    out << "summary: " << certs.size() << " pairs, " << valid << " valid\n";
  }
  return valid == certs.size() ? kExitOk : kExitRefuted;
}

int cmd_verify_tau(int p, bool as_json, std::ostream& out) {
  const Word tau = tau_word(p);
  bool sums_zero = true;
  for (const auto& g : torus_wirtinger(p).generators()) sums_zero = sums_zero && tau.exponent_sum(g) == 0;

  const TorusMap dict = wirtinger_to_standard(p);
  const HomomorphismReport hom = verify(dict);
  const Word image = substitute(tau, dict.images);
  const TorusNF nf = normal_form(dict.target, image, dict.convention);
  const bool in_commutator = is_in_commutator_subgroup(dict.target, image, dict.convention);
  const auto convention = wirtinger_standard_generator_convention(p);

  const Presentation quotient = add_relator(torus_wirtinger(p), tau);
  const bool quotient_z = abelianization(quotient).is_infinite_cyclic();
  const LaurentPoly delta = quotient_z ? alexander_polynomial(quotient) : LaurentPoly{};

  const bool ok = sums_zero && hom.surjective() && !nf.is_trivial() && in_commutator &&
                  quotient_z && delta == LaurentPoly::constant(1);
  if (as_json) {
    json images = json::object();
    for (const auto& [g, w] : dict.images) images[g] = print_word(w);
    out << json{{"p", p},
                {"tau", print_word(tau)},
                {"exponent_sums_zero", sums_zero},
                {"dictionary", images},
                {"dictionary_report", homomorphism_to_json(hom)},
                {"standard_generator_convention", convention ? to_string(*convention) : "none"},
                {"tau_image", print_word(image)},
                {"tau_image_normal_form", normal_form_to_json(nf)},
                {"tau_image_in_commutator_subgroup", in_commutator},
                {"quotient_abelianization_infinite_cyclic", quotient_z},
                {"quotient_alexander_polynomial", poly_to_json(delta)},
                {"status", ok ? "verified" : "refuted"}}
               .dump(2)
        << "\n";
    return ok ? kExitOk : kExitRefuted;
  }
  out << "p: " << p << "\n"
      << "tau: " << print_word(tau) << "\n"
      << "exponent_sums_zero: " << yes_no(sums_zero) << "\n"
      << "dictionary:";
  for (const auto& [g, w] : dict.images) out << " " << g << "->(" << print_word(w) << ")";
  out << "\n"
      << "dictionary_surjective_homomorphism: " << yes_no(hom.surjective()) << "\n"
      << "standard_generator_convention: " << (convention ? to_string(*convention) : "none") << "\n"
      << "tau_image: " << print_word(image) << "\n"
      << "tau_image_normal_form: " << nf.to_string() << "\n"
      << "tau_image_nontrivial: " << yes_no(!nf.is_trivial()) << "\n"
      << "tau_image_in_commutator_subgroup: " << yes_no(in_commutator) << "\n"
      << "quotient_abelianization_infinite_cyclic: " << yes_no(quotient_z) << "\n"
      << "quotient_alexander_polynomial: " << delta.to_string() << "\n"
      << "status: " << (ok ? "verified" : "refuted") << "\n";
  return ok ? kExitOk : kExitRefuted;
}

int cmd_fold(int p, bool as_json, std::ostream& out) {
  const HomomorphismReport r = verify(fold_map(p));
  if (as_json) {
    json j = homomorphism_to_json(r);
    j["p"] = p;
    j["status"] = r.surjective() ? "verified" : "refuted";
    out << j.dump(2) << "\n";
  } else {
    out << "p: " << p << "\n"
        << "target: <x, y | " << to_string(r.convention) << ">, q = " << r.target.q << "\n";
    for (const auto& v : r.relators)
      out << "relator: " << v.relator.to_string() << " -> " << v.image.to_string()
          << " -> " << v.normal_form.to_string() << (v.trivial ? " (trivial)" : " (NONTRIVIAL)")
          << "\n";
    out << "homomorphism: " << yes_no(r.homomorphism) << "\n"
        << "surjective: " << yes_no(r.surjective()) << "\n"
        << "status: " << (r.surjective() ? "verified" : "refuted") << "\n";
  }
  return r.surjective() ? kExitOk : kExitRefuted;
}

int cmd_wp(int p, int q, const std::string& word, const std::string& conv, bool as_json,
           std::ostream& out) {
  const TorusKnotParams tk{p, q};
  const TorusConvention c =
      conv == "product" ? TorusConvention::ProductTrivial : TorusConvention::PowerEquality;
  const TorusNF nf = normal_form(tk, parse_word(word), c);
  if (as_json) {
    out << normal_form_to_json(nf).dump(2) << "\n";
  } else {
    out << "normal_form: " << nf.to_string() << "\n"
        << "central_exponent: " << nf.central_exponent << "\n"
        << "trivial: " << yes_no(nf.is_trivial()) << "\n";
  }
  return kExitOk;
}

int cmd_selftest(std::uint64_t seed, std::ostream& out) {
  const auto results = run_acceptance(seed);
  std::size_t passed = 0;
  for (const auto& r : results) {
    out << format_result(r) << "\n";
    passed += r.passed;
  }
  out << "acceptance: " << passed << "/" << results.size() << " passed\n";
  return passed == results.size() ? kExitOk : kExitRefuted;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact group-theoretic certificates for knotted Lagrangian tori", "knotcert"};
  app.require_subcommand(1, 1);

  int p = 0, k = 0, q = 0, lo = 1, hi = 12;
  unsigned jobs = 0;
  bool as_json = false;
  std::string form = "gamma", file, word, conv = "power";
  std::uint64_t seed = kDefaultAcceptanceSeed;

  auto* present = app.add_subcommand("present", "Print a presentation file");
  present->add_option("--p", p, "Torus knot parameter p")->required();
  present->add_option("--form", form, "Which presentation")
      ->check(CLI::IsMember({"wirtinger", "standard", "gamma", "gamma-tab", "double"}));

  auto* alexander = app.add_subcommand("alexander", "Canonical Alexander polynomial of a file");
  alexander->add_option("--file", file, "Presentation file")->required();

  auto* gamma = app.add_subcommand("gamma", "All artifacts for Gamma_p");
  gamma->add_option("--p", p)->required();
  gamma->add_flag("--json", as_json);

  auto* distinct = app.add_subcommand("distinct", "Certificate that Gamma_p and Gamma_k differ");
  distinct->add_option("--p", p)->required();
  distinct->add_option("--k", k)->required();
  distinct->add_flag("--json", as_json);

  auto* range = app.add_subcommand("distinct-range", "Certificates for all pairs in a range");
  range->add_option("--min", lo, "Smallest p")->capture_default_str();
  range->add_option("--max", hi, "Largest k")->capture_default_str();
  range->add_option("--jobs", jobs, "Worker threads (0 = hardware concurrency)");
  range->add_flag("--json", as_json);

  auto* tau = app.add_subcommand("verify-tau", "Consequences of killing tau = [a1, y]");
  tau->add_option("--p", p)->required();
  tau->add_flag("--json", as_json);

  auto* fold = app.add_subcommand("fold", "Fold surjection Gamma_p -> knot group");
  fold->add_option("--p", p)->required();
  fold->add_flag("--json", as_json);

  auto* wp = app.add_subcommand("wp", "Normal form in <x, y | x^p = y^q>");
  wp->add_option("--p", p)->required();
  wp->add_option("--q", q)->required();
  wp->add_option("--word", word, "Word, e.g. \"x^2 y^-3\"")->required();
  wp->add_option("--convention", conv, "power: x^p = y^q; product: x^p y^q = 1")
      ->check(CLI::IsMember({"power", "product"}))
      ->capture_default_str();
  wp->add_flag("--json", as_json);

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  selftest->add_option("--seed", seed, "Seed for the randomized property suites");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }

  try {
    if (present->parsed()) return cmd_present(p, form, out);
    if (alexander->parsed()) return cmd_alexander(file, out);
    if (gamma->parsed()) return cmd_gamma(p, as_json, out);
    if (distinct->parsed()) return cmd_distinct(p, k, as_json, out);
    if (range->parsed()) return cmd_distinct_range(lo, hi, jobs, as_json, out);
    if (tau->parsed()) return cmd_verify_tau(p, as_json, out);
    if (fold->parsed()) return cmd_fold(p, as_json, out);
    if (wp->parsed()) return cmd_wp(p, q, word, conv, as_json, out);
    if (selftest->parsed()) return cmd_selftest(seed, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const MathError& e) {
    err << "refuted: " << e.what() << "\n";
    return kExitRefuted;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace knotcert
