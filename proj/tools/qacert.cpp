#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qacert/covers/kanenobu.hpp"
#include "qacert/error.hpp"
#include "qacert/foxcalc/alexander.hpp"
#include "qacert/lattice/characteristic.hpp"
#include "qacert/pipeline/report_json.hpp"
#include "qacert/skein/builders.hpp"
#include "qacert/skein/mullins.hpp"
#include "qacert/skein/pd_io.hpp"
#include "qacert/skein/wirtinger.hpp"

using namespace qacert;
using nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kCheck = 2 };

std::string format = "text";

void emit(const ordered_json& j, const std::string& text) {
  if (format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text << (text.empty() || text.back() == '\n' ? "" : "\n");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

nlohmann::json read_json(const std::string& path) {
  try {
    return nlohmann::json::parse(slurp(path));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

// Options shared by subcommands taking a knot: --pd FILE or --kanenobu P Q.
struct KnotSource {
  std::string pd;
  std::vector<long> kanenobu;

  void attach(CLI::App* sub) {
    auto* a = sub->add_option("--pd", pd, "PD code file");
    auto* b = sub->add_option("--kanenobu", kanenobu, "twist parameters P Q")->expected(2);
    a->excludes(b);
  }
  bool given() const { return !pd.empty() || !kanenobu.empty(); }
  LinkDiagram diagram() const {
    if (!pd.empty()) return parse_pd(slurp(pd));
    if (kanenobu.size() == 2) return kanenobu_diagram(kanenobu[0], kanenobu[1]);
    throw InputError("give --pd FILE or --kanenobu P Q");
  }
};

std::string lines(const std::vector<Rational>& v) {
  std::ostringstream os;
  for (std::size_t k = 0; k < v.size(); ++k) os << "t^" << k << "  " << to_string(v[k]) << "\n";
  return os.str();
}

std::string bound_text(const CBound& b) {
  std::string s = to_string(b.value) + (b.complete ? " (complete)" : " (incomplete");
  if (!b.complete) {
    s += "; ranks";
    for (std::size_t k = 0; k < b.missing_ranks.size() && k < 3; ++k) s += " " + std::to_string(b.missing_ranks[k]);
    if (b.missing_ranks.size() > 3) s += " ...";
    s += " not covered)";
  }
  return s;
}

std::string verdict_text(const Verdict& v) {
  std::string s = to_string(v.kind) + "; min d = " + to_string(v.min_d) + ", C(" + v.bound.discriminant.get_str() +
                  ") over catalog = " + to_string(v.bound.value);
  for (const auto& c : v.conditions) s += "\n  unmet: " + c;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact torsion, d-invariant and lattice computations for branched double covers"};
  app.require_subcommand(1);
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

  long n = 0, j = 0, n_max = 10;
  std::string epsilon = "default", catalog, pres, white, gram, method = "tangle";
  long det = 1;
  std::size_t max_rank = 4, max_crossings = 24;
  KnotSource knot;

  auto add_n = [&](CLI::App* s) {
    s->add_option("--n", n, "family index n >= 0")->required()->check(CLI::NonNegativeNumber);
    s->add_option("--j", j, "family offset 0..9")->check(CLI::Range(0, 9));
  };
  auto add_eps = [&](CLI::App* s) {
    s->add_option("--epsilon", epsilon, "torsion unit: default, +k, -k, L1=+2,L2=-0 or C5=+1");
  };

  auto* torsion = app.add_subcommand("torsion", "Turaev torsion of M_n");
  add_n(torsion);
  add_eps(torsion);
  auto* minor = app.add_subcommand("minor", "abelianized (4,4) Fox minor of M_n");
  add_n(minor);
  auto* hom = app.add_subcommand("homology", "H_1 with its cyclic generator images");
  auto* hp = hom->add_option("--pres", pres, "presentation file");
  auto* hw = hom->add_option("--white", white, "white graph JSON file");
  auto* hk = hom->add_option("--kanenobu", knot.kanenobu, "twist parameters P Q")->expected(2);
  hp->excludes(hw)->excludes(hk);
  hw->excludes(hk);
  auto* jones = app.add_subcommand("jones", "Jones polynomial");
  knot.attach(jones);
  jones->add_option("--method", method)->check(CLI::IsMember({"tangle", "naive"}));
  jones->add_option("--max-crossings", max_crossings, "refuse larger diagrams");
  auto* lambda = app.add_subcommand("lambda", "Casson-Walker invariant of the branched double cover");
  knot.attach(lambda);
  auto* alex = app.add_subcommand("alexander", "Alexander polynomial via Wirtinger presentation");
  knot.attach(alex);
  auto* pd = app.add_subcommand("pd", "PD code of a knot diagram");
  knot.attach(pd);
  auto* dinv = app.add_subcommand("dinv", "d-invariants 2 tau - lambda of M_n");
  add_n(dinv);
  add_eps(dinv);
  auto* mlat = app.add_subcommand("mlattice", "m invariant of a negative-definite lattice");
  mlat->add_option("--gram", gram, "JSON Gram matrix file")->required();
  auto* cb = app.add_subcommand("cbound", "C(D) over a lattice catalog");
  cb->add_option("--det", det, "discriminant D")->required()->check(CLI::PositiveNumber);
  cb->add_option("--catalog", catalog, "catalog JSON file (default: enumerate)");
  cb->add_option("--max-rank", max_rank, "enumeration rank limit")->check(CLI::Range(0, 4));
  auto* cat = app.add_subcommand("catalog", "enumerate definite lattices with rank < D");
  cat->add_option("--det", det, "discriminant D")->required()->check(CLI::PositiveNumber);
  cat->add_option("--max-rank", max_rank, "enumeration rank limit")->check(CLI::Range(0, 4));
  auto* verdict = app.add_subcommand("verdict", "lattice obstruction for K_n");
  add_n(verdict);
  add_eps(verdict);
  verdict->add_option("--catalog", catalog, "catalog JSON file (default: enumerate rank <= 4)");
  auto* family = app.add_subcommand("family", "full report for K_{-10n-j, 10n+j+3}, n = 0..N");
  family->add_option("--j", j, "family offset 0..9")->check(CLI::Range(0, 9));
  family->add_option("--nmax", n_max, "largest n")->check(CLI::NonNegativeNumber);
  family->add_option("--catalog", catalog, "catalog JSON file");
  add_eps(family);
  bool no_verdict = false;
  family->add_flag("--no-verdict", no_verdict, "skip C(25) and the verdicts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    UnitChoice eps = UnitChoice::parse(epsilon);
    if (torsion->parsed()) {
      auto tau = torsion_kanenobu(n, eps, j);
      emit(tau.to_json(), "tau(M_" + std::to_string(n) + ")  epsilon " + tau.epsilon + "\n" + lines(tau.values));
    } else if (minor->parsed()) {
      auto bc = kanenobu_presentation(kanenobu_p(n, j), kanenobu_q(n, j));
      auto m = abelianized_minor(bc, 4, 4);
      emit(to_json(m), m.to_string());
    } else if (hom->parsed()) {
      Homology h;
      if (!pres.empty())
        h = homology(Presentation::parse(slurp(pres)));
      else if (!white.empty())
        h = white_graph_presentation(WhiteGraph::from_json(read_json(white))).h1;
      else if (knot.kanenobu.size() == 2)
        h = kanenobu_presentation(knot.kanenobu[0], knot.kanenobu[1]).h1;
      else
        throw InputError("give --pres FILE, --white FILE or --kanenobu P Q");
      emit(homology_to_json(h), h.to_string());
    } else if (jones->parsed()) {
      JonesOptions opt{max_crossings, method == "naive" ? BracketMethod::naive : BracketMethod::tangle};
      auto v = jones_polynomial(knot.diagram(), opt);
      ordered_json out;
      out["jones"] = jones_to_string(v);
      out["at_minus_one"] = to_string(jones_value_at(v, -1));
      emit(out, jones_to_string(v));
    } else if (lambda->parsed()) {
      auto m = mullins_lambda(knot.diagram());
      ordered_json out;
      out["lambda"] = to_string(m.lambda);
      out["jones"] = jones_to_string(m.jones);
      out["V(-1)"] = to_string(m.v_at_minus_one);
      out["V'(-1)"] = to_string(m.derivative_at_minus_one);
      out["signature"] = m.signature;
      out["determinant"] = m.determinant.get_str();
      emit(out, to_string(m.lambda));
    } else if (alex->parsed()) {
      auto a = alexander_polynomial(wirtinger_presentation(knot.diagram()));
      ordered_json out;
      out["alexander"] = a.to_string();
      emit(out, a.to_string());
    } else if (pd->parsed()) {
      auto d = knot.diagram();
      ordered_json out;
      out["pd"] = format_pd(d);
      out["crossings"] = d.size();
      out["writhe"] = d.writhe();
      emit(out, format_pd(d));
    } else if (dinv->parsed()) {
      auto tau = torsion_kanenobu(n, eps, j);
      Rational l = kanenobu_lambda();
      auto d = d_invariants(tau, l);
      ordered_json out;
      out["N"] = tau.modulus;
      out["lambda"] = to_string(l);
      out["epsilon"] = tau.epsilon;
      out["d"] = rationals_to_json(d);
      out["min_d"] = to_string(*std::min_element(d.begin(), d.end()));
      emit(out, "lambda " + to_string(l) + "\n" + lines(d));
    } else if (mlat->parsed()) {
      IntMatrix g = gram_from_json(read_json(gram));
      GramLattice l = g.rows() == 0 ? GramLattice() : GramLattice(g);
      auto cosets = char_cosets(l);
      Rational m = m_invariant(l);
      ordered_json out;
      out["rank"] = l.rank();
      out["discriminant"] = l.discriminant().get_str();
      out["m"] = to_string(m);
      auto cj = ordered_json::array();
      for (const auto& c : cosets) {
        ordered_json e;
        e["best"] = ordered_json::array();
        for (const auto& x : c.best) e["best"].push_back(x.get_str());
        e["square"] = to_string(c.max_square);
        e["value"] = to_string(c.value);
        cj.push_back(e);
      }
      out["cosets"] = cj;
      emit(out, to_string(m));
    } else if (cb->parsed()) {
      LatticeCatalog c = catalog.empty() ? build_catalog(det, max_rank) : load_catalog(catalog);
      auto b = c_bound(det, c);
      emit(b.to_json(), bound_text(b));
    } else if (cat->parsed()) {
      auto c = build_catalog(det, max_rank);
      std::string text;
      for (const auto& l : c.lattices) text += l.to_string() + "\n";
      emit(catalog_to_json(c), text);
    } else if (verdict->parsed()) {
      CBound b = kanenobu_bound(catalog.empty() ? std::nullopt : std::optional<std::filesystem::path>(catalog));
      auto r = family_record(n, j, eps, kanenobu_lambda(), &b);
      if (!r.verdict) throw DomainError("H1 is " + r.h1.group.to_string() + "; no torsion, no verdict");
      emit(r.verdict->to_json(), verdict_text(*r.verdict));
    } else if (family->parsed()) {
      FamilyOptions opt;
      opt.j = j;
      opt.n_max = n_max;
      opt.epsilon = eps;
      opt.with_verdict = !no_verdict;
      if (!catalog.empty()) opt.catalog = catalog;
      auto rep = run_family(opt);
      std::ostringstream os;
      os << "K_{-10n" << (j ? "-" + std::to_string(j) : std::string()) << ", 10n+" << j + 3 << "}  lambda " << to_string(rep.lambda) << "\n";
      if (rep.bound) os << "C(25) " << bound_text(*rep.bound) << "\n";
      for (const auto& r : rep.records) {
        os << "n=" << r.n << "  H1 " << r.h1.group.to_string() << "  det " << r.determinant.get_str() << "  sigma "
           << r.signature;
        if (r.min_d) os << "  min tau " << to_string(r.tau->min()) << "  min d " << to_string(*r.min_d);
        if (r.verdict) os << "  " << to_string(r.verdict->kind);
        os << "\n";
      }
      if (rep.min_d_slope) os << "min d slope " << to_string(*rep.min_d_slope) << " per step\n";
      emit(report_to_json(rep), os.str());
    }
  } catch (const CheckFailure& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kCheck;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}
