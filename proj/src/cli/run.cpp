#include <CLI11.hpp>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "stablab/cli/cli.hpp"
#include "stablab/error.hpp"
#include "stablab/extensions/five_term.hpp"
#include "stablab/extsq/exterior_square.hpp"
#include "stablab/fp/coset_enumeration.hpp"
#include "stablab/homology/bar_complex.hpp"
#include "stablab/homology/cohomology.hpp"
#include "stablab/homology/relation_module.hpp"
#include "stablab/stability/alpha.hpp"
#include "stablab/stability/experiment.hpp"
#include "stablab/symspace/symspace.hpp"

namespace stablab::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<long> parse_longs(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stol(item));
    } catch (const std::exception&) {
      throw ParseError("bad integer '" + item + "'");
    }
  }
  return out;
}

// "<coefficients>:<images>", images of the kernel basis separated by ';',
// components by ','. Example: "Z/2+Z/4:1,0;0,2".
fp::AbelianHom parse_beta(const std::string& spec, const fp::AbelianGroup& source) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw ParseError("pushforward spec needs '<coefficients>:<images>'");
  const auto k = homology::CoefficientModule::parse(spec.substr(0, colon));
  if (!k.is_finite()) throw InvalidArgument("pushforward target must be finite");
  fp::AbelianHom beta = fp::AbelianHom::zero(source, k.group);
  std::stringstream ss(spec.substr(colon + 1));
  std::string image;
  std::size_t i = 0;
  while (std::getline(ss, image, ';')) {
    if (i >= source.rank()) throw ParseError("more images than kernel generators");
    auto v = parse_longs(image);
    if (v.size() != k.group.rank()) throw ParseError("image '" + image + "' has the wrong length");
    beta.images[i++] = k.group.reduce(v);
  }
  if (i != source.rank()) throw ParseError("expected " + std::to_string(source.rank()) + " images");
  if (!beta.is_well_defined()) throw InvalidArgument("images do not define a homomorphism");
  return beta;
}

json group_command(const std::string& file, bool multiplier, bool abelianization, bool extsq_flag,
                   const std::vector<std::string>& cohomology) {
  const auto p = fp::load_presentation(find_data_file(file, "groups"));
  const auto g = std::make_shared<const fp::GroupTable>(fp::enumerate_group(p));
  json j = {{"group", p.name()}, {"order", g->order()}};
  if (multiplier) {
    const auto hopf = homology::RelationModule(g).h2();
    j["invariant_factors"] = hopf.invariant_factors();
    try {
      j["bar_agrees"] = homology::bar_homology(*g, 2) == hopf;
    } catch (const CapExceeded&) {
      j["bar_agrees"] = "skipped";
    }
  } else if (abelianization) {
    j["invariant_factors"] = fp::abelianization(*g).invariant_factors();
  } else if (extsq_flag) {
    const auto e = extsq::exterior_square(g);
    j.update(extsq::summary(e));
  } else {
    int degree = 0;
    try {
      degree = std::stoi(cohomology.at(0));
    } catch (const std::exception&) {
      throw UsageError("--cohomology expects <degree> <coefficients>");
    }
    j.update(homology::to_json(homology::cohomology(*g, homology::CoefficientModule::parse(cohomology.at(1)), degree)));
  }
  return j;
}

json extension_command(const std::string& file, const std::string& push, const std::string& tg,
                       const std::string& five) {
  const auto spec = extensions::load_extension_file(find_data_file(file, "extensions"));
  const auto e = extensions::realize(spec);
  json j = {{"extension", spec.name},
            {"total_order", e.total->order()},
            {"base_order", e.base->order()},
            {"kernel", e.kernel.invariant_factors()}};
  if (!push.empty()) {
    const auto beta = parse_beta(push, e.kernel);
    const auto pf = extensions::pushforward(e, beta);
    const auto q = extensions::pushforward_quotient(e, beta);
    j["pushforward"] = {{"total_order", pf.extension.total->order()},
                        {"kernel", pf.extension.kernel.invariant_factors()},
                        {"diagram_commutes", pf.diagram_commutes},
                        {"matches_quotient", !fp::find_isomorphism(*pf.extension.total, *q.total).empty()}};
  } else if (!tg.empty()) {
    const auto k = homology::CoefficientModule::parse(tg);
    if (!k.is_finite()) throw InvalidArgument("transgression needs finite coefficients");
    const extensions::Transgression t(e, k.group);
    j["transgression"] = {{"coefficients", k.to_string()},
                          {"hom", t.hom().group.invariant_factors()},
                          {"h2", t.h2().invariant_factors()},
                          {"images", t.matrix()}};
  } else {
    j["five_term"] = extensions::to_json(extensions::five_term_check(e, homology::CoefficientModule::parse(five)));
  }
  return j;
}

json symspace_command(const std::string& entry, const std::string& verdict, bool list) {
  const auto& cat = symspace::Catalog::builtin();
  if (list) {
    json rows = json::array();
    for (const auto& e : cat.entries()) rows.push_back({{"name", e.name}, {"group", e.group}, {"dimension", e.dimension}});
    return {{"entries", rows}, {"exceptions", symspace::exception_entries(cat)}};
  }
  if (!entry.empty()) {
    const auto& e = cat.find(entry);
    const auto p = symspace::poincare_polynomial(e);
    return {{"name", e.name},
            {"group", e.group},
            {"dimension", e.dimension},
            {"poincare", p.coefficients},
            {"euler", p.euler_characteristic()},
            {"odd_rhs", symspace::is_odd_rational_homology_sphere(p, e.dimension)}};
  }
  std::vector<std::string> factors;
  std::stringstream ss(verdict);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) factors.push_back(item);
  return symspace::to_json(symspace::instability_verdict(factors, cat));
}

struct StabilityArgs {
  bool defect = false, solve = false, transfer = false;
  std::size_t voiculescu = 0;
  std::string alpha_file, experiment, config, presentation, norm = "frobenius";
  std::size_t n = 0;
  double delta = 1e-3;
  std::uint64_t seed = 0;
  std::size_t iterations = 20000;
};

json stability_command(const StabilityArgs& a) {
  using namespace stability;
  if (!a.alpha_file.empty()) {
    const auto p = fp::load_presentation(find_data_file(a.alpha_file, "groups"));
    const auto g = fp::enumerate_group(p);
    return {{"group", p.name()}, {"order", g.order()}, {"alpha", alpha_threshold(g, a.seed)}, {"seed", a.seed}};
  }
  if (!a.experiment.empty() || a.transfer) {
    const std::string cfg = !a.experiment.empty() ? a.experiment : (a.config.empty() ? "transfer_c4.cfg" : a.config);
    const auto c = ExperimentConfig::load(find_data_file(cfg, "experiments"));
    if (a.transfer && c.get("experiment") != "quotient-transfer")
      throw UsageError("--quotient-transfer needs a quotient-transfer config");
    return run_experiment(c);
  }
  const NormKind norm = NormKind::parse(a.norm);
  fp::Presentation p;
  UnitaryTuple t;
  json j = {{"norm", norm.name()}, {"seed", a.seed}};
  if (a.voiculescu) {
    p = fp::Presentation({"a", "b"}, {fp::commutator(fp::Word::generator(0), fp::Word::generator(1))}, "z2");
    t = voiculescu_pair(a.voiculescu);
    j["n"] = a.voiculescu;
    j["closed_form_operator_defect"] = 2 * std::sin(std::numbers::pi / static_cast<double>(a.voiculescu));
  } else {
    if (a.presentation.empty() || a.n == 0) throw UsageError("--defect/--solve need --voiculescu or --presentation and --n");
    p = fp::load_presentation(find_data_file(a.presentation, "groups"));
    std::mt19937_64 rng(a.seed);
    t = perturb(genuine_representation(p, a.n, rng), a.delta, rng);
    j["n"] = a.n;
    j["delta"] = a.delta;
    j["presentation"] = p.name();
  }
  if (a.solve) {
    SolverConfig cfg;
    cfg.seed = a.seed;
    cfg.max_iterations = a.iterations;
    j.update(to_json(perturbation_solve(p, t, norm, cfg)));
  } else {
    j.update(to_json(defect(p, t, norm)));
  }
  return j;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"stablab: finite group cohomology, exterior squares and almost-representation experiments", "stablab"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent the JSON output");

  auto* group = app.add_subcommand("group", "computations on a .grp presentation");
  std::string group_file;
  bool multiplier = false, abelianization = false, extsq_flag = false;
  std::vector<std::string> cohomology;
  group->add_option("file", group_file, "presentation file (path or name under data/groups)")->required();
  auto* gmode = group->add_option_group("mode");
  gmode->add_flag("--multiplier", multiplier, "Schur multiplier H_2(G, Z)");
  gmode->add_flag("--abelianization", abelianization, "G / [G, G]");
  gmode->add_flag("--exterior-square", extsq_flag, "nonabelian exterior square summary");
  gmode->add_option("--cohomology", cohomology, "<degree> <coefficients>")->expected(2);
  gmode->require_option(1);

  auto* ext = app.add_subcommand("extension", "computations on a .ext central extension");
  std::string ext_file, push, tg, five;
  ext->add_option("file", ext_file, "extension file (path or name under data/extensions)")->required();
  auto* emode = ext->add_option_group("mode");
  emode->add_option("--pushforward", push, "<coefficients>:<images>, e.g. Z/2:1");
  emode->add_option("--transgression", tg, "coefficients, e.g. Z/2");
  emode->add_option("--five-term", five, "coefficients, e.g. F_3");
  emode->require_option(1);

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  std::size_t max_order = 16;
  ver->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(kSuites));
  ver->add_option("--max-order", max_order, "largest catalog group order")->check(CLI::Range(1, 4096));

  auto* sym = app.add_subcommand("symspace", "compact duals of symmetric spaces");
  std::string entry, verdict;
  bool list = false;
  auto* smode = sym->add_option_group("mode");
  smode->add_option("--entry", entry, "catalog entry name");
  smode->add_option("--verdict", verdict, "comma-separated factor list");
  smode->add_flag("--list", list, "list catalog entries");
  smode->require_option(1);

  auto* stab = app.add_subcommand("stability", "norms, defects and the perturbation solver");
  StabilityArgs sa;
  auto* tmode = stab->add_option_group("mode");
  tmode->add_flag("--defect", sa.defect, "measure relator defects");
  tmode->add_flag("--solve", sa.solve, "run the perturbation solver");
  tmode->add_option("--alpha", sa.alpha_file, "alpha threshold of a finite group");
  tmode->add_flag("--quotient-transfer", sa.transfer, "quotient transfer experiment");
  tmode->add_option("--experiment", sa.experiment, "run an experiment config");
  tmode->require_option(0, 1);
  stab->add_option("--voiculescu", sa.voiculescu, "use the shift/clock pair of size n")->check(CLI::Range(2, 4096));
  stab->add_option("--norm", sa.norm, "frobenius, hs, operator or schatten:<p>");
  stab->add_option("--presentation", sa.presentation, "presentation for a perturbed genuine representation");
  stab->add_option("--n", sa.n, "representation dimension");
  stab->add_option("--delta", sa.delta, "perturbation size");
  stab->add_option("--seed", sa.seed, "random seed");
  stab->add_option("--iterations", sa.iterations, "solver iteration cap");
  stab->add_option("--config", sa.config, "config for --quotient-transfer");

  auto emit = [&](json j) {
    j["schema_version"] = kSchemaVersion;
    out << (pretty ? j.dump(2) : j.dump()) << "\n";
  };
  auto usage = [&](const std::string& msg) {
    emit({{"error", {{"name", "UsageError"}, {"message", msg}}}, {"usage", app.help()}});
    return 2;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    return usage(e.what());
  }
  // the voiculescu size without a mode means --defect
  if (*stab) {
    const bool any_mode = sa.defect || sa.solve || !sa.alpha_file.empty() || sa.transfer || !sa.experiment.empty();
    if (!any_mode && !sa.voiculescu)
      return usage("one of --defect, --solve, --alpha, --quotient-transfer, --experiment is required");
    if (!any_mode) sa.defect = true;
  }

  try {
    if (*group) {
      emit(group_command(group_file, multiplier, abelianization, extsq_flag, cohomology));
    } else if (*ext) {
      emit(extension_command(ext_file, push, tg, five));
    } else if (*ver) {
      auto r = verify(suite, max_order);
      emit(r.document);
      return r.passed ? 0 : 1;
    } else if (*sym) {
      emit(symspace_command(entry, verdict, list));
    } else {
      emit(stability_command(sa));
    }
  } catch (const UsageError& e) {
    return usage(e.what());
  } catch (const Error& e) {
    emit({{"error", {{"name", e.name()}, {"message", e.what()}}}});
    return 1;
  }
  return 0;
}

}  // namespace stablab::cli
