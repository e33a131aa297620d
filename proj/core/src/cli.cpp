#include "lspace/cli.hpp"

#include <CLI11.hpp>
#include <random>
#include <sstream>

#include "lspace/errors.hpp"
#include "lspace/io.hpp"
#include "lspace/sampling.hpp"
#include "lspace/surgery.hpp"

namespace lspace {

namespace {

AccommodatingFamily pick_family(const GraphDocument& doc, const std::string& mode) {
  if (mode == "minimal") return AccommodatingFamily::minimal(doc.graph);
  if (mode == "powerset") return AccommodatingFamily::powerset(doc.graph);
  if (mode == "file") {
    if (!doc.family_sets) throw InputError("--family file requires a 'family' field");
    return AccommodatingFamily::from_sets(doc.graph, *doc.family_sets);
  }
  // auto: the file's family when present, else the minimal one.
  if (doc.family_sets) return AccommodatingFamily::from_sets(doc.graph, *doc.family_sets);
  return AccommodatingFamily::minimal(doc.graph);
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

void run_validate(std::ostream& out, const GraphDocument& doc,
                  const AccommodatingFamily& fam) {
  const LabelledGraph& g = doc.graph;
  GraphReport rep = validate_graph(g);
  out << "vertices: " << g.vertex_count() << "\n";
  out << "edges: " << g.edges().size() << "\n";
  out << "letters:";
  for (const std::string& l : g.letter_names()) out << " " << l;
  out << "\n";
  out << "sinks: " << format_set(g, rep.sinks) << "\n";
  out << "left-resolving: " << bool_str(rep.left_resolving) << "\n";
  out << "alphabet-surjective: " << bool_str(rep.alphabet_surjective) << "\n";
  out << "family-size: " << fam.sets().size() << "\n";
  out << "weakly-left-resolving: " << bool_str(check_weakly_left_resolving(fam)) << "\n";
}

int run_algebra_check(std::ostream& out, const LabelledSpace& space, int depth,
                      std::optional<unsigned> seed) {
  RelationReport rep = check_relations(space);
  auto verdict = [](bool ok) { return ok ? "OK" : "FAIL"; };
  out << "relations: i " << verdict(rep.projections_ok) << ", ii "
      << verdict(rep.commutation_ok) << ", iii " << verdict(rep.isometry_ok) << ", iv "
      << verdict(rep.reconstruction_ok) << "\n";
  if (!rep.all_ok()) {
    out << "detail: " << rep.detail << "\n";
    return 1;
  }
  if (seed) {
    std::mt19937 rng(*seed);
    auto filters = enumerate_tight(space, static_cast<std::size_t>(depth));
    auto arrows = enumerate_groupoid(space, filters, 2);
    if (arrows.empty()) {
      out << "oracle: skipped (no arrows at depth " << depth << ")\n";
      return 0;
    }
    std::uniform_int_distribution<std::size_t> pick(0, arrows.size() - 1);
    const int trials = 100;
    for (int i = 0; i < trials; ++i) {
      AlgebraElement x = random_algebra_element(space, rng, 2, 3);
      AlgebraElement y = random_algebra_element(space, rng, 2, 3);
      const GroupoidElement& pt = arrows[pick(rng)];
      if (evaluate(space, multiply(space, x, y), pt) !=
          convolve_pointwise(space, x, y, pt)) {
        out << "oracle: FAIL (trial " << i << ", seed " << *seed << ")\n";
        return 1;
      }
    }
    out << "oracle: OK (" << trials << " trials, seed " << *seed << ")\n";
  }
  return 0;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  CommandResult result;
  std::ostringstream out;
  std::ostringstream err;

  CLI::App app{"toolkit for labelled graphs: accommodating families, the inverse "
               "semigroup, tight filters, the groupoid and its convolution algebra"};
  app.name("lspace");
  app.require_subcommand(1);

  std::string input;
  std::string family_mode = "auto";
  int depth = 3;
  std::optional<unsigned> seed;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-i,--input", input, "graph document (JSON)")->required();
    sub->add_option("--family", family_mode, "family to use")
        ->check(CLI::IsMember({"auto", "minimal", "powerset", "file"}));
  };

  CLI::App* validate = app.add_subcommand("validate", "report on the graph and family");
  add_common(validate);

  CLI::App* family = app.add_subcommand("family", "print the family carrier");
  add_common(family);

  CLI::App* semigroup = app.add_subcommand("semigroup", "inverse semigroup operations");
  semigroup->require_subcommand(1);
  CLI::App* sg_mul = semigroup->add_subcommand("mul", "multiply two triples");
  add_common(sg_mul);
  std::string sg_lhs, sg_rhs;
  sg_mul->add_option("lhs", sg_lhs, "first triple")->required();
  sg_mul->add_option("rhs", sg_rhs, "second triple")->required();

  CLI::App* tight = app.add_subcommand("tight", "enumerate tight filters");
  add_common(tight);
  tight->add_option("--depth", depth, "word/lasso length bound");

  CLI::App* sigma = app.add_subcommand("sigma", "shift of every enumerated filter");
  add_common(sigma);
  sigma->add_option("--depth", depth, "word/lasso length bound");

  CLI::App* groupoid = app.add_subcommand("groupoid", "groupoid operations");
  groupoid->require_subcommand(1);
  CLI::App* gp_compose = groupoid->add_subcommand("compose", "compose two arrows");
  add_common(gp_compose);
  std::string gp_x, gp_y;
  gp_compose->add_option("x", gp_x, "first arrow")->required();
  gp_compose->add_option("y", gp_y, "second arrow")->required();
  CLI::App* gp_phi = groupoid->add_subcommand("phi", "arrow of a germ");
  add_common(gp_phi);
  std::string phi_t, phi_xi;
  gp_phi->add_option("t", phi_t, "semigroup triple")->required();
  gp_phi->add_option("xi", phi_xi, "tight filter")->required();

  CLI::App* algebra_check =
      app.add_subcommand("algebra-check", "verify the defining relations");
  add_common(algebra_check);
  algebra_check->add_option("--depth", depth, "enumeration bound for the oracle");
  algebra_check->add_option("--seed", seed, "run randomized convolution trials");

  CLI::App* algebra = app.add_subcommand("algebra", "convolution algebra operations");
  algebra->require_subcommand(1);
  CLI::App* alg_mul = algebra->add_subcommand("mul", "multiply generator expressions");
  add_common(alg_mul);
  std::string alg_lhs, alg_rhs;
  alg_mul->add_option("lhs", alg_lhs, "first expression")->required();
  alg_mul->add_option("rhs", alg_rhs, "second expression")->required();

  std::vector<const char*> argv;
  argv.push_back("lspace");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream usage;
    if (e.get_exit_code() == 0) {
      // --help and friends.
      result.output = app.help();
      result.exit_code = 0;
      return result;
    }
    err << e.what() << "\n" << app.help();
    result.exit_code = 2;
    result.error = err.str();
    return result;
  }

  try {
    GraphDocument doc = parse_document_file(input);
    AccommodatingFamily fam = pick_family(doc, family_mode);

    if (validate->parsed()) {
      run_validate(out, doc, fam);
    } else if (family->parsed()) {
      for (VertexSet A : fam.sets()) out << format_set(doc.graph, A) << "\n";
    } else {
      LabelledSpace space(doc.graph, std::move(fam));
      if (sg_mul->parsed()) {
        SemigroupElement s = parse_element(space, sg_lhs);
        SemigroupElement t = parse_element(space, sg_rhs);
        out << format_element(space.graph(), multiply(space, s, t)) << "\n";
      } else if (tight->parsed()) {
        for (const TightFilter& xi : enumerate_tight(space, static_cast<std::size_t>(depth)))
          out << format_filter(xi) << "\n";
      } else if (sigma->parsed()) {
        for (const TightFilter& xi :
             enumerate_tight(space, static_cast<std::size_t>(depth))) {
          if (xi.is_finite() && xi.finite_length() == 0) continue;
          out << format_filter(xi) << " -> " << format_filter(shift(xi)) << "\n";
        }
      } else if (gp_compose->parsed()) {
        GroupoidElement x = parse_arrow(space, gp_x);
        GroupoidElement y = parse_arrow(space, gp_y);
        out << format_arrow(compose(x, y)) << "\n";
      } else if (gp_phi->parsed()) {
        SemigroupElement t = parse_element(space, phi_t);
        TightFilter xi = parse_filter(space, phi_xi);
        out << format_arrow(arrow_of_germ(space, make_germ(space, t, xi))) << "\n";
      } else if (algebra_check->parsed()) {
        result.exit_code = run_algebra_check(out, space, depth, seed);
      } else if (alg_mul->parsed()) {
        AlgebraElement x = parse_generator_expr(space, alg_lhs);
        AlgebraElement y = parse_generator_expr(space, alg_rhs);
        out << format_algebra(space.graph(), multiply(space, x, y));
      }
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    result.exit_code = 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    result.exit_code = 2;
  }

  result.output = out.str();
  result.error = err.str();
  return result;
}

}  // namespace lspace
