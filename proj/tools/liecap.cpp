#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "liecap/catalog.hpp"
#include "liecap/covers.hpp"
#include "liecap/json_io.hpp"
#include "liecap/report.hpp"

using namespace liecap;

namespace {

// Exit codes: 0 ok, 1 verification failure, 2 bad input, 3 Jacobi violation,
// 4 other computation errors (non-nilpotent input, resource limit).
constexpr int kVerifyFailed = 1;
constexpr int kBadInput = 2;
constexpr int kJacobi = 3;
constexpr int kComputation = 4;

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::ParseError:
    case ErrorKind::UnknownKey:
    case ErrorKind::EpsilonRequired:
    case ErrorKind::EpsilonForbidden:
    case ErrorKind::UnsupportedDimension:
    case ErrorKind::InvalidField:
      return kBadInput;
    case ErrorKind::JacobiViolation:
      return kJacobi;
    default:
      return kComputation;
  }
}

Field parse_field_option(const std::string& text) {
  if (text == "Q") return Field::rationals();
  if (text.rfind("Fp:", 0) == 0) {
    try {
      return Field::prime(static_cast<std::uint32_t>(std::stoul(text.substr(3))));
    } catch (const std::logic_error&) {
    }
  }
  throw Error(ErrorKind::ParseError, "field must be Q or Fp:<p>, got '" + text + "'");
}

std::vector<mpq_class> parse_epsilons(const std::string& text) {
  std::vector<mpq_class> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(Field::rationals().parse(item));
  if (out.empty()) throw Error(ErrorKind::ParseError, "empty epsilon set");
  return out;
}

LieAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  LieAlgebra algebra = algebra_from_json_text(buf.str());
  const ValidationReport check = validate(algebra);
  if (!check.ok) {
    std::ostringstream msg;
    msg << "Jacobi identity fails at (" << check.i << ", " << check.j << ", " << check.k << ")";
    throw Error(ErrorKind::JacobiViolation, msg.str());
  }
  return algebra;
}

std::string relations_of(const CatalogFamily& fam) {
  if (fam.index == 0) return format_relations(build(fam.members.front()).algebra);
  return relation_text(fam.dim, fam.index);
}

int cmd_list(std::size_t dim, bool json) {
  const auto families = list(dim);
  if (json) {
    ordered_json rows = ordered_json::array();
    for (const auto& fam : families) {
      ordered_json keys = ordered_json::array();
      for (const auto& k : fam.members) keys.push_back(k.to_string());
      rows.push_back({{"dim", fam.dim},
                      {"index", fam.index},
                      {"parameterized", fam.parameterized},
                      {"keys", keys},
                      {"relations", relations_of(fam)}});
    }
    std::cout << rows.dump(2) << '\n';
    return 0;
  }
  for (const auto& fam : families) {
    const CatalogEntry entry = build(fam.members.front());
    std::string name = fam.members.front().to_string();
    if (fam.parameterized) name = CatalogKey::indexed(fam.dim, fam.index).to_string() + "(e)";
    std::cout << name << "  " << relations_of(fam);
    if (!entry.structure_note.empty()) std::cout << "  (" << entry.structure_note << ")";
    if (fam.parameterized) {
      std::cout << "  [epsilon samples:";
      for (const auto& k : fam.members) std::cout << ' ' << Field::rationals().format(*k.epsilon);
      std::cout << ']';
    }
    std::cout << '\n';
  }
  return 0;
}

int cmd_invariants(const std::string& key, const std::string& file, const std::string& format) {
  LieAlgebra algebra = file.empty() ? build(parse_key(key)).algebra : load_algebra(file);
  const InvariantReport report = compute_invariants(algebra, file.empty() ? parse_key(key).to_string() : file);
  if (format == "json")
    std::cout << to_json(report).dump(2) << '\n';
  else if (format == "csv")
    std::cout << csv_header() << '\n' << to_csv(report) << '\n';
  else
    std::cout << to_pretty(report);
  return 0;
}

int cmd_verify(const std::string& selector, const std::string& field, const std::string& eps, unsigned jobs,
               const std::string& format) {
  SuiteOptions opt;
  opt.field = parse_field_option(field);
  if (!eps.empty()) opt.epsilons = parse_epsilons(eps);
  opt.jobs = jobs;
  std::vector<std::string> ids = suite_ids();
  if (selector != "all") {
    if (std::find(ids.begin(), ids.end(), selector) == ids.end())
      throw Error(ErrorKind::UnknownKey, "unknown suite '" + selector + "'");
    ids = {selector};
  }
  bool ok = true;
  ordered_json all = ordered_json::array();
  for (const auto& id : ids) {
    const SuiteResult result = run_suite(id, opt);
    ok = ok && result.passed();
    if (format == "json")
      all.push_back(to_json(result));
    else
      std::cout << to_text(result) << std::flush;
  }
  if (format == "json") std::cout << (ids.size() == 1 ? all[0] : all).dump(2) << '\n';
  return ok ? 0 : kVerifyFailed;
}

int cmd_cover(const std::string& key, bool dump_star) {
  const CatalogKey k = parse_key(key);
  const LieAlgebra L = build(k).algebra;
  const Cover cover = exterior_cover(L);
  const std::size_t z = exterior_center(L, cover).space().dim();
  std::cout << "algebra           " << k.to_string() << '\n'
            << "generators        " << minimal_generator_count(L) << '\n'
            << "class             " << nilpotency_class(L) << '\n'
            << "dim F(d, c+1)     " << cover.free_dim << '\n'
            << "dim L*            " << cover.star.dim() << '\n'
            << "dim M(L)          " << cover.multiplier_part.space().dim() << '\n'
            << "dim L ^ L         " << cover.derived_part.space().dim() << '\n'
            << "dim Z^(L)         " << z << '\n';
  if (dump_star) std::cout << algebra_to_json(cover.star).dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"liecap: Schur multipliers, exterior squares and capability of nilpotent Lie algebras"};
  app.require_subcommand(1);

  std::size_t list_dim = 0;
  bool list_json = false;
  auto* list_cmd = app.add_subcommand("list", "List the catalog of a dimension (1..6)");
  list_cmd->add_option("dim", list_dim, "Dimension")->required();
  list_cmd->add_flag("--json", list_json, "Emit JSON");

  std::string inv_key, inv_file, inv_format = "pretty";
  auto* inv_cmd = app.add_subcommand("invariants", "Invariant report for a catalog key or a JSON algebra");
  auto* key_opt = inv_cmd->add_option("key", inv_key, "Catalog key, e.g. L5_4 or L6_21(e=0)");
  auto* file_opt = inv_cmd->add_option("--file", inv_file, "Algebra in JSON form");
  key_opt->excludes(file_opt);
  inv_cmd->add_option("--format", inv_format, "json, csv or pretty")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));

  std::string suite, field = "Q", eps, verify_format = "text";
  unsigned jobs = 1;
  auto* verify_cmd = app.add_subcommand("verify-tables", "Check computed invariants against the golden tables");
  verify_cmd->add_option("suite", suite, "all or a suite id")->required();
  verify_cmd->add_option("--field", field, "Q or Fp:<p>");
  verify_cmd->add_option("--epsilon-set", eps, "Comma-separated epsilon samples (default 0,1,-1,2)");
  verify_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--format", verify_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string cover_key;
  bool dump_star = false;
  auto* cover_cmd = app.add_subcommand("cover", "Exterior cover F/[R,F] of a catalog algebra");
  cover_cmd->add_option("key", cover_key, "Catalog key")->required();
  cover_cmd->add_flag("--dump-star", dump_star, "Print the cover as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kBadInput;
  }

  try {
    if (*list_cmd) return cmd_list(list_dim, list_json);
    if (*inv_cmd) {
      if (inv_key.empty() && inv_file.empty()) throw Error(ErrorKind::ParseError, "give a key or --file");
      return cmd_invariants(inv_key, inv_file, inv_format);
    }
    if (*verify_cmd) return cmd_verify(suite, field, eps, jobs, verify_format);
    if (*cover_cmd) return cmd_cover(cover_key, dump_star);
  } catch (const Error& e) {
    std::cerr << "liecap: " << e.what() << '\n';
    return exit_code(e);
  }
  return 0;
}
