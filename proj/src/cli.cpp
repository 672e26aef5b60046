#include "tropsing/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "tropsing/error.hpp"
#include "tropsing/io.hpp"
#include "tropsing/svg.hpp"

namespace tropsing {

namespace {

struct Options {
  std::string in;
  std::string out;
  std::string svg;
  std::uint64_t seed = 1;
  std::optional<std::size_t> limit;
  std::string pivots;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

std::string read_input(const Options& opt, std::istream& in) {
  if (opt.in.empty() || opt.in == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(opt.in);
  if (!file) fail(ErrorCode::InvalidArgument, "cannot read " + opt.in);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) fail(ErrorCode::InvalidArgument, "cannot write " + path);
  file << text;
}

std::optional<PivotTriple> parse_pivots(const std::string& text, std::size_t s) {
  if (text.empty()) return std::nullopt;
  PivotTriple p{};
  std::stringstream ss(text);
  std::string item;
  std::size_t k = 0;
  while (std::getline(ss, item, ',')) {
    if (k == 3) fail(ErrorCode::ParseError, "--pivots takes three indices");
    try {
      std::size_t used = 0;
      p[k] = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      fail(ErrorCode::ParseError, "bad pivot index " + item);
    }
    if (p[k] >= s) fail(ErrorCode::InvalidArgument, "pivot index out of range");
    ++k;
  }
  if (k != 3) fail(ErrorCode::ParseError, "--pivots takes three indices");
  std::sort(p.begin(), p.end());
  return p;
}

struct Job {
  JobSpec spec;
  PointConfiguration config;
  std::optional<HeightVector> heights;                   // canonical order
  std::optional<std::vector<PuiseuxScalar>> coefficients;  // canonical order
};

Job load(const Options& opt, std::istream& in) {
  JobSpec spec = parse_job(read_input(opt, in));
  PointConfiguration config(spec.points);
  Job job{spec, config, std::nullopt, std::nullopt};
  if (spec.heights) job.heights = align_to_config(config, spec.points, *spec.heights);
  if (spec.coefficients) job.coefficients = align_to_config(config, spec.points, *spec.coefficients);
  return job;
}

const HeightVector& require_heights(Job& job) {
  if (!job.heights && job.coefficients) job.heights = neg_val_vector({job.config, *job.coefficients});
  if (!job.heights) fail(ErrorCode::InvalidArgument, "this command needs heights or coefficients");
  return *job.heights;
}

FlagOfFlats flag_from_blocks(const GaleDual& g, const std::vector<IndexSet>& blocks) {
  FlagOfFlats flag;
  IndexSet acc;
  for (const auto& block : blocks) {
    acc.insert(acc.end(), block.begin(), block.end());
    std::sort(acc.begin(), acc.end());
    if (std::adjacent_find(acc.begin(), acc.end()) != acc.end()) fail(ErrorCode::MalformedFlag, "blocks overlap");
    if (!acc.empty() && acc.back() >= g.b.cols()) fail(ErrorCode::MalformedFlag, "block index out of range");
    if (!is_flat(g, acc)) fail(ErrorCode::MalformedFlag, "a union of leading blocks is not a flat");
    flag.flats.push_back(acc);
  }
  if (acc.size() != g.b.cols()) fail(ErrorCode::MalformedFlag, "blocks do not cover the configuration");
  return flag;
}

Json cone_json(const PointConfiguration& config, const MarkedSubdivision& ms) {
  const ConeInfo info = cone_info(config, ms);
  Json lt = Json::array();
  for (const auto& v : info.lt.basis) lt.push_back(v);
  return {{"codimension", info.codimension}, {"white_points", info.white_points}, {"lt", lt}};
}

Json flag_json(const FlagOfFlats& flag, const PointConfiguration& config) {
  Json j = flag;
  const FlagClass fc = classify_flag(flag, config);
  j["case"] = fc.which == FlagClass::Case::A ? "A" : "B";
  j["circuit"] = fc.circuit;
  if (fc.which == FlagClass::Case::B) {
    j["pair"] = fc.pair;
    j["tail_on_line"] = fc.tail_on_line;
  }
  return j;
}

std::string svg_for(const PointConfiguration& config, const HeightVector& u, const std::optional<Point2>& point) {
  SvgOptions options;
  if (point) options.singular_point = point;
  return render_svg(config, dual_curve(config, u), options);
}

Json cmd_subdivide(Job& job, const Options&) {
  const auto ms = regular_subdivision(job.config, require_heights(job));
  return {{"subdivision", ms}, {"cone", cone_json(job.config, ms)}};
}

Json cmd_curve(Job& job, const Options&) {
  const auto curve = dual_curve(job.config, require_heights(job));
  Json multiplicities = Json::array();
  for (std::size_t v = 0; v < curve.vertices.size(); ++v) {
    multiplicities.push_back(vertex_multiplicity(job.config, curve, v));
  }
  return {{"curve", curve}, {"multiplicities", multiplicities}};
}

Json cmd_flags(Job& job, const Options& opt) {
  const Matrix a = coefficient_matrix(job.config);
  const GaleDual g = gale_dual(a, parse_pivots(opt.pivots, job.config.size()));
  const auto flags = enumerate_flags(g, opt.limit.value_or(default_flag_limit()));
  Json list = Json::array();
  for (const auto& flag : flags) list.push_back(flag_json(flag, job.config));
  Json j = {{"matrix", a}, {"pivots", g.pivots}, {"gale_dual", g.b}, {"flags", list}};
  if (job.heights || job.coefficients) {
    const auto& u = require_heights(job);
    const auto from = flag_from_weight(g, u);
    j["weight_class"] = from.weight_class.blocks;
    j["is_flag_of_flats"] = from.is_flag_of_flats;
    j["bergman"] = bergman_member_circuit_oracle(a, u);
  }
  return j;
}

Json cmd_classify(Job& job, const Options&) {
  const auto& u = require_heights(job);
  const auto report = job.spec.non_torus ? classify_non_torus(job.config, u)
                                         : classify_singularity(job.config, u, job.spec.point);
  return report;
}

Json cmd_discriminant(Job& job, const Options&) {
  const auto& u = require_heights(job);
  const auto ms = regular_subdivision(job.config, u);
  const Matrix a = coefficient_matrix(job.config);
  Json j = {{"subdivision", ms}, {"cone", cone_json(job.config, ms)}, {"bergman", bergman_member_circuit_oracle(a, u)}};
  const auto z = job.spec.circuit ? std::optional<Circuit>(Circuit{*job.spec.circuit,
                                                                   circuit_kind(job.config, *job.spec.circuit)})
                                  : unique_circuit(job.config, ms);
  j["circuit"] = z ? Json(*z) : Json(nullptr);
  try {
    j["is_discriminant"] = is_discriminant_cone(job.config, ms);
  } catch (const Error& e) {
    j["is_discriminant"] = nullptr;
    j["reason"] = e.what();
  }
  if (z) {
    try {
      j["decomposition"] = decompose_weightclass_lineality(job.config, u, *z);
    } catch (const Error& e) {
      j["decomposition"] = nullptr;
      j["decomposition_error"] = {{"code", to_string(e.code())}, {"message", e.what()}};
    }
  }
  return j;
}

Json lift_report(const PuiseuxPolynomial& f) {
  Json heights = Json::array();
  for (const auto& h : partial_neg_val_vector(f)) heights.push_back(h ? Json(*h) : Json(nullptr));
  Json j = {{"polynomial", f}, {"heights", heights}};
  Json cond = Json::array();
  for (const auto& c : conditions_at_one_one(f)) cond.push_back(c);
  j["conditions"] = cond;
  j["singular_at_one_one"] = verify_singular_at_one_one(f);
  bool nonnegative = true;
  for (const auto& p : f.config.points()) nonnegative = nonnegative && p.j >= 0;
  if (nonnegative) j["refined"] = refine_substitution(f);
  return j;
}

Json cmd_lift(Job& job, const Options& opt) {
  const std::size_t s = job.config.size();
  std::optional<PivotTriple> pivots = parse_pivots(opt.pivots, s);
  if (job.coefficients) return lift_report({job.config, *job.coefficients});
  const Matrix a = coefficient_matrix(job.config);
  FlagOfFlats flag;
  std::vector<Rational> exponents;
  if (job.heights) {
    if (!pivots) pivots = weight_maximal_pivots(a, *job.heights);
    const GaleDual g = gale_dual(a, pivots);
    flag = job.spec.flag ? flag_from_blocks(g, *job.spec.flag) : flag_from_weight(g, *job.heights).flag;
    exponents = lift_exponents(g, *job.heights);
  } else {
    const GaleDual g = gale_dual(a, pivots);
    if (job.spec.flag) {
      flag = flag_from_blocks(g, *job.spec.flag);
    } else {
      const auto flags = enumerate_flags(g, opt.limit.value_or(default_flag_limit()));
      flag = flags[opt.seed % flags.size()];
    }
    if (job.spec.exponents) {
      exponents = *job.spec.exponents;
    } else {
      const HeightVector w = weight_class_sample(flag, s);
      pivots = weight_maximal_pivots(a, w);
      exponents = lift_exponents(gale_dual(a, pivots), w);
    }
  }
  if (exponents.size() + 3 != s) fail(ErrorCode::InvalidArgument, "need one exponent per Gale dual row");
  const auto sample = sample_singular_lift(job.config, flag, exponents, opt.seed, pivots);
  Json j = lift_report(sample.f);
  j["flag"] = flag;
  j["exponents"] = exponents;
  j["in_weight_class"] = sample.in_weight_class;
  j["attempts"] = sample.attempts;
  return j;
}

Json cmd_plot(Job& job, const Options& opt) {
  const auto& u = require_heights(job);
  const auto curve = dual_curve(job.config, u);
  Json j = {{"curve", curve}};
  if (opt.svg.empty()) j["svg"] = svg_for(job.config, u, job.spec.point);
  return j;
}

void emit(std::ostream& out, const Options& opt, const Json& j) {
  const std::string text = j.dump(2) + "\n";
  if (opt.out.empty() || opt.out == "-") {
    out << text;
  } else {
    write_file(opt.out, text);
  }
}

Json error_json(std::string_view code, const std::string& message) {
  return {{"schema", kSchema}, {"error", {{"code", code}, {"message", message}}}};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  using Command = Json (*)(Job&, const Options&);
  const std::vector<std::pair<std::string, std::pair<Command, std::string>>> commands = {
      {"subdivide", {cmd_subdivide, "regular marked subdivision and its cone"}},
      {"curve", {cmd_curve, "dual tropical curve"}},
      {"flags", {cmd_flags, "Gale dual and flags of flats"}},
      {"classify", {cmd_classify, "singularity type at the origin"}},
      {"discriminant", {cmd_discriminant, "discriminant cone test and decomposition"}},
      {"lift", {cmd_lift, "singular lift over Puiseux series"}},
      {"plot", {cmd_plot, "SVG of the subdivision and the curve"}},
  };

  CLI::App app{"Tropical singular curves"};
  app.require_subcommand(1);
  Options opt;
  std::map<CLI::App*, Command> handlers;
  for (const auto& [name, entry] : commands) {
    CLI::App* sub = app.add_subcommand(name, entry.second);
    sub->add_option("--in", opt.in, "input JSON file, stdin if absent");
    sub->add_option("--out", opt.out, "output JSON file, stdout if absent");
    sub->add_option("--svg", opt.svg, "write an SVG picture");
    sub->add_option("--seed", opt.seed, "random seed");
    sub->add_option("--limit", opt.limit, "flag enumeration bound");
    sub->add_option("--pivots", opt.pivots, "pivot columns i,j,k");
    handlers[sub] = entry.first;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    out << error_json(to_string(ErrorCode::ParseError), e.what()).dump(2) << "\n";
    err << e.what() << "\n";
    return 2;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    Job job = load(opt, in);
    Json result = handlers.at(sub)(job, opt);
    result["schema"] = kSchema;
    result["command"] = sub->get_name();
    if (!opt.svg.empty()) write_file(opt.svg, svg_for(job.config, require_heights(job), job.spec.point));
    emit(out, opt, result);
    return 0;
  } catch (const Error& e) {
    out << error_json(to_string(e.code()), e.what()).dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::ParseError ? 2 : 1;
  } catch (const std::exception& e) {
    out << error_json(to_string(ErrorCode::InvalidArgument), e.what()).dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace tropsing
