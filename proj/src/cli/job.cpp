#include "nadyn/cli/job.hpp"

#include <array>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "nadyn/errors.hpp"
#include "nadyn/localfield/valuation.hpp"

namespace nadyn::cli {

namespace {

constexpr std::array<std::pair<Command, const char*>, 8> kCommands{{
    {Command::boettcher, "boettcher"},
    {Command::verify, "verify"},
    {Command::cf, "cf"},
    {Command::newton_polygon, "newton-polygon"},
    {Command::escape, "escape"},
    {Command::degrees, "degrees"},
    {Command::kummer, "kummer"},
    {Command::transport, "transport"},
}};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::vector<std::string> parse_poly(const std::string& text) {
  std::vector<std::string> out;
  for (const auto& part : split(text, ',')) out.push_back(localfield::rational_string(localfield::parse_rational(part)));
  if (out.size() < 2) throw UsageError("--poly needs at least two coefficients a0,...,ad");
  return out;
}

std::vector<std::pair<long, long>> parse_generators(const std::string& text) {
  std::vector<std::pair<long, long>> out;
  if (text.empty()) return out;
  for (const auto& g : split(text, ';')) {
    const auto ij = split(g, ',');
    if (ij.size() != 2) throw UsageError("generator '" + g + "' is not of the form i,j");
    try {
      std::size_t used_i = 0, used_j = 0;
      long i = std::stol(ij[0], &used_i);
      long j = std::stol(ij[1], &used_j);
      if (used_i != ij[0].size() || used_j != ij[1].size()) throw std::invalid_argument("trailing");
      out.emplace_back(i, j);
    } catch (const std::logic_error&) {
      throw UsageError("generator '" + g + "' is not a pair of integers");
    }
  }
  return out;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

void validate(const JobSpec& job) {
  const bool needs_prime = job.command != Command::kummer;
  if (needs_prime) {
    require(job.prime != 0, "--prime is required");
    require(job.prime >= 2 && job.prime <= (1L << 31), "--prime must lie in [2, 2^31]");
    require(!job.poly.empty(), "--poly is required");
    if (job.command != Command::newton_polygon) {
      require(job.poly.size() >= 3, "the polynomial must have degree >= 2");
      require(job.poly.back() == "1", "the polynomial must be monic (last coefficient 1)");
    }
  }
  require(job.order >= 2, "--order must be >= 2");
  require(job.precision >= 1, "--precision must be >= 1");
  require(job.levels >= 1, "--levels must be >= 1");
  require(job.max_iter >= 0, "--max-iter must be >= 0");
  require(job.samples >= 0, "--samples must be >= 0");
  const bool needs_point =
      job.command == Command::escape || job.command == Command::degrees || job.command == Command::transport;
  require(!needs_point || job.point.has_value(), "--point is required for " + command_name(job.command));
  if (job.command == Command::kummer) {
    require(job.d >= 2, "--d must be >= 2");
    require(job.N >= 1, "--N must be >= 1");
  }
}

}  // namespace

std::string command_name(Command c) {
  for (const auto& [cmd, name] : kCommands) {
    if (cmd == c) return name;
  }
  return "?";
}

Command parse_command(const std::string& name) {
  for (const auto& [cmd, n] : kCommands) {
    if (name == n) return cmd;
  }
  throw UsageError("unknown command '" + name + "'");
}

nlohmann::json to_json(const JobSpec& job) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& [i, j] : job.generators) gens.push_back({i, j});
  return nlohmann::json{
      {"command", command_name(job.command)},
      {"prime", job.prime},
      {"backend", job.backend == Backend::exact ? "exact" : "capped"},
      {"precision", job.precision},
      {"order", job.order},
      {"poly", job.poly},
      {"point", job.point ? nlohmann::json(*job.point) : nlohmann::json(nullptr)},
      {"levels", job.levels},
      {"max_iter", job.max_iter},
      {"samples", job.samples},
      {"d", job.d},
      {"N", job.N},
      {"generators", std::move(gens)},
      {"seed", job.seed},
      {"emit_latex", job.emit_latex},
  };
}

JobSpec job_from_json(const nlohmann::json& in) {
  JobSpec job;
  try {
    job.command = parse_command(in.at("command").get<std::string>());
    job.prime = in.at("prime").get<long>();
    const auto backend = in.at("backend").get<std::string>();
    require(backend == "exact" || backend == "capped", "unknown backend '" + backend + "'");
    job.backend = backend == "exact" ? Backend::exact : Backend::capped;
    job.precision = in.at("precision").get<int>();
    job.order = in.at("order").get<int>();
    job.poly = in.at("poly").get<std::vector<std::string>>();
    if (!in.at("point").is_null()) job.point = in.at("point").get<std::string>();
    job.levels = in.at("levels").get<int>();
    job.max_iter = in.at("max_iter").get<int>();
    job.samples = in.at("samples").get<int>();
    job.d = in.at("d").get<int>();
    job.N = in.at("N").get<int>();
    for (const auto& g : in.at("generators")) job.generators.emplace_back(g.at(0).get<long>(), g.at(1).get<long>());
    job.seed = in.at("seed").get<std::uint64_t>();
    job.emit_latex = in.at("emit_latex").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed inputs block: ") + e.what());
  }
  return job;
}

std::optional<JobSpec> parse_args(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"Non-archimedean Boettcher coordinates and arboreal degree certificates", "nadyn"};
  app.require_subcommand(1);

  JobSpec job;
  std::string poly_text, point_text, generator_text, backend_text = "exact";

  for (const auto& [cmd, name] : kCommands) {
    CLI::App* sub = app.add_subcommand(name);
    const Command c = cmd;
    if (c != Command::kummer) {
      sub->add_option("--prime", job.prime, "residue characteristic p");
      sub->add_option("--poly", poly_text, "coefficients a0,...,ad as rationals");
      sub->add_option("--backend", backend_text, "exact | capped")->check(CLI::IsMember({"exact", "capped"}));
      sub->add_option("--precision", job.precision, "capped relative precision / working precision");
    }
    if (c == Command::boettcher || c == Command::verify || c == Command::degrees || c == Command::transport) {
      sub->add_option("--order", job.order, "truncation order M");
    }
    if (c == Command::escape || c == Command::degrees || c == Command::transport) {
      sub->add_option("--point", point_text, "base point P as a rational");
    }
    if (c == Command::degrees) sub->add_option("--levels", job.levels, "tower levels n");
    if (c == Command::escape) sub->add_option("--max-iter", job.max_iter, "iteration cap");
    if (c == Command::verify) sub->add_option("--samples", job.samples, "sampled points for pointwise checks");
    if (c == Command::kummer) {
      sub->add_option("--d", job.d, "tree degree");
      sub->add_option("--N", job.N, "level");
      sub->add_option("--generators", generator_text, "i,j;i,j;...");
    }
    sub->add_option("--seed", job.seed, "seed for sampled checks");
    if (c == Command::boettcher || c == Command::verify) {
      sub->add_flag("--emit-latex", job.emit_latex, "add LaTeX renderings of the series");
    }
    sub->add_option("--output", job.output, "write JSON here instead of stdout");
    sub->callback([&job, c] { job.command = c; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() != static_cast<int>(CLI::ExitCodes::Success)) throw UsageError(e.what());
    app.exit(e, out, out);
    return std::nullopt;
  }

  job.backend = backend_text == "capped" ? Backend::capped : Backend::exact;
  if (!poly_text.empty()) job.poly = parse_poly(poly_text);
  if (!point_text.empty()) job.point = localfield::rational_string(localfield::parse_rational(point_text));
  job.generators = parse_generators(generator_text);
  validate(job);
  return job;
}

}  // namespace nadyn::cli
