// latscreen: screeners, decompositions and screening pairs of integral lattices.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "latscreen/report.hpp"

using namespace latscreen;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitMismatch = 3;

void print_error(const std::string& code, const std::string& message) {
  std::cerr << Json{{"error", {{"code", code}, {"message", message}}}}.dump() << '\n';
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw LatticeError(ErrorCode::kParse, "cannot open input file '" + path + "'");
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Screeners of positive definite integral lattices"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string input;
  std::string format = "json";
  std::optional<std::uint64_t> seed;
  std::int64_t max_r = 50;
  std::int64_t scale = 1;
  app.add_option("--input", input, "Lattice file (JSON object or whitespace block); '-' reads stdin");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", seed, "Seed for randomized commands");
  app.add_option("--max-r", max_r, "Search bound for type IV solutions (pairs)")->check(CLI::PositiveNumber);
  app.add_option("--scale", scale, "Scale factor (catalog)")->check(CLI::PositiveNumber);

  auto* screeners = app.add_subcommand("screeners", "List all screeners");
  auto* decompose = app.add_subcommand("decompose", "Screener sublattices and root-lattice components");
  auto* classify = app.add_subcommand("classify", "Extended type of a lattice generated by its screeners");
  auto* rank2 = app.add_subcommand("rank2", "Rank-2 normal form and predicted screeners");

  auto* pairs = app.add_subcommand("pairs", "Screening-pair data for a momentum vector");
  std::vector<std::int64_t> vector;
  pairs->add_option("--vector", vector, "Coordinates, comma separated (use --vector=1,-1 for negatives)")
      ->required()
      ->delimiter(',');

  auto* cat = app.add_subcommand("catalog", "Gram matrix of a scaled simply laced root lattice");
  std::string type;
  std::optional<std::size_t> cat_rank;
  cat->add_option("--type", type, "A, D or E, optionally with rank (D_4, E8)")->required();
  cat->add_option("--rank", cat_rank, "Rank when --type is a bare letter");

  auto* oracle = app.add_subcommand("oracle-check", "Compare all_screeners with a brute-force box scan");
  std::size_t max_rank = 4;
  std::size_t cases = 200;
  std::int64_t max_entry = 8;
  bool timing = false;
  oracle->add_option("--rank", max_rank, "Largest rank; ranks are drawn from [1, rank]")->check(CLI::PositiveNumber);
  oracle->add_option("--cases", cases, "Number of random lattices");
  oracle->add_option("--max-entry", max_entry, "Bound on Gram entries")->check(CLI::PositiveNumber);
  oracle->add_flag("--timing", timing, "Per-case timing on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const bool needs_input = !cat->parsed() && !oracle->parsed();
  if (needs_input && input.empty()) {
    std::cerr << "--input is required for this command\n";
    return kExitUsage;
  }
  if (oracle->parsed() && !seed) {
    std::cerr << "oracle-check needs --seed\n";
    return kExitUsage;
  }

  try {
    Report r;
    if (needs_input) {
      const LatticeFile in = parse_lattice_file(read_input(input));
      if (screeners->parsed()) r = cmd_screeners(in);
      else if (decompose->parsed()) r = cmd_decompose(in);
      else if (classify->parsed()) r = cmd_classify(in);
      else if (rank2->parsed()) r = cmd_rank2(in);
      else r = cmd_pairs(in, vector, max_r);
    } else if (cat->parsed()) {
      r = cmd_catalog(type, cat_rank, scale);
    } else {
      r = cmd_oracle_check(*seed, max_rank, cases, max_entry);
    }
    if (format == "json") {
      std::cout << r.doc.dump(2) << '\n';
    } else {
      std::cout << render_text(r.doc);
    }
    if (timing && r.timing.is_array()) {
      double fast = 0, box = 0;
      for (const auto& t : r.timing) {
        std::cerr << "case " << t["case"].get<std::size_t>() << ": all_screeners " << t["fast_ms"].get<double>()
                  << " ms, box " << t["box_ms"].get<double>() << " ms\n";
        fast += t["fast_ms"].get<double>();
        box += t["box_ms"].get<double>();
      }
      std::cerr << "total: all_screeners " << fast << " ms, box " << box << " ms\n";
    }
    return r.mismatch ? kExitMismatch : 0;
  } catch (const LatticeError& e) {
    print_error(std::string(to_string(e.code())), e.what());
    return kExitInput;
  }
}
