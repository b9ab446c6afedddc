#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "stoup/congruence.hpp"
#include "stoup/focus.hpp"
#include "stoup/json_io.hpp"
#include "stoup/parser.hpp"
#include "stoup/search.hpp"

namespace {

using namespace stoup;

struct Options {
  std::string profile = "base";
  bool profile_set = false;
  std::size_t max_connectives = 8;
  std::size_t node_cap = 1000000;
  bool compact = false;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// A derivation file is a single JSON object, or (as `enumerate` emits) one
// object per line; every object must validate.
std::vector<DerivationFile> read_files(const std::string& path) {
  std::string text = read_input(path);
  std::vector<DerivationFile> out;
  try {
    out.push_back(file_from_json(ordered_json::parse(text)));
    return out;
  } catch (const nlohmann::json::parse_error&) {
    // fall through to line-by-line
  }
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(file_from_json(ordered_json::parse(line)));
  }
  if (out.empty()) throw Error("no derivation objects in '" + path + "'");
  return out;
}

void check_file(const DerivationFile& f) {
  if (f.focused)
    check_focused(f.normal, f.sequent, f.profile);
  else
    check(f.plain, f.sequent, f.profile);
}

// Focused inputs are embedded back into the plain calculus first.
DerivPtr to_plain(const DerivationFile& f) {
  check_file(f);
  return f.focused ? emb(f.normal, f.sequent, f.profile) : f.plain;
}

void print_json(const ordered_json& j, const Options& opt) {
  if (opt.compact)
    std::cout << j.dump() << "\n";
  else
    std::cout << j.dump(2) << "\n";
}

LogicProfile profile_for_file(const Options& opt, const DerivationFile& f) {
  if (opt.profile_set && LogicProfile::parse(opt.profile) != f.profile)
    throw ProfileError("--profile " + opt.profile + " conflicts with the file's profile " +
                       f.profile.name());
  return f.profile;
}

int run(int argc, char** argv) {
  CLI::App app{"proof engine for skew multiplicative-additive sequent calculi"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--profile", opt.profile,
                 "logic profile: base|units|exchange|implication|units+exchange|"
                 "units+implication")
      ->each([&](const std::string&) { opt.profile_set = true; });
  app.add_option("--max-connectives", opt.max_connectives,
                 "connective budget for search inputs (default 8)");
  app.add_option("--node-cap", opt.node_cap, "search/oracle node budget");
  bool flag_json = false, flag_pretty = false;
  app.add_flag("--json", flag_json, "compact single-line JSON output");
  app.add_flag("--pretty", flag_pretty, "pretty-printed JSON output (default)");

  std::string sequent_text, file_a, file_b;
  app.fallthrough();  // allow --profile and friends after the subcommand
  auto* prove = app.add_subcommand("prove", "search for a focused derivation");
  prove->add_option("sequent", sequent_text)->required();
  auto* enumerate = app.add_subcommand("enumerate", "list all focused derivations");
  enumerate->add_option("sequent", sequent_text)->required();
  auto* count = app.add_subcommand("count", "count congruence classes");
  count->add_option("sequent", sequent_text)->required();
  auto* normalize = app.add_subcommand("normalize", "focus a derivation file");
  normalize->add_option("file", file_a)->required();
  auto* checkc = app.add_subcommand("check", "validate a derivation file");
  checkc->add_option("file", file_a)->required();
  auto* equivc = app.add_subcommand("equiv", "compare two derivations up to congruence");
  equivc->add_option("file", file_a)->required();
  equivc->add_option("file2", file_b)->required();

  app.parse(argc, argv);
  opt.compact = flag_json && !flag_pretty;

  SearchBudget budget;
  budget.max_connectives = opt.max_connectives;
  budget.node_cap = opt.node_cap;

  if (*prove) {
    LogicProfile profile = LogicProfile::parse(opt.profile);
    Sequent s = parse_sequent(sequent_text, profile);
    auto d = derive(s, profile, budget);
    if (!d) {
      std::cout << "NOT DERIVABLE\n";
      return 1;
    }
    DerivationFile f{profile, s, true, nullptr, *d};
    print_json(file_to_json(f), opt);
    return 0;
  }
  if (*enumerate) {
    LogicProfile profile = LogicProfile::parse(opt.profile);
    Sequent s = parse_sequent(sequent_text, profile);
    for (const auto& d : enumerate_focused(s, profile, budget)) {
      DerivationFile f{profile, s, true, nullptr, d};
      std::cout << file_to_json(f).dump() << "\n";
    }
    return 0;
  }
  if (*count) {
    LogicProfile profile = LogicProfile::parse(opt.profile);
    Sequent s = parse_sequent(sequent_text, profile);
    ClassCount c = count_classes(s, profile, budget);
    if (c.caveat)
      std::cerr << "note: under exchange, distinctness of focused forms per congruence "
                   "class is conjectural\n";
    std::cout << c.classes << "\n";
    return 0;
  }
  if (*normalize) {
    auto files = read_files(file_a);
    if (files.size() != 1) throw Error("normalize expects exactly one derivation object");
    LogicProfile profile = profile_for_file(opt, files[0]);
    DerivPtr plain = to_plain(files[0]);
    FDerivPtr n = focus(plain, files[0].sequent, profile);
    DerivationFile f{profile, files[0].sequent, true, nullptr, n};
    print_json(file_to_json(f), opt);
    return 0;
  }
  if (*checkc) {
    auto files = read_files(file_a);
    for (const auto& f : files) {
      profile_for_file(opt, f);
      try {
        check_file(f);
      } catch (const CheckError& e) {
        std::cout << "INVALID: " << e.what() << "\n";
        return 1;
      }
    }
    std::cout << "OK\n";
    return 0;
  }
  if (*equivc) {
    auto fa = read_files(file_a);
    auto fb = read_files(file_b);
    if (fa.size() != 1 || fb.size() != 1)
      throw Error("equiv expects exactly one derivation object per file");
    LogicProfile profile = profile_for_file(opt, fa[0]);
    if (fa[0].profile != fb[0].profile) throw ProfileError("the two files disagree on profile");
    if (print_sequent(fa[0].sequent) != print_sequent(fb[0].sequent))
      throw Error("the two derivations prove different sequents");
    DerivPtr da = to_plain(fa[0]);
    DerivPtr db = to_plain(fb[0]);
    if (equiv(da, db, fa[0].sequent, profile)) {
      std::cout << "EQUIVALENT\n";
      return 0;
    }
    std::cout << "DISTINCT\n";
    return 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError& e) {
    return CLI::App{}.exit(e) == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
