// Command-line front end for the locus library. Everything goes through the
// C surface in locus.h, the same way an external consumer would bind it.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "locus.h"

namespace {

bool g_quiet = false;

[[noreturn]] void die(locus_status status, const std::string& message) {
  std::fprintf(stderr, "error: %s\n", message.c_str());
  std::exit(static_cast<int>(status));
}

void check(locus_status status) {
  if (status != LOCUS_OK) die(status, locus_last_error());
}

// takes ownership of a library string
std::string take(char* s) {
  std::string out = s == nullptr ? "" : s;
  locus_string_free(s);
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die(LOCUS_PARSE_ERROR, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// an existing file wins; otherwise the text is a catalog name or inline spec
std::string group_input(const std::string& arg) {
  std::ifstream probe(arg);
  return probe.good() ? slurp(arg) : arg;
}

void emit(const std::string& bytes, const std::string& out_path) {
  if (out_path.empty()) {
    std::fwrite(bytes.data(), 1, bytes.size(), stdout);
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) die(LOCUS_INVALID_ARGUMENT, "cannot write " + out_path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

void note(const std::string& line) {
  if (!g_quiet) std::fprintf(stderr, "%s\n", line.c_str());
}

size_t env_max_order() {
  const char* v = std::getenv("LOCUS_MAX_ORDER");
  if (v == nullptr || *v == '\0') return 0;
  std::string text = v;
  if (text.find_first_not_of("0123456789") != std::string::npos)
    die(LOCUS_PARSE_ERROR, "LOCUS_MAX_ORDER must be a number");
  return std::strtoull(v, nullptr, 10);
}

struct EqArgs {
  std::string group;
  std::string selector;
  std::string primes;
  std::string format = "json";
  std::string out;
};

locus_group* open_group(const std::string& arg, const std::string& primes) {
  locus_group* g = nullptr;
  check(locus_group_open(group_input(arg).c_str(), env_max_order(), &g));
  char* summary = nullptr;
  check(locus_group_summary(g, &summary));
  std::string line = take(summary);
  if (!primes.empty()) line += " (extra primes " + primes + ")";
  note(line);
  return g;
}

// inflation, geomfix, support and nfree share the whole pipeline
void run_eq(const std::string& op, const EqArgs& a) {
  locus_group* g = open_group(a.group, a.primes);
  locus_eq_locus* z = nullptr;
  check(locus_eq_compute(g, op.c_str(), a.selector.c_str(), a.primes.c_str(), &z));
  char* bytes = nullptr;
  if (a.format == "json")
    check(locus_eq_to_json(z, &bytes));
  else
    check(locus_eq_render(z, a.format.c_str(), &bytes));
  emit(take(bytes), a.out);
  locus_eq_free(z);
  locus_group_close(g);
}

void run_absfix(const EqArgs& a) {
  locus_group* g = open_group(a.group, a.primes);
  char* json = nullptr;
  check(locus_absfix_json(g, a.selector.c_str(), a.primes.c_str(), &json));
  std::string doc = take(json);
  if (a.format == "json") {
    emit(doc, a.out);
  } else {
    char* bytes = nullptr;
    check(locus_chromatic_render(doc.c_str(), "absolute-fixed", a.format.c_str(),
                                 &bytes));
    emit(take(bytes), a.out);
  }
  locus_group_close(g);
}

struct LocalizeArgs {
  std::string poset_path;
  bool sh = false;
  std::string y;
  std::string y_file;
  unsigned long long invert_at = 0;
  std::string primes;
  std::string format = "json";
  std::string out;
};

void run_localize(const LocalizeArgs& a) {
  if (a.sh == !a.poset_path.empty())
    die(LOCUS_PARSE_ERROR, "localize needs exactly one of --poset or --sh");
  std::string y = a.y;
  if (!a.y_file.empty()) y = slurp(a.y_file);

  if (a.sh) {
    char* bytes = nullptr;
    if (a.invert_at != 0) {
      if (!y.empty())
        die(LOCUS_PARSE_ERROR, "--invert-at replaces --y/--y-file");
      check(locus_sh_invert_at(a.invert_at, a.primes.c_str(), &bytes));
    } else {
      if (y.empty())
        die(LOCUS_PARSE_ERROR, "--sh needs --invert-at, --y or --y-file");
      check(locus_sh_localize(y.c_str(), a.primes.c_str(), &bytes));
    }
    std::string doc = take(bytes);
    if (a.format == "json") {
      emit(doc, a.out);
    } else {
      char* fig = nullptr;
      check(locus_chromatic_render(doc.c_str(), "localization", a.format.c_str(),
                                   &fig));
      emit(take(fig), a.out);
    }
    return;
  }

  if (y.empty()) y = "{\"members\":[]}";
  locus_poset* p = nullptr;
  check(locus_poset_open(slurp(a.poset_path).c_str(), &p));
  note("poset: " + std::to_string(locus_poset_size(p)) + " points");
  char* bytes = nullptr;
  check(locus_poset_localize(p, y.c_str(), &bytes));
  std::string z = take(bytes);
  if (a.format == "json") {
    emit(z, a.out);
  } else {
    // light region is the locus, dark region the open complement of y
    char* v = nullptr;
    check(locus_poset_complement(p, y.c_str(), &v));
    std::string complement = take(v);
    char* fig = nullptr;
    check(locus_poset_render(p, z.c_str(), "Z = locus", complement.c_str(),
                             "V = complement of Y", a.format.c_str(), &fig));
    emit(take(fig), a.out);
  }
  locus_poset_close(p);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compactness loci of geometric functors, with figures"};
  app.require_subcommand(1);
  app.add_flag("--quiet", g_quiet, "suppress the stderr summary line");

  auto add_eq = [&app](const std::string& name, const std::string& blurb,
                       const std::string& subject_flag,
                       const std::string& subject_blurb, EqArgs& a) {
    CLI::App* cmd = app.add_subcommand(name, blurb);
    cmd->fallthrough();  // lets --quiet sit after the subcommand name
    cmd->add_option("--group", a.group,
                    "catalog name (C12, D10, S4, A5, C2xC4, ...), spec file "
                    "path, or inline spec text")
        ->required();
    cmd->add_option(subject_flag, a.selector, subject_blurb)->required();
    cmd->add_option("--primes", a.primes, "extra explicit primes, comma separated");
    cmd->add_option("--format", a.format, "json (default), svg, dot or ascii");
    cmd->add_option("--out", a.out, "write to a file instead of stdout");
    return cmd;
  };

  EqArgs inflation, geomfix, support, nfree, absfix;
  CLI::App* cmd_inflation =
      add_eq("inflation", "locus of inflation along G -> G/N", "--normal",
             "normal subgroup selector: 1, G, name, order, order#i or generators",
             inflation);
  CLI::App* cmd_geomfix =
      add_eq("geomfix", "locus of geometric fixed points for a normal subgroup",
             "--normal",
             "normal subgroup selector: 1, G, name, order, order#i or generators",
             geomfix);
  CLI::App* cmd_support =
      add_eq("support", "support of the orbit G/H", "--subgroup",
             "subgroup selector: 1, G, name, order, order#i or generators",
             support);
  CLI::App* cmd_nfree =
      add_eq("nfree", "locus carved out by the N-free spectra", "--normal",
             "normal subgroup selector: 1, G, name, order, order#i or generators",
             nfree);
  CLI::App* cmd_absfix =
      add_eq("absfix",
             "chromatic locus of absolute geometric fixed points of H",
             "--subgroup",
             "subgroup selector: 1, G, name, order, order#i or generators",
             absfix);

  LocalizeArgs loc;
  CLI::App* cmd_localize = app.add_subcommand(
      "localize", "compactness locus of a finite localization");
  cmd_localize->fallthrough();
  cmd_localize->add_option("--poset", loc.poset_path,
                           "poset file: 'point a' and 'spec a b' lines");
  cmd_localize->add_flag("--sh", loc.sh,
                         "work in the chromatic spectrum of spectra");
  cmd_localize->add_option("--y", loc.y, "inverted subset, inline JSON");
  cmd_localize->add_option("--y-file", loc.y_file, "inverted subset, JSON file")
      ->excludes("--y");
  cmd_localize->add_option("--invert-at", loc.invert_at,
                           "preset: classical localization at this prime");
  cmd_localize->add_option("--primes", loc.primes,
                           "extra explicit primes, comma separated");
  cmd_localize->add_option("--format", loc.format,
                           "json (default), svg, dot or ascii");
  cmd_localize->add_option("--out", loc.out, "write to a file instead of stdout");

  size_t verify_max_order = 0;
  bool inject_failure = false;
  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "cross-check the library against first-principles oracles");
  cmd_verify->fallthrough();
  cmd_verify->add_option("--max-order", verify_max_order,
                         "catalog groups up to this order (default 60)");
  cmd_verify->add_flag("--inject-failure", inject_failure,
                       "corrupt one comparison to exercise the failure path")
      ->group("");  // test hook, hidden from --help

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(LOCUS_PARSE_ERROR);
  }

  if (cmd_inflation->parsed()) run_eq("inflation", inflation);
  if (cmd_geomfix->parsed()) run_eq("geomfix", geomfix);
  if (cmd_support->parsed()) run_eq("support", support);
  if (cmd_nfree->parsed()) run_eq("nfree", nfree);
  if (cmd_absfix->parsed()) run_absfix(absfix);
  if (cmd_localize->parsed()) run_localize(loc);
  if (cmd_verify->parsed()) {
    char* table = nullptr;
    locus_status status = locus_verify(verify_max_order, inject_failure ? 1 : 0,
                                       &table);
    std::fputs(take(table).c_str(), stdout);
    if (status != LOCUS_OK && status != LOCUS_VERIFY_FAILED)
      die(status, locus_last_error());
    return static_cast<int>(status);
  }
  return 0;
}
