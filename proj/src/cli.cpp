#include "ordercraft/cli.hpp"

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ordercraft/constructions.hpp"
#include "ordercraft/io.hpp"
#include "ordercraft/semilattice.hpp"
#include "ordercraft/theoremlab.hpp"

namespace oc {

namespace {

// Errors raised while reading an input file map to the invalid-input status.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename F>
auto load(const std::string& path, F&& parse) {
  try {
    return parse(read_json_file(path));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::BudgetExceeded) throw;
    throw InputError(path + ": " + e.what());
  }
}

Poset load_poset(const std::string& path) {
  return load(path, [](const Json& j) { return poset_from_json(j); });
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) out << text;
  else write_text_file(path, text);
}

std::vector<Element> parse_list(const std::string& s) {
  std::vector<Element> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    try {
      std::size_t used = 0;
      long long v = std::stoll(tok, &used);
      if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
      out.push_back(static_cast<Element>(v));
    } catch (const std::exception&) {
      throw CLI::ValidationError("list", "'" + tok + "' is not a non-negative integer");
    }
  }
  return out;
}

EmbeddingMode parse_mode(const std::string& m) {
  if (m == "order") return EmbeddingMode::Order;
  if (m == "join") return EmbeddingMode::Join;
  if (m == "meet") return EmbeddingMode::Meet;
  return EmbeddingMode::Sublattice;
}

int exit_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::BudgetExceeded: return kExitBudget;
    case ErrorCode::UnsupportedParams:
    case ErrorCode::UnsupportedOrdinal:
    case ErrorCode::UnknownSuite: return kExitUsage;
    case ErrorCode::InvalidInput: return kExitInput;
    default: return kExitFail;
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite order theory toolkit", "ordercraft"};
  app.require_subcommand(1);
  std::string out_path;

  // generate
  auto* gen = app.add_subcommand("generate", "Generate a family poset");
  std::string family, spec_path, scheme, coeffs;
  std::optional<std::int64_t> n, a, block, seed;
  std::vector<std::string> kv;
  bool with_bottom = false, gen_dot = false;
  gen->add_option("--family", family, "Family name");
  gen->add_option("--spec", spec_path, "FamilySpec JSON file");
  gen->add_option("--n", n, "Truncation parameter")->check(CLI::NonNegativeNumber);
  gen->add_option("--a", a, "Chain length for l_alpha")->check(CLI::NonNegativeNumber);
  gen->add_option("--coeffs", coeffs, "Ordinal coefficients c0,c1,... (low first)");
  gen->add_option("--scheme", scheme, "Sierpinskisation scheme")
      ->check(CLI::IsMember({"column-alternating", "block", "seeded-shuffle"}));
  gen->add_option("--block", block, "Block size for the block scheme")->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed, "Seed for the seeded-shuffle scheme")->check(CLI::NonNegativeNumber);
  gen->add_option("--param", kv, "Extra key=value parameter");
  gen->add_flag("--with-bottom", with_bottom, "Add a least element");
  gen->add_flag("--dot", gen_dot, "Emit DOT instead of JSON");
  gen->add_option("--out", out_path, "Output file");

  // analyze
  auto* ana = app.add_subcommand("analyze", "Report order and lattice structure");
  std::string in_path;
  ana->add_option("--in", in_path, "Poset JSON")->required();

  // embed
  auto* emb = app.add_subcommand("embed", "Search for an embedding of a pattern");
  std::string pattern_path, target_path, mode = "order";
  emb->add_option("--pattern", pattern_path, "Pattern poset JSON")->required();
  emb->add_option("--target", target_path, "Target poset JSON")->required();
  emb->add_option("--mode", mode, "order, join, meet or sublattice")->check(CLI::IsMember({"order", "join", "meet", "sublattice"}));
  emb->add_option("--out", out_path, "Output file");

  // ideals
  auto* ide = app.add_subcommand("ideals", "Enumerate downsets or ideals, or build the downset lattice");
  std::string what = "downsets";
  ide->add_option("--in", in_path, "Poset JSON")->required();
  ide->add_option("--kind", what, "downsets, ideals or lattice")->check(CLI::IsMember({"downsets", "ideals", "lattice"}));
  ide->add_option("--out", out_path, "Output file");

  // ramsey
  auto* ram = app.add_subcommand("ramsey", "Classify a monochromatic subset of an antichain");
  std::string antichain;
  std::size_t m = 3;
  ram->add_option("--in", in_path, "Meet-semilattice poset JSON")->required();
  ram->add_option("--antichain", antichain, "Comma-separated antichain elements")->required();
  ram->add_option("--m", m, "Subset size")->check(CLI::Range(3, 64));
  ram->add_option("--out", out_path, "Output file");

  // dichotomy
  auto* dic = app.add_subcommand("dichotomy", "Extract a descending chain or a grid from a chain of ideals");
  std::size_t depth = 1;
  dic->add_option("--in", in_path, "Chain JSON: a downset family listed from the largest member down")->required();
  dic->add_option("--depth", depth, "Depth")->check(CLI::PositiveNumber);
  dic->add_option("--out", out_path, "Output file");

  // separating
  auto* sep = app.add_subcommand("separating", "Test a chain of ideals and extract an independent set");
  sep->add_option("--in", in_path, "Chain JSON")->required();
  sep->add_option("--out", out_path, "Output file");

  // pipeline
  auto* pip = app.add_subcommand("pipeline", "Run the sublattice pipeline on a distributive lattice");
  std::size_t k = 4;
  pip->add_option("--in", in_path, "Distributive lattice poset JSON")->required();
  pip->add_option("--k", k, "Independence target")->check(CLI::NonNegativeNumber);
  pip->add_option("--out", out_path, "Output file");

  // verify
  auto* ver = app.add_subcommand("verify", "Run a property suite");
  std::string suite_name;
  SuiteOptions sopts;
  ver->add_option("--suite", suite_name, "Suite name")->required();
  ver->add_option("--trials", sopts.trials, "Trials")->check(CLI::NonNegativeNumber);
  ver->add_option("--seed", sopts.seed, "Seed");
  ver->add_option("--max-n", sopts.max_n, "Size bound")->check(CLI::NonNegativeNumber);
  ver->add_option("--jobs", sopts.jobs, "Worker threads");
  ver->add_flag("--inject-fault", sopts.inject_fault, "Plant one failing trial (lem2_3)");

  // verify-cert
  auto* vc = app.add_subcommand("verify-cert", "Re-check a certificate file");
  vc->add_option("--in", in_path, "Certificate JSON")->required();

  // export
  auto* exp = app.add_subcommand("export", "Export a poset");
  bool dot = false;
  exp->add_option("--in", in_path, "Poset JSON")->required();
  exp->add_flag("--dot", dot, "Hasse diagram in DOT");
  exp->add_option("--out", out_path, "Output file");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      FamilySpec spec;
      if (!spec_path.empty()) spec = load(spec_path, [](const Json& j) { return spec_from_json(j); });
      if (!family.empty()) spec.family = family;
      if (spec.family.empty()) {
        err << "generate: --family or --spec is required\n";
        return kExitUsage;
      }
      if (n) spec.params["n"] = *n;
      if (a) spec.params["a"] = *a;
      if (block) spec.params["block"] = *block;
      if (seed) spec.params["seed"] = *seed;
      if (!coeffs.empty()) {
        auto cs = parse_list(coeffs);
        for (std::size_t i = 0; i < cs.size(); ++i) spec.params["c" + std::to_string(i)] = cs[i];
      }
      for (const auto& entry : kv) {
        auto eq = entry.find('=');
        if (eq == std::string::npos) {
          err << "generate: --param expects key=value\n";
          return kExitUsage;
        }
        try {
          spec.params[entry.substr(0, eq)] = std::stoll(entry.substr(eq + 1));
        } catch (const std::exception&) {
          err << "generate: parameter value '" << entry.substr(eq + 1) << "' is not an integer\n";
          return kExitUsage;
        }
      }
      if (with_bottom) spec.with_bottom = true;
      if (!scheme.empty()) spec.scheme = scheme;
      Poset p = generate(spec);
      emit(gen_dot ? to_dot(p, spec.family) : dump(to_json(p)), out_path, out);
      return kExitOk;
    }
    if (ana->parsed()) {
      Poset p = load_poset(in_path);
      BasicStats st = basic_stats(p);
      StructureReport sr = structure_report(p);
      Json j{{"n", p.size()},
             {"relation_size", p.relation_size()},
             {"minimals", st.minimals},
             {"maximals", st.maximals},
             {"height", st.height},
             {"width", st.width},
             {"linear_extension", st.linear_extension},
             {"is_join_semilattice", sr.is_join_semilattice},
             {"is_meet_semilattice", sr.is_meet_semilattice},
             {"is_lattice", sr.is_lattice},
             {"is_distributive", sr.is_distributive},
             {"is_modular", sr.is_modular}};
      if (sr.is_lattice) {
        j["join_irreducibles"] = join_irreducibles(p);
        j["join_primes"] = join_primes(p);
      }
      out << dump(j);
      return kExitOk;
    }
    if (emb->parsed()) {
      Poset pat = load_poset(pattern_path), tgt = load_poset(target_path);
      auto w = embedding_search(pat, tgt, parse_mode(mode));
      if (!w) {
        out << dump(Json{{"found", false}});
        return kExitFail;
      }
      emit(dump(Json{{"found", true}, {"witness", to_json(*w)}}), out_path, out);
      return kExitOk;
    }
    if (ide->parsed()) {
      Poset p = load_poset(in_path);
      if (what == "lattice") emit(dump(to_json(downset_lattice(p))), out_path, out);
      else emit(dump(to_json(what == "ideals" ? enumerate_ideals(p) : enumerate_downsets(p))), out_path, out);
      return kExitOk;
    }
    if (ram->parsed()) {
      Poset p = load_poset(in_path);
      Certificate c = ramsey_extract(p, parse_list(antichain), m);
      emit(dump(to_json(c)), out_path, out);
      return kExitOk;
    }
    if (dic->parsed() || sep->parsed()) {
      DownSetFamily f = load(in_path, [](const Json& j) { return family_from_json(j); });
      ChainOfDownSets chain = load(in_path, [&](const Json&) { return ChainOfDownSets::make(f.host, f.sets); });
      Certificate c;
      if (dic->parsed()) {
        c = dichotomy_extract(chain, depth);
      } else {
        Separation s = is_separating(chain);
        if (!s.separating) {
          out << dump(Json{{"separating", false}, {"member", s.member}, {"x", s.x}});
          return kExitFail;
        }
        c = independent_from_separating(chain);
      }
      emit(dump(to_json(c)), out_path, out);
      return c.stalled_at ? kExitFail : kExitOk;
    }
    if (pip->parsed()) {
      Poset t = load_poset(in_path);
      Certificate c = thm8_pipeline(t, k);
      emit(dump(to_json(c)), out_path, out);
      return verify_certificate(c) ? kExitOk : kExitFail;
    }
    if (ver->parsed()) {
      SuiteReport r = run_suite(suite_name, sopts);
      out << dump(to_json(r));
      return r.failures.empty() ? kExitOk : kExitFail;
    }
    if (vc->parsed()) {
      Certificate c = load(in_path, [](const Json& j) { return certificate_from_json(j); });
      auto fresh = recheck(c);
      const bool ok = verify_certificate(c);
      Json ev = Json::array();
      for (const auto& x : fresh) ev.push_back({{"name", x.name}, {"holds", x.holds}});
      out << dump(Json{{"valid", ok}, {"kind", kind_name(c.kind)}, {"evidence", ev}});
      return ok ? kExitOk : kExitFail;
    }
    if (exp->parsed()) {
      Poset p = load_poset(in_path);
      emit(dot ? to_dot(p) : dump(to_json(p)), out_path, out);
      return kExitOk;
    }
  } catch (const InputError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInput;
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_for(e.code());
  }
  return kExitUsage;
}

}  // namespace oc
