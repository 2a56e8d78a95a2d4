// declat: finite decomposable lattice toolkit.
//
// Exit codes: 0 success, 1 property failure or counterexample, 2 invalid input or usage.

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "declat/decomp.hpp"
#include "declat/gen.hpp"
#include "declat/io.hpp"
#include "declat/theorems.hpp"

using namespace declat;

namespace {

constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kInvalidInput = 2;

struct Globals {
  bool json = false;
  bool quiet = false;
};

// "catalog:NAME" always names a catalog entry; a bare argument is a file path
// if one exists and a catalog name otherwise.
Lattice resolve_input(const std::string& arg) {
  constexpr std::string_view prefix = "catalog:";
  if (arg.rfind(prefix, 0) == 0) return catalog_entry(arg.substr(prefix.size())).lattice;
  if (std::filesystem::exists(arg)) return load_lattice_file(arg);
  for (const auto& e : catalog())
    if (e.name == arg) return e.lattice;
  throw Error(ErrorCode::kIo, "no such file or catalog entry: " + arg);
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int fail(const Error& e) {
  std::cerr << "error: " << e.what() << "\n";
  return kInvalidInput;
}

std::string pair_text(const Lattice& l, Elem a, Elem b) { return l.label(a) + "," + l.label(b); }

int cmd_validate(const Globals& g, const std::string& input) {
  const Lattice l = resolve_input(input);
  const bool chain = is_totally_ordered(l);
  std::optional<DecomposabilityResult> dec;
  if (l.distributive()) dec = is_decomposable(l);

  if (g.json) {
    Json j = lattice_to_json(l);
    j["size"] = l.size();
    j["bottom"] = l.label(Lattice::bottom());
    j["top"] = l.label(l.top());
    j["totally_ordered"] = chain;
    j["distributive"] = l.distributive();
    if (const auto& w = l.distributivity_witness())
      j["distributivity_witness"] = {l.label(w->a), l.label(w->b), l.label(w->c)};
    if (dec) {
      j["decomposable"] = dec->decomposable;
      if (dec->failing_pair)
        j["failing_pair"] = {l.label(dec->failing_pair->first), l.label(dec->failing_pair->second)};
    }
    print_json(j);
    return kOk;
  }

  std::cout << "lattice: " << l.name() << "\n";
  std::cout << "size: " << l.size() << "\n";
  if (!g.quiet) {
    std::cout << "elements:";
    for (const auto& s : l.labels()) std::cout << " " << s;
    std::cout << "\n";
    std::cout << "bottom: " << l.label(Lattice::bottom()) << ", top: " << l.label(l.top()) << "\n";
  }
  std::cout << "totally ordered: " << (chain ? "yes" : "no") << "\n";
  if (const auto& w = l.distributivity_witness()) {
    std::cout << "distributive: no (witness " << l.label(w->a) << "," << l.label(w->b) << "," << l.label(w->c)
              << ")\n";
    return kOk;
  }
  std::cout << "distributive: yes, decomposable: ";
  if (dec->decomposable) {
    std::cout << "yes\n";
    if (!g.quiet)
      for (const auto& w : dec->witnesses)
        std::cout << "  split " << pair_text(l, w.a, w.b) << ": " << pair_text(l, w.abar, w.bbar) << "\n";
  } else {
    std::cout << "no (pair " << pair_text(l, dec->failing_pair->first, dec->failing_pair->second) << ")\n";
  }
  return kOk;
}

int cmd_spectrum(const Globals& g, const std::string& input) {
  const Lattice l = resolve_input(input);
  const SpectrumReport r = spectrum(l);
  if (g.json)
    print_json(spectrum_to_json(l, r));
  else
    std::cout << spectrum_to_text(l, r);
  return kOk;
}

int cmd_decompose(const Globals& g, const std::string& input, const std::string& element) {
  const Lattice l = resolve_input(input);
  const auto a = l.index_of(element);
  if (!a) throw Error(ErrorCode::kUnknownLabel, element);
  SpecialDecomposition d;
  try {
    d = decompose_special(l, *a);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNotDecomposable && e.code() != ErrorCode::kBottomElement) throw;
    std::cerr << "error: " << e.what() << "\n";
    return kPropertyFailure;
  }
  if (g.json) {
    print_json(decomposition_to_json(l, d));
    return kOk;
  }
  std::vector<std::size_t> order(d.parts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return d.parts[x] < d.parts[y]; });
  std::cout << l.label(d.element) << " =";
  for (std::size_t i = 0; i < order.size(); ++i) std::cout << (i ? " v " : " ") << l.label(d.parts[order[i]]);
  std::cout << "\n";
  if (!g.quiet)
    for (std::size_t i : order)
      std::cout << "  " << l.label(d.parts[i]) << ": value " << ideal_name(l, d.value_map[i]) << "\n";
  return kOk;
}

void print_verdict_text(const Globals& g, const TheoremVerdict& v) {
  std::cout << v.theorem_id << " " << v.lattice << ": " << to_string(v.status);
  if (v.status != VerdictStatus::kInapplicable)
    std::cout << " (" << v.instances.size() - v.failing_instances << "/" << v.instances.size() << " instances)";
  if (v.degenerate) std::cout << " [degenerate]";
  std::cout << "\n";
  if (g.quiet) return;
  if (v.status == VerdictStatus::kInapplicable && !v.note.empty()) std::cout << "  " << v.note << "\n";
  for (const auto& inst : v.instances)
    if (!inst.consistent()) std::cout << "  counterexample " << instance_to_text(inst) << "\n";
}

int cmd_check(const Globals& g, const std::string& input, const std::string& id, bool all, const CheckOptions& opts) {
  if (all == !id.empty()) throw Error(ErrorCode::kInvalidArgument, "give exactly one of a theorem id and --all");
  const Lattice l = resolve_input(input);
  const auto verdicts = all ? check_all(l, opts) : std::vector<TheoremVerdict>{check(l, id, opts)};
  bool any_fail = false;
  Json out = Json::array();
  for (const auto& v : verdicts) {
    any_fail = any_fail || v.status == VerdictStatus::kFails;
    if (g.json)
      out.push_back(verdict_to_json(v));
    else
      print_verdict_text(g, v);
  }
  if (g.json) print_json(all ? out : out.front());
  return any_fail ? kPropertyFailure : kOk;
}

// Catalog name of a lattice isomorphic to l, if any.
std::string catalog_alias(const Lattice& l) {
  const auto form = lattice_canonical_form(l);
  for (const auto& e : catalog())
    if (e.lattice.size() == l.size() && lattice_canonical_form(e.lattice) == form) return e.name;
  return {};
}

struct SweepResult {
  bool decomposable = false;
  std::vector<TheoremVerdict> failures;
  std::optional<Instance> witness;
};

int cmd_sweep(const Globals& g, std::size_t max_n, const std::string& theorem, const std::string& search,
              unsigned threads, const CheckOptions& opts) {
  if (!theorem.empty() && !search.empty()) throw Error(ErrorCode::kInvalidArgument, "--theorem and --search conflict");
  if (!theorem.empty()) registry_entry(theorem);
  std::optional<Implication> imp;
  if (!search.empty()) imp = parse_implication(search);
  const auto lattices = distributive_lattices(max_n);

  std::vector<SweepResult> results(lattices.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < lattices.size(); i = next++) {
      const Lattice& l = lattices[i];
      SweepResult& r = results[i];
      r.decomposable = is_decomposable(l).decomposable;
      if (imp) {
        r.witness = find_implication_failure(l, *imp, opts);
      } else if (r.decomposable) {
        auto verdicts = theorem.empty() ? check_all(l, opts) : std::vector<TheoremVerdict>{check(l, theorem, opts)};
        for (auto& v : verdicts)
          if (v.status == VerdictStatus::kFails) r.failures.push_back(std::move(v));
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1U, threads); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::size_t decomposable = 0, failures = 0;
  Json listed = Json::array();
  for (std::size_t i = 0; i < lattices.size(); ++i) {
    const Lattice& l = lattices[i];
    SweepResult& r = results[i];
    decomposable += r.decomposable ? 1 : 0;
    const std::string alias = catalog_alias(l);
    const std::string shown = alias.empty() ? l.name() : l.name() + " (" + alias + ")";
    if (r.witness && !alias.empty()) {
      // Report the witness in the catalog labelling.
      const Lattice named = catalog_entry(alias).lattice;
      if (auto w = find_implication_failure(named, *imp, opts)) r.witness = w;
    }
    if (r.witness) {
      ++failures;
      if (g.json)
        listed.push_back({{"lattice", l.name()}, {"catalog", alias}, {"witness", instance_to_json(*r.witness)}});
      else
        std::cout << shown << ": " << instance_to_text(*r.witness) << "\n";
    }
    for (const auto& v : r.failures) {
      ++failures;
      if (g.json) {
        Json j = verdict_to_json(v);
        j["catalog"] = alias;
        listed.push_back(j);
      } else if (!g.quiet) {
        std::cout << shown << " " << v.theorem_id << ": fails";
        if (v.counterexample) std::cout << " at " << instance_to_text(*v.counterexample);
        std::cout << "\n";
      }
    }
  }
  if (g.json) {
    print_json({{"lattices", lattices.size()},
                {"decomposable", decomposable},
                {"failures", failures},
                {imp ? "witnesses" : "failing", listed}});
  } else {
    std::cout << "lattices: " << lattices.size() << ", decomposable: " << decomposable << ", failures: " << failures
              << "\n";
  }
  return failures == 0 ? kOk : kPropertyFailure;
}

int cmd_export_dot(const std::string& input, const std::string& out_path) {
  const Lattice l = resolve_input(input);
  const std::string dot = to_dot(l);
  if (out_path.empty() || out_path == "-") {
    std::cout << dot;
    return kOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out || !(out << dot)) throw Error(ErrorCode::kIo, "cannot write " + out_path);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite distributive lattices: spectra, decompositions and theorem checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Emit JSON");
  app.add_flag("-q,--quiet", g.quiet, "Summary lines only");

  std::string input;
  auto* validate = app.add_subcommand("validate", "Validate a lattice file and summarise it");
  validate->add_option("input", input, "Lattice JSON file or catalog name")->required();

  auto* spec = app.add_subcommand("spectrum", "Ideals, primes, values, specials, polars");
  spec->add_option("input", input, "Lattice JSON file or catalog name")->required();

  std::string element;
  auto* decompose = app.add_subcommand("decompose", "Split an element into disjoint special elements");
  decompose->add_option("input", input, "Lattice JSON file or catalog name")->required();
  decompose->add_option("element", element, "Element label")->required();

  std::string theorem;
  bool all = false;
  CheckOptions opts;
  bool ideal_chains = false;
  auto* checkc = app.add_subcommand("check", "Run registry checkers on one lattice");
  checkc->add_option("input", input, "Lattice JSON file or catalog name")->required();
  checkc->add_option("theorem", theorem, "Registry id");
  checkc->add_flag("--all", all, "Run every checker");
  checkc->add_flag("--force", opts.force, "Evaluate even without decomposability");
  checkc->add_flag("--ideal-chains", ideal_chains, "Read maximal chains of values inside Ide(L)");

  std::size_t max_n = 0;
  std::string search;
  unsigned threads = 1;
  auto* sweep = app.add_subcommand("sweep", "Check every distributive lattice up to a size");
  sweep->add_option("--max-n", max_n, "Largest lattice size")->required();
  sweep->add_option("--theorem", theorem, "Single registry id");
  sweep->add_option("--search", search, "Implication to falsify, e.g. T3.1:(2)=>(1)");
  sweep->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1U, 256U));
  sweep->add_flag("--ideal-chains", ideal_chains, "Read maximal chains of values inside Ide(L)");

  std::string out_path;
  auto* dot = app.add_subcommand("export-dot", "Hasse diagram in DOT");
  dot->add_option("input", input, "Lattice JSON file or catalog name")->required();
  dot->add_option("-o,--output", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidInput;
  }
  if (ideal_chains) opts.chain_reading = ChainReading::kMaximalInIdealLattice;

  try {
    if (*validate) return cmd_validate(g, input);
    if (*spec) return cmd_spectrum(g, input);
    if (*decompose) return cmd_decompose(g, input, element);
    if (*checkc) return cmd_check(g, input, theorem, all, opts);
    if (*sweep) return cmd_sweep(g, max_n, theorem, search, threads, opts);
    if (*dot) return cmd_export_dot(input, out_path);
  } catch (const Error& e) {
    return fail(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kInvalidInput;
}
