#include "isokit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "isokit/errors.hpp"
#include "isokit/io.hpp"
#include "isokit/reduce.hpp"
#include "isokit/solve/graph.hpp"
#include "isokit/solve/itemset.hpp"
#include "isokit/solve/minimize.hpp"
#include "isokit/sortnet.hpp"

namespace isokit::cli {

namespace {

// Command-line failure that should exit with kExitUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  bool oracle = false;
  bool stats = false;
  std::size_t jobs = 1;
  std::optional<std::size_t> guard;
  std::uint64_t seed = 1;
  std::string out_dir;
};

std::size_t resolve_guard(const Common& c, std::size_t fallback) {
  if (c.guard) return *c.guard;
  if (const char* env = std::getenv("ISOKIT_GUARD"); env && *env) {
    std::size_t value = 0;
    std::istringstream in(env);
    if (!(in >> value) || !in.eof()) throw UsageError(std::string("ISOKIT_GUARD is not a number: ") + env);
    return value;
  }
  return fallback;
}

// Parse errors are re-thrown with the path prepended.
template <typename Parser>
auto load(const std::string& path, Parser parse) {
  const std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const StructuralError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Itemset load_itemset(const std::string& p) { return load(p, [](std::string_view t) { return parse_itemset(t); }); }
Graph load_graph(const std::string& p) { return load(p, [](std::string_view t) { return parse_graph(t); }); }
Hypergraph load_hypergraph(const std::string& p) {
  return load(p, [](std::string_view t) { return parse_hypergraph(t); });
}
ComparatorNetwork load_network(const std::string& p) {
  return load(p, [](std::string_view t) { return parse_network(t); });
}
Dataset load_dataset(const std::string& p) { return load(p, [](std::string_view t) { return parse_dataset(t); }); }

// Accepts a bare .perm file or the output of a decision command.
Permutation load_witness(const std::string& path) {
  return load(path, [](std::string_view text) {
    std::string body(text);
    std::istringstream in(body);
    std::string line, rest;
    bool skipped = false;
    while (std::getline(in, line)) {
      if (!skipped && line == "YES") {
        skipped = true;
        continue;
      }
      rest += line;
      rest += '\n';
    }
    return parse_permutation(skipped ? rest : body);
  });
}

void emit_stats(const Common& c, const solve::SearchStats& s, std::ostream& err) {
  if (c.stats) err << s.to_report();
}

void write_output(const Common& c, const std::string& name, const std::string& contents) {
  std::filesystem::create_directories(c.out_dir);
  write_file((std::filesystem::path(c.out_dir) / name).string(), contents);
}

template <typename Witness>
int report_decision(const Common& c, const std::optional<Witness>& w, std::ostream& out) {
  if (!w) {
    out << "NO\n";
    return kExitNo;
  }
  const std::string perm = serialize_permutation(w->map);
  out << "YES\n" << perm;
  if (!c.out_dir.empty()) write_output(c, "witness.perm", perm);
  return kExitYes;
}

IiInstance load_ii(const std::vector<std::string>& files) {
  return IiInstance{load_itemset(files.at(0)), load_itemset(files.at(1))};
}
GiInstance load_gi(const std::vector<std::string>& files) {
  return GiInstance{load_graph(files.at(0)), load_graph(files.at(1))};
}
HgiInstance load_hgi(const std::vector<std::string>& files) {
  return HgiInstance{load_hypergraph(files.at(0)), load_hypergraph(files.at(1))};
}

void require_same_domain(const IiInstance& inst) {
  if (inst.s.domain_size() != inst.t.domain_size())
    throw UsageError("subitemset isomorphism needs itemsets over one domain size");
}

std::string serialize_network_list(const std::vector<ComparatorNetwork>& nets) {
  std::string out;
  for (std::size_t i = 0; i < nets.size(); ++i) {
    if (i) out += '\n';
    out += serialize_network(nets[i]);
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Itemset, graph and hypergraph isomorphism toolkit", "isokit"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Common c;
  app.add_flag("--oracle", c.oracle, "Use the brute-force oracle");
  app.add_flag("--stats", c.stats, "Print search statistics to stderr");
  app.add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--guard", c.guard, "Size guard override (also ISOKIT_GUARD)");
  app.add_option("--seed", c.seed, "Seed for sampling");
  app.add_option("-o", c.out_dir, "Output directory");

  std::vector<std::string> files;
  auto two_files = [&](CLI::App* sub, const char* a, const char* b) {
    sub->add_option("files", files, std::string(a) + " " + b)->required()->expected(2);
  };

  auto* ii_check = app.add_subcommand("ii-check", "Itemset isomorphism: J(S) = T");
  two_files(ii_check, "S.is", "T.is");
  auto* ii_witness = app.add_subcommand("ii-witness", "Every J with J(S) = T");
  two_files(ii_witness, "S.is", "T.is");
  auto* si_check = app.add_subcommand("si-check", "Subitemset isomorphism: J(S) subset of T");
  two_files(si_check, "S.is", "T.is");
  auto* gi_check = app.add_subcommand("gi-check", "Graph isomorphism");
  two_files(gi_check, "G.gr", "H.gr");
  auto* hgi_check = app.add_subcommand("hgi-check", "Hypergraph isomorphism");
  two_files(hgi_check, "G.hg", "H.hg");
  std::string route = "incidence";
  hgi_check->add_option("--route", route, "incidence, itemset or gadget")
      ->check(CLI::IsMember({"incidence", "itemset", "gadget"}));

  auto* reduce_cmd = app.add_subcommand("reduce", "Apply a reduction and write the image with its index");
  two_files(reduce_cmd, "A", "B");
  auto* dir_group = reduce_cmd->add_option_group("direction");
  bool gi_to_ii = false, ii_to_hgi = false, hgi_to_gi = false;
  dir_group->add_flag("--gi-to-ii", gi_to_ii);
  dir_group->add_flag("--ii-to-hgi", ii_to_hgi);
  dir_group->add_flag("--hgi-to-gi", hgi_to_gi);
  dir_group->require_option(1);

  auto* translate = app.add_subcommand("translate-witness", "Carry a witness across a reduction");
  std::string index_path, witness_path;
  translate->add_option("--index", index_path, "map.idx written by reduce")->required();
  auto* tdir = translate->add_option_group("direction");
  bool forward = false, backward = false;
  tdir->add_flag("--forward", forward, "Source witness to reduced witness");
  tdir->add_flag("--backward", backward, "Reduced witness to source witness");
  tdir->require_option(1);
  translate->add_option("witness", witness_path)->required();

  auto* canon = app.add_subcommand("canon", "Canonical form with certificate");
  std::string single;
  canon->add_option("file", single, "S.is")->required();

  auto* minimize = app.add_subcommand("minimize", "Keep one representative per minimal class");
  minimize->add_option("file", single, "D.ds")->required();
  bool no_prefilter = false;
  minimize->add_flag("--no-prefilter", no_prefilter, "Skip the plain-subset pass");

  auto* net_outputs = app.add_subcommand("net-outputs", "Output itemset of a network");
  net_outputs->add_option("file", single, "N.net")->required();
  auto* net_sorts = app.add_subcommand("net-sorts", "Does the network sort?");
  net_sorts->add_option("file", single, "N.net")->required();

  auto* net_prefixes = app.add_subcommand("net-prefixes", "Enumerate layered prefixes");
  std::size_t channels = 0, layers = 1, sample = 0;
  net_prefixes->add_option("-n", channels, "Channels")->required();
  net_prefixes->add_option("-k", layers, "Layers");
  bool prune = false;
  net_prefixes->add_flag("--prune", prune, "Keep minimal class representatives only");
  net_prefixes->add_option("--sample", sample, "Random subset of this many prefixes (uses --seed)");

  auto* net_depth = app.add_subcommand("net-depth", "Least depth of a sorting network");
  std::size_t max_depth = 8;
  bool no_prune = false;
  net_depth->add_option("-n", channels, "Channels")->required();
  net_depth->add_option("--max-depth", max_depth, "Give up beyond this depth");
  net_depth->add_flag("--no-prune", no_prune, "Extend every network, not only representatives");

  auto* verify = app.add_subcommand("verify", "Check a witness");
  auto* kind_group = verify->add_option_group("kind");
  bool v_ii = false, v_si = false, v_gi = false, v_hgi = false;
  kind_group->add_flag("--ii", v_ii);
  kind_group->add_flag("--si", v_si);
  kind_group->add_flag("--gi", v_gi);
  kind_group->add_flag("--hgi", v_hgi);
  kind_group->require_option(1);
  verify->add_option("files", files, "A B witness")->required()->expected(3);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitYes;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitYes;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  solve::SearchStats stats;
  try {
    if (*ii_check) {
      const auto inst = load_ii(files);
      const auto j = c.oracle ? solve::ii_decide_bruteforce(inst, resolve_guard(c, solve::kDefaultGuard))
                              : solve::ii_decide(inst, &stats);
      emit_stats(c, stats, err);
      return report_decision(c, j, out);
    }
    if (*ii_witness) {
      const auto inst = load_ii(files);
      const auto all = c.oracle ? solve::ii_enumerate_bruteforce(inst, resolve_guard(c, solve::kDefaultGuard))
                                : solve::ii_enumerate(inst, &stats);
      emit_stats(c, stats, err);
      if (all.empty()) {
        out << "NO\n";
        return kExitNo;
      }
      auto sorted = all;
      std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.map < b.map; });
      out << "YES\n";
      for (const auto& j : sorted) out << serialize_permutation(j.map);
      return kExitYes;
    }
    if (*si_check) {
      const auto inst = load_ii(files);
      require_same_domain(inst);
      const auto j = c.oracle ? solve::si_decide_bruteforce(inst, resolve_guard(c, solve::kDefaultGuard))
                              : solve::si_decide(inst, &stats);
      emit_stats(c, stats, err);
      return report_decision(c, j, out);
    }
    if (*gi_check) {
      const auto inst = load_gi(files);
      const auto i = c.oracle ? solve::gi_decide_bruteforce(inst, resolve_guard(c, solve::kDefaultGuard))
                              : solve::gi_decide(inst, &stats);
      emit_stats(c, stats, err);
      return report_decision(c, i, out);
    }
    if (*hgi_check) {
      const auto inst = load_hgi(files);
      const auto r = route == "itemset" ? solve::HgiRoute::kItemset
                     : route == "gadget" ? solve::HgiRoute::kGadget
                                         : solve::HgiRoute::kIncidence;
      const auto i = c.oracle ? solve::hgi_decide_bruteforce(inst, resolve_guard(c, solve::kDefaultGuard))
                              : solve::hgi_decide(inst, r, &stats);
      emit_stats(c, stats, err);
      return report_decision(c, i, out);
    }
    if (*reduce_cmd) {
      if (c.out_dir.empty()) c.out_dir = ".";
      std::vector<std::string> written;
      auto put = [&](const std::string& name, const std::string& text) {
        write_output(c, name, text);
        written.push_back((std::filesystem::path(c.out_dir) / name).string());
      };
      if (gi_to_ii) {
        const auto inst = load_gi(files);
        const auto red = reduce::gi_to_ii(inst);
        put("S.is", serialize_itemset(red.instance.s));
        put("T.is", serialize_itemset(red.instance.t));
        put("map.idx", reduce::serialize_index(inst));
      } else if (ii_to_hgi) {
        const auto inst = load_ii(files);
        const auto red = reduce::ii_to_hgi(inst);
        put("G.hg", serialize_hypergraph(red.instance.g));
        put("H.hg", serialize_hypergraph(red.instance.h));
        put("map.idx", reduce::serialize_index(inst));
      } else {
        const auto inst = load_hgi(files);
        const auto red = reduce::hgi_to_gi(inst);
        put("G.gr", serialize_graph(red.instance.g));
        put("H.gr", serialize_graph(red.instance.h));
        put("map.idx", reduce::serialize_index(inst));
      }
      for (const auto& w : written) out << w << '\n';
      return kExitYes;
    }
    if (*translate) {
      const auto index = load(index_path, [](std::string_view t) { return reduce::parse_index(t); });
      const Permutation w = load_witness(witness_path);
      Permutation result;
      if (const auto* gi = std::get_if<GiInstance>(&index.source)) {
        const auto red = reduce::gi_to_ii(*gi);
        result = forward ? reduce::translate_witness_gi_to_ii(VertexBijection{w}, *gi, red).map
                         : reduce::translate_witness_ii_to_gi(DomainBijection{w}, *gi, red).map;
      } else if (const auto* ii = std::get_if<IiInstance>(&index.source)) {
        result = forward ? reduce::translate_witness_ii_to_hgi(DomainBijection{w}, *ii).map
                         : reduce::translate_witness_hgi_to_ii(VertexBijection{w}, *ii).map;
      } else {
        const auto& hgi = std::get<HgiInstance>(index.source);
        const auto red = reduce::hgi_to_gi(hgi);
        result = forward ? reduce::translate_witness_hgi_to_gi(VertexBijection{w}, hgi, red).map
                         : reduce::translate_witness_gi_to_hgi(VertexBijection{w}, hgi, red).map;
      }
      out << serialize_permutation(result);
      return kExitYes;
    }
    if (*canon) {
      const auto cf = solve::canonical_form(load_itemset(single));
      out << "# cert: " << serialize_permutation(cf.cert_perm.map) << serialize_itemset(cf.matrix);
      return kExitYes;
    }
    if (*minimize) {
      const auto d = load_dataset(single);
      solve::MinimizeOptions opts;
      opts.jobs = c.jobs;
      opts.subset_prefilter = !no_prefilter;
      opts.use_bruteforce = c.oracle;
      opts.guard = resolve_guard(c, solve::kDefaultGuard);
      const auto result = solve::dataset_minimize(d, opts);
      emit_stats(c, result.stats, err);
      out << "# inputs " << d.size() << " retained " << result.retained.size() << '\n';
      for (std::size_t i = 0; i < result.fates.size(); ++i) {
        const auto& f = result.fates[i];
        out << "# " << (i + 1) << ' ' << solve::to_string(f.fate) << ' ' << (f.output_index + 1) << '\n';
      }
      out << serialize_dataset(result.retained);
      return kExitYes;
    }
    if (*net_outputs) {
      const auto net = load_network(single);
      out << serialize_itemset(sortnet::output_itemset(net, resolve_guard(c, sortnet::kDefaultOutputCap)));
      return kExitYes;
    }
    if (*net_sorts) {
      const auto net = load_network(single);
      const bool ok = sortnet::sorts(net, resolve_guard(c, sortnet::kDefaultOutputCap));
      out << (ok ? "YES\n" : "NO\n");
      return ok ? kExitYes : kExitNo;
    }
    if (*net_prefixes) {
      sortnet::PrefixGuard guard;
      guard.max_channels = resolve_guard(c, guard.max_channels);
      auto prefixes = sortnet::enumerate_prefixes(channels, layers, guard);
      const std::size_t total = prefixes.size();
      if (sample > 0 && sample < prefixes.size()) {
        std::vector<ComparatorNetwork> picked;
        std::mt19937_64 rng(c.seed);
        std::sample(prefixes.begin(), prefixes.end(), std::back_inserter(picked), sample, rng);
        prefixes = std::move(picked);
      }
      out << "# prefixes " << total;
      if (sample > 0) out << " sampled " << prefixes.size();
      if (prune) {
        solve::MinimizeOptions opts;
        opts.jobs = c.jobs;
        auto pruned = sortnet::prune_prefixes(prefixes, opts);
        emit_stats(c, pruned.minimized.stats, err);
        prefixes = std::move(pruned.representatives);
        out << " representatives " << prefixes.size();
      }
      out << '\n' << serialize_network_list(prefixes);
      return kExitYes;
    }
    if (*net_depth) {
      sortnet::DepthSearchOptions opts;
      opts.prune = !no_prune;
      opts.jobs = c.jobs;
      opts.max_channels = resolve_guard(c, opts.max_channels);
      const auto result = sortnet::depth_search(channels, max_depth, opts);
      emit_stats(c, result.stats, err);
      if (!result.depth) {
        out << "not found within depth " << max_depth << '\n';
        for (const auto& l : result.levels)
          out << "level " << l.depth << " candidates " << l.candidates << " distinct " << l.distinct_outputs
              << " frontier " << l.frontier << '\n';
        return kExitNo;
      }
      out << "depth " << *result.depth << '\n';
      for (const auto& l : result.levels)
        out << "level " << l.depth << " candidates " << l.candidates << " distinct " << l.distinct_outputs
            << " frontier " << l.frontier << '\n';
      out << "witness\n" << serialize_network(*result.witness);
      if (!c.out_dir.empty()) write_output(c, "witness.net", serialize_network(*result.witness));
      return kExitYes;
    }
    if (*verify) {
      const Permutation w = load_witness(files.at(2));
      bool ok = false;
      if (v_ii) {
        ok = solve::verify_ii_witness(load_ii(files), DomainBijection{w});
      } else if (v_si) {
        const auto inst = load_ii(files);
        require_same_domain(inst);
        ok = solve::verify_si_witness(inst, DomainBijection{w});
      } else if (v_gi) {
        ok = solve::verify_gi_witness(load_gi(files), VertexBijection{w});
      } else {
        ok = solve::verify_hgi_witness(load_hgi(files), VertexBijection{w});
      }
      out << (ok ? "YES\n" : "NO\n");
      return ok ? kExitYes : kExitNo;
    }
  } catch (const GuardExceeded& e) {
    err << "guard exceeded: " << e.what() << '\n';
    return kExitGuard;
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const StructuralError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidWitness& e) {
    err << "invalid witness: " << e.what() << '\n';
    return kExitNo;
  } catch (const UnsupportedDegenerate& e) {
    err << "unsupported: " << e.what() << '\n';
    return kExitNo;
  } catch (const std::runtime_error& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace isokit::cli
