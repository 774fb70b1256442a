#include "powerful/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "powerful/enumerate.hpp"
#include "powerful/io.hpp"
#include "powerful/minors.hpp"

namespace powerful {

namespace {

using json = nlohmann::ordered_json;

json labels_json(Mask x) { return json(labels_of(x)); }

AnalysisOutput analyze_impl(const Indicator& f) {
  AnalysisOutput a;
  a.order = f.order();
  a.size = f.total();
  for (auto v : f.values())
    if (v > 1) a.multiset = true;

  const Multiset m(f);
  if (f[0] >= 1) {
    const RankTable rt = rank_table(m);
    a.powerful = rt.all_integer();
    if (rt.is_integer(rt.full_mask())) a.rank = rt.rank_of_ground();
  }

  if (!a.multiset && a.size > 0) {
    std::vector<Mask> members;
    for (Mask x = 0; x < f.table_size(); ++x)
      if (f[x]) members.push_back(x);
    const SetSystem s = make_set_system(f.order(), std::move(members));
    for (int e = 1; e <= s.order(); ++e)
      a.elements.push_back(classify_element(s, e));
    a.cocircuit_masks = cocircuits(s).members();
    if (s.contains(0)) a.linearity = linearity_report(s);
    if (a.powerful)
      for (int e = 1; e <= s.order(); ++e)
        if (is_deletable(s, e)) a.deletable.push_back(e);
  }
  return a;
}

void print_analysis_text(std::ostream& out, const AnalysisOutput& a) {
  out << "multiset: " << (a.multiset ? "yes" : "no") << '\n';
  out << "order: " << a.order << '\n';
  out << "size: " << a.size << '\n';
  out << "powerful: " << (a.powerful ? "yes" : "no") << '\n';
  if (a.rank)
    out << "rank: " << *a.rank << '\n';
  else
    out << "rank: non-integer\n";
  for (const ElementClass& c : a.elements) {
    out << "element " << c.element << ':';
    bool any = false;
    if (c.is_loop) out << " loop", any = true;
    if (c.is_coloop) out << " coloop", any = true;
    if (c.is_frame) out << " frame", any = true;
    if (c.is_star) out << " star", any = true;
    if (!any) out << " ordinary";
    out << '\n';
  }
  if (!a.multiset && a.size > 0) {
    out << "cocircuits:";
    for (Mask c : a.cocircuit_masks) out << ' ' << format_mask(c);
    if (a.cocircuit_masks.empty()) out << " (none)";
    out << '\n';
  }
  if (a.linearity) {
    const LinearCheck& lc = a.linearity->linear;
    out << "linear: " << (lc.linear ? "yes" : "no");
    if (lc.witness)
      out << " (" << format_mask(lc.witness->first) << " xor "
          << format_mask(lc.witness->second) << " missing)";
    out << '\n';
    const SubcardinalCheck& sc = a.linearity->subcardinal;
    out << "subcardinal: " << (sc.subcardinal ? "yes" : "no");
    if (sc.witness) out << " (witness " << format_mask(*sc.witness) << ")";
    out << '\n';
  }
  if (a.powerful && !a.multiset) {
    out << "deletable:";
    for (int e : a.deletable) out << ' ' << e;
    if (a.deletable.empty()) out << " (none)";
    out << '\n';
  }
}

json analysis_json(const AnalysisOutput& a) {
  json j;
  j["multiset"] = a.multiset;
  j["order"] = a.order;
  j["size"] = a.size;
  j["powerful"] = a.powerful;
  j["rank"] = a.rank ? json(*a.rank) : json(nullptr);
  json elems = json::array();
  for (const ElementClass& c : a.elements)
    elems.push_back({{"element", c.element},
                     {"loop", c.is_loop},
                     {"coloop", c.is_coloop},
                     {"frame", c.is_frame},
                     {"star", c.is_star}});
  j["elements"] = std::move(elems);
  json cocs = json::array();
  for (Mask c : a.cocircuit_masks) cocs.push_back(labels_json(c));
  j["cocircuits"] = std::move(cocs);
  if (a.linearity) {
    const LinearCheck& lc = a.linearity->linear;
    const SubcardinalCheck& sc = a.linearity->subcardinal;
    j["linear"] = lc.linear;
    j["linear_witness"] =
        lc.witness ? json::array({labels_json(lc.witness->first),
                                  labels_json(lc.witness->second)})
                   : json(nullptr);
    j["subcardinal"] = sc.subcardinal;
    j["subcardinal_witness"] =
        sc.witness ? labels_json(*sc.witness) : json(nullptr);
  } else {
    j["linear"] = nullptr;
    j["linear_witness"] = nullptr;
    j["subcardinal"] = nullptr;
    j["subcardinal_witness"] = nullptr;
  }
  j["deletable"] = json(a.deletable);
  return j;
}

Indicator load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_system(in);
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

struct Options {
  std::string format = "text";
  std::string file;
  std::string subset;
  std::string contract_labels;
  std::string delete_labels;
  int order = 0;
  std::optional<int> rank_filter;
  bool count_only = false;
  std::string cache;
  std::string theorem;
};

int cmd_analyze(const Options& o, std::ostream& out) {
  const Indicator f = load_file(o.file);
  const AnalysisOutput a = analyze_impl(f);
  if (o.format == "json")
    emit_json(out, analysis_json(a));
  else
    print_analysis_text(out, a);
  return 0;
}

int cmd_rank(const Options& o, std::ostream& out) {
  const Indicator f = load_file(o.file);
  const Mask x = parse_label_list(o.subset, f.order());
  const RankTable rt = rank_table(Multiset(f));
  const bool integer = rt.is_integer(x);
  if (o.format == "json") {
    json j;
    j["subset"] = labels_json(x);
    j["rank"] = integer ? json(rt.at(x)) : json(nullptr);
    emit_json(out, j);
  } else {
    if (integer)
      out << rt.at(x) << '\n';
    else
      out << "non-integer\n";
  }
  return 0;
}

int cmd_minor(const Options& o, std::ostream& out) {
  const Indicator f = load_file(o.file);
  MinorSpec spec;
  spec.contract = parse_label_list(o.contract_labels, f.order());
  spec.del = parse_label_list(o.delete_labels, f.order());
  const Multiset res = minor(Multiset(f), spec);
  std::vector<int> ground;
  for (int e = 1; e <= f.order(); ++e)
    if (((spec.contract | spec.del) >> (e - 1) & 1u) == 0) ground.push_back(e);
  if (o.format == "json") {
    json j;
    j["n"] = res.order();
    j["ground"] = json(ground);
    json members = json::array();
    const Indicator& g = res.indicator();
    for (Mask x = 0; x < g.table_size(); ++x)
      if (g[x])
        members.push_back(
            {{"subset", labels_json(x)}, {"multiplicity", g[x]}});
    j["members"] = std::move(members);
    emit_json(out, j);
  } else {
    write_system(out, res.indicator(), &ground);
  }
  return 0;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  EnumFilter filter;
  filter.rank = o.rank_filter;
  const std::vector<SetSystem> all = enumerate_powerful(o.order, filter);
  if (o.format == "json") {
    json j;
    j["order"] = o.order;
    if (o.rank_filter) j["rank"] = *o.rank_filter;
    j["count"] = all.size();
    if (!o.count_only) {
      json systems = json::array();
      for (const SetSystem& s : all) {
        json members = json::array();
        for (Mask m : s.members()) members.push_back(labels_json(m));
        systems.push_back(std::move(members));
      }
      j["systems"] = std::move(systems);
    }
    emit_json(out, j);
    return 0;
  }
  if (o.count_only) {
    out << all.size() << '\n';
    return 0;
  }
  for (const SetSystem& s : all) {
    bool first = true;
    for (Mask m : s.members()) {
      if (!first) out << ' ';
      out << format_mask(m);
      first = false;
    }
    out << '\n';
  }
  return 0;
}

int cmd_census(const Options& o, std::ostream& out) {
  const EnumerationReport rep =
      o.cache.empty() ? census(o.order) : census_cached(o.order, o.cache);
  // runtime_seconds is deliberately not printed: identical inputs must give
  // byte-identical output.
  if (o.format == "json") {
    json j;
    j["order"] = rep.n;
    j["total"] = rep.total;
    json br = json::object();
    for (const auto& [r, c] : rep.by_rank) br[std::to_string(r)] = c;
    j["by_rank"] = std::move(br);
    j["linear"] = rep.linear_count;
    j["nonlinear"] = rep.nonlinear_count;
    j["with_star"] = rep.with_star_count;
    emit_json(out, j);
    return 0;
  }
  out << "order: " << rep.n << '\n';
  out << "total: " << rep.total << '\n';
  for (const auto& [r, c] : rep.by_rank)
    out << "rank " << r << ": " << c << '\n';
  out << "linear: " << rep.linear_count << '\n';
  out << "nonlinear: " << rep.nonlinear_count << '\n';
  out << "with star: " << rep.with_star_count << '\n';
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const VerificationReport rep = verify_theorem(o.order, o.theorem);
  if (o.format == "json") {
    json j;
    j["theorem"] = rep.theorem_id;
    j["order"] = o.order;
    j["instances"] = rep.instances_checked;
    j["counterexamples"] = json(rep.counterexamples);
    emit_json(out, j);
  } else {
    out << rep.theorem_id << ": " << rep.counterexamples.size()
        << " counterexamples / " << rep.instances_checked << " instances\n";
    for (const std::string& c : rep.counterexamples) out << "  " << c << '\n';
  }
  return rep.counterexamples.empty() ? 0 : 2;
}

}  // namespace

AnalysisOutput analyze(const Indicator& f) { return analyze_impl(f); }

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Analyze, enumerate and verify powerful sets"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --format appear after the subcommand
  Options o;
  app.add_option("--format", o.format, "Output rendering")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "Full report on a set-system file");
  analyze_cmd->add_option("file", o.file, "Input file")->required();

  CLI::App* rank_cmd = app.add_subcommand("rank", "Rank of one subset");
  rank_cmd->add_option("file", o.file, "Input file")->required();
  rank_cmd
      ->add_option("--subset", o.subset,
                   "Comma-separated 1-indexed labels; empty string is the "
                   "empty set")
      ->required();

  CLI::App* minor_cmd =
      app.add_subcommand("minor", "Contract / delete elements");
  minor_cmd->add_option("file", o.file, "Input file")->required();
  minor_cmd->add_option("--contract", o.contract_labels,
                        "Labels to contract, comma-separated");
  minor_cmd->add_option("--delete", o.delete_labels,
                        "Labels to delete, comma-separated");

  CLI::App* enum_cmd =
      app.add_subcommand("enumerate", "List all powerful sets of one order");
  enum_cmd->add_option("--order", o.order, "Ground-set size")->required();
  int rank_flag = -1;
  enum_cmd->add_option("--rank", rank_flag, "Keep only rank r(E) = r");
  enum_cmd->add_flag("--count-only", o.count_only, "Print only the count");

  CLI::App* census_cmd =
      app.add_subcommand("census", "Summary statistics for one order");
  census_cmd->add_option("--order", o.order, "Ground-set size")->required();
  census_cmd->add_option("--cache", o.cache, "Results file to reuse/create");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Machine-check one result exhaustively");
  verify_cmd->add_option("--order", o.order, "Ground-set size")->required();
  std::ostringstream ids;
  for (const std::string& id : theorem_ids()) ids << ' ' << id;
  verify_cmd->add_option("--theorem", o.theorem, "One of:" + ids.str())
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return 1;
  }

  if (rank_flag >= 0) o.rank_filter = rank_flag;
  try {
    if (analyze_cmd->parsed()) return cmd_analyze(o, out);
    if (rank_cmd->parsed()) return cmd_rank(o, out);
    if (minor_cmd->parsed()) return cmd_minor(o, out);
    if (enum_cmd->parsed()) return cmd_enumerate(o, out);
    if (census_cmd->parsed()) return cmd_census(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
  } catch (const ParseError& e) {
    err << "error: line " << e.line << ": " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  err << "error: no subcommand given\n" << app.help();
  return 1;
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, out, err);
}

}  // namespace powerful
