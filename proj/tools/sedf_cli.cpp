// command-line front end: parameter enumeration, group listing, search,
// classification, construction, verification, and result-table emission
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sedf/catalog.hpp"
#include "sedf/classify.hpp"
#include "sedf/constructions.hpp"
#include "sedf/io.hpp"
#include "sedf/params.hpp"
#include "sedf/search.hpp"
#include "sedf/tables.hpp"
#include "sedf/version.hpp"

namespace {

using nlohmann::json;

struct cli_state {
  std::string format = "table";
  int jobs = 1;
  int seed = 0; // reserved; deterministic paths ignore it
  std::chrono::steady_clock::time_point start;
  int exit_code = 0;
};

double wall_ms(const cli_state& st) {
  auto dt = std::chrono::steady_clock::now() - st.start;
  return std::chrono::duration<double, std::milli>(dt).count();
}

// fixed two-space gutters, widths from content: deterministic output
void print_table(const std::vector<std::string>& head,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(head.size());
  for (std::size_t c = 0; c < head.size(); ++c) width[c] = head[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c)
      width[c] = std::max(width[c], r[c].size());
  auto line = [&](const std::vector<std::string>& r) {
    std::string out;
    for (std::size_t c = 0; c < r.size(); ++c) {
      out += r[c];
      if (c + 1 < r.size()) out += std::string(width[c] - r[c].size() + 2, ' ');
    }
    std::cout << out << "\n";
  };
  line(head);
  for (const auto& r : rows) line(r);
}

void emit(const cli_state& st, const std::string& command, json payload,
          const std::function<void()>& print_text) {
  if (st.format == "json")
    std::cout << sedf::make_run_report(command, wall_ms(st), std::move(payload)).dump(2)
              << "\n";
  else
    print_text();
}

std::string blocks_text(const sedf::block_family& fam) {
  std::string line = sedf::family_to_text(fam);
  return line.substr(line.find(": ") + 2);
}

std::string params_text(const sedf::param_set& p) {
  return "(" + std::to_string(p.n) + "," + std::to_string(p.m) + "," +
         std::to_string(p.k) + "," + std::to_string(p.lambda) + ")";
}

json params_json(const sedf::param_set& p) {
  return {{"n", p.n}, {"m", p.m}, {"k", p.k}, {"lambda", p.lambda}};
}

// paper-style case letters for the tabulated constructions
std::string case_letter(const std::string& id) {
  if (id == "pa-st") return "(a)";
  if (id == "paley") return "(b)";
  if (id == "cyclotomic") return "(c)";
  if (id == "even-k") return "(d)";
  return id;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

sedf::group_class parse_class(const std::string& s) {
  if (s == "abelian") return sedf::group_class::abelian;
  if (s == "cyclic") return sedf::group_class::cyclic;
  return sedf::group_class::any;
}

json cell_json(const sedf::classified_cell& cell) {
  json classes = json::array();
  for (std::size_t i = 0; i < cell.classes.size(); ++i)
    classes.push_back({{"example", blocks_text(cell.classes[i].representative)},
                       {"cases", cell.case_tags[i]},
                       {"size", cell.classes[i].members.size()}});
  return {{"params", params_json(cell.params)},
          {"group", cell.group->name()},
          {"count", cell.classes.size()},
          {"classes", classes},
          {"nodes", cell.search_nodes}};
}

std::vector<std::string> cell_row(const sedf::classified_cell& cell) {
  std::vector<std::string> examples, cases;
  for (std::size_t i = 0; i < cell.classes.size(); ++i) {
    examples.push_back(blocks_text(cell.classes[i].representative));
    std::vector<std::string> letters;
    for (const auto& id : cell.case_tags[i]) letters.push_back(case_letter(id));
    cases.push_back(letters.empty() ? "-" : join(letters, ","));
  }
  return {params_text(cell.params), cell.group->name(),
          std::to_string(cell.classes.size()),
          examples.empty() ? "-" : join(examples, "; "),
          cases.empty() ? "-" : join(cases, "; ")};
}

std::vector<sedf::block_family> read_families(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw sedf::parse_error("cannot open family file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  std::vector<sedf::block_family> fams;
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    for (const auto& j : json::parse(text)) fams.push_back(sedf::family_from_json(j));
    return fams;
  }
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    auto at = line.find_first_not_of(" \t\r");
    if (at == std::string::npos || line[at] == '#') continue;
    fams.push_back(sedf::family_from_text(line));
  }
  return fams;
}

void print_families(const std::vector<sedf::block_family>& fams) {
  for (const auto& fam : fams) std::cout << sedf::family_to_text(fam) << "\n";
}

json families_json(const std::vector<sedf::block_family>& fams) {
  json arr = json::array();
  for (const auto& fam : fams) arr.push_back(sedf::family_to_json(fam));
  return arr;
}

void run_params(cli_state& st, int max_order, const std::string& gclass,
                bool include_trivial) {
  auto sets = sedf::enumerate_admissible(max_order, include_trivial);
  json payload = json::array();
  std::vector<std::vector<std::string>> rows;
  bool annotate = !gclass.empty();
  for (const auto& p : sets) {
    json row = params_json(p);
    std::vector<std::string> cells = {std::to_string(p.n), std::to_string(p.m),
                                      std::to_string(p.k), std::to_string(p.lambda)};
    if (annotate) {
      std::vector<std::string> ids;
      for (const auto& hit : sedf::nonexistence_filters(p, parse_class(gclass)))
        ids.push_back(hit.id);
      row["ruled_out_by"] = ids;
      cells.push_back(ids.empty() ? "-" : join(ids, ","));
    }
    payload.push_back(std::move(row));
    rows.push_back(std::move(cells));
  }
  std::vector<std::string> head = {"n", "m", "k", "lambda"};
  if (annotate) head.push_back("ruled_out_by");
  emit(st, "params enumerate", payload, [&] { print_table(head, rows); });
}

void run_groups(cli_state& st, int max_order) {
  json payload = json::array();
  std::vector<std::vector<std::string>> rows;
  for (int n = 1; n <= max_order; ++n) {
    auto add = [&](const sedf::group_ptr& g) {
      payload.push_back(
          {{"order", g->order()}, {"name", g->name()}, {"abelian", g->abelian()}});
      rows.push_back({std::to_string(g->order()), g->name(), g->abelian() ? "yes" : "no"});
    };
    for (const auto& g : sedf::abelian_groups_of_order(n)) add(g);
    for (const auto& g : sedf::nonabelian_groups_of_order(n)) add(g);
  }
  emit(st, "groups list", payload, [&] {
    print_table({"order", "name", "abelian"}, rows);
  });
}

void run_search(cli_state& st, const std::string& spec, int m, int k, int lambda,
                bool first, bool naive, bool allow_large) {
  sedf::group_ptr g = sedf::group_from_spec(spec);
  sedf::search_options opts;
  opts.jobs = st.jobs;
  opts.first_only = first;
  opts.naive_check = naive;
  opts.allow_large = allow_large;
  auto result = sedf::search_all(g, m, k, lambda, opts);
  json payload = {{"group", g->name()},
                  {"params", params_json({g->order(), m, k, lambda})},
                  {"families", families_json(result.families)},
                  {"stats",
                   {{"nodes", result.stats.nodes}, {"families", result.stats.families}}}};
  emit(st, "search", payload, [&] {
    print_families(result.families);
    std::cout << "# families: " << result.stats.families
              << "  nodes: " << result.stats.nodes << "\n";
  });
}

void run_classify(cli_state& st, const std::string& input) {
  auto fams = read_families(input);
  auto classes = sedf::classify_families(fams);
  json payload = json::array();
  for (const auto& cls : classes)
    payload.push_back({{"representative", sedf::family_to_json(cls.representative)},
                       {"members", cls.members},
                       {"size", cls.members.size()}});
  emit(st, "classify", payload, [&] {
    for (std::size_t i = 0; i < classes.size(); ++i) {
      std::cout << sedf::family_to_text(classes[i].representative) << "\n";
      std::string members;
      for (std::size_t j = 0; j < classes[i].members.size(); ++j)
        members += (j ? "," : "") + std::to_string(classes[i].members[j]);
      std::cout << "# class " << i + 1 << ": size " << classes[i].members.size()
                << ", members " << members << "\n";
    }
    std::cout << "# classes: " << classes.size() << " from " << fams.size()
              << " families\n";
  });
}

void run_construct(cli_state& st, const std::string& which,
                   const std::vector<sedf::block_family>& fams) {
  emit(st, "construct " + which, {{"families", families_json(fams)}},
       [&] { print_families(fams); });
}

void print_histogram(const sedf::block_family& fam) {
  const auto& g = *fam.group;
  for (std::size_t i = 0; i < fam.blocks.size(); ++i) {
    sedf::difference_counter counts(g.order());
    for (int x : fam.blocks[i])
      for (std::size_t j = 0; j < fam.blocks.size(); ++j) {
        if (j == i) continue;
        for (int y : fam.blocks[j]) counts.add(g.rdiv(x, y));
      }
    std::cout << "# block " << i + 1 << " differences:";
    for (int d = 0; d < g.order(); ++d)
      if (counts.count(d) > 0) std::cout << " " << g.label(d) << ":" << counts.count(d);
    std::cout << "\n";
  }
}

json histogram_json(const sedf::block_family& fam) {
  const auto& g = *fam.group;
  json blocks = json::array();
  for (std::size_t i = 0; i < fam.blocks.size(); ++i) {
    sedf::difference_counter counts(g.order());
    for (int x : fam.blocks[i])
      for (std::size_t j = 0; j < fam.blocks.size(); ++j) {
        if (j == i) continue;
        for (int y : fam.blocks[j]) counts.add(g.rdiv(x, y));
      }
    json h = json::object();
    for (int d = 0; d < g.order(); ++d)
      if (counts.count(d) > 0) h[g.label(d)] = counts.count(d);
    blocks.push_back({{"block", i + 1}, {"counts", h}});
  }
  return blocks;
}

void run_verify(cli_state& st, const std::string& kind, const std::string& family,
                const std::string& input, int lambda, const std::vector<int>& sizes,
                const std::vector<int>& lambdas, int mu) {
  std::vector<sedf::block_family> fams;
  if (!family.empty()) fams.push_back(sedf::family_from_text(family));
  if (!input.empty()) {
    auto more = read_families(input);
    fams.insert(fams.end(), more.begin(), more.end());
  }
  if (fams.empty()) throw CLI::ValidationError("verify needs --family or --input");

  bool all_ok = true;
  json payload = json::array();
  std::vector<std::string> lines;
  for (const auto& fam : fams) {
    bool ok = false;
    if (kind == "sedf")
      ok = sedf::verify_sedf(fam, lambda);
    else if (kind == "edf")
      ok = sedf::verify_edf(fam, lambda);
    else if (kind == "cosedf")
      ok = sedf::verify_cosedf(fam, lambda);
    else if (kind == "gsedf")
      ok = sedf::verify_gsedf(fam, {sizes, lambdas});
    else if (kind == "pds") {
      if (fam.blocks.size() != 1)
        throw sedf::shape_error("difference-set checks take a single block");
      ok = sedf::verify_pds(fam.blocks[0], *fam.group,
                            static_cast<int>(fam.blocks[0].size()), lambda, mu);
    } else {
      throw CLI::ValidationError("unknown kind: " + kind);
    }
    all_ok = all_ok && ok;
    json entry = {{"family", sedf::family_to_json(fam)},
                  {"kind", kind},
                  {"verdict", ok}};
    if (!ok && kind != "pds") entry["histograms"] = histogram_json(fam);
    payload.push_back(std::move(entry));
    lines.push_back(sedf::family_to_text(fam) + "  ->  " + (ok ? "true" : "false"));
  }
  emit(st, "verify", payload, [&] {
    for (std::size_t i = 0; i < fams.size(); ++i) {
      std::cout << lines[i] << "\n";
      bool ok = payload[i]["verdict"].get<bool>();
      if (!ok && kind != "pds") print_histogram(fams[i]);
    }
  });
  if (!all_ok) st.exit_code = 2;
}

void run_tables(cli_state& st, int which) {
  if (which == 1 || which == 4) {
    auto sets = sedf::enumerate_admissible(which == 1 ? 64 : 24);
    json payload = json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto& p : sets) {
      payload.push_back(params_json(p));
      rows.push_back({std::to_string(p.n), std::to_string(p.m), std::to_string(p.k),
                      std::to_string(p.lambda)});
    }
    emit(st, "tables " + std::to_string(which), payload,
         [&] { print_table({"n", "m", "k", "lambda"}, rows); });
    return;
  }
  if (which == 5) {
    auto cells = sedf::abelian_result_cells(24, st.jobs);
    json payload = json::array();
    for (const auto& cell : cells) payload.push_back(cell_json(cell));
    emit(st, "tables 5", payload, [&] {
      // a parameter set appears once any group of its order carries a family
      std::vector<std::vector<std::string>> rows;
      for (const auto& cell : cells) {
        bool live = false;
        for (const auto& other : cells)
          if (other.params == cell.params && !other.classes.empty()) live = true;
        if (live) rows.push_back(cell_row(cell));
      }
      print_table({"parameters", "group", "count", "example", "case"}, rows);
    });
    return;
  }
  if (which == 6) {
    auto cells = sedf::nonabelian_result_cells(st.jobs);
    json payload = json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto& cell : cells) {
      payload.push_back(cell_json(cell));
      rows.push_back(cell_row(cell));
    }
    emit(st, "tables 6", payload, [&] {
      print_table({"parameters", "group", "count", "example", "case"}, rows);
    });
    return;
  }
  throw CLI::ValidationError("--which must be 1, 4, 5, or 6");
}

} // namespace

int main(int argc, char** argv) {
  cli_state st;
  st.start = std::chrono::steady_clock::now();

  CLI::App app{"strong external difference family toolkit"};
  app.require_subcommand(1);
  app.add_option("--format", st.format, "output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
  app.add_option("--jobs", st.jobs, "worker threads for search sweeps")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", st.seed, "reserved; deterministic paths ignore it");

  // params enumerate
  auto* params = app.add_subcommand("params", "admissible parameter sets");
  params->require_subcommand(1);
  params->fallthrough();
  auto* penum = params->add_subcommand("enumerate", "list admissible (n,m,k,lambda)");
  penum->fallthrough();
  int max_order = 64;
  std::string gclass;
  bool include_trivial = false;
  penum->add_option("--max-order", max_order, "largest group order")
      ->required()
      ->check(CLI::PositiveNumber);
  penum->add_option("--group-class", gclass, "annotate with nonexistence rules")
      ->check(CLI::IsMember({"any", "abelian", "cyclic"}));
  penum->add_flag("--include-trivial", include_trivial, "include the (n,n,1,1) rows");
  penum->callback([&] { run_params(st, max_order, gclass, include_trivial); });

  // groups list
  auto* groups = app.add_subcommand("groups", "group catalog");
  groups->require_subcommand(1);
  groups->fallthrough();
  auto* glist = groups->add_subcommand("list", "catalog groups up to an order");
  glist->fallthrough();
  int gmax = 24;
  glist->add_option("--max-order", gmax, "largest group order")
      ->required()
      ->check(CLI::PositiveNumber);
  glist->callback([&] { run_groups(st, gmax); });

  // search
  auto* search = app.add_subcommand("search", "exhaustive family search");
  search->fallthrough();
  std::string sspec;
  int sm = 0, sk = 0, slambda = 0;
  bool sfirst = false, sall = false, snaive = false, slarge = false;
  search->add_option("--group", sspec, "group spec, e.g. Z17 or D10")->required();
  search->add_option("--m", sm, "number of blocks")->required();
  search->add_option("--k", sk, "block size")->required();
  search->add_option("--lambda", slambda, "difference multiplicity")->required();
  auto* fall = search->add_flag("--all", sall, "enumerate every family (default)");
  search->add_flag("--first", sfirst, "stop at the first family")->excludes(fall);
  search->add_flag("--naive-check", snaive, "recount every partial check");
  search->add_flag("--allow-large", slarge, "permit orders above 64");
  search->callback(
      [&] { run_search(st, sspec, sm, sk, slambda, sfirst, snaive, slarge); });

  // classify
  auto* classify = app.add_subcommand("classify", "group families into classes");
  classify->fallthrough();
  std::string cinput;
  classify->add_option("--input", cinput, "family file (JSON array or text lines)")
      ->required();
  classify->callback([&] { run_classify(st, cinput); });

  // construct
  auto* construct = app.add_subcommand("construct", "known family constructions");
  construct->require_subcommand(1);
  construct->fallthrough();
  int ck = 2, cq = 5, ce = 4, ca = 1, cb = 1, cs = 1, ct = 1, cr = 2;
  std::string cbase, cgroup;

  auto* cpa = construct->add_subcommand("pa-st", "progression family in Z_{k^2+1}");
  cpa->fallthrough();
  cpa->add_option("--k", ck, "block size")->required();
  cpa->callback([&] { run_construct(st, "pa-st", {sedf::construct_pa_st(ck)}); });

  auto* cpaley = construct->add_subcommand("paley", "square/non-square partition");
  cpaley->fallthrough();
  cpaley->add_option("--q", cq, "field order, 1 mod 4")->required();
  cpaley->callback([&] { run_construct(st, "paley", {sedf::construct_paley(cq)}); });

  auto* ccyc = construct->add_subcommand("cyclotomic", "power-class pairs");
  ccyc->fallthrough();
  ccyc->add_option("--q", cq, "field order")->required();
  ccyc->add_option("--e", ce, "class index (4 or 6)")->required();
  ccyc->callback([&] { run_construct(st, "cyclotomic", sedf::construct_cyclotomic(cq, ce)); });

  auto* ceven = construct->add_subcommand("even-k", "interleaved family, k = 2a");
  ceven->fallthrough();
  ceven->add_option("--a", ca, "half block size")->required();
  ceven->callback([&] { run_construct(st, "even-k", {sedf::construct_even_k(ca)}); });

  auto* crec = construct->add_subcommand("recursive", "two-block blow-up");
  crec->fallthrough();
  crec->add_option("--base", cbase, "base family text line")->required();
  crec->add_option("--a", ca, "multiplier")->required();
  crec->callback([&] {
    run_construct(st, "recursive",
                  {sedf::recursive_lambda1(sedf::family_from_text(cbase), ca)});
  });

  auto* cgrec = construct->add_subcommand("gsedf-recursive", "generalized blow-up");
  cgrec->fallthrough();
  cgrec->add_option("--base", cbase, "base family text line")->required();
  cgrec->add_option("--a", ca, "first multiplier")->required();
  cgrec->add_option("--b", cb, "second multiplier")->required();
  cgrec->add_option("--s", cs, "first base block size")->required();
  cgrec->add_option("--t", ct, "second base block size")->required();
  cgrec->callback([&] {
    run_construct(st, "gsedf-recursive",
                  {sedf::recursive_gsedf(sedf::family_from_text(cbase),
                                         {ca, cb, cs, ct})});
  });

  auto* cpair = construct->add_subcommand("composite-pair", "two families for k = r*a");
  cpair->fallthrough();
  cpair->add_option("--r", cr, "base block size")->required();
  cpair->add_option("--a", ca, "multiplier")->required();
  cpair->callback([&] {
    auto [one, two] = sedf::composite_pair(cr, ca);
    run_construct(st, "composite-pair", {one, two});
  });

  auto* cdih = construct->add_subcommand("dihedral", "rotation/reflection family");
  cdih->fallthrough();
  cdih->add_option("--k", ck, "odd block size")->required();
  cdih->callback(
      [&] { run_construct(st, "dihedral", {sedf::construct_dihedral_sedf(ck)}); });

  auto* ctriv = construct->add_subcommand("trivial", "all singleton blocks");
  ctriv->fallthrough();
  ctriv->add_option("--group", cgroup, "group spec")->required();
  ctriv->callback([&] {
    run_construct(st, "trivial", {sedf::construct_trivial(sedf::group_from_spec(cgroup))});
  });

  // verify
  auto* verify = app.add_subcommand("verify", "check a family against a definition");
  verify->fallthrough();
  std::string vkind, vfamily, vinput;
  int vlambda = 1, vmu = 0;
  std::vector<int> vsizes, vlambdas;
  verify->add_option("--kind", vkind, "edf|sedf|gsedf|cosedf|pds")
      ->required()
      ->check(CLI::IsMember({"edf", "sedf", "gsedf", "cosedf", "pds"}));
  verify->add_option("--family", vfamily, "family text line");
  verify->add_option("--input", vinput, "family file");
  verify->add_option("--lambda", vlambda, "difference multiplicity");
  verify->add_option("--sizes", vsizes, "per-block sizes (gsedf)")->delimiter(',');
  verify->add_option("--lambdas", vlambdas, "per-block multiplicities (gsedf)")
      ->delimiter(',');
  verify->add_option("--mu", vmu, "outside multiplicity (pds)");
  verify->callback(
      [&] { run_verify(st, vkind, vfamily, vinput, vlambda, vsizes, vlambdas, vmu); });

  // tables
  auto* tables = app.add_subcommand("tables", "reproduce the published tables");
  tables->fallthrough();
  int which = 0;
  tables->add_option("--which", which, "table number: 1, 4, 5, or 6")->required();
  tables->callback([&] { run_tables(st, which); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const sedf::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return st.exit_code;
}
