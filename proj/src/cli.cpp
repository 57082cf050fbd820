#include "burnside/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"

#include "burnside/bgroup.hpp"
#include "burnside/catalog.hpp"
#include "burnside/report.hpp"

namespace burnside {
namespace {

struct GlobalOpts {
  std::string format = "text";
  std::string out_path;
  int max_order = default_order_cap();
  int jobs = 1;
};

int emit(const GlobalOpts& opt, const std::string& payload, std::ostream& out,
         std::ostream& err, int code) {
  if (opt.out_path.empty()) {
    out << payload;
    return code;
  }
  std::ofstream f(opt.out_path, std::ios::binary);
  if (!f) {
    err << "cannot open output file: " << opt.out_path << "\n";
    return 1;
  }
  f << payload;
  f.flush();
  if (!f.good()) {
    err << "failed writing output file: " << opt.out_path << "\n";
    return 1;
  }
  return code;
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string element_text(const BurnsideElement& u) {
  std::ostringstream os;
  bool first = true;
  for (size_t c = 0; c < u.coeffs.size(); ++c) {
    Rat q = u.coeffs[c];
    if (q == 0) continue;
    bool neg = q < 0;
    if (neg) q = -q;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    if (q != 1) os << rat_to_string(q) << "*";
    os << "[" << u.lattice->class_labels[c] << "]";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// csv is the suite-report projection; informational commands offer text/json.
bool reject_csv(const GlobalOpts& opt, std::ostream& err) {
  if (opt.format != "csv") return false;
  err << "csv format applies to list and verify only\n";
  return true;
}

int do_list(const GlobalOpts& opt, std::ostream& out, std::ostream& err) {
  std::ostringstream os;
  if (opt.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : catalog_entries())
      arr.push_back({{"name", e.name}, {"spec", e.spec}, {"order", e.order}});
    os << dump_json(arr);
  } else if (opt.format == "csv") {
    os << "name,order\n";
    for (const auto& e : catalog_entries())
      os << csv_field(e.name) << ',' << e.order << '\n';
  } else {
    for (const auto& e : catalog_entries()) os << e.name << ' ' << e.order << '\n';
  }
  return emit(opt, os.str(), out, err, 0);
}

int do_analyze(const GlobalOpts& opt, const std::string& spec,
               std::ostream& out, std::ostream& err) {
  if (reject_csv(opt, err)) return 1;
  GroupPtr g = parse_group_spec(spec, opt.max_order).resolved;
  LatticePtr lat = lattice_of(g);
  bool nil = is_nilpotent(g), sol = is_solvable(g), bg = is_b_group(g);
  BetaResult b = beta(g);
  std::string beta_type = describe_isomorphism_type(b.beta_group);

  struct Row {
    std::string label;
    int order;
    Rat m;
  };
  std::vector<Row> rows;
  for (int n : normal_subgroup_indices(*lat))
    rows.push_back({lat->class_labels[lat->class_of[n]], lat->order_of(n),
                    m_coefficient(g, lat->subgroups[n])});

  std::ostringstream os;
  if (opt.format == "json") {
    nlohmann::json normals = nlohmann::json::array();
    for (const auto& r : rows)
      normals.push_back({{"label", r.label},
                         {"order", r.order},
                         {"m", rat_to_string(r.m)}});
    os << dump_json({{"group", spec},
                     {"order", g->order()},
                     {"nilpotent", nil},
                     {"solvable", sol},
                     {"is_b_group", bg},
                     {"beta", beta_type},
                     {"normal_subgroups", normals}});
  } else {
    os << "group: " << spec << "\n";
    os << "order: " << g->order() << "\n";
    os << "nilpotent: " << yes_no(nil) << "\n";
    os << "solvable: " << yes_no(sol) << "\n";
    os << "B-group: " << yes_no(bg) << "\n";
    os << "beta: " << beta_type << "\n";
    os << "normal subgroups (label order m):\n";
    for (const auto& r : rows)
      os << "  " << r.label << "  " << r.order << "  " << rat_to_string(r.m)
         << "\n";
  }
  return emit(opt, os.str(), out, err, 0);
}

int do_idempotents(const GlobalOpts& opt, const std::string& spec,
                   std::ostream& out, std::ostream& err) {
  if (reject_csv(opt, err)) return 1;
  GroupPtr g = parse_group_spec(spec, opt.max_order).resolved;
  LatticePtr lat = lattice_of(g);
  std::ostringstream os;
  if (opt.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (int c = 0; c < lat->num_classes(); ++c) {
      BurnsideElement e = idempotent(g, c);
      nlohmann::json coeffs = nlohmann::json::array();
      for (const Rat& q : e.coeffs) coeffs.push_back(rat_to_string(q));
      arr.push_back({{"class", lat->class_labels[c]}, {"coeffs", coeffs}});
    }
    os << dump_json({{"group", spec},
                     {"basis", lat->class_labels},
                     {"idempotents", arr}});
  } else {
    for (int c = 0; c < lat->num_classes(); ++c)
      os << "e[" << lat->class_labels[c]
         << "] = " << element_text(idempotent(g, c)) << "\n";
  }
  return emit(opt, os.str(), out, err, 0);
}

int do_marks(const GlobalOpts& opt, const std::string& spec, std::ostream& out,
             std::ostream& err) {
  if (reject_csv(opt, err)) return 1;
  GroupPtr g = parse_group_spec(spec, opt.max_order).resolved;
  MarksPtr mt = marks_of(g);
  const auto& labels = mt->lattice->class_labels;
  int k = mt->size();
  std::ostringstream os;
  if (opt.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (int c = 0; c < k; ++c) {
      nlohmann::json row = nlohmann::json::array();
      for (int h = 0; h < k; ++h) row.push_back(mt->entry[h][c]);
      rows.push_back(row);
    }
    os << dump_json({{"group", spec}, {"classes", labels}, {"rows", rows}});
  } else {
    // Row per basis element [G/K], column per subgroup class H.
    size_t label_w = 0;
    for (const auto& l : labels) label_w = std::max(label_w, l.size());
    std::vector<size_t> col_w(static_cast<size_t>(k));
    for (int h = 0; h < k; ++h) {
      col_w[h] = labels[h].size();
      for (int c = 0; c < k; ++c)
        col_w[h] =
            std::max(col_w[h], std::to_string(mt->entry[h][c]).size());
    }
    os << std::setw(int(label_w + 2)) << "";
    for (int h = 0; h < k; ++h)
      os << ' ' << std::setw(int(col_w[h])) << labels[h];
    os << "\n";
    for (int c = 0; c < k; ++c) {
      os << '[' << labels[c] << ']'
         << std::setw(int(label_w - labels[c].size())) << "";
      for (int h = 0; h < k; ++h)
        os << ' ' << std::setw(int(col_w[h])) << mt->entry[h][c];
      os << "\n";
    }
  }
  return emit(opt, os.str(), out, err, 0);
}

int do_beta(const GlobalOpts& opt, const std::string& spec, std::ostream& out,
            std::ostream& err) {
  if (reject_csv(opt, err)) return 1;
  GroupPtr g = parse_group_spec(spec, opt.max_order).resolved;
  BetaResult b = beta(g);
  std::string type = describe_isomorphism_type(b.beta_group);
  std::ostringstream os;
  if (opt.format == "json") {
    os << dump_json(
        {{"group", spec},
         {"order", g->order()},
         {"beta", type},
         {"witness",
          {{"subgroup", subgroup_witness(Subgroup{g, b.witness_members})},
           {"m", rat_to_string(b.witness_m)},
           {"beta_group", group_witness(b.beta_group)}}}});
  } else {
    os << "beta(" << spec << ") ≅ " << type << "\n";
  }
  return emit(opt, os.str(), out, err, 0);
}

int do_kernel(const GlobalOpts& opt, const std::string& spec,
              const std::string& tag_name, std::ostream& out,
              std::ostream& err) {
  if (reject_csv(opt, err)) return 1;
  GroupPtr g = parse_group_spec(spec, opt.max_order).resolved;
  SubgroupClass tag = tag_name == "nilpotent" ? SubgroupClass::nilpotent
                                              : SubgroupClass::solvable;
  KernelBasis kb = kernel_basis(g, tag);
  LatticePtr lat = lattice_of(g);
  std::vector<std::string> constrained;
  for (int c : kb.constrained_classes) constrained.push_back(lat->class_labels[c]);
  std::ostringstream os;
  if (opt.format == "json") {
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& e : kb.basis) basis.push_back(element_to_json(e));
    os << dump_json({{"group", spec},
                     {"tag", tag_name},
                     {"rank", kb.rank},
                     {"classes", lat->class_labels},
                     {"constrained_classes", constrained},
                     {"basis", basis}});
  } else {
    os << "kernel(" << spec << ", " << tag_name << "): rank " << kb.rank
       << " of " << lat->num_classes() << " classes\n";
    os << "constrained:";
    for (const auto& l : constrained) os << ' ' << l;
    os << "\n";
    for (size_t i = 0; i < kb.basis.size(); ++i)
      os << "basis[" << i << "] = " << element_text(kb.basis[i]) << "\n";
  }
  return emit(opt, os.str(), out, err, 0);
}

struct Target {
  std::string name;
  GroupPtr group;
};

std::vector<VerificationReport> run_checks(
    const Target& t, const std::vector<std::string>& selectors) {
  std::vector<VerificationReport> rs;
  for (const auto& sel : selectors) {
    VerificationReport r;
    if (sel == "theorem-2-3")
      r = check_top_idempotent(t.group);
    else if (sel == "complements")
      r = check_complement_count(t.group);
    else if (sel == "baumann")
      r = check_cyclic_mod_p_agreement(t.group);
    else if (sel == "conjecture-a")
      r = check_nilpotency_agreement(t.group);
    else if (sel == "conjecture-b")
      r = check_kernel_closure(t.group, SubgroupClass::nilpotent);
    else if (sel == "thevenaz")
      r = check_solvability_agreement(t.group);
    else
      throw std::logic_error("unknown selector " + sel);
    r.group = t.name;
    rs.push_back(std::move(r));
  }
  return rs;
}

int do_verify(const GlobalOpts& opt, const std::string& selector,
              const std::string& group_spec, std::ostream& out,
              std::ostream& err) {
  std::vector<std::string> selectors;
  if (selector == "all")
    selectors = {"theorem-2-3", "complements",  "baumann",
                 "conjecture-a", "conjecture-b", "thevenaz"};
  else
    selectors = {selector};

  // Default target is the whole catalog, filtered by the order cap.
  std::vector<Target> targets;
  if (!group_spec.empty()) {
    targets.push_back(
        {group_spec, parse_group_spec(group_spec, opt.max_order).resolved});
  } else {
    for (const auto& e : catalog_entries()) {
      if (e.order > opt.max_order) continue;
      targets.push_back({e.name, parse_group_spec(e.name, opt.max_order).resolved});
    }
  }

  std::vector<std::vector<VerificationReport>> results(targets.size());
  int jobs = std::max(1, std::min(opt.jobs, int(targets.size())));
  if (jobs <= 1) {
    for (size_t i = 0; i < targets.size(); ++i)
      results[i] = run_checks(targets[i], selectors);
  } else {
    std::vector<std::exception_ptr> failures(targets.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= targets.size()) return;
        try {
          results[i] = run_checks(targets[i], selectors);
        } catch (...) {
          failures[i] = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (const auto& ep : failures)
      if (ep) std::rethrow_exception(ep);
  }

  std::vector<VerificationReport> reports;
  for (auto& rs : results)
    for (auto& r : rs) reports.push_back(std::move(r));

  if (selector == "all" && group_spec.empty()) {
    std::vector<std::pair<std::string, GroupPtr>> pairs;
    for (const auto& t : targets) pairs.emplace_back(t.name, t.group);
    reports.push_back(check_nilpotent_bgroup_classification(pairs));
  }

  sort_reports(reports);
  std::string payload;
  if (opt.format == "json")
    payload = dump_json(reports_to_json(reports));
  else if (opt.format == "csv")
    payload = reports_to_csv(reports);
  else
    payload = reports_to_text(reports);
  return emit(opt, payload, out, err, exit_code_for(reports));
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Burnside ring explorer and verification harness"};
  app.require_subcommand(1);

  GlobalOpts opt;
  app.add_option("--format", opt.format, "Output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", opt.out_path, "Write output to this file");
  app.add_option("--max-order", opt.max_order,
                 "Reject groups larger than this order")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", opt.jobs, "Verification worker threads")
      ->check(CLI::PositiveNumber);

  std::string spec, kernel_tag, selector, group_spec;
  bool use_catalog = false;

  CLI::App* list_cmd = app.add_subcommand("list", "List the group catalog");
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "Order, flags, normal subgroups, beta");
  analyze_cmd->add_option("spec", spec, "Group spec")->required();
  CLI::App* idem_cmd =
      app.add_subcommand("idempotents", "Primitive idempotents per class");
  idem_cmd->add_option("spec", spec, "Group spec")->required();
  CLI::App* marks_cmd = app.add_subcommand("marks", "Table of marks");
  marks_cmd->add_option("spec", spec, "Group spec")->required();
  CLI::App* beta_cmd = app.add_subcommand("beta", "Largest quotient that is a B-group");
  beta_cmd->add_option("spec", spec, "Group spec")->required();
  CLI::App* kernel_cmd =
      app.add_subcommand("kernel", "Restriction kernel lattice basis");
  kernel_cmd->add_option("spec", spec, "Group spec")->required();
  kernel_cmd->add_option("--class", kernel_tag, "Subgroup class to constrain")
      ->required()
      ->check(CLI::IsMember({"nilpotent", "solvable"}));
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run verification checks");
  verify_cmd
      ->add_option("selector", selector,
                   "all, theorem-2-3, complements, baumann, conjecture-a, "
                   "conjecture-b or thevenaz")
      ->required()
      ->check(CLI::IsMember({"all", "theorem-2-3", "complements", "baumann",
                             "conjecture-a", "conjecture-b", "thevenaz"}));
  CLI::Option* group_opt =
      verify_cmd->add_option("--group", group_spec, "Verify a single group");
  CLI::Option* catalog_opt =
      verify_cmd->add_flag("--catalog", use_catalog,
                           "Verify the whole catalog (the default)");
  group_opt->excludes(catalog_opt);

  for (CLI::App* sub : {list_cmd, analyze_cmd, idem_cmd, marks_cmd, beta_cmd,
                        kernel_cmd, verify_cmd})
    sub->fallthrough();

  std::vector<const char*> argv;
  argv.push_back("burnside");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  }

  try {
    if (list_cmd->parsed()) return do_list(opt, out, err);
    if (analyze_cmd->parsed()) return do_analyze(opt, spec, out, err);
    if (idem_cmd->parsed()) return do_idempotents(opt, spec, out, err);
    if (marks_cmd->parsed()) return do_marks(opt, spec, out, err);
    if (beta_cmd->parsed()) return do_beta(opt, spec, out, err);
    if (kernel_cmd->parsed()) return do_kernel(opt, spec, kernel_tag, out, err);
    if (verify_cmd->parsed())
      return do_verify(opt, selector, group_spec, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "no subcommand\n";
  return 1;
}

}  // namespace burnside
