#include "lesq/cli.hpp"

#include "lesq/cone.hpp"
#include "lesq/json_io.hpp"
#include "lesq/oracle.hpp"
#include "lesq/tableaux.hpp"
#include "lesq/text_io.hpp"

#include "CLI11.hpp"

#include <ostream>

namespace lesq::cli {

namespace {

struct Options {
  int n = 0;
  int m = 0;
  bool json = false;
  int threads = 1;
  long bound = 0;
  std::string method;
  std::string tuple;
  std::vector<std::string> partitions;
};

void print_json(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

std::string certificate_line(const Inequality& ineq, const RationalTuple& lambda) {
  std::string label = to_string(ineq.origin);
  if (ineq.origin == Origin::trace || ineq.origin == Origin::horn)
    label += " level " + std::to_string(ineq.level);
  if (ineq.subsets) label += " " + format_subset_tuple(*ineq.subsets);
  return label + ": " + ineq.describe() + " fails by " + to_string(ineq.evaluate(lambda));
}

int cmd_lr(const Options& o, std::ostream& out) {
  const Partition mu = parse_partition(o.partitions.at(0));
  const Partition nu = parse_partition(o.partitions.at(1));
  const Partition lambda = parse_partition(o.partitions.at(2));
  out << to_string(lr_coefficient(lambda, mu, nu)) << '\n';
  return kOk;
}

int cmd_kostka(const Options& o, std::ostream& out) {
  const Partition shape = parse_partition(o.partitions.at(0));
  const Composition content = parse_composition(o.partitions.at(1));
  out << to_string(kostka_number(shape, content)) << '\n';
  return kOk;
}

int cmd_genlr(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.partitions.size() < 3) {
    err << "error: genlr needs at least three partitions\n";
    return kUsage;
  }
  std::vector<Partition> tuple;
  for (const std::string& text : o.partitions) tuple.push_back(parse_partition(text));
  out << to_string(gen_lr(tuple)) << '\n';
  return kOk;
}

int cmd_snm(const Options& o, std::ostream& out) {
  const auto elements = enumerate_snm(o.n, o.m, o.threads);
  if (o.json) {
    print_json(out, snm_json(o.n, o.m, elements));
    return kOk;
  }
  for (const SubsetTuple& t : elements) out << format_subset_tuple(t) << '\n';
  out << "# " << elements.size() << " elements\n";
  return kOk;
}

int cmd_ineqs(const Options& o, std::ostream& out) {
  const InequalitySystem system = inequality_system(o.n, o.m, o.threads);
  if (o.json) {
    print_json(out, inequality_system_json(system));
    return kOk;
  }
  for (const Inequality& ineq : system.inequalities) {
    out << '[' << to_string(ineq.origin);
    if (ineq.origin == Origin::trace || ineq.origin == Origin::horn) out << " L" << ineq.level;
    if (ineq.subsets) out << ' ' << format_subset_tuple(*ineq.subsets);
    out << "] " << ineq.describe() << '\n';
  }
  out << "# " << system.inequalities.size() << " inequalities, " << system.suppressed_trivial
      << " trivial suppressed\n";
  return kOk;
}

int cmd_witness(const Options& o, std::ostream& out) {
  const std::vector<Partition> tuple = parse_partition_tuple(o.tuple, o.n, o.m);
  const OracleSearch search = sigma_search(tuple, o.n);
  if (o.json) {
    print_json(out, witness_json(search));
  } else if (search.witness) {
    out << format_chain(*search.witness) << '\n';
  } else {
    out << "no witness (" << search.nodes << " states searched)\n";
  }
  return search.witness ? kOk : kNonMember;
}

int cmd_decide(const Options& o, std::ostream& out, std::ostream& err) {
  const RationalTuple lambda = parse_rational_tuple(o.tuple, o.n, o.m);
  const bool odd = o.m % 2 == 1;
  const bool closed_form = o.n == 1;
  std::string method = o.method;
  // Odd m: inequalities alone. Even m with n = 1: closed form plus a witness
  // chain from the oracle. Otherwise only the oracle applies.
  if (method.empty()) method = odd ? "ineq" : closed_form ? "both" : "oracle";
  if (method != "oracle" && !odd && !closed_form)
    throw UnsupportedError(
        "no inequality description for even m with n > 1; use --method oracle");

  std::optional<MembershipVerdict> by_ineq;
  std::optional<RationalSearch> by_oracle;
  if (method != "oracle") by_ineq = odd ? member_cone(lambda) : member_n1(lambda);
  if (method != "ineq") by_oracle = rational_search(lambda);

  const bool oracle_member = by_oracle && by_oracle->search.witness.has_value();
  if (by_ineq && by_oracle && by_ineq->member != oracle_member) {
    err << "INCONSISTENT: inequalities say " << (by_ineq->member ? "member" : "non-member")
        << ", oracle says " << (oracle_member ? "member" : "non-member") << '\n'
        << "tuple: " << format_rational_tuple(lambda) << " (n=" << o.n << ", m=" << o.m << ")\n";
    if (by_ineq->certificate)
      err << "certificate: " << certificate_line(*by_ineq->certificate, lambda) << '\n';
    if (by_oracle->search.witness)
      err << "witness: " << format_chain(*by_oracle->search.witness) << '\n';
    err << "oracle states searched: " << by_oracle->search.nodes << '\n';
    return kInconsistent;
  }

  const bool member = by_ineq ? by_ineq->member : oracle_member;
  out << (member ? "member" : "non-member") << '\n';
  out << "method: " << method << '\n';
  if (by_ineq) {
    if (by_ineq->certificate)
      out << "certificate: " << certificate_line(*by_ineq->certificate, lambda) << '\n';
    out << "note: " << by_ineq->note << '\n';
  }
  if (by_oracle) {
    if (by_oracle->scale != 1) out << "scale: " << to_string(by_oracle->scale) << '\n';
    if (by_oracle->search.witness)
      out << "witness: " << format_chain(*by_oracle->search.witness) << '\n';
    else
      out << "no witness chain (" << by_oracle->search.nodes << " states searched)\n";
  }
  if (by_ineq && by_oracle) out << "agreement: yes\n";
  return member ? kOk : kNonMember;
}

int cmd_crosscheck(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.m % 2 == 0 && o.n != 1)
    throw UnsupportedError("nothing to compare the oracle with for even m and n > 1");
  const CrossCheckReport report = cross_check(o.n, o.m, o.bound, o.threads);
  if (o.json) {
    print_json(out, cross_check_json(report));
  } else {
    out << "checked " << report.tuples << " tuples (" << report.members << " members) against";
    for (const std::string& name : report.compared_against) out << ' ' << name;
    out << ": " << report.disagreements.size() << " disagreements\n";
  }
  for (const Disagreement& d : report.disagreements) {
    err << "DISAGREE";
    for (const Partition& p : d.tuple) err << ' ' << format_bracketed(p);
    err << " oracle=" << d.oracle << ' ' << d.against << '=' << d.other << '\n';
  }
  return report.disagreements.empty() ? kOk : kInconsistent;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Long exact sequences of finite abelian p-groups: coefficients, Horn-type "
               "inequalities and membership decisions"};
  app.require_subcommand(1);
  Options o;

  auto add_nm = [&](CLI::App* sub) {
    sub->add_option("-n", o.n, "number of parts")->required()->check(CLI::PositiveNumber);
    sub->add_option("-m", o.m, "length of the sequence")->required()->check(CLI::Range(3, 64));
  };
  auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
  };

  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient c^LAMBDA_{MU,NU}");
  lr->add_option("partitions", o.partitions, "MU NU LAMBDA")->required()->expected(3);

  auto* kostka = app.add_subcommand("kostka", "Kostka number for SHAPE and CONTENT");
  kostka->add_option("partitions", o.partitions, "SHAPE CONTENT")->required()->expected(2);

  auto* genlr = app.add_subcommand("genlr", "generalized LR coefficient f(P1, ..., Pm)");
  genlr->add_option("partitions", o.partitions, "P1 ... Pm")->required()->expected(1, 1 << 20);

  auto* snm = app.add_subcommand("snm", "list the Horn index set S(n, m), m odd");
  add_nm(snm);
  snm->add_flag("--json", o.json);
  add_threads(snm);

  auto* ineqs = app.add_subcommand("ineqs", "emit the inequality system of C(n, m), m odd");
  add_nm(ineqs);
  ineqs->add_flag("--json", o.json);
  add_threads(ineqs);

  auto* decide = app.add_subcommand("decide", "decide membership of a tuple in C(n, m)");
  add_nm(decide);
  decide->add_option("tuple", o.tuple, "\"l1;...;lm\"")->required();
  decide->add_option("--method", o.method)->check(CLI::IsMember({"ineq", "oracle", "both"}));

  auto* witness = app.add_subcommand("witness", "search for a witness chain of an integer tuple");
  add_nm(witness);
  witness->add_option("tuple", o.tuple, "\"l1;...;lm\"")->required();
  witness->add_flag("--json", o.json);

  auto* crosscheck = app.add_subcommand("crosscheck", "compare oracle and inequalities on a box");
  add_nm(crosscheck);
  crosscheck->add_option("--bound", o.bound, "maximum part")
      ->required()
      ->check(CLI::NonNegativeNumber);
  crosscheck->add_flag("--json", o.json);
  add_threads(crosscheck);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (lr->parsed()) return cmd_lr(o, out);
    if (kostka->parsed()) return cmd_kostka(o, out);
    if (genlr->parsed()) return cmd_genlr(o, out, err);
    if (snm->parsed()) return cmd_snm(o, out);
    if (ineqs->parsed()) return cmd_ineqs(o, out);
    if (decide->parsed()) return cmd_decide(o, out, err);
    if (witness->parsed()) return cmd_witness(o, out);
    if (crosscheck->parsed()) return cmd_crosscheck(o, out, err);
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << '\n';
    return kUnsupported;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace lesq::cli
