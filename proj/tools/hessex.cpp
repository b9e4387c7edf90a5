// hessex: runs verification jobs and basic ideal computations from the shell.
//
// Exit codes: 0 pass, 1 a claim failed, 2 S-pair budget exhausted, 3 bad input.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hessex/verify.hpp"

namespace {

using namespace hessex;
using nlohmann::json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kBudget = 2;
constexpr int kInput = 3;

std::vector<Rational> parse_samples(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_rational(item));
  if (out.empty()) throw ParseError("no samples given");
  return out;
}

MonomialOrder parse_order(const std::string& name, int n) {
  if (name == "elimination" || name == "paper") return MonomialOrder::elimination(n);
  if (name == "lex") return MonomialOrder::lex_default();
  if (name == "diagonal") {
    std::vector<int> rows(n);
    for (int k = 0; k < n; ++k) rows[k] = k + 1;
    return MonomialOrder::diagonal_twist(n, rows);
  }
  throw ParseError("unknown order '" + name + "' (elimination, lex or diagonal)");
}

Ideal read_ideal(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return ideal_from_json(j);
}

void emit(const json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

int code_for(const VerificationReport& r) {
  if (r.budget_exceeded) return kBudget;
  return r.passed() || r.evidence_only ? kPass : kFail;
}

void print_summary(const VerificationReport& r, std::ostream& os) {
  os << r.job << " " << r.params.value("h", std::string());
  if (r.params.contains("i")) os << " i=" << r.params["i"] << " j=" << r.params["j"];
  os << ": " << r.verdict();
  for (const auto& w : r.witnesses)
    if (!w.holds) os << "\n  failed: " << w.claim << "\n    " << w.evidence.dump();
  os << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of matrix Hessenberg scheme computations"};
  app.require_subcommand(1);
  // -h would collide with the Hessenberg function option.
  app.set_help_flag("--help", "print help and exit");

  std::uint64_t budget = engine_options().pair_budget;
  int gb_threads = 1;
  app.add_option("--budget", budget, "S-pair budget per Groebner computation");
  app.add_option("--gb-threads", gb_threads, "threads inside each Groebner computation");

  // verify
  auto* verify = app.add_subcommand("verify", "run one verification job");
  verify->set_help_flag("--help", "print help and exit");
  std::string job, h_text, samples_text = "0,1,-1,2", order_name = "elimination", json_out, jordan_file;
  int n = 4;
  std::optional<int> vi, vj;
  bool no_timing = false;
  verify->add_option("job", job, "job name")->required()->check(CLI::IsMember(job_names()));
  verify->add_option("--n", n, "matrix size")->check(CLI::Range(1, kMaxMatrixSize));
  verify->add_option("--h", h_text, "Hessenberg function, e.g. 2,4,4,4");
  verify->add_option("--samples", samples_text, "sample values of t, comma separated");
  verify->add_option("--order", order_name, "elimination (alias paper), lex or diagonal");
  verify->add_option("--i", vi, "lower index (grobner-tables)");
  verify->add_option("--j", vj, "upper index (grobner-tables)");
  verify->add_option("--jordan", jordan_file, "Jordan data JSON (explore-conjecture)");
  verify->add_option("--json", json_out, "write the report here");
  verify->add_flag("--no-timing", no_timing, "omit millis from the report");

  // gb
  auto* gb = app.add_subcommand("gb", "reduced Groebner basis of an ideal file");
  std::string ideal_file, gb_order = "elimination", gb_out;
  gb->add_option("--ideal", ideal_file, "ideal JSON")->required();
  gb->add_option("--order", gb_order, "elimination (alias paper), lex or diagonal");
  gb->add_option("--json", gb_out, "write the result here");

  // multidegree
  auto* md = app.add_subcommand("multidegree", "multidegree under the column grading");
  std::string md_file, md_out;
  md->add_option("--ideal", md_file, "ideal JSON")->required();
  md->add_option("--json", md_out, "write the result here");

  // suite
  auto* suite = app.add_subcommand("suite", "every job at size n");
  int suite_n = 4, suite_threads = 1;
  std::string suite_out;
  bool suite_no_timing = false;
  suite->add_option("--n", suite_n, "matrix size")->check(CLI::Range(1, kMaxMatrixSize));
  suite->add_option("--threads", suite_threads, "worker threads")->check(CLI::PositiveNumber);
  suite->add_option("--json", suite_out, "write all reports here");
  suite->add_flag("--no-timing", suite_no_timing, "omit millis from the reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kInput;
  }

  try {
    BuchbergerOptions opts = engine_options();
    opts.pair_budget = budget;
    opts.threads = std::max(1, gb_threads);
    set_engine_options(opts);

    if (*verify) {
      JobParams p;
      p.n = n;
      if (!h_text.empty()) {
        p.h = HessenbergFunction::parse(h_text);
        if (p.h->n() != n) throw ParseError("--h has " + std::to_string(p.h->n()) + " values but --n is " +
                                            std::to_string(n));
      }
      p.samples = parse_samples(samples_text);
      p.i = vi;
      p.j = vj;
      p.order = parse_order(order_name, n);
      if (!jordan_file.empty()) {
        std::ifstream in(jordan_file);
        if (!in) throw ParseError("cannot open '" + jordan_file + "'");
        p.jordan = JordanData::from_json(json::parse(in));
      }
      VerificationReport r;
      try {
        r = run_job(job, p);
      } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kBudget;
      }
      emit(r.to_json(!no_timing), json_out);
      if (!json_out.empty()) print_summary(r, std::cerr);
      return code_for(r);
    }

    if (*gb) {
      Ideal I = read_ideal(ideal_file);
      MonomialOrder ord = parse_order(gb_order, I.ring().n);
      I.groebner(ord);
      emit(ideal_to_json(I, &ord), gb_out);
      return kPass;
    }

    if (*md) {
      Ideal I = read_ideal(md_file);
      json j;
      j["multidegree"] = multidegree(I).to_string();
      j["dimension"] = krull_dimension(I);
      bool homogeneous = true;
      for (const auto& g : I.generators()) homogeneous = homogeneous && is_column_homogeneous(g);
      j["column_homogeneous"] = homogeneous;
      emit(j, md_out);
      return kPass;
    }

    if (*suite) {
      auto reports = run_suite(suite_entries(suite_n), suite_threads);
      json all = json::array();
      int rc = kPass;
      for (const auto& r : reports) {
        all.push_back(r.to_json(!suite_no_timing));
        print_summary(r, std::cerr);
        int c = code_for(r);
        if (c == kBudget) rc = kBudget;
        else if (c == kFail && rc == kPass) rc = kFail;
      }
      emit(all, suite_out);
      return rc;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const DomainError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
