// Command-line front end: brackets, Jones polynomials, identity checks,
// the collision search, knot counting and the fast-vs-oracle sweep.
//
// Exit codes: 0 success, 1 domain error (NotAKnot, OddM, ...), 2 usage or
// spec parse error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "pretzel/pretzel.hpp"
#include "pretzel/search.hpp"

namespace {

using pretzel::Error;
using pretzel::ErrorCode;

// "[m;]p1,p2,..." with m >= 0 and every p >= 1
pretzel::PretzelSpec parse_spec(const std::string& text) {
  std::size_t pos = 0;
  auto parse_int = [&](const char* what) -> long long {
    const std::size_t start = pos;
    bool any = false;
    long long value = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      value = value * 10 + (text[pos] - '0');
      if (value > 1000000)
        throw Error(ErrorCode::ParseError, "number too large at position " + std::to_string(start));
      ++pos;
      any = true;
    }
    if (!any)
      throw Error(ErrorCode::ParseError, std::string("expected ") + what + " at position " +
                                             std::to_string(start) + " in '" + text + "'");
    return value;
  };

  int m = 0;
  if (text.find(';') != std::string::npos) {
    m = static_cast<int>(parse_int("shorthand prefix"));
    if (pos >= text.size() || text[pos] != ';')
      throw Error(ErrorCode::ParseError, "expected ';' at position " + std::to_string(pos));
    ++pos;
  }
  std::vector<int> cols;
  for (;;) {
    const long long p = parse_int("column count");
    if (p < 1)
      throw Error(ErrorCode::ParseError, "column counts must be positive in '" + text + "'");
    cols.push_back(static_cast<int>(p));
    if (pos == text.size()) break;
    if (text[pos] != ',')
      throw Error(ErrorCode::ParseError, "expected ',' at position " + std::to_string(pos));
    ++pos;
  }
  return pretzel::PretzelSpec::shorthand(m, std::move(cols));
}

void print_search_text(const pretzel::CollisionReport& report) {
  std::printf("knots: %llu\n", static_cast<unsigned long long>(report.knot_count));
  std::size_t distinct = 0;
  for (const auto& g : report.groups) distinct += g.distinct_alexander ? 1 : 0;
  std::printf("collision groups: %zu (%zu with distinct Alexander degrees)\n",
              report.groups.size(), distinct);
  for (std::size_t i = 0; i < report.groups.size(); ++i) {
    const auto& g = report.groups[i];
    std::printf("group %zu%s\n", i + 1,
                g.distinct_alexander ? " [distinct alexander degrees]" : "");
    for (const auto& m : g.members) {
      std::printf("  (%s) crossings=%d writhe=%d alexander_degree=%d\n",
                  pretzel::PretzelSpec(m.tuple).to_string().c_str(), m.crossings, m.writhe,
                  m.alexander_degree);
    }
    std::printf("  jones: %s\n", g.members.front().jones.to_string("t").c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Kauffman brackets and Jones polynomials of alternating pretzel links"};
  app.require_subcommand(1);

  std::string spec_text, identity_text, format = "text", convention_text = "n3";
  int max_crossings = 0, jobs = 0;
  std::optional<long long> k_param, a_param, b_param;

  auto* cmd_bracket = app.add_subcommand("bracket", "Kauffman bracket of a pretzel spec");
  cmd_bracket->add_option("--spec", spec_text, "pretzel spec, [m;]p1,p2,...")->required();
  cmd_bracket->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* cmd_jones = app.add_subcommand("jones", "Jones polynomial of a pretzel knot");
  cmd_jones->add_option("--spec", spec_text, "pretzel spec, [m;]p1,p2,...")->required();
  cmd_jones->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* cmd_verify = app.add_subcommand("verify", "check a bracket identity");
  cmd_verify
      ->add_option("--identity", identity_text,
                   "eq2 | eq3 | f6_factorization | lemma31 | lemma32 | thm12_bracket")
      ->required();
  cmd_verify->add_option("--k", k_param, "family parameter (even, >= 0)");
  cmd_verify->add_option("--a", a_param, "index parameter");
  cmd_verify->add_option("--b", b_param, "second index parameter (eq3)");

  auto* cmd_search = app.add_subcommand("search", "find Jones-polynomial collisions");
  cmd_search->add_option("--max-crossings", max_crossings)->required()->check(CLI::Range(3, 1000));
  cmd_search->add_option("--convention", convention_text)->check(CLI::IsMember({"n3", "n1"}));
  cmd_search->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
  cmd_search->add_option("--jobs", jobs, "worker threads (default: hardware)");

  auto* cmd_count = app.add_subcommand("count", "count alternating pretzel knots");
  cmd_count->add_option("--max-crossings", max_crossings)->required()->check(CLI::Range(3, 1000));
  cmd_count->add_option("--convention", convention_text)->check(CLI::IsMember({"n3", "n1"}));

  auto* cmd_oracle = app.add_subcommand("oracle-check", "fast bracket vs state-sum sweep");
  cmd_oracle->add_option("--max-crossings,--max", max_crossings)
      ->default_val(14)
      ->check(CLI::Range(1, pretzel::kOracleLimitDefault));
  cmd_oracle->add_option("--jobs", jobs, "worker threads (default: hardware)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  }

  try {
    if (cmd_bracket->parsed()) {
      const auto poly = pretzel::bracket_fast(parse_spec(spec_text));
      std::printf("%s\n", format == "json" ? poly.to_json().c_str() : poly.to_string("A").c_str());
    } else if (cmd_jones->parsed()) {
      const auto poly = pretzel::jones(parse_spec(spec_text));
      std::printf("%s\n", format == "json" ? poly.to_json().c_str() : poly.to_string("t").c_str());
    } else if (cmd_verify->parsed()) {
      pretzel::IdentityParams params;
      params.a = a_param;
      params.b = b_param;
      params.k = k_param;
      if (!pretzel::check_identity(pretzel::identity_from_name(identity_text), params)) {
        std::fprintf(stderr, "identity %s does not hold\n", identity_text.c_str());
        return 1;
      }
      std::printf("OK\n");
    } else if (cmd_search->parsed()) {
      const auto report = pretzel::find_jones_collisions(
          max_crossings, pretzel::convention_from_name(convention_text), jobs, true);
      if (format == "json") {
        std::fputs(pretzel::to_json(report).c_str(), stdout);
      } else if (format == "csv") {
        std::fputs(pretzel::to_csv(report).c_str(), stdout);
      } else {
        print_search_text(report);
      }
    } else if (cmd_count->parsed()) {
      const auto n =
          pretzel::count_knots(max_crossings, pretzel::convention_from_name(convention_text));
      std::printf("%llu\n", static_cast<unsigned long long>(n));
    } else if (cmd_oracle->parsed()) {
      const auto n = pretzel::oracle_check(max_crossings, jobs);
      std::printf("OK (%llu specs)\n", static_cast<unsigned long long>(n));
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return e.code() == ErrorCode::ParseError ? 2 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
