// Copyright 2026 The ModSum Cards Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "modsum/cli.h"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "modsum/analytics.h"
#include "modsum/errors.h"
#include "modsum/primes.h"
#include "modsum/security.h"
#include "modsum/serialize.h"
#include "modsum/verify.h"

namespace modsum {
namespace {

struct RunConfig {
  std::string format = "text";
  int jobs = 0;

  std::string size;
  std::string alice;
  std::string bob;
  std::optional<std::string> cath;
  std::string protocol = "dmodsum";
  std::optional<int> modulus;

  std::string suite;
  SuiteOptions suite_options;
  std::string table = "caseb";
};

DealSize ParseSize(const std::string& text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = std::min(text.find(',', pos), text.size());
    try {
      std::size_t used = 0;
      const std::string token = text.substr(pos, comma - pos);
      parts.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::logic_error&) {
      throw UsageError("malformed size '" + text + "' (expected a,b,c)");
    }
    pos = comma + 1;
  }
  if (parts.size() != 3) {
    throw UsageError("malformed size '" + text + "' (expected a,b,c)");
  }
  return DealSize::Make(parts[0], parts[1], parts[2]);
}

int Jobs(const RunConfig& config) {
  if (config.jobs > 0) return config.jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

ProtocolKind Protocol(const RunConfig& config) {
  if (config.modulus) return ProtocolKind::ModSum(*config.modulus);
  return ProtocolKind::Parse(config.protocol);
}

std::string Describe(const Ownership& known) {
  return "card " + std::to_string(known.card) + " is held by " +
         std::string(AgentName(known.owner));
}

// simulate ----------------------------------------------------------------

int Simulate(const RunConfig& config, std::ostream& out) {
  const Hand alice = Hand::Parse(config.alice);
  const Hand bob = Hand::Parse(config.bob);
  std::optional<DealSize> size;
  if (!config.size.empty()) size = ParseSize(config.size);
  Deal deal = [&] {
    if (config.cath) {
      Deal d = Deal::FromHands(alice, bob, Hand::Parse(*config.cath));
      if (size && !(d.size() == *size)) {
        throw UsageError("hands do not match --size " + size->ToString());
      }
      return d;
    }
    if (!size) throw UsageError("--size is required when --cath is omitted");
    if (!(alice | bob).IsSubsetOf(size->Deck())) {
      throw UsageError("hands use cards outside the deck");
    }
    return Deal::Make(*size, alice, bob, size->Deck() - alice - bob);
  }();

  const Transcript transcript = RunProtocol(deal, Protocol(config));
  const std::vector<Announcement> heard(transcript.announcements.begin(),
                                        transcript.announcements.end());

  Json views = Json::object();
  std::array<std::array<std::size_t, 3>, 3> counts{};
  for (Agent agent : kAllAgents) {
    Json row = Json::array();
    for (std::size_t prefix = 0; prefix <= heard.size(); ++prefix) {
      KnowledgeQuery query{
          agent, deal.HandOf(agent), deal.size(),
          std::vector<Announcement>(heard.begin(), heard.begin() + prefix)};
      counts[static_cast<int>(agent)][prefix] = CompatibleDeals(query).size();
      row.push_back(counts[static_cast<int>(agent)][prefix]);
    }
    views[std::string(AgentName(agent))] = row;
  }
  const std::vector<Ownership> known =
      KnownCards({Agent::kCath, deal.cath(), deal.size(), heard});
  std::vector<Ownership> leaks;
  std::copy_if(known.begin(), known.end(), std::back_inserter(leaks),
               [](const Ownership& o) { return o.owner != Agent::kCath; });
  const bool cath_knows_deal =
      static_cast<int>(known.size()) == deal.size().d();

  if (config.format == "json") {
    Json leak_json = Json::array();
    for (const Ownership& o : leaks) leak_json.push_back(ToJson(o));
    Json j{{"deal", ToJson(deal)},
           {"transcript", ToJson(transcript)},
           {"compatible_deals", views},
           {"cath_leaks", leak_json},
           {"cath_knows_deal", cath_knows_deal}};
    out << j.dump() << '\n';
    return kExitOk;
  }

  out << "deal " << deal.ToString() << " (size " << deal.size().ToString()
      << ")\n";
  out << "protocol " << transcript.kind.ToString() << ", modulus "
      << transcript.modulus() << '\n';
  for (const Announcement& a : heard) {
    out << AgentName(a.speaker) << " announces " << a.residue << '\n';
  }
  out << "compatible deals: initially -> after alice -> after bob\n";
  for (Agent agent : kAllAgents) {
    const auto& c = counts[static_cast<int>(agent)];
    out << "  " << std::left << std::setw(6) << AgentName(agent) << c[0]
        << " -> " << c[1] << " -> " << c[2]
        << (c[2] == 1 ? " (knows the deal)" : "") << '\n';
  }
  if (cath_knows_deal) out << "cath knows the full deal\n";
  if (leaks.empty()) {
    out << "cath learns no card of alice or bob\n";
  } else {
    for (const Ownership& o : leaks) out << "LEAK: cath learns " << Describe(o) << '\n';
  }
  return kExitOk;
}

// check -------------------------------------------------------------------

int Check(const RunConfig& config, std::ostream& out) {
  const DealSize size = ParseSize(config.size);
  const int modulus = ResolveModulus(Protocol(config), size);
  const SecurityVerdict security = OracleIsSecure(size, modulus, Jobs(config));
  const InformativityVerdict info =
      OracleIsInformative(size, modulus, Jobs(config));

  if (config.format == "json") {
    out << ToJson(security).dump() << '\n' << ToJson(info).dump() << '\n';
  } else {
    out << "size " << size.ToString() << ", modulus " << modulus << ", "
        << CountDeals(size) << " deals\n";
    out << "security: " << (security.secure ? "secure" : "INSECURE");
    if (security.counterexample) {
      const Leak& leak = *security.counterexample;
      out << " (deal " << leak.deal.ToString() << ": cath learns "
          << Describe({leak.card, leak.owner}) << ")";
    }
    out << "\ninformativity: "
        << (info.informative ? "informative" : "NOT informative");
    if (info.counterexample) {
      const Confusion& c = *info.counterexample;
      out << " (deal " << c.deal.ToString() << ": " << AgentName(c.observer)
          << " cannot rule out " << c.alternative.ToString() << ")";
    }
    out << '\n';
  }
  return security.secure && info.informative ? kExitOk : kExitFailed;
}

// analyze -----------------------------------------------------------------

int Analyze(const RunConfig& config, std::ostream& out) {
  const DealSize size = ParseSize(config.size);
  const CriterionReport report = PrimeSecurityCriterion(size);
  std::optional<Recommendation> recommendation;
  std::string note;
  if (size.c() != 1) {
    note = "recommendations cover deals with c = 1 only";
  } else if (size.a() < 3 || size.b() < 3) {
    note = "no secure modsum protocol claimed";
  } else {
    recommendation = RecommendProtocol(size.a(), size.b());
  }

  if (config.format == "json") {
    Json j{{"criterion", ToJson(report)},
           {"recommendation", recommendation ? ToJson(*recommendation) : Json()}};
    if (!note.empty()) j["note"] = note;
    out << j.dump() << '\n';
    return kExitOk;
  }
  out << "size " << size.ToString() << " (d = " << size.d() << ", "
      << (report.d_prime ? "prime" : "composite") << ")\n";
  out << "ab-2a-b-c+1 = " << report.ineq_a << '\n';
  out << "ab-2b-a-c+1 = " << report.ineq_b << '\n';
  out << "sum mod d secure by prime-deck criterion: "
      << (report.secure_by_theorem ? "yes" : "no") << '\n';
  if (recommendation) {
    out << "recommended: " << recommendation->protocol.ToString()
        << ", modulus " << recommendation->modulus << " ("
        << JustificationName(recommendation->justification) << ")\n";
  } else {
    out << note << '\n';
  }
  return kExitOk;
}

// verify ------------------------------------------------------------------

int Verify(const RunConfig& config, std::ostream& out) {
  std::vector<std::string_view> suites;
  if (config.suite == "all") {
    suites = SuiteNames();
  } else {
    suites.push_back(config.suite);
  }
  SuiteOptions options = config.suite_options;
  options.jobs = Jobs(config);
  bool all_passed = true;
  for (std::string_view name : suites) {
    const SuiteReport report = RunSuite(name, options);
    all_passed = all_passed && report.passed;
    if (config.format == "json") {
      out << ToJson(report).dump() << '\n';
      continue;
    }
    out << "suite " << report.suite << " (" << report.bounds << "): "
        << (report.passed ? "PASS" : "FAIL") << ", " << report.checks
        << " checks\n";
    if (!report.passed) {
      out << "  counterexample: " << report.counterexample.dump() << '\n';
    }
  }
  return all_passed ? kExitOk : kExitFailed;
}

// table -------------------------------------------------------------------

int Table(const RunConfig& config, std::ostream& out) {
  const std::vector<PaddingPrimeRow> rows = PaddingPrimeTable();
  if (config.format == "csv") {
    out << PaddingPrimeTableCsv(rows);
  } else if (config.format == "json") {
    out << ToJson(rows).dump() << '\n';
  } else {
    out << std::right << std::setw(4) << "a" << std::setw(5) << "p"
        << std::setw(7) << "2a+1" << '\n';
    for (const PaddingPrimeRow& row : rows) {
      out << std::setw(4) << row.a << std::setw(5) << row.p << std::setw(7)
          << row.two_a_plus_1 << '\n';
    }
  }
  bool bound_holds = std::all_of(rows.begin(), rows.end(), [](const auto& r) {
    return r.p <= r.two_a_plus_1;
  });
  return bound_holds ? kExitOk : kExitFailed;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  RunConfig config;
  CLI::App app{"Modular-sum card protocols: simulation and exhaustive checks",
               "modsum"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--jobs", config.jobs,
                 "Worker threads (default: all cores; 1 = serial)")
      ->check(CLI::NonNegativeNumber);

  auto add_protocol = [&](CLI::App* cmd) {
    cmd->add_option("--protocol", config.protocol,
                    "dmodsum | lpmodsum | modsum:<n>");
    cmd->add_option("--modulus", config.modulus,
                    "Explicit modulus n (overrides --protocol)");
  };

  CLI::App* simulate = app.add_subcommand(
      "simulate", "Run a protocol on one deal and show what everyone knows");
  simulate->add_option("--alice", config.alice, "Alice's cards, e.g. 0,1,2")
      ->required();
  simulate->add_option("--bob", config.bob, "Bob's cards")->required();
  simulate->add_option("--cath", config.cath,
                       "Cath's cards (default: the rest of the deck)");
  simulate->add_option("--size", config.size, "Deal size a,b,c");
  add_protocol(simulate);

  CLI::App* check = app.add_subcommand(
      "check", "Decide security and informativity over all deals of a size");
  check->add_option("--size", config.size, "Deal size a,b,c")->required();
  add_protocol(check);

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Closed-form criterion and recommended protocol for a size");
  analyze->add_option("--size", config.size, "Deal size a,b,c")->required();

  CLI::App* verify =
      app.add_subcommand("verify", "Run a verification sweep (or 'all')");
  verify->add_option("--suite", config.suite, "Suite name")->required();
  verify->add_option("--max-d", config.suite_options.max_d, "Largest deck size");
  verify->add_option("--max-prime", config.suite_options.max_prime,
                     "Largest prime modulus");
  verify->add_option("--max-n", config.suite_options.max_n,
                     "Upper end of the prime-gap ranges");
  verify->add_option("--extra-moduli", config.suite_options.extra_moduli,
                     "Moduli n up to d + this value");

  CLI::App* table = app.add_subcommand("table", "Print a reference table");
  table->add_option("name", config.table, "Table name")
      ->check(CLI::IsMember({"caseb", "padding-primes"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (config.suite != "all" && verify->parsed()) {
    const auto& names = SuiteNames();
    if (std::find(names.begin(), names.end(), config.suite) == names.end()) {
      err << "error: unknown suite '" << config.suite << "'\n";
      return kExitUsage;
    }
  }

  try {
    if (simulate->parsed()) return Simulate(config, out);
    if (check->parsed()) return Check(config, out);
    if (analyze->parsed()) return Analyze(config, out);
    if (verify->parsed()) return Verify(config, out);
    if (table->parsed()) return Table(config, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace modsum
