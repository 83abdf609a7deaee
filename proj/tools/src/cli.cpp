/* Copyright 2026 The ordsum Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "ordsum/enumerate.hpp"
#include "ordsum/errors.hpp"
#include "ordsum/oracle.hpp"
#include "ordsum/ordinal.hpp"
#include "ordsum/rearrange.hpp"
#include "ordsum/series.hpp"

namespace ordsum::cli {

namespace {

// A usage problem detected after CLI11 parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Inline text, or the contents of FILE for `@FILE`.
std::string read_input(const std::string& arg) {
  if (arg.empty() || arg.front() != '@') return arg;
  std::ifstream in(arg.substr(1), std::ios::binary);
  if (!in) throw UsageError("cannot read " + arg.substr(1));
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  return text;
}

Series series_arg(const std::string& arg) { return parse_series(read_input(arg)); }

const Ordinal& omega() {
  static const Ordinal w = Ordinal::omega();
  return w;
}

const Ordinal& omega_two() {
  static const Ordinal w2 = mul(Ordinal::omega(), Ordinal(2));
  return w2;
}

EnumerationResult bijective(const Series& s) {
  if (s.order_type() == omega()) return enum_bijective_omega(s);
  if (s.order_type() == omega_two()) return enum_bijective_omega2(s);
  throw UnsupportedOrderType("bijective enumeration supports order types w and w*2, got " +
                             to_string(s.order_type()));
}

std::string join_terms(const std::vector<Ordinal>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + to_string(values[i]);
  return out + ")";
}

// Values the witness moves to the front, in order.
std::vector<Ordinal> moved_values(const MapSpec& m, const Series& s) {
  std::vector<Ordinal> out;
  for (const auto& step : m.steps())
    if (const auto* mf = std::get_if<MapSpec::MoveFront>(&step))
      for (const Ordinal& p : mf->sources) out.push_back(term_at(s, p));
  return out;
}

void explain_exceptional(std::ostream& out, const std::string& label, const Series& block) {
  out << label << ":";
  for (const auto& e : exceptional_multiset(block))
    out << ' ' << to_string(e.position) << '=' << to_string(e.value);
  out << '\n';
}

void explain(std::ostream& out, const Series& s) {
  out << "series: " << to_string(s) << '\n';
  out << "order type: " << to_string(s.order_type()) << '\n';
  out << "total sum: " << to_string(s.total_sum()) << '\n';
  if (s.order_type() == omega()) {
    explain_exceptional(out, "exceptional", s);
    out << "psi: " << to_string(psi(s)) << '\n';
    out << "sums:\n";
    const EnumerationResult r = enum_bijective_omega(s);
    for (const auto& e : r.entries())
      out << "  " << to_string(e.sum) << "  ordering " << join_terms(moved_values(e.witness, s))
          << "  witness " << to_string(e.witness) << '\n';
    return;
  }
  if (s.order_type() == omega_two()) {
    const BlockPair blocks = split_blocks(s);
    out << "block 1: " << to_string(blocks.first.to_series()) << '\n';
    out << "block 2: " << to_string(blocks.second.to_series()) << '\n';
    explain_exceptional(out, "exceptional 1", blocks.first.to_series());
    explain_exceptional(out, "exceptional 2", blocks.second.to_series());
    const RemainderTriple t = remainder_triple(s);
    out << "mu1: " << to_string(t.mu1) << "  psi of " << to_string(t.source1) << '\n';
    out << "mu2: " << to_string(t.mu2) << "  psi of " << to_string(t.source2) << '\n';
    out << "mu3: " << to_string(t.mu3) << "  psi of " << to_string(t.source3) << '\n';
    out << "sums:\n";
    const EnumerationResult r = enum_bijective_omega2(s);
    for (const auto& e : r.entries())
      out << "  " << to_string(e.sum) << "  remainder " << to_string(classify_remainder(s, e.witness))
          << "  witness " << to_string(e.witness) << '\n';
    return;
  }
  out << "psi: " << to_string(psi(s)) << '\n';
}

void classify(std::ostream& out, const MapSpec& m, const Series& s) {
  const MapKind kind = classify_kind(m);
  const Series image = apply(m, s);
  out << "map: " << to_string(m) << '\n';
  out << "kind: " << to_string(kind) << '\n';
  if (s.order_type() == omega() && kind != MapKind::general)
    out << "image: " << to_string(inj_image_class(m)) << '\n';
  if (s.order_type() == omega_two() && kind == MapKind::bijection) {
    const ABClass ab = ab_classify(m);
    out << "A: " << (ab.a_infinite ? "infinite" : "finite") << '\n';
    out << "B: " << (ab.b_infinite ? "infinite" : "finite") << '\n';
    out << "remainder: " << to_string(classify_remainder(s, m)) << '\n';
  }
  out << "result: " << to_string(image) << '\n';
  out << "sum: " << to_string(total_sum(image)) << '\n';
  out << "psi: " << to_string(psi(image)) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sums of rearranged transfinite series of ordinals", "ord"};
  app.require_subcommand(1);

  std::string text;
  std::string map_text;
  std::string type = "bij";
  std::size_t bound = 3;
  std::size_t depth = 4;

  auto* eval = app.add_subcommand("eval", "Normalize an ordinal expression");
  eval->add_option("EXPR", text, "Ordinal expression, e.g. w^2*3+w+1")->required();
  auto* sum = app.add_subcommand("sum", "Total sum of a series");
  sum->add_option("SERIES", text, "Series description or @file")->required();
  auto* psi_cmd = app.add_subcommand("psi", "Least tail sum of a series");
  psi_cmd->add_option("SERIES", text, "Series description or @file")->required();
  auto* tails = app.add_subcommand("tails", "Every tail sum of a series");
  tails->add_option("SERIES", text, "Series description or @file")->required();
  auto* enumerate = app.add_subcommand("enum", "Sums over rearrangements");
  enumerate->add_option("--type", type, "bij, inj or map")->check(CLI::IsMember({"bij", "inj", "map"}));
  enumerate->add_option("--bound", bound, "Exploration bound for inj and map");
  enumerate->add_option("SERIES", text, "Series description or @file")->required();
  auto* classify_cmd = app.add_subcommand("classify", "Classify a map and apply it");
  classify_cmd->add_option("MAPSPEC", map_text, "Map description or @file")->required();
  classify_cmd->add_option("--series", text, "Series description or @file")->required();
  auto* verify = app.add_subcommand("verify", "Compare the enumerator with the brute-force oracle");
  verify->add_option("--depth", depth, "Oracle family depth");
  verify->add_option("SERIES", text, "Series description or @file")->required();
  auto* explain_cmd = app.add_subcommand("explain", "Show the decomposition behind the sums");
  explain_cmd->add_option("SERIES", text, "Series description or @file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  try {
    if (*eval) {
      out << to_string(parse_ordinal(read_input(text))) << '\n';
    } else if (*sum) {
      out << to_string(total_sum(series_arg(text))) << '\n';
    } else if (*psi_cmd) {
      out << to_string(psi(series_arg(text))) << '\n';
    } else if (*tails) {
      const TailReport r = tail_sum_set(series_arg(text));
      out << "values: " << to_string(r.values) << '\n';
      out << "minimum: " << to_string(r.minimum) << '\n';
      out << "witness: " << to_string(r.witness) << '\n';
    } else if (*enumerate) {
      const Series s = series_arg(text);
      if (type == "bij")
        out << to_report(bijective(s));
      else if (type == "inj")
        out << to_report(enum_injective_bounded(s, bound));
      else
        out << to_report(enum_map_bounded(s, bound));
    } else if (*classify_cmd) {
      classify(out, parse_map(read_input(map_text)), series_arg(text));
    } else if (*verify) {
      const DifferentialReport r = differential_run(series_arg(text), depth);
      out << to_report(r);
      if (r.verdict != Verdict::equal) return kMismatch;
    } else if (*explain_cmd) {
      explain(out, series_arg(text));
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const EmptyPeriod& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const InvalidValue& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomainError;
  }
  return kOk;
}

}  // namespace ordsum::cli
