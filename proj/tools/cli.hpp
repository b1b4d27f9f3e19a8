#pragma once

// Command-line front end. run_cli never throws: exit 0 on success, 2 on a
// validation error, 1 when a checked identity fails.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "truncweyl/charring.hpp"
#include "truncweyl/conjecture.hpp"
#include "truncweyl/cvengine.hpp"
#include "truncweyl/fusion.hpp"
#include "truncweyl/json_io.hpp"
#include "truncweyl/partition.hpp"
#include "truncweyl/poset.hpp"
#include "truncweyl/rootsys.hpp"
#include "truncweyl/selftest.hpp"

namespace truncweyl::cli {

inline std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != item.size()) throw InvalidArgument(what + ": '" + item + "' is not an integer");
    out.push_back(v);
  }
  return out;
}

inline Partition parse_partition(const std::string& text) {
  std::vector<int> parts = parse_int_list(text, "--xi");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw InvalidArgument("--xi: parts must be positive");
    if (i && parts[i] > parts[i - 1]) throw InvalidArgument("--xi: parts must be non-increasing");
  }
  return Partition(parts);
}

inline TruncationIndex parse_truncation(const std::string& text) {
  if (text == "inf" || text == "infinity") return TruncationIndex::infinite();
  std::vector<int> v = parse_int_list(text, "--n");
  if (v.size() != 1 || v[0] < 1) throw InvalidArgument("--n must be a positive integer or 'inf'");
  return TruncationIndex::finite(v[0]);
}

inline std::string table_row(const std::vector<std::string>& cells, const std::vector<std::size_t>& widths) {
  std::string s;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    s += cells[i];
    if (i + 1 < cells.size()) s += std::string(widths[i] > cells[i].size() ? widths[i] - cells[i].size() + 2 : 2, ' ');
  }
  return s + "\n";
}

inline std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (widths.size() <= i) widths.push_back(0);
      widths[i] = std::max(widths[i], r[i].size());
    }
  std::string s;
  for (const auto& r : rows) s += table_row(r, widths);
  return s;
}

inline std::string graded_table(const RootSystem& rs, const GradedCharacter& gc, const std::string& label) {
  std::vector<std::vector<std::string>> rows{{"degree", "dim", "isotypic"}};
  for (const auto& [deg, piece] : gc.pieces()) {
    std::string iso;
    BigInt dim = 0;
    for (auto it = piece.rbegin(); it != piece.rend(); ++it) {
      if (!iso.empty()) iso += " + ";
      iso += (it->second == 1 ? "" : it->second.get_str() + " ") + std::string("V(") + it->first.to_string() + ")";
      dim += it->second * weyl_dim(rs, it->first);
    }
    rows.push_back({std::to_string(deg), dim.get_str(), iso});
  }
  return "module " + label + "\n" + render_table(rows) + "dim series " + graded_dim_series(rs, gc).to_string() +
         "\ntotal dim " + total_dim(rs, gc).get_str() + "\n";
}

inline std::string flag_table(const FlagMultiplicities& fm, const std::string& label) {
  std::vector<std::vector<std::string>> rows{{"mu", "multiplicity"}};
  for (auto it = fm.entries.rbegin(); it != fm.entries.rend(); ++it)
    rows.push_back({std::to_string(it->first), it->second.to_string()});
  return "module " + label + ", level " + std::to_string(fm.level) + "\n" + render_table(rows) + "length " +
         fm.length().get_str() + "\n";
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded characters of truncated Weyl, Chari-Venkatesh and Demazure modules"};
  app.name("truncweyl");
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "table";
  unsigned long bound = kDefaultTupleBound;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--bound", bound, "Enumeration limit for tuple searches")->check(CLI::PositiveNumber);

  // Shared option values; each subcommand registers the ones it reads.
  std::string xi_text, n_text, lambda_text, mu_text, parts_text, params_text, type_text, module_kind;
  int level = 0, shift = 0, m_value = 0, rank = 0, lambda_int = 0;

  auto* xi_cmd = app.add_subcommand("xi", "Partition family xi_N^lambda");
  xi_cmd->add_option("--lambda", lambda_text, "Highest weight (integer, or coordinates with --type)")->required();
  xi_cmd->add_option("--n", n_text, "Truncation index N or 'inf'")->required();
  xi_cmd->add_option("--type", type_text, "Cartan type letter");
  xi_cmd->add_option("--rank", rank, "Rank");

  auto* dim_cmd = app.add_subcommand("dim", "Dimension of W_N(lambda) or CV(xi)");
  dim_cmd->add_option("--lambda", lambda_int, "Highest weight");
  dim_cmd->add_option("--n", n_text, "Truncation index N or 'inf'");
  dim_cmd->add_option("--xi", xi_text, "Partition, e.g. 2,1,1");

  auto* char_cmd = app.add_subcommand("char", "Graded character");
  char_cmd->add_option("--module", module_kind, "W, D or CV")->required()->check(CLI::IsMember({"W", "D", "CV"}));
  char_cmd->add_option("--lambda", lambda_int, "Highest weight (W, D)");
  char_cmd->add_option("--n", n_text, "Truncation index for W (default inf)");
  char_cmd->add_option("--level", level, "Level for D");
  char_cmd->add_option("--xi", xi_text, "Partition for CV");
  char_cmd->add_option("--shift", shift, "Grade shift tau_m")->check(CLI::NonNegativeNumber);

  auto* flag_cmd = app.add_subcommand("flag", "Demazure flag multiplicities");
  auto* flen_cmd = app.add_subcommand("flag-length", "Length of a Demazure flag");
  for (auto* c : {flag_cmd, flen_cmd}) {
    c->add_option("--xi", xi_text, "Partition");
    c->add_option("--lambda", lambda_int, "Highest weight (with --n)");
    c->add_option("--n", n_text, "Truncation index (with --lambda)");
    c->add_option("--level", level, "Flag level")->required();
  }

  auto* classify_cmd = app.add_subcommand("classify", "Is W_N(lambda) a Demazure module?");
  classify_cmd->add_option("--lambda", lambda_int, "Highest weight")->required();
  classify_cmd->add_option("--n", n_text, "Truncation index")->required();

  auto* maximal_cmd = app.add_subcommand("maximal", "Maximal elements of P+(lambda,N)");
  maximal_cmd->add_option("--lambda", lambda_text, "Weight coordinates")->required();
  maximal_cmd->add_option("--n", n_text, "Tuple length")->required();
  maximal_cmd->add_option("--type", type_text, "Cartan type letter (default A)");
  maximal_cmd->add_option("--rank", rank, "Rank (default from --lambda)");

  auto* ses_cmd = app.add_subcommand("verify-ses", "Check the exact sequence for CV(xi)");
  ses_cmd->add_option("--xi", xi_text, "Partition with at least two parts")->required();

  auto* kernel_cmd = app.add_subcommand("verify-kernel", "Dimension test for the kernel of W_N -> W_{N-1}");
  kernel_cmd->add_option("--lambda", lambda_int, "Highest weight")->required();
  kernel_cmd->add_option("--n", n_text, "Truncation index")->required();

  auto* fusion_cmd = app.add_subcommand("fusion", "Brute-force fusion product of evaluation modules");
  fusion_cmd->add_option("--parts", parts_text, "Highest weights of the factors")->required();
  fusion_cmd->add_option("--params", params_text, "Integer evaluation points (default 0,1,...)");

  auto* conj_cmd = app.add_subcommand("verify-conjecture", "Compare W_N(m) with the fusion of a maximal tuple");
  conj_cmd->add_option("--m", m_value, "Highest weight")->required();
  conj_cmd->add_option("--n", n_text, "Truncation index")->required();

  auto* tensor_cmd = app.add_subcommand("tensor", "Decompose V(lambda) (x) V(mu)");
  tensor_cmd->add_option("--type", type_text, "Cartan type letter")->required();
  tensor_cmd->add_option("--rank", rank, "Rank")->required();
  tensor_cmd->add_option("--lambda", lambda_text, "Weight coordinates")->required();
  tensor_cmd->add_option("--mu", mu_text, "Weight coordinates")->required();

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance checks at reduced size");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const bool json = format == "json";

  auto weight_arg = [](const std::string& text, int expected_rank, const std::string& what) {
    std::vector<int> w = parse_int_list(text, what);
    if (static_cast<int>(w.size()) != expected_rank)
      throw InvalidArgument(what + " needs " + std::to_string(expected_rank) + " coordinates");
    return DominantWeight(w);
  };
  auto root_system_arg = [&](int default_rank) {
    const char series = type_text.empty() ? 'A' : type_text.size() == 1 ? type_text[0] : '?';
    return build_root_system(series, rank ? rank : default_rank);
  };
  auto need_nonnegative = [](int v, const std::string& what) {
    if (v < 0) throw InvalidArgument(what + " must be non-negative");
  };
  // --xi, or --lambda with --n, names the module for flag computations.
  auto module_arg = [&](CLI::App* c) {
    const bool by_xi = c->count("--xi") > 0, by_lambda = c->count("--lambda") > 0 || c->count("--n") > 0;
    if (by_xi == by_lambda) throw InvalidArgument("give either --xi or both --lambda and --n");
    if (by_xi) return ModuleLabel::cv(parse_partition(xi_text));
    if (!c->count("--lambda") || !c->count("--n")) throw InvalidArgument("--lambda and --n go together");
    need_nonnegative(lambda_int, "--lambda");
    TruncationIndex n = parse_truncation(n_text);
    return n.is_infinite() ? ModuleLabel::weyl(lambda_int) : ModuleLabel::truncated_weyl(lambda_int, n.value());
  };

  try {
    CvSession session;

    if (*xi_cmd) {
      const TruncationIndex n = parse_truncation(n_text);
      if (type_text.empty()) {
        std::vector<int> l = parse_int_list(lambda_text, "--lambda");
        if (l.size() != 1 || l[0] < 0) throw InvalidArgument("--lambda must be a non-negative integer without --type");
        const Partition xi = xi_parts(l[0], n);
        if (json) {
          Json j{{"lambda", l[0]}, {"n", n.is_infinite() ? Json("inf") : Json(n.value())}, {"xi", to_json(xi)}};
          out << dump(j);
        } else {
          out << xi.to_string() << " = " << xi.to_exponent_string() << "\n";
        }
        return 0;
      }
      std::vector<int> coords = parse_int_list(lambda_text, "--lambda");
      const RootSystem rs = root_system_arg(static_cast<int>(coords.size()));
      const DominantWeight lambda = weight_arg(lambda_text, rs.rank(), "--lambda");
      const std::vector<Partition> family = xi_family(rs, lambda, n);
      Json arr = Json::array();
      std::vector<std::vector<std::string>> rows{{"root", "lambda(h_alpha)", "xi"}};
      for (std::size_t a = 0; a < family.size(); ++a) {
        const auto& root = rs.positive_roots()[a];
        const int value = rs.pair(lambda.coords(), a);
        arr.push_back({{"root", root.coords}, {"value", value}, {"xi", to_json(family[a])}});
        rows.push_back({detail::ints(root.coords), std::to_string(value), family[a].to_exponent_string()});
      }
      const std::string n_label = n.is_infinite() ? "inf" : std::to_string(n.value());
      if (json) out << dump({{"type", rs.name()}, {"lambda", lambda.coords()}, {"n", n_label}, {"family", arr}});
      else out << rs.name() << ", lambda " << lambda.to_string() << ", N " << n_label << "\n" << render_table(rows);
      return 0;
    }

    if (*dim_cmd) {
      ModuleLabel label = module_arg(dim_cmd);
      const BigInt d = dim_cv(label.resolve());
      if (json) out << dump({{"module", label.to_string()}, {"dim", to_json(d)}});
      else out << d.get_str() << "\n";
      return 0;
    }

    if (*char_cmd) {
      ModuleLabel label;
      if (module_kind == "CV") {
        if (!char_cmd->count("--xi")) throw InvalidArgument("--module CV needs --xi");
        label = ModuleLabel::cv(parse_partition(xi_text));
      } else if (module_kind == "W") {
        if (!char_cmd->count("--lambda")) throw InvalidArgument("--module W needs --lambda");
        need_nonnegative(lambda_int, "--lambda");
        const TruncationIndex n = n_text.empty() ? TruncationIndex::infinite() : parse_truncation(n_text);
        label = n.is_infinite() ? ModuleLabel::weyl(lambda_int) : ModuleLabel::truncated_weyl(lambda_int, n.value());
      } else {
        if (!char_cmd->count("--lambda") || !char_cmd->count("--level"))
          throw InvalidArgument("--module D needs --level and --lambda");
        need_nonnegative(lambda_int, "--lambda");
        if (level < 1) throw InvalidArgument("--level must be positive");
        label = ModuleLabel::demazure(level, lambda_int);
      }
      label = label.shifted(shift);
      const GradedCharacter gc = graded_char_label(label, session);
      out << (json ? dump(to_json(gc, label.to_string())) : graded_table(sl2(), gc, label.to_string()));
      return 0;
    }

    if (*flag_cmd || *flen_cmd) {
      CLI::App* c = *flag_cmd ? flag_cmd : flen_cmd;
      const ModuleLabel label = module_arg(c);
      const FlagMultiplicities& fm = session.flags(label.resolve(), level);
      if (*flag_cmd) {
        out << (json ? dump(to_json(fm)) : flag_table(fm, label.to_string()));
      } else if (json) {
        out << dump({{"module", label.to_string()}, {"level", level}, {"length", to_json(fm.length())}});
      } else {
        out << fm.length().get_str() << "\n";
      }
      return 0;
    }

    if (*classify_cmd) {
      need_nonnegative(lambda_int, "--lambda");
      const TruncationIndex n = parse_truncation(n_text);
      if (n.is_infinite()) throw InvalidArgument("--n must be finite");
      const DemazureClass dc = classify_demazure(lambda_int, n.value(), session);
      const auto [q, p] = euclidean_split(lambda_int, n);
      const std::string label = ModuleLabel::truncated_weyl(lambda_int, n.value()).to_string();
      if (json) {
        out << dump({{"module", label}, {"q", q}, {"p", p}, {"verdict", to_string(dc.verdict)},
                     {"level", dc.level}, {"flag_length", to_json(dc.flag_length)}});
      } else if (dc.verdict == DemazureVerdict::NotDemazure) {
        out << label << ": not Demazure (level-" << dc.level << " flag length " << dc.flag_length.get_str() << ")\n";
      } else {
        out << label << " = D(" << dc.level << "," << lambda_int << ")\n";
      }
      return 0;
    }

    if (*maximal_cmd) {
      std::vector<int> coords = parse_int_list(lambda_text, "--lambda");
      const RootSystem rs = root_system_arg(static_cast<int>(coords.size()));
      const DominantWeight lambda = weight_arg(lambda_text, rs.rank(), "--lambda");
      const TruncationIndex n = parse_truncation(n_text);
      if (n.is_infinite()) throw InvalidArgument("--n must be finite");
      const auto orbits = maximal_elements(rs, lambda, n.value(), bound);
      if (json) {
        Json arr = Json::array();
        for (const auto& o : orbits) arr.push_back(to_json(o));
        out << dump({{"type", rs.name()}, {"lambda", to_json(lambda)}, {"n", n.value()}, {"orbits", arr}});
      } else {
        std::vector<std::vector<std::string>> rows{{"representative", "orbit size"}};
        for (const auto& o : orbits) rows.push_back({o.representative.to_string(), o.size.get_str()});
        out << rs.name() << ", lambda " << lambda.to_string() << ", N " << n.value() << ": " << orbits.size()
            << (orbits.size() == 1 ? " maximal orbit\n" : " maximal orbits\n") << render_table(rows);
      }
      return 0;
    }

    if (*ses_cmd) {
      const SesReport r = verify_ses(parse_partition(xi_text), session);
      if (json) {
        Json j{{"xi", to_json(r.xi)}, {"plus", to_json(r.plus)}, {"minus", to_json(r.minus)}, {"shift", r.shift},
               {"dims", {to_json(r.dim), to_json(r.dim_plus), to_json(r.dim_minus)}}, {"ok", r.ok()},
               {"diagnostics", r.diagnostics}};
        if (r.truncated) j["truncated"] = {{"lambda", r.truncated->first}, {"n", r.truncated->second}};
        out << dump(j);
      } else {
        out << "0 -> tau_" << r.shift << " CV" << r.minus.to_string() << " -> CV" << r.xi.to_string() << " -> CV"
            << r.plus.to_string() << " -> 0\n";
        out << "dims " << r.dim_minus.get_str() << " + " << r.dim_plus.get_str() << " = " << r.dim.get_str() << "\n";
        if (r.truncated)
          out << "xi = xi_" << r.truncated->second << "^" << r.truncated->first << "\n";
        for (const auto& d : r.diagnostics) out << "mismatch: " << d << "\n";
        out << (r.ok() ? "OK" : "FAILED") << "\n";
      }
      return r.ok() ? 0 : 1;
    }

    if (*kernel_cmd) {
      const TruncationIndex n = parse_truncation(n_text);
      if (n.is_infinite()) throw InvalidArgument("--n must be finite");
      const KernelReport k = kernel_is_truncated(lambda_int, n.value());
      if (json) {
        out << dump({{"lambda", lambda_int}, {"n", n.value()}, {"holds", k.holds},
                     {"delta_n_lambda", to_json(k.delta_n_lambda)},
                     {"delta_n_lambda_minus_2", to_json(k.delta_n_lambda_minus_2)},
                     {"delta_n_minus_1_lambda", to_json(k.delta_n_minus_1_lambda)}});
      } else {
        out << "delta_N(lambda) = " << k.delta_n_lambda.get_str() << "\ndelta_N(lambda-2) = "
            << k.delta_n_lambda_minus_2.get_str() << "\ndelta_{N-1}(lambda) = " << k.delta_n_minus_1_lambda.get_str()
            << "\nkernel is tau_{N-1} W_N(lambda-2): " << (k.holds ? "yes" : "no") << "\n";
      }
      return 0;
    }

    if (*fusion_cmd) {
      std::vector<int> parts = parse_int_list(parts_text, "--parts");
      if (parts.empty()) throw InvalidArgument("--parts must list at least one factor");
      std::vector<int> params = fusion_cmd->count("--params") ? parse_int_list(params_text, "--params")
                                                               : std::vector<int>();
      if (!fusion_cmd->count("--params"))
        for (std::size_t j = 0; j < parts.size(); ++j) params.push_back(static_cast<int>(j));
      if (params.size() != parts.size()) throw InvalidArgument("--params needs one value per part");
      std::vector<EvalFactor> factors;
      std::string label;
      for (std::size_t j = 0; j < parts.size(); ++j) {
        if (parts[j] < 0) throw InvalidArgument("--parts must be non-negative");
        factors.push_back({parts[j], Rational(params[j])});
        label += (j ? "*" : "") + std::string("V_") + std::to_string(params[j]) + "(" + std::to_string(parts[j]) + ")";
      }
      const FusionResult r = fusion_product(factors);
      if (!r.distinct_parameters) err << "warning: evaluation points are not distinct\n";
      if (!r.generated) err << "warning: the cyclic vector does not generate the tensor product\n";
      if (json) {
        Json j = to_json(r.character, label);
        j["distinct_parameters"] = r.distinct_parameters;
        j["generated"] = r.generated;
        out << dump(j);
      } else {
        out << graded_table(sl2(), r.character, label);
      }
      return 0;
    }

    if (*conj_cmd) {
      const TruncationIndex n = parse_truncation(n_text);
      if (n.is_infinite()) throw InvalidArgument("--n must be finite");
      const ConjectureReport r = verify_conjecture_sl2(m_value, n.value(), session, bound);
      if (json) {
        out << dump({{"m", r.m}, {"n", r.n}, {"maximal", to_json(TupleOrbit{r.maximal, orbit_size(r.maximal)})},
                     {"fusion_dim_series", to_json(graded_dim_series(r.oracle))},
                     {"truncated_dim_series", to_json(graded_dim_series(r.recursion))},
                     {"equal", r.equal}, {"diff", r.diff}});
      } else {
        out << "maximal tuple " << r.maximal.to_string() << "\n";
        out << "fusion of " << r.fused.to_string() << ": " << graded_dim_series(r.oracle).to_string() << "\n";
        out << "W_" << r.n << "(" << r.m << "): " << graded_dim_series(r.recursion).to_string() << "\n";
        for (const auto& d : r.diff) out << "diff " << d << "\n";
        out << (r.equal ? "EQUAL" : "DIFFERENT") << "\n";
      }
      return r.equal ? 0 : 1;
    }

    if (*tensor_cmd) {
      if (type_text.size() != 1) throw InvalidArgument("--type must be a single letter");
      const RootSystem rs = build_root_system(type_text[0], rank);
      const DominantWeight lambda = weight_arg(lambda_text, rank, "--lambda");
      const DominantWeight mu = weight_arg(mu_text, rank, "--mu");
      const auto dec = tensor_decompose(rs, lambda, mu);
      if (json) {
        Json arr = Json::array();
        for (auto it = dec.rbegin(); it != dec.rend(); ++it)
          arr.push_back({{"highest_weight", it->first.coords()}, {"mult", to_json(it->second)}});
        out << dump({{"type", rs.name()}, {"lambda", lambda.coords()}, {"mu", mu.coords()}, {"components", arr}});
      } else {
        std::vector<std::vector<std::string>> rows{{"highest weight", "mult", "dim"}};
        for (auto it = dec.rbegin(); it != dec.rend(); ++it)
          rows.push_back({it->first.to_string(), it->second.get_str(), weyl_dim(rs, it->first).get_str()});
        out << rs.name() << ": V" << lambda.to_string() << " (x) V" << mu.to_string() << ", dim "
            << BigInt(weyl_dim(rs, lambda) * weyl_dim(rs, mu)).get_str() << "\n" << render_table(rows);
      }
      return 0;
    }

    if (*selftest_cmd) {
      bool all = true;
      Json arr = Json::array();
      for (const auto& spec : acceptance_criteria()) {
        const CriterionOutcome o = run_criterion(spec, SelftestScale::reduced());
        all = all && o.pass;
        if (json) {
          arr.push_back({{"criterion", o.id}, {"title", o.title}, {"pass", o.pass}, {"notes", o.notes}});
        } else {
          out << "criterion " << o.id << " " << (o.pass ? "PASS" : "FAIL") << "  " << o.title << "\n";
          for (const auto& n : o.notes) out << "    " << n << "\n";
        }
      }
      if (json) out << dump({{"criteria", arr}, {"all_pass", all}});
      return all ? 0 : 1;
    }
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "identity check failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace truncweyl::cli
