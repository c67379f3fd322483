#include <CLI11.hpp>
#include <cctype>
#include <cmath>
#include <iostream>
#include <string>
#include <vector>

#include "emit.hpp"
#include "yang/entanglement.hpp"
#include "yang/mesons.hpp"
#include "yang/su2.hpp"
#include "yang/su3.hpp"
#include "yang/transitions.hpp"

namespace {

using yang::cdouble;
using yang::emit::fmt;
using yang::emit::fmt_complex;
using yang::emit::Json;

double strict_double(const std::string& t, const std::string& context) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &pos);
  } catch (...) {
    throw yang::ValidationError("bad number '" + t + "' in " + context);
  }
  if (pos != t.size())
    throw yang::ValidationError("bad number '" + t + "' in " + context);
  return v;
}

// Accepts "1.5", "-0.3", "1+2i", "-1-0.5i", "0.8i", "i", "-i".
cdouble parse_complex(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw yang::ValidationError("empty complex literal");
  if (s.back() != 'i') return cdouble(strict_double(s, raw), 0.0);

  const std::string body = s.substr(0, s.size() - 1);
  auto signed_unit = [&](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return strict_double(t, raw);
  };
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E')
      return cdouble(strict_double(body.substr(0, k), raw), signed_unit(body.substr(k)));
  }
  return cdouble(0.0, signed_unit(body));
}

std::vector<cdouble> parse_amps(const std::string& raw) {
  std::vector<cdouble> out;
  std::string cur;
  for (char c : raw) {
    if (c == ',') {
      out.push_back(parse_complex(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(parse_complex(cur));
  return out;
}

Json params_json(const yang::Params& p) {
  Json j = Json::object();
  j.set("mu", Json::num(p.mu));
  j.set("nu", Json::num(p.nu));
  j.set("lambda", Json::num(p.lambda));
  j.set("xi", Json::num(p.xi()));
  j.set("constraint_ok", Json::boolean(p.constraint_ok()));
  return j;
}

std::string verify_output(const yang::RelationReport& rep) {
  Json root = Json::object();
  root.set("algebra", Json::str(rep.algebra));
  root.set("params", params_json(rep.params));
  Json rels = Json::array();
  for (const auto& r : rep.relations) {
    Json row = Json::object();
    row.set("name", Json::str(r.name));
    row.set("residual", Json::num(r.residual));
    row.set("expected", Json::boolean(r.expected));
    rels.push(std::move(row));
  }
  root.set("relations", std::move(rels));
  Json scalars = Json::object();
  for (const auto& [label, values] : rep.block_scalars) {
    Json arr = Json::array();
    for (const auto& v : values) arr.push(Json::str(fmt_complex(v)));
    scalars.set(label, std::move(arr));
  }
  root.set("block_scalars", std::move(scalars));
  root.set("max_residual", Json::num(rep.max_residual()));
  return root.dump();
}

std::string spectrum_output(const yang::Params& p, const std::vector<cdouble>& roots) {
  Json root = Json::object();
  root.set("algebra", Json::str("su3"));
  root.set("target", Json::str("i3"));
  root.set("params", params_json(p));
  Json arr = Json::array();
  for (const auto& r : roots) {
    Json entry = Json::object();
    entry.set("re", Json::num(r.real()));
    entry.set("im", Json::num(r.imag()));
    arr.push(std::move(entry));
  }
  root.set("roots", std::move(arr));
  return root.dump();
}

std::string apply_output(const yang::Params& p, const std::string& algebra,
                         const yang::TransitionOutcome& out) {
  Json root = Json::object();
  root.set("algebra", Json::str(algebra));
  root.set("operator", Json::str(out.operator_label));
  root.set("params", params_json(p));
  root.set("entanglement_before", Json::num(out.entanglement_before));
  root.set("raw_norm", Json::num(out.raw_norm));
  root.set("annihilated", Json::boolean(out.annihilated));
  if (!out.annihilated) {
    Json amps = Json::array();
    for (Eigen::Index k = 0; k < out.final_state.amps.size(); ++k) {
      Json entry = Json::object();
      entry.set("re", Json::num(out.final_state.amps(k).real()));
      entry.set("im", Json::num(out.final_state.amps(k).imag()));
      amps.push(std::move(entry));
    }
    root.set("final_amps", std::move(amps));
    root.set("entanglement_after", Json::num(out.entanglement_after));
  }
  Json channels = Json::array();
  for (const auto& ch : out.channels) channels.push(Json::str(ch));
  root.set("channels", std::move(channels));
  return root.dump();
}

std::string sweep_output(const yang::SweepResult& res) {
  std::string csv = "mu,c1\n";
  for (const auto& pt : res.points) csv += fmt(pt.mu) + "," + fmt(pt.c1) + "\n";
  return csv;
}

void table_section(std::string& md, const std::string& title,
                   const std::vector<yang::DecayRow>& rows) {
  md += "## " + title + "\n\n";
  md += "| operator | entanglement | channel |\n";
  md += "| --- | --- | --- |\n";
  for (const auto& row : rows) {
    md += "| " + row.operator_label + " | ";
    md += row.annihilated ? "0" : fmt(row.entanglement_after);
    md += " | ";
    md += row.annihilated ? "(annihilated)" : row.channel;
    md += " |\n";
  }
  md += "\n";
}

std::string tables_output(const yang::DecayReport& rep) {
  std::string md = "# decay tables\n\n";
  md += "parameters: mu=" + fmt(rep.params.mu) + ", nu=" + fmt(rep.params.nu) +
        ", lambda=" + fmt(rep.params.lambda) + ", xi=" + fmt(rep.params.xi()) + "\n";
  md += "mixing: alpha1=" + fmt(rep.alpha1) + ", alpha2=" + fmt(rep.alpha2) + "\n";
  md += "initial mean entanglement entropy: " + fmt(rep.entanglement_initial) + "\n\n";
  table_section(md, "general family", rep.general);
  table_section(md, "reduced family", rep.reduced);
  md += "## notes\n\n";
  for (const auto& row : rep.reduced) {
    if (row.operator_label != "Ibar8") continue;
    std::string parts;
    for (const char* want : {"pi0", "eta0", "eta0'"}) {
      for (const auto& comp : row.components) {
        if (comp.label == want) {
          if (!parts.empty()) parts += ", ";
          parts += std::string(want) + " = " + fmt_complex(comp.coefficient);
        }
      }
    }
    md += "- Ibar8 image components: " + parts + "\n";
  }
  md += "- Ibar8 deviation from the asymmetric display variant: " +
        fmt(rep.i8_variant_deviation) + "\n";
  md += std::string("- special mixing (alpha1 = -sqrt(2) alpha2): ") +
        (rep.special_mixing ? "yes" : "no") + "\n";
  return md;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for two-site representations of deformed su(2)/su(3) families"};
  app.require_subcommand(1);

  double mu = 0.0, nu = 0.0, lambda = 0.0;
  std::string format, out_path;

  std::string v_algebra;
  CLI::App* verify = app.add_subcommand("verify", "check operator identities and reductions");
  verify->add_option("algebra", v_algebra, "algebra family")
      ->required()
      ->check(CLI::IsMember({"su2", "su3"}));
  verify->add_option("--mu", mu, "site-1 weight")->required();
  verify->add_option("--nu", nu, "site-2 weight")->required();
  verify->add_option("--lambda", lambda, "deformation strength")->required();
  verify->add_option("--format", format, "output format")->check(CLI::IsMember({"json"}));
  verify->add_option("--out", out_path, "output file (default stdout)");

  std::string sp_target;
  double sp_tol = yang::tol::roots;
  CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalues via characteristic roots");
  spectrum->add_option("target", sp_target, "spectrum target")
      ->required()
      ->check(CLI::IsMember({"i3"}));
  spectrum->add_option("--mu", mu, "site-1 weight")->required();
  spectrum->add_option("--nu", nu, "site-2 weight")->required();
  spectrum->add_option("--lambda", lambda, "deformation strength")->required();
  spectrum->add_option("--tol", sp_tol, "root residual tolerance");
  spectrum->add_option("--format", format, "output format")->check(CLI::IsMember({"json"}));
  spectrum->add_option("--out", out_path, "output file (default stdout)");

  std::string ap_operator, ap_alpha, ap_beta, ap_amps;
  double ap_alpha1 = 0.0, ap_alpha2 = 0.0;
  double ap_tol = yang::tol::channel_support;
  CLI::App* apply = app.add_subcommand("apply", "apply one transition operator to a state");
  apply->add_option("--operator", ap_operator, "operator label, e.g. J+, Y3, Itilde+, Ibar8")
      ->required();
  apply->add_option("--mu", mu, "site-1 weight")->required();
  apply->add_option("--nu", nu, "site-2 weight")->required();
  apply->add_option("--lambda", lambda, "deformation strength")->required();
  CLI::Option* opt_alpha =
      apply->add_option("--alpha", ap_alpha, "qubit pair amplitude alpha (complex)");
  CLI::Option* opt_beta =
      apply->add_option("--beta", ap_beta, "qubit pair amplitude beta (complex)");
  CLI::Option* opt_alpha1 =
      apply->add_option("--alpha1", ap_alpha1, "eta0' mixing weight (real)");
  CLI::Option* opt_alpha2 =
      apply->add_option("--alpha2", ap_alpha2, "eta0 mixing weight (real)");
  CLI::Option* opt_amps =
      apply->add_option("--amps", ap_amps, "comma-separated amplitudes (re+imi form)");
  apply->add_option("--tol", ap_tol, "channel support threshold");
  apply->add_option("--format", format, "output format")->check(CLI::IsMember({"json"}));
  apply->add_option("--out", out_path, "output file (default stdout)");

  std::string sw_target;
  double sw_lambda = 0.0, sw_mu_min = 0.0, sw_mu_max = 0.0;
  int sw_steps = 199;
  CLI::App* sweep = app.add_subcommand("sweep", "entanglement curve over a mu grid");
  sweep->add_option("target", sw_target, "curve to sweep")
      ->required()
      ->check(CLI::IsMember({"c1"}));
  sweep->add_option("--lambda", sw_lambda, "deformation strength")->required();
  sweep->add_option("--mu-min", sw_mu_min, "grid start")->required();
  sweep->add_option("--mu-max", sw_mu_max, "grid end")->required();
  sweep->add_option("--steps", sw_steps, "grid point count (default 199)");
  sweep->add_option("--format", format, "output format")->check(CLI::IsMember({"csv"}));
  sweep->add_option("--out", out_path, "output file (default stdout)");

  double tb_alpha1 = 0.0, tb_alpha2 = 0.0;
  double tb_tol = yang::tol::channel_support;
  CLI::App* tables = app.add_subcommand("tables", "decay tables for both operator families");
  tables->add_option("--mu", mu, "site-1 weight")->required();
  tables->add_option("--nu", nu, "site-2 weight")->required();
  tables->add_option("--lambda", lambda, "deformation strength")->required();
  tables->add_option("--alpha1", tb_alpha1, "eta0' mixing weight")->required();
  tables->add_option("--alpha2", tb_alpha2, "eta0 mixing weight")->required();
  tables->add_option("--tol", tb_tol, "channel support threshold");
  tables->add_option("--format", format, "output format")->check(CLI::IsMember({"markdown"}));
  tables->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    const yang::Params prm{mu, nu, lambda};
    if (verify->parsed()) {
      const yang::RelationReport rep = (v_algebra == "su2")
                                           ? yang::verify_su2_relations(prm)
                                           : yang::verify_tilde_commutators(prm);
      yang::emit::write_output(verify_output(rep), out_path);
    } else if (spectrum->parsed()) {
      if (sp_tol <= 0.0) throw yang::ValidationError("--tol must be positive");
      yang::emit::write_output(spectrum_output(prm, yang::i3_spectrum(prm, sp_tol)),
                               out_path);
    } else if (apply->parsed()) {
      const auto [op, algebra] = yang::operator_by_label(prm, ap_operator);
      const int qubit_given = (opt_alpha->count() || opt_beta->count()) ? 1 : 0;
      const int eta_given = (opt_alpha1->count() || opt_alpha2->count()) ? 1 : 0;
      const int amps_given = opt_amps->count() ? 1 : 0;
      if (qubit_given + eta_given + amps_given != 1)
        throw yang::ValidationError(
            "pass exactly one of --alpha/--beta, --alpha1/--alpha2, or --amps");
      yang::PureState state;
      if (qubit_given) {
        if (!opt_alpha->count() || !opt_beta->count())
          throw yang::ValidationError("pass both --alpha and --beta");
        state = yang::qubit_initial_state(parse_complex(ap_alpha), parse_complex(ap_beta));
      } else if (eta_given) {
        if (!opt_alpha1->count() || !opt_alpha2->count())
          throw yang::ValidationError("pass both --alpha1 and --alpha2");
        state = yang::construct_eta(ap_alpha1, ap_alpha2);
      } else {
        std::vector<cdouble> amps = parse_amps(ap_amps);
        if (amps.size() == 4)
          state.party_dims = {2, 2};
        else if (amps.size() == 9)
          state.party_dims = {3, 3};
        else
          throw yang::WrongShape("--amps must carry 4 or 9 amplitudes");
        state.amps = Eigen::Map<const yang::Vector>(amps.data(), amps.size());
      }
      if (ap_tol <= 0.0) throw yang::ValidationError("--tol must be positive");
      const yang::TransitionOutcome outcome =
          yang::apply_transition(ap_operator, op, state, ap_tol);
      yang::emit::write_output(apply_output(prm, algebra, outcome), out_path);
    } else if (sweep->parsed()) {
      const yang::SweepResult res = yang::sweep_c1(sw_lambda, sw_mu_min, sw_mu_max, sw_steps);
      yang::emit::write_output(sweep_output(res), out_path);
      if (res.omitted > 0)
        std::cerr << "note: omitted " << res.omitted
                  << " grid points with (mu - lambda/2)^2 > 1\n";
    } else if (tables->parsed()) {
      if (tb_tol <= 0.0) throw yang::ValidationError("--tol must be positive");
      const yang::DecayReport rep = yang::decay_report(prm, tb_alpha1, tb_alpha2, tb_tol);
      yang::emit::write_output(tables_output(rep), out_path);
    }
    return 0;
  } catch (const yang::NumericalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const yang::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
