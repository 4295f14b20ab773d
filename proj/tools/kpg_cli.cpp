// kpg: exact counts of parabolic conjugation orbits on GL_n(q).
//
// Subcommands: kpoly, psi, fvalue, verify, assoc.  Exit codes: 0 success,
// 1 internal invariant violation or verification mismatch, 2 usage error,
// 3 oracle budget refusal.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kpg/errors.hpp"
#include "kpg/kcount.hpp"
#include "kpg/oracle.hpp"

namespace {

struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

kpg::DimensionVector parse_d(const std::string& text, int n) {
  try {
    kpg::DimensionVector d = kpg::DimensionVector::parse(text);
    if (d.n() != n) throw UsageError("--d must end at --n");
    return d;
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad --d: ") + e.what());
  }
}

std::vector<long> parse_q_list(const std::string& text) {
  std::vector<long> qs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      long q = std::stol(item, &pos);
      if (pos != item.size() || !kpg::is_prime_power(q))
        throw UsageError("--q entries must be prime powers");
      qs.push_back(q);
    } catch (const std::logic_error&) {
      throw UsageError("bad --q list");
    }
  }
  if (qs.empty()) throw UsageError("empty --q list");
  return qs;
}

void emit(const std::string& text, const std::string& out_file) {
  std::cout << text;
  if (!out_file.empty()) {
    std::ofstream f(out_file);
    if (!f) throw std::runtime_error("cannot write " + out_file);
    f << text;
  }
}

std::string pad(const std::string& s, size_t w) {
  return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

int cmd_kpoly(int n, const std::string& d_text, bool json, bool per_psi, bool factor,
              const std::string& out_file) {
  kpg::DimensionVector d = parse_d(d_text, n);
  kpg::KReport report = kpg::k_poly(n, d);
  std::ostringstream os;
  if (json) {
    os << report.to_json().dump() << "\n";
  } else {
    os << "n=" << n << " d=" << d.str() << "\n";
    os << "k(P,G) = " << report.k.str() << "\n";
    if (factor) {
      kpg::RationalPoly cofactor =
          report.k.divide_exact(kpg::RationalPoly::from_int_coeffs({-1, 1}));
      os << "k(P,G) = (q - 1) * (" << cofactor.str() << ")\n";
    }
    os << "coeffs (q^0 first):";
    for (const auto& c : report.k.coeffs()) os << " " << c.get_str();
    os << "\n";
    if (per_psi) {
      size_t w1 = 4, w2 = 6;
      for (const auto& t : report.per_psi) {
        w1 = std::max(w1, t.psi.str().size());
        w2 = std::max(w2, t.class_size.str().size());
      }
      os << "\n" << pad("psi", w1 + 2) << pad("|psi~|", w2 + 2) << "f_P^G(x(psi))\n";
      for (const auto& t : report.per_psi)
        os << pad(t.psi.str(), w1 + 2) << pad(t.class_size.str(), w2 + 2) << t.f_value.str()
           << "\n";
    }
  }
  emit(os.str(), out_file);
  return 0;
}

int cmd_psi(int n, long q0, const std::string& out_file) {
  auto psis = kpg::enumerate_psi(n);
  std::ostringstream os;
  os << "Psi(" << n << "): " << psis.size() << " labels\n";
  size_t w1 = 4, w2 = 6;
  std::vector<std::string> sizes;
  for (const auto& psi : psis) {
    w1 = std::max(w1, psi.str().size());
    sizes.push_back(kpg::psi_class_size(psi).str());
    w2 = std::max(w2, sizes.back().size());
  }
  os << pad("psi", w1 + 2) << pad("|psi~|", w2 + 2);
  if (q0 > 0) os << "at q=" << q0;
  os << "\n";
  for (size_t i = 0; i < psis.size(); ++i) {
    os << pad(psis[i].str(), w1 + 2) << pad(sizes[i], w2 + 2);
    if (q0 > 0) {
      os << kpg::psi_class_size(psis[i]).eval_int(q0).get_str();
      if (!kpg::psi_nonempty_at(psis[i], q0)) os << "  (empty)";
    }
    os << "\n";
  }
  emit(os.str(), out_file);
  return 0;
}

int cmd_fvalue(int n, const std::string& d_text, const std::string& psi_text,
               const std::string& out_file) {
  kpg::DimensionVector d = parse_d(d_text, n);
  kpg::PsiMap psi;
  try {
    psi = kpg::PsiMap::parse(psi_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad --psi: ") + e.what());
  }
  if (psi.n() != n) throw UsageError("--psi has the wrong total size for --n");
  std::ostringstream os;
  os << "f_P^G(x(psi)) for n=" << n << " d=" << d.str() << " psi=" << psi.str() << "\n";
  os << kpg::f_value_poly(psi, d).str() << "\n";
  emit(os.str(), out_file);
  return 0;
}

int cmd_verify(int n, const std::string& d_text, const std::string& q_text, double budget,
               const std::string& out_file) {
  kpg::DimensionVector d = parse_d(d_text, n);
  std::vector<long> qs = parse_q_list(q_text);
  std::ostringstream os;
  os << "n=" << n << " d=" << d.str() << "\n";
  bool ok = true;
  for (long q0 : qs) {
    kpg::Fq F = kpg::Fq::from_q(q0);
    unsigned long long ke = kpg::k_eval(n, d, q0);
    unsigned long long ko = kpg::k_oracle(F, n, d, budget);
    os << "q=" << q0 << ": k_eval=" << ke << " k_oracle=" << ko;
    bool row_ok = ke == ko;
    try {
      unsigned long long kb = kpg::k_burnside(F, n, d);
      os << " k_burnside=" << kb;
      row_ok = row_ok && kb == ke;
    } catch (const kpg::BudgetExceeded&) {
      os << " k_burnside=-";
    }
    os << (row_ok ? " OK" : " MISMATCH") << "\n";
    ok = ok && row_ok;
  }
  os << (ok ? "all OK" : "MISMATCH FOUND") << "\n";
  emit(os.str(), out_file);
  return ok ? 0 : 1;
}

int cmd_assoc(int n, const std::string& d_text, const std::string& out_file) {
  kpg::DimensionVector d = parse_d(d_text, n);
  kpg::AssociationReport report = kpg::check_association_invariance(n, d);
  std::ostringstream os;
  os << "n=" << n << " d=" << d.str() << ": " << report.witnesses.size()
     << " associated vector(s)\n";
  for (const auto& [dv, poly] : report.witnesses)
    os << "  d=" << dv.str() << ": k = " << poly.str() << "\n";
  os << "association invariance: " << (report.all_equal ? "OK" : "VIOLATED") << "\n";
  emit(os.str(), out_file);
  return report.all_equal ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact counts of parabolic conjugation orbits on GL_n(q)"};
  app.require_subcommand(1);

  int n = 0;
  std::string d_text, q_text, psi_text, out_file;
  bool json = false, per_psi = false, factor = false;
  long q0 = 0;
  double budget = 1e8;

  CLI::App* kpoly = app.add_subcommand("kpoly", "compute the counting polynomial k(P,G)");
  kpoly->add_option("--n", n, "matrix size")->required();
  kpoly->add_option("--d", d_text, "dimension vector, e.g. 1,2,3")->required();
  kpoly->add_flag("--json", json, "emit the JSON report");
  kpoly->add_flag("--per-psi", per_psi, "include the per-label breakdown table");
  kpoly->add_flag("--factor-q-minus-1", factor, "also print k divided by (q - 1)");
  kpoly->add_option("--out", out_file, "also write the output to a file");

  CLI::App* psi = app.add_subcommand("psi", "list the labels Psi(n) with class-size polynomials");
  psi->add_option("--n", n, "matrix size")->required();
  psi->add_option("--q", q0, "also evaluate at this prime power and flag empty labels");
  psi->add_option("--out", out_file, "also write the output to a file");

  CLI::App* fvalue = app.add_subcommand("fvalue", "compute f_P^G(x(psi)) for one label");
  fvalue->add_option("--n", n, "matrix size")->required();
  fvalue->add_option("--d", d_text, "dimension vector")->required();
  fvalue->add_option("--psi", psi_text, "label, e.g. \"1:((2)); 2:((1^2)); 3:((1))\"")->required();
  fvalue->add_option("--out", out_file, "also write the output to a file");

  CLI::App* verify = app.add_subcommand("verify", "compare k_eval against the brute-force oracles");
  verify->add_option("--n", n, "matrix size")->required();
  verify->add_option("--d", d_text, "dimension vector")->required();
  verify->add_option("--q", q_text, "comma-separated prime powers")->required();
  verify->add_option("--budget", budget, "oracle work budget in stability tests");
  verify->add_option("--out", out_file, "also write the output to a file");

  CLI::App* assoc = app.add_subcommand("assoc", "check invariance across associated parabolics");
  assoc->add_option("--n", n, "matrix size")->required();
  assoc->add_option("--d", d_text, "dimension vector")->required();
  assoc->add_option("--out", out_file, "also write the output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (psi->parsed()) {
      if (n < 1) throw UsageError("--n must be >= 1");
      if (q0 != 0 && !kpg::is_prime_power(q0)) throw UsageError("--q must be a prime power");
      return cmd_psi(n, q0, out_file);
    }
    if (n < 1) throw UsageError("--n must be >= 1");
    if (kpoly->parsed()) return cmd_kpoly(n, d_text, json, per_psi, factor, out_file);
    if (fvalue->parsed()) return cmd_fvalue(n, d_text, psi_text, out_file);
    if (verify->parsed()) return cmd_verify(n, d_text, q_text, budget, out_file);
    if (assoc->parsed()) return cmd_assoc(n, d_text, out_file);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const kpg::BudgetExceeded& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 3;
  } catch (const kpg::InternalError& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
