#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qautv.h"

namespace {

struct VHandle {
  qv_velem* p = nullptr;
  ~VHandle() { qv_velem_free(p); }
  VHandle() = default;
  VHandle(const VHandle&) = delete;
  VHandle& operator=(const VHandle&) = delete;
};

struct QHandle {
  qv_qelem* p = nullptr;
  ~QHandle() { qv_qelem_free(p); }
  QHandle() = default;
  QHandle(const QHandle&) = delete;
  QHandle& operator=(const QHandle&) = delete;
};

struct CString {
  char* p = nullptr;
  ~CString() { qv_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

/** An element argument holds exactly one of the two kinds. */
struct Element {
  VHandle v;
  QHandle q;
  bool is_q = false;
};

int report_failure(qv_status status) {
  std::cerr << qv_status_name(status) << ": " << qv_last_error() << "\n";
  return status == QV_EINVARIANT_FALSIFIED ? 2 : 1;
}

/** "-" reads stdin; an existing path reads the file; else the literal. */
std::string read_argument(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  return arg;
}

qv_status load_element(const std::string& arg, Element& out) {
  std::string content = read_argument(arg);
  std::size_t start = content.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && content[start] == '{') {
    if (content.find("\"pairs\"") != std::string::npos) {
      out.is_q = false;
      return qv_velem_parse_json(content.c_str(), &out.v.p);
    }
    out.is_q = true;
    return qv_qelem_parse_json(content.c_str(), &out.q.p);
  }
  out.is_q = false;
  return qv_velem_parse_text(content.c_str(), &out.v.p);
}

int load_or_fail(const std::string& arg, Element& out) {
  qv_status st = load_element(arg, out);
  return st == QV_OK ? 0 : report_failure(st);
}

int load_velem_or_fail(const std::string& arg, Element& out,
                       const char* what) {
  int rc = load_or_fail(arg, out);
  if (rc != 0) return rc;
  if (out.is_q) {
    std::cerr << "QV_EINVALID_ARGUMENT: " << what
              << " must be a prefix-replacement table\n";
    return 1;
  }
  return 0;
}

int print_velem(const qv_velem* v, bool as_json) {
  CString text;
  qv_status st = as_json ? qv_velem_to_json(v, &text.p)
                         : qv_velem_to_text(v, &text.p);
  if (st != QV_OK) return report_failure(st);
  std::cout << text.str();
  if (as_json) std::cout << "\n";
  return 0;
}

int print_qelem(const qv_qelem* q) {
  CString text;
  qv_status st = qv_qelem_to_json(q, &text.p);
  if (st != QV_OK) return report_failure(st);
  std::cout << text.str() << "\n";
  return 0;
}

int print_element(const Element& e, bool as_json) {
  return e.is_q ? print_qelem(e.q.p) : print_velem(e.v.p, as_json);
}

int print_json_result(qv_status st, const CString& text) {
  if (st != QV_OK) return report_failure(st);
  std::cout << text.str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact arithmetic for prefix-replacement bijections of Cantor space "
      "and quasi-automorphisms of the binary tree"};
  app.require_subcommand(1);
  app.set_version_flag("--version", qv_version());
  bool json = false;
  app.add_flag("--json", json, "emit JSON where a text form is the default");

  int rc = 0;

  std::string arg_a, arg_b, arg_word;
  long long arg_k = 0;

  auto* compose_cmd =
      app.add_subcommand("compose", "compose two elements, left one first");
  compose_cmd->add_option("first", arg_a, "element, file, or -")->required();
  compose_cmd->add_option("second", arg_b, "element, file, or -")->required();
  compose_cmd->callback([&] {
    Element a, b;
    if ((rc = load_or_fail(arg_a, a)) != 0) return;
    if ((rc = load_or_fail(arg_b, b)) != 0) return;
    if (a.is_q != b.is_q) {
      std::cerr << "QV_EINVALID_ARGUMENT: cannot compose elements of "
                   "different kinds\n";
      rc = 1;
      return;
    }
    if (a.is_q) {
      QHandle result;
      qv_status st = qv_qelem_compose(a.q.p, b.q.p, &result.p);
      rc = st == QV_OK ? print_qelem(result.p) : report_failure(st);
    } else {
      VHandle result;
      qv_status st = qv_velem_compose(a.v.p, b.v.p, &result.p);
      rc = st == QV_OK ? print_velem(result.p, json) : report_failure(st);
    }
  });

  auto* inverse_cmd = app.add_subcommand("inverse", "invert an element");
  inverse_cmd->add_option("element", arg_a, "element, file, or -")->required();
  inverse_cmd->callback([&] {
    Element a;
    if ((rc = load_or_fail(arg_a, a)) != 0) return;
    if (a.is_q) {
      QHandle result;
      qv_status st = qv_qelem_inverse(a.q.p, &result.p);
      rc = st == QV_OK ? print_qelem(result.p) : report_failure(st);
    } else {
      VHandle result;
      qv_status st = qv_velem_inverse(a.v.p, &result.p);
      rc = st == QV_OK ? print_velem(result.p, json) : report_failure(st);
    }
  });

  auto* power_cmd =
      app.add_subcommand("power", "integer power of a prefix-replacement table");
  power_cmd->add_option("element", arg_a, "element, file, or -")->required();
  power_cmd->add_option("exponent", arg_k, "integer exponent")->required();
  power_cmd->callback([&] {
    Element a;
    if ((rc = load_velem_or_fail(arg_a, a, "power")) != 0) return;
    VHandle result;
    qv_status st = qv_velem_power(a.v.p, arg_k, &result.p);
    rc = st == QV_OK ? print_velem(result.p, json) : report_failure(st);
  });

  auto* reduce_cmd =
      app.add_subcommand("reduce", "parse an element and print its canonical form");
  reduce_cmd->add_option("element", arg_a, "element, file, or -")->required();
  reduce_cmd->callback([&] {
    Element a;
    if ((rc = load_or_fail(arg_a, a)) != 0) return;
    rc = print_element(a, json);
  });

  auto* eq_cmd = app.add_subcommand("eq", "test two elements for equality");
  eq_cmd->add_option("first", arg_a, "element, file, or -")->required();
  eq_cmd->add_option("second", arg_b, "element, file, or -")->required();
  eq_cmd->callback([&] {
    Element a, b;
    if ((rc = load_or_fail(arg_a, a)) != 0) return;
    if ((rc = load_or_fail(arg_b, b)) != 0) return;
    int equal = 0;
    if (a.is_q != b.is_q) {
      equal = 0;
    } else if (a.is_q) {
      qv_status st = qv_qelem_equals(a.q.p, b.q.p, &equal);
      if (st != QV_OK) {
        rc = report_failure(st);
        return;
      }
    } else {
      qv_status st = qv_velem_equals(a.v.p, b.v.p, &equal);
      if (st != QV_OK) {
        rc = report_failure(st);
        return;
      }
    }
    std::cout << (equal ? "true" : "false") << "\n";
  });

  auto* apply_cmd =
      app.add_subcommand("apply", "image of a vertex under an element");
  apply_cmd->add_option("element", arg_a, "element, file, or -")->required();
  apply_cmd->add_option("word", arg_word, "binary word, ^ for the root")
      ->required();
  apply_cmd->callback([&] {
    Element a;
    if ((rc = load_or_fail(arg_a, a)) != 0) return;
    CString image;
    qv_status st = a.is_q
                       ? qv_qelem_apply(a.q.p, arg_word.c_str(), &image.p)
                       : qv_velem_apply(a.v.p, arg_word.c_str(), &image.p);
    if (st != QV_OK) {
      rc = report_failure(st);
      return;
    }
    std::cout << image.str() << "\n";
  });

  auto* theta_cmd = app.add_subcommand(
      "theta", "embed a prefix-replacement table as a quasi-automorphism");
  theta_cmd->add_option("element", arg_a, "element, file, or -")->required();
  theta_cmd->callback([&] {
    Element a;
    if ((rc = load_velem_or_fail(arg_a, a, "theta")) != 0) return;
    QHandle result;
    qv_status st = qv_theta(a.v.p, &result.p);
    rc = st == QV_OK ? print_qelem(result.p) : report_failure(st);
  });

  long long phi_level = -1;
  auto* phi_cmd = app.add_subcommand(
      "phi", "embed a quasi-automorphism as a prefix-replacement table");
  phi_cmd->add_option("element", arg_a, "element, file, or -")->required();
  phi_cmd->add_option("--level", phi_level,
                      "use the decomposition at this level instead of the "
                      "cutoff level");
  phi_cmd->callback([&] {
    Element a;
    if ((rc = load_or_fail(arg_a, a)) != 0) return;
    if (!a.is_q) {
      std::cerr << "QV_EINVALID_ARGUMENT: phi takes a quasi-automorphism\n";
      rc = 1;
      return;
    }
    VHandle result;
    qv_status st = phi_level < 0
                       ? qv_phi(a.q.p, &result.p)
                       : qv_phi_at_level(a.q.p,
                                         static_cast<size_t>(phi_level),
                                         &result.p);
    rc = st == QV_OK ? print_velem(result.p, json) : report_failure(st);
  });

  auto* decompose_cmd = app.add_subcommand(
      "decompose", "minimal decomposition and germ data of a quasi-automorphism");
  decompose_cmd->add_option("element", arg_a, "element, file, or -")
      ->required();
  decompose_cmd->callback([&] {
    Element a;
    if ((rc = load_or_fail(arg_a, a)) != 0) return;
    QHandle owned;
    const qv_qelem* q = a.q.p;
    if (!a.is_q) {
      qv_status st = qv_theta(a.v.p, &owned.p);
      if (st != QV_OK) {
        rc = report_failure(st);
        return;
      }
      q = owned.p;
    }
    CString text;
    rc = print_json_result(qv_qelem_decompose_json(q, &text.p), text);
  });

  auto* cutoff_cmd = app.add_subcommand(
      "cutoff", "cutoff level, violation set, and cross-check data");
  cutoff_cmd->add_option("element", arg_a, "element, file, or -")->required();
  cutoff_cmd->callback([&] {
    Element a;
    if ((rc = load_or_fail(arg_a, a)) != 0) return;
    if (!a.is_q) {
      std::cerr << "QV_EINVALID_ARGUMENT: cutoff takes a quasi-automorphism\n";
      rc = 1;
      return;
    }
    CString text;
    rc = print_json_result(qv_qelem_cutoff_json(a.q.p, &text.p), text);
  });

  auto* dyn_cmd = app.add_subcommand("dyn", "dynamics of a table acting on Cantor space");
  dyn_cmd->require_subcommand(1);

  auto* dyn_fixed = dyn_cmd->add_subcommand(
      "fixed", "isolated fixed points read off comparable rows");
  dyn_fixed->add_option("element", arg_a, "element, file, or -")->required();
  dyn_fixed->callback([&] {
    Element a;
    if ((rc = load_velem_or_fail(arg_a, a, "dyn fixed")) != 0) return;
    CString text;
    rc = print_json_result(qv_dyn_fixed_json(a.v.p, &text.p), text);
  });

  auto* dyn_periods = dyn_cmd->add_subcommand(
      "periods", "exact lengths of the finite orbits");
  dyn_periods->add_option("element", arg_a, "element, file, or -")->required();
  dyn_periods->callback([&] {
    Element a;
    if ((rc = load_velem_or_fail(arg_a, a, "dyn periods")) != 0) return;
    CString text;
    rc = print_json_result(qv_dyn_periods_json(a.v.p, &text.p), text);
  });

  auto* dyn_torsion = dyn_cmd->add_subcommand(
      "torsion", "decide finite order, with a certificate either way");
  dyn_torsion->add_option("element", arg_a, "element, file, or -")->required();
  dyn_torsion->callback([&] {
    Element a;
    if ((rc = load_velem_or_fail(arg_a, a, "dyn torsion")) != 0) return;
    CString text;
    rc = print_json_result(qv_dyn_torsion_json(a.v.p, &text.p), text);
  });

  auto* dyn_spectrum = dyn_cmd->add_subcommand(
      "spectrum", "stabilize and report the exponent set of the power");
  dyn_spectrum->add_option("element", arg_a, "element, file, or -")
      ->required();
  dyn_spectrum->callback([&] {
    Element a;
    if ((rc = load_velem_or_fail(arg_a, a, "dyn spectrum")) != 0) return;
    CString text;
    rc = print_json_result(qv_dyn_spectrum_json(a.v.p, &text.p), text);
  });

  long long conj_r = 0, conj_s = 0;
  auto* dyn_conj = dyn_cmd->add_subcommand(
      "conj-check", "exact test of w^-1 v^r w == v^s with spectrum diagnostics");
  dyn_conj->add_option("element", arg_a, "v: element, file, or -")->required();
  dyn_conj->add_option("conjugator", arg_b, "w: element, file, or -")
      ->required();
  dyn_conj->add_option("r", conj_r, "left exponent")->required();
  dyn_conj->add_option("s", conj_s, "right exponent")->required();
  dyn_conj->callback([&] {
    Element a, b;
    if ((rc = load_velem_or_fail(arg_a, a, "dyn conj-check")) != 0) return;
    if ((rc = load_velem_or_fail(arg_b, b, "dyn conj-check")) != 0) return;
    CString text;
    rc = print_json_result(
        qv_dyn_conj_check_json(a.v.p, b.v.p, conj_r, conj_s, &text.p), text);
  });

  auto* bs_cmd = app.add_subcommand(
      "bs", "Baumslag-Solitar witnesses inside the prefix-replacement group");
  bs_cmd->require_subcommand(1);

  std::size_t bs_m = 1;
  int bs_e = 1;
  std::size_t britton_length = 0;

  auto* bs_gen = bs_cmd->add_subcommand(
      "gen", "generators A, B with B^-1 A^m B = A^(e*m)");
  bs_gen->add_option("m", bs_m, "positive order parameter")->required();
  bs_gen->add_option("e", bs_e, "sign, 1 or -1")->required();
  bs_gen->callback([&] {
    CString a_text, b_text, report;
    qv_status st =
        qv_bs_gen(bs_m, bs_e, &a_text.p, &b_text.p, &report.p);
    if (st != QV_OK) {
      rc = report_failure(st);
      return;
    }
    std::cout << a_text.str() << "\n" << b_text.str() << "\n"
              << report.str() << "\n";
  });

  auto* bs_verify = bs_cmd->add_subcommand(
      "verify", "re-derive the witnesses and check the certificates");
  bs_verify->add_option("m", bs_m, "positive order parameter")->required();
  bs_verify->add_option("e", bs_e, "sign, 1 or -1")->required();
  bs_verify->add_option("--britton", britton_length,
                        "also evaluate all pinch-free words up to this length");
  bs_verify->callback([&] {
    CString text;
    rc = print_json_result(
        qv_bs_verify_json(bs_m, bs_e, britton_length, &text.p), text);
  });

  std::uint64_t seed = 7;
  long long samples = 0;
  auto* selfcheck_cmd = app.add_subcommand(
      "selfcheck", "run the acceptance criteria and print a report");
  selfcheck_cmd->add_option("--seed", seed, "random seed (default 7)");
  selfcheck_cmd->add_option(
      "--samples", samples,
      "cap each randomized sample count (0 runs the full suite)");
  selfcheck_cmd->callback([&] {
    CString report;
    int all_passed = 0;
    qv_status st =
        qv_selfcheck(seed, samples, json ? 1 : 0, &report.p, &all_passed);
    if (st != QV_OK) {
      rc = report_failure(st);
      return;
    }
    std::cout << report.str();
    if (json) std::cout << "\n";
    rc = all_passed ? 0 : 1;
  });

  CLI11_PARSE(app, argc, argv);
  return rc;
}
