// retoric: command-line front end for the real toric variety library.
//
//   retoric <command> [file] [flags]
//
// Commands read a fan document (JSON; "-" or no argument means stdin) and
// print a report or a transformed document.  Exit codes: 0 success,
// 1 document/validation failure, 2 violated operation precondition,
// 3 classification honestly out of scope.

#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "retoric/classify.hpp"
#include "retoric/errors.hpp"
#include "retoric/invariants.hpp"
#include "retoric/variety.hpp"
#include "retoric_io/document.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace retoric;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::ParseError, "cannot open file '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::ValidationError:
    case ErrorKind::InvalidInvolution:
      return 1;
    case ErrorKind::Unsupported:
      return 3;
    default:
      return 2;
  }
}

// Report values are small exact counts; the conversion is total in practice.
long long to_ll(const Int& v) { return v.convert_to<long long>(); }

struct Input {
  std::string file = "-";
  std::string format = "text";
};

void add_input_options(CLI::App* cmd, Input& in, bool with_format = true) {
  cmd->add_option("file", in.file, "fan document (\"-\" = stdin)")->default_str("-");
  if (with_format) {
    cmd->add_option("--format", in.format, "report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_str("text");
  }
}

RealToricVariety load(const Input& in) {
  return io::parse_document(read_input(in.file), io::max_rank_from_env());
}

// One line per key in insertion order; nested objects stay compact JSON.
std::string textify(const json& v) {
  if (v.is_null()) return "none";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_object() && v.contains("error")) {
    return "error (" + v["error"].get<std::string>() + ": " +
           v["detail"].get<std::string>() + ")";
  }
  return v.dump();
}

void print_report(const json& report, const std::string& format) {
  if (format == "json") {
    std::cout << report.dump(2) << "\n";
    return;
  }
  for (const auto& [key, value] : report.items()) {
    std::cout << key << " = " << textify(value) << "\n";
  }
}

// Evaluates one report field, turning a library error into an error object
// naming the violated predicate instead of aborting the whole report.
template <typename F>
json guarded(F&& field) {
  try {
    return std::forward<F>(field)();
  } catch (const Error& e) {
    return json{{"error", error_kind_name(e.kind())}, {"detail", e.detail()}};
  }
}

int run_validate(const Input& in) {
  load(in);
  print_report(json{{"ok", true}}, in.format);
  return 0;
}

int run_invariants(const Input& in) {
  const RealToricVariety X = load(in);
  json report = json::object();
  report["signature"] = signature_of(X.lattice()).to_string();
  report["compact_real_locus"] = compact_real_locus(X);
  report["has_real_point"] = has_real_point(X);
  if (auto d = cellular_dimension(X); d.has_value()) {
    report["cellular_dimension"] = *d;
  } else {
    report["cellular_dimension"] = nullptr;
  }
  report["e"] = e_polynomial(X).to_string();
  report["a"] = guarded([&] { return json(a_polynomial(X).to_string()); });
  report["e_star"] = e_star_polynomial(X).to_string();
  report["virtual_poincare"] = virtual_poincare(X).to_string();
  report["orientable"] = guarded([&] { return json(orientable(X)); });
  report["dehn_sommerville"] = guarded([&] {
    const DehnSommervilleReport r = dehn_sommerville_check(X);
    return json{{"euler_value", to_ll(r.euler_value)}, {"euler_ok", r.euler_ok},
                {"pairing_checked", r.pairing_checked},
                {"pairing_lhs", to_ll(r.pairing_lhs)},
                {"pairing_rhs", to_ll(r.pairing_rhs)},
                {"pairing_ok", r.pairing_ok},   {"ok", r.ok()}};
  });
  print_report(report, in.format);
  return 0;
}

int run_classify(const Input& in) {
  const TopologicalType t = classify(load(in));
  if (in.format == "json") {
    print_report(json{{"classification", t.to_string()}}, in.format);
  } else {
    std::cout << t.to_string() << "\n";
  }
  return t.kind() == TopologicalType::Kind::Unsupported ? 3 : 0;
}

int run_census(const Input& in) {
  const CircleActionCensus c = circle_action_census(load(in));
  print_report(json{{"t", c.t}, {"h", c.h}, {"u", c.u}}, in.format);
  return 0;
}

struct TransformFlags {
  bool barycentric = false;
  bool blowup_w = false;
  bool unwind = false;
  bool fibre = false;
  bool core = false;
  std::string blowup;    // JSON list of cone generators
  std::string quotient;  // JSON row-major projection matrix
};

int run_transform(const Input& in, const TransformFlags& f) {
  const int selected = int(f.barycentric) + int(f.blowup_w) + int(f.unwind) +
                       int(f.fibre) + int(f.core) + int(!f.blowup.empty()) +
                       int(!f.quotient.empty());
  if (selected != 1) {
    fail(ErrorKind::ValidationError, "transform requires exactly one operation flag");
  }
  const RealToricVariety X = load(in);
  const size_t rank = X.lattice().rank();

  RealToricVariety Y = [&] {
    if (f.barycentric) return resolve_winding_barycentric(X);
    if (f.blowup_w) return resolve_winding_blowup(X);
    if (f.unwind) return unwinding(X).variety;
    if (f.fibre) return canonical_fibre(X);
    if (f.core) return topological_core(X);
    if (!f.blowup.empty()) {
      return toric_blow_up(X, Cone(rank, io::parse_vectors(f.blowup, rank)));
    }
    return quotient_by_subgroup(X, io::parse_matrix_rows(f.quotient, rank));
  }();

  const std::string out = io::emit_document(Y);
  // Transformed documents must re-validate; a failure here is a library bug.
  if (!(io::parse_document(out, io::max_rank_from_env()) == Y)) {
    throw std::logic_error("transform output did not round-trip");
  }
  std::cout << out;
  return 0;
}

struct RealizeFlags {
  long long xz = 1, z = 0, xy = 0, x = 0, y = 0, c = 0;
};

int run_realize(const RealizeFlags& f) {
  const CountPolynomial target = CountPolynomial::monomial(1, 0, 1, 0, Int(f.xz)) +
                                 CountPolynomial::monomial(0, 0, 1, 0, Int(f.z)) +
                                 CountPolynomial::monomial(1, 1, 0, 0, Int(f.xy)) +
                                 CountPolynomial::monomial(1, 0, 0, 0, Int(f.x)) +
                                 CountPolynomial::monomial(0, 1, 0, 0, Int(f.y)) +
                                 CountPolynomial::constant(Int(f.c));
  std::cout << io::emit_document(realize_e_star(target));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants and classification of real toric varieties"};
  app.require_subcommand(1);

  Input in;
  TransformFlags tf;
  RealizeFlags rf;
  int rc = 0;

  CLI::App* validate = app.add_subcommand("validate", "parse and validate a fan document");
  add_input_options(validate, in);
  validate->callback([&] { rc = run_validate(in); });

  CLI::App* invariants =
      app.add_subcommand("invariants", "print the invariant report of a fan document");
  add_input_options(invariants, in);
  invariants->callback([&] { rc = run_invariants(in); });

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "homeomorphism type of the real locus (dimension <= 3)");
  add_input_options(classify_cmd, in);
  classify_cmd->callback([&] { rc = run_classify(in); });

  CLI::App* census = app.add_subcommand(
      "census", "circle-action census (t, h, u) of a threefold of type (2;1)_1");
  add_input_options(census, in);
  census->callback([&] { rc = run_census(in); });

  CLI::App* transform =
      app.add_subcommand("transform", "apply one structural operation and emit the document");
  add_input_options(transform, in, /*with_format=*/false);
  transform->add_flag("--barycentric", tf.barycentric,
                      "winding resolution by barycentric subdivision");
  transform->add_flag("--blowup-w", tf.blowup_w,
                      "winding resolution by blowing up the codimension-2 winding locus");
  transform->add_flag("--unwind", tf.unwind, "pass to the unwound sublattice");
  transform->add_flag("--fibre", tf.fibre, "canonical fibre (split variety on ker(1-tau))");
  transform->add_flag("--core", tf.core, "topological core (faces of invariant cones)");
  transform->add_option("--blowup", tf.blowup,
                        "blow up the orbit closure of the cone with these generators "
                        "(JSON list of integer vectors)");
  transform->add_option("--quotient", tf.quotient,
                        "quotient by the subtorus dual to the kernel of this projection "
                        "(JSON row-major matrix)");
  transform->callback([&] { rc = run_transform(in, tf); });

  CLI::App* realize = app.add_subcommand(
      "realize", "construct a threefold of type (2;1)_1 with the given orbit census");
  realize->add_option("--xz", rf.xz, "coefficient of xz (must be 1)")->default_str("1");
  realize->add_option("--z", rf.z, "coefficient of z")->default_str("0");
  realize->add_option("--xy", rf.xy, "coefficient of xy")->default_str("0");
  realize->add_option("--x", rf.x, "coefficient of x")->default_str("0");
  realize->add_option("--y", rf.y, "coefficient of y")->default_str("0");
  realize->add_option("--c", rf.c, "constant coefficient")->default_str("0");
  realize->callback([&] { rc = run_realize(rf); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << error_kind_name(e.kind()) << ": " << e.detail() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
  return rc;
}
