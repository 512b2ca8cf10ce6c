#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "qschur/insertion.hpp"
#include "qschur/pieri.hpp"
#include "qschur/schurweyl.hpp"
#include "qschur/verify.hpp"

namespace qschur::cli {

namespace {

using json = nlohmann::ordered_json;

// Input problems that are the caller's fault rather than a failed check.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

json path_json(const std::vector<BumpRecord>& path) {
  json a = json::array();
  for (const auto& b : path) a.push_back({{"letter", b.letter}, {"from_row", b.from_row}, {"to_row", b.to_row}});
  return a;
}

struct Options {
  // rsk
  std::string word;
  bool dual = false;
  // qinsert
  std::string tableau;
  int letter = 0;
  // shared
  std::string q = "1";
  int n = 0;
  int d = 0;
  std::string output;
  std::string format = "dense";
  // pieri-matrix
  std::string lambda;
  // schur
  std::string mode = "matrix";
  std::string state_file;
  std::string direction = "forward";
  std::size_t cap = default_dense_cap;
  // verify
  std::string suite = "all";
  std::string q_list = "0.5,1,2";
  double tolerance = 1e-9;
};

int cmd_rsk(const Options& o, std::ostream& out) {
  const auto w = parse_word(o.word);
  const auto pair = o.dual ? dual_rsk_word(w) : rsk_word(w);
  json j{{"word", word_to_text(w)}, {"insertion", o.dual ? "dual" : "row"},
         {"P", to_text(pair.P)}, {"Q", to_text(pair.Q)}};
  out << j.dump(1) << "\n";
  return ok;
}

int cmd_qinsert(const Options& o, std::ostream& out) {
  const auto t = SemiStandardTableau::from_rows(parse_tableau_rows(o.tableau));
  if (o.letter < 1) throw UsageError("letter must be >= 1");
  const QParam q = QParam::parse(o.q);
  json outcomes = json::array();
  double norm = 0.0;
  for (const auto& oc : q_insert(t, o.letter)) {
    const double c = wigner(oc.result, t, o.letter, q);
    norm += c * c;
    outcomes.push_back({{"result", to_text(oc.result)},
                        {"new_box_row", oc.new_box.row},
                        {"new_box_col", oc.new_box.col},
                        {"sign", oc.sign},
                        {"path", path_json(oc.path)},
                        {"coefficient", c}});
  }
  json j{{"tableau", to_text(t)}, {"letter", o.letter}, {"q", q.tag()},
         {"outcomes", outcomes}, {"sum_of_squares", norm}};
  out << j.dump(1) << "\n";
  return ok;
}

Storage storage_of(const std::string& format) {
  if (format == "dense") return Storage::dense;
  if (format == "sparse") return Storage::sparse;
  throw UsageError("unknown format '" + format + "'");
}

int cmd_pieri(const Options& o, std::ostream& out) {
  const Partition lambda = parse_partition(o.lambda);
  if (o.d < 1) throw UsageError("--d must be >= 1");
  if (lambda.length() > o.d) throw UsageError("λ has more rows than d");
  const QParam q = QParam::parse(o.q);
  MatrixDocument doc;
  doc.format = "pieri_matrix " + to_text(lambda);
  doc.n = lambda.size();
  doc.d = o.d;
  doc.q = q.tag();
  doc.tolerance = o.tolerance;
  doc.storage = storage_of(o.format);
  doc.matrix = pieri_matrix(lambda, o.d, q);
  emit(write_document(doc), o.output, out);
  return ok;
}

int cmd_schur(const Options& o, std::ostream& out) {
  if (o.n < 0 || o.d < 1) throw UsageError("need --n >= 0 and --d >= 1");
  const QParam q = QParam::parse(o.q);
  if (o.mode == "matrix") {
    MatrixDocument doc;
    doc.format = "schur_transform";
    doc.n = o.n;
    doc.d = o.d;
    doc.q = q.tag();
    doc.tolerance = o.tolerance;
    doc.storage = storage_of(o.format);
    doc.matrix = schur_transform_dense(o.n, o.d, q, o.cap);
    if (o.direction == "inverse") {
      doc.format = "schur_transform_inverse";
      doc.matrix.values.transposeInPlace();
      std::swap(doc.matrix.row_labels, doc.matrix.col_labels);
    } else if (o.direction != "forward") {
      throw UsageError("unknown direction '" + o.direction + "'");
    }
    emit(write_document(doc), o.output, out);
    return ok;
  }
  if (o.mode != "apply") throw UsageError("unknown mode '" + o.mode + "'");
  if (o.state_file.empty()) throw UsageError("--mode apply needs --state-file");
  json in;
  try {
    in = json::parse(read_file(o.state_file));
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed state file: ") + e.what());
  }
  if (!in.is_array()) throw UsageError("state file must hold a JSON array");
  Eigen::VectorXd v(static_cast<Eigen::Index>(in.size()));
  for (std::size_t k = 0; k < in.size(); ++k) {
    if (!in[k].is_number()) throw UsageError("state file entries must be numbers");
    v[static_cast<Eigen::Index>(k)] = in[k].get<double>();
  }
  Direction dir;
  if (o.direction == "forward")
    dir = Direction::forward;
  else if (o.direction == "inverse")
    dir = Direction::inverse;
  else
    throw UsageError("unknown direction '" + o.direction + "'");
  Eigen::VectorXd r;
  try {
    r = schur_apply(v, dir, o.n, o.d, q);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  json a = json::array();
  for (Eigen::Index k = 0; k < r.size(); ++k) a.push_back(r[k]);
  emit(a.dump() + "\n", o.output, out);
  return ok;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<QParam> qs;
  std::stringstream ss(o.q_list);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) qs.push_back(QParam::parse(item));
  if (qs.empty()) throw UsageError("--q-list is empty");
  const auto report = run_suite(o.suite, o.n, o.d, qs, o.tolerance);
  out << report.to_json(o.suite, o.n, o.d, o.tolerance);
  return report.pass() ? ok : verification_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum Schur transform toolkit", "qschur"};
  app.require_subcommand(1);
  Options o;

  auto* rsk = app.add_subcommand("rsk", "RSK (or dual RSK) of a word");
  rsk->add_option("word", o.word, "comma-separated letters")->required();
  rsk->add_flag("--dual", o.dual, "column insertion");

  auto* qins = app.add_subcommand("qinsert", "all q-insertion outcomes with Wigner coefficients");
  qins->add_option("tableau", o.tableau, "rows like 1,1,2/2,3 (empty string for none)")->required();
  qins->add_option("letter", o.letter)->required();
  qins->add_option("--q", o.q, "zero, infinity or a positive decimal");

  auto* pieri = app.add_subcommand("pieri-matrix", "Pieri transform for V^lambda ⊗ V");
  pieri->add_option("--lambda", o.lambda, "partition like [2,1]")->required();
  pieri->add_option("--d", o.d)->required();
  pieri->add_option("--q", o.q);
  pieri->add_option("--format", o.format, "dense or sparse");
  pieri->add_option("--output", o.output, "file (default stdout)");

  auto* schur = app.add_subcommand("schur", "Schur transform matrix, or apply it to a state");
  schur->add_option("--n", o.n)->required();
  schur->add_option("--d", o.d)->required();
  schur->add_option("--q", o.q);
  schur->add_option("--output", o.output, "file (default stdout)");
  schur->add_option("--format", o.format, "dense or sparse");
  schur->add_option("--mode", o.mode, "matrix or apply");
  schur->add_option("--state-file", o.state_file, "JSON array of d^n amplitudes");
  schur->add_option("--direction", o.direction, "forward or inverse");
  schur->add_option("--cap", o.cap, "largest d^n for matrix mode");

  auto* verify = app.add_subcommand("verify", "run relation and identity checks");
  verify->add_option("--suite", o.suite, "qarith|gtj|hecke|pieri|schurweyl|all");
  verify->add_option("--n", o.n)->required();
  verify->add_option("--d", o.d)->required();
  verify->add_option("--q-list", o.q_list, "comma-separated q values");
  verify->add_option("--tolerance", o.tolerance);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return usage_error;
  }

  try {
    if (*rsk) return cmd_rsk(o, out);
    if (*qins) return cmd_qinsert(o, out);
    if (*pieri) return cmd_pieri(o, out);
    if (*schur) return cmd_schur(o, out);
    if (*verify) return cmd_verify(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }
  return usage_error;
}

}  // namespace qschur::cli
