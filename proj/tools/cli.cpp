#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "dpz/dpz.hpp"

namespace dpz::cli {
namespace {

enum class Format { Text, Json, Csv };

struct Options {
  Format format = Format::Text;
  Int height_bound = kDefaultHeightBound;
};

struct Row {
  std::string carter;
  const InvolutionClass* cls;
};

std::string zg_string(const ZGInvariant& z) {
  return "(" + std::to_string(z.t) + "," + std::to_string(z.c) + "," + std::to_string(z.r) + ")";
}

// "(A1)^m", with a, b, ... appended when several classes share m.
std::vector<Row> table_rows(const std::vector<InvolutionClass>& classes) {
  std::map<int, int> count;
  for (const auto& c : classes) ++count[c.carter_exponent];
  std::map<int, int> seen;
  std::vector<Row> rows;
  for (const auto& c : classes) {
    std::string label = c.carter_exponent == 0 ? "1" : "(A1)^" + std::to_string(c.carter_exponent);
    if (count[c.carter_exponent] > 1) label += static_cast<char>('a' + seen[c.carter_exponent]++);
    rows.push_back({label, &c});
  }
  return rows;
}

std::string certificate_summary(const ReducibilityResult& r) {
  std::string s(to_string(r.certificate.kind));
  if (!r.certificate.witnesses.empty()) s += "@h" + std::to_string(r.certificate.height);
  return s;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

Json read_json_input(const std::string& path) {
  if (path == "-") return Json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return Json::parse(in);
}

void print_matrix(std::ostream& out, const IntMatrix& m) {
  std::size_t w = 1;
  for (Int x : m.data()) w = std::max(w, std::to_string(x).size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "  ";
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << std::setw(static_cast<int>(w)) << m(i, j);
    out << "\n";
  }
}

void print_scalar(std::ostream& out, Format f, const std::string& key, Json value, const Json& extra = Json::object()) {
  if (f == Format::Json) {
    Json j = extra;
    j[key] = value;
    out << j.dump(2) << "\n";
  } else if (f == Format::Csv) {
    std::vector<std::string> keys;
    std::vector<std::string> values;
    for (auto it = extra.begin(); it != extra.end(); ++it) {
      keys.push_back(it.key());
      values.push_back(it.value().is_string() ? it.value().get<std::string>() : it.value().dump());
    }
    keys.push_back(key);
    values.push_back(value.dump());
    for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << keys[i];
    out << "\n";
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << csv_quote(values[i]);
    out << "\n";
  } else {
    out << value.dump() << "\n";
  }
}

int cmd_classify(int n, const Options& o, std::ostream& out) {
  if (n < 1 || n > 8) throw InputError("classify needs 1 <= n <= 8");
  auto classes = involution_catalog(n);
  auto rows = table_rows(classes);
  if (o.format == Format::Json) {
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json j = to_json(*r.cls);
      j["carter"] = r.carter;
      arr.push_back(std::move(j));
    }
    Lattice l = del_pezzo(n);
    out << Json{{"n", n}, {"basis", l.labels}, {"rows", arr}}.dump(2) << "\n";
    return kOk;
  }
  if (o.format == Format::Csv) {
    out << "n,carter,t,c,r,verdict,realized_by,certificate\n";
    for (const auto& r : rows) {
      const auto& c = *r.cls;
      out << n << "," << r.carter << "," << c.zg.t << "," << c.zg.c << "," << c.zg.r << ","
          << to_string(c.verdict->verdict) << "," << (c.realized_by.empty() ? "-" : c.realized_by) << ","
          << certificate_summary(*c.verdict) << "\n";
    }
    return kOk;
  }
  std::size_t irreducible = 0;
  for (const auto& c : classes) irreducible += c.verdict->verdict == Verdict::Irreducible;
  out << "W_" << n << ": " << classes.size() << " involution classes, " << irreducible << " irreducible\n";
  out << std::left << std::setw(10) << "carter" << std::setw(10) << "(t,c,r)" << std::setw(13) << "verdict"
      << std::setw(18) << "realized by" << "certificate\n";
  for (const auto& r : rows) {
    const auto& c = *r.cls;
    out << std::setw(10) << r.carter << std::setw(10) << zg_string(c.zg) << std::setw(13)
        << to_string(c.verdict->verdict) << std::setw(18) << (c.realized_by.empty() ? "-" : c.realized_by)
        << certificate_summary(*c.verdict) << "\n";
  }
  out << std::right;
  return kOk;
}

int cmd_roots(int n, bool list, const Options& o, std::ostream& out) {
  if (n < 0 || n > 8) throw InputError("roots needs 0 <= n <= 8");
  auto rs = roots(n);
  Lattice l = del_pezzo(n);
  if (!list) {
    print_scalar(out, o.format, "roots", rs.size(), Json{{"n", n}});
    return kOk;
  }
  if (o.format == Format::Json) {
    Json arr = Json::array();
    for (const auto& r : rs) arr.push_back(r);
    out << Json{{"n", n}, {"basis", l.labels}, {"count", rs.size()}, {"roots", arr}}.dump(2) << "\n";
  } else if (o.format == Format::Csv) {
    for (std::size_t i = 0; i < l.labels.size(); ++i) out << (i ? "," : "") << l.labels[i];
    out << "\n";
    for (const auto& r : rs) {
      for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
      out << "\n";
    }
  } else {
    out << rs.size() << " roots\n";
    for (const auto& r : rs) out << "  " << format_vector(l, r) << "\n";
  }
  return kOk;
}

int cmd_order(int n, const Options& o, std::ostream& out) {
  if (n < 0 || n > 8) throw InputError("order needs 0 <= n <= 8");
  print_scalar(out, o.format, "order", weyl_order(n), Json{{"n", n}});
  return kOk;
}

int cmd_model(const std::string& name, std::optional<int> n, const Options& o, std::ostream& out) {
  NamedInvolution m = named_model(name, n);
  if (o.format == Format::Json) {
    out << to_json(m).dump(2) << "\n";
  } else if (o.format == Format::Csv) {
    const auto& g = m.involution.matrix;
    for (std::size_t i = 0; i < g.rows(); ++i) {
      for (std::size_t j = 0; j < g.cols(); ++j) out << (j ? "," : "") << g(i, j);
      out << "\n";
    }
  } else {
    const Lattice& l = m.involution.lattice;
    out << m.label() << " on Z^{1," << m.n << "}, columns are images of";
    for (const auto& s : l.labels) out << " " << s;
    out << "\n";
    print_matrix(out, m.involution.matrix);
  }
  return kOk;
}

void print_result_text(std::ostream& out, const Lattice& l, const ReducibilityResult& r) {
  const auto& c = r.certificate;
  out << "verdict: " << to_string(r.verdict) << "\n";
  out << "certificate: " << to_string(c.kind) << "\n";
  if (!c.witnesses.empty()) {
    out << "witnesses (height " << c.height << "):\n";
    for (const auto& w : c.witnesses) out << "  " << format_vector(l, w) << "\n";
  }
  if (!c.predicate.empty()) out << "predicate: " << c.predicate << "\n";
  for (const auto& ob : c.obstructions)
    out << "obstruction " << to_string(ob.criterion) << ": " << to_string(ob.check) << " (" << ob.predicate << ")\n";
  for (auto cr : c.undecided) out << "undecided: " << to_string(cr) << " up to height " << c.height_bound << "\n";
}

int cmd_check(const std::string& path, const Options& o, std::ostream& out) {
  Isometry g = isometry_from_matrix_file(read_json_input(path));
  ReducibilityResult r = check_reducible(g, o.height_bound);
  if (o.format == Format::Json) {
    out << to_json(r).dump(2) << "\n";
  } else if (o.format == Format::Csv) {
    out << "verdict,kind,height,witnesses\n";
    std::string ws;
    for (const auto& w : r.certificate.witnesses) ws += (ws.empty() ? "" : ";") + format_vector(g.lattice, w);
    out << to_string(r.verdict) << "," << to_string(r.certificate.kind) << "," << r.certificate.height << ","
        << csv_quote(ws) << "\n";
  } else {
    print_result_text(out, g.lattice, r);
  }
  return r.verdict == Verdict::Unknown ? kUndecided : kOk;
}

int cmd_decompose(const std::string& path, const Options& o, std::ostream& out) {
  Isometry g = isometry_from_matrix_file(read_json_input(path));
  DecompositionTree t = decompose(g, o.height_bound);
  bool undecided = t.leaf.type == LeafType::Unknown || t.leaf.check.verdict == Verdict::Unknown;
  if (o.format == Format::Json) {
    out << to_json(t).dump(2) << "\n";
  } else if (o.format == Format::Csv) {
    out << "depth,node,vectors,action\n";
    std::size_t depth = 0;
    for (const auto& s : t.splits) {
      std::string vs;
      for (const auto& v : s.block) vs += (vs.empty() ? "" : ";") + format_vector(g.lattice, v);
      out << depth++ << ",split," << csv_quote(vs) << "," << csv_quote(to_json(s.action).dump()) << "\n";
    }
    std::string vs;
    for (const auto& v : t.leaf.basis) vs += (vs.empty() ? "" : ";") + format_vector(g.lattice, v);
    out << depth << "," << to_string(t.leaf.type) << "," << csv_quote(vs) << ","
        << csv_quote(to_json(t.leaf.action).dump()) << "\n";
  } else {
    std::size_t depth = 0;
    for (const auto& s : t.splits) {
      out << std::string(2 * depth++, ' ') << "split";
      for (const auto& v : s.block) out << " [" << format_vector(g.lattice, v) << "]";
      out << " via " << to_string(s.from) << ", action " << to_json(s.action).dump() << "\n";
    }
    out << std::string(2 * depth, ' ') << "leaf " << to_string(t.leaf.type);
    if (t.leaf.type == LeafType::DelPezzo) out << "(" << t.leaf.index << ")";
    out << " rank " << t.leaf.basis.size() << ", " << to_string(t.leaf.check.verdict) << "\n";
    for (const auto& v : t.leaf.basis) out << std::string(2 * depth + 2, ' ') << format_vector(g.lattice, v) << "\n";
  }
  return undecided ? kUndecided : kOk;
}

int cmd_defect(const std::string& path, const std::string& name, std::optional<int> n, bool twist, const Options& o,
               std::ostream& out) {
  if (path.empty() == name.empty()) throw InputError("defect needs exactly one of FILE or --name");
  Isometry g = path.empty() ? named_model(name, n).involution : isometry_from_matrix_file(read_json_input(path));
  if (twist) g = negation_twist(g);
  Json extra{{"rank", g.lattice.rank()}, {"twist", twist}, {"quotient_signature", quotient_signature(g)}};
  if (!name.empty()) extra["name"] = name;
  print_scalar(out, o.format, "defect_sum", defect_sum(g), extra);
  return kOk;
}

Int parse_height_env(const char* s) {
  std::string_view v(s);
  Int x = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || p != v.data() + v.size() || x < 0)
    throw InputError("DPZ_HEIGHT_BOUND must be a non-negative integer, got \"" + std::string(v) + "\"");
  return x;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const char* height_env) {
  CLI::App app{"Lattice computations for involutions of del Pezzo intersection lattices", "dpz"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  std::string format = "text";
  std::optional<Int> height_flag;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--height-bound", height_flag,
                 "Height bound |Q(x,-K)| for searches in indefinite lattices (default 10; "
                 "env DPZ_HEIGHT_BOUND)")
      ->check(CLI::NonNegativeNumber);

  int n = 0;
  auto* classify = app.add_subcommand("classify", "Involution classes of W_n with irreducibility verdicts");
  classify->add_option("n", n, "1..8")->required();

  bool list = false;
  auto* roots_cmd = app.add_subcommand("roots", "Number of roots of Z^{1,n} (vectors of norm -2 orthogonal to K)");
  roots_cmd->add_option("n", n, "0..8")->required();
  roots_cmd->add_flag("--list", list, "List the roots");

  auto* order = app.add_subcommand("order", "Order of the Weyl group W_n");
  order->add_option("n", n, "0..8")->required();

  std::string name;
  std::optional<int> model_n;
  auto* model = app.add_subcommand("model", "Matrix of a named involution (geiser, bertini, dejonquieres)");
  model->add_option("--name", name, "geiser, bertini or dejonquieres")->required();
  model->add_option("--n", model_n, "n for dejonquieres (5 or 7)");

  std::string path;
  auto* check = app.add_subcommand("check", "Reducibility verdict and certificate for a matrix file");
  check->add_option("file", path, "JSON matrix file, or - for stdin")->required();
  check->footer("Matrix file: {\"basis\": \"HE\" | \"quadric\", \"matrix\": [[...], ...]}");

  auto* decomp = app.add_subcommand("decompose", "Invariant orthogonal splitting of a matrix file");
  decomp->add_option("file", path, "JSON matrix file, or - for stdin")->required();

  bool twist = false;
  auto* defect = app.add_subcommand("defect", "G-signature defect sum 2 sigma(L+) - sigma(L)");
  defect->add_option("file", path, "JSON matrix file, or - for stdin");
  defect->add_option("--name", name, "geiser, bertini or dejonquieres");
  defect->add_option("--n", model_n, "n for dejonquieres (5 or 7)");
  defect->add_flag("--twist", twist, "Use -g instead of g");

  app.footer("Exit codes: 0 success, 1 internal error, 2 input error, 3 undecided (Unknown verdict).");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  opts.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
  try {
    if (height_flag) {
      opts.height_bound = *height_flag;
    } else if (height_env != nullptr && *height_env != '\0') {
      opts.height_bound = parse_height_env(height_env);
    }
    if (*classify) return cmd_classify(n, opts, out);
    if (*roots_cmd) return cmd_roots(n, list, opts, out);
    if (*order) return cmd_order(n, opts, out);
    if (*model) return cmd_model(name, model_n, opts, out);
    if (*check) return cmd_check(path, opts, out);
    if (*decomp) return cmd_decompose(path, opts, out);
    if (*defect) return cmd_defect(path, name, model_n, twist, opts, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Unsupported& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}

}  // namespace dpz::cli
