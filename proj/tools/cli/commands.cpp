#include "cli/commands.hpp"

#include <fstream>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "cli/report.hpp"
#include "satfrac/cycles.hpp"
#include "satfrac/errors.hpp"
#include "satfrac/io.hpp"
#include "satfrac/linalg.hpp"
#include "satfrac/markov.hpp"
#include "satfrac/saturation.hpp"

namespace satfrac::cli {

namespace {

using json = nlohmann::ordered_json;

json points_json(std::span<const Point> points) {
  json arr = json::array();
  for (const Point& p : points) arr.push_back({p.a, p.b});
  return arr;
}

json rows_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(std::vector<std::int64_t>(m.row(r).begin(), m.row(r).end()));
  return rows;
}

std::string join_row(std::span<const std::int64_t> row) {
  std::string out;
  for (std::size_t k = 0; k < row.size(); ++k) out += (k ? " " : "") + std::to_string(row[k]);
  return out;
}

std::string level_list(const std::vector<int>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
  return out;
}

/// Thrown for malformed user input; mapped to kUsage by `check`, kFailure elsewhere.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string file = "-";
  std::optional<int> a_levels;
  std::optional<int> b_levels;
  std::vector<std::string> margins;
  std::optional<std::uint64_t> seed;
  std::uint64_t count = 1;
  std::uint64_t steps = 0;
  std::uint64_t emit_every = 1;
  std::uint64_t burn_in = 0;
  int max_degree = 0;
  std::optional<std::uint64_t> cap;
  std::string format = "grid";
  std::string start;
  bool json_report = false;
  bool oracle = false;
  bool probability = false;
};

class Runner {
 public:
  Runner(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

  int dispatch(const std::string& verb, const Options& o);

 private:
  Fraction read_fraction(const std::string& path) {
    try {
      if (path == "-") return parse_fraction(read_text(in_), "<stdin>");
      return parse_fraction_file(path);
    } catch (const ParseError& e) {
      throw InputError(e.what());
    }
  }

  Margins read_margins(const Options& o) {
    if (o.margins.size() != 2) throw InputError("--margins needs two comma-separated lists");
    try {
      return {parse_level_list(o.margins[0]), parse_level_list(o.margins[1])};
    } catch (const ParseError& e) {
      throw InputError(e.what());
    }
  }

  DesignSize read_size(const Options& o) {
    if (!o.a_levels || !o.b_levels) throw InputError("--I and --J are required");
    try {
      return {*o.a_levels, *o.b_levels};
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }

  DesignSize size_of_margins(const Options& o, const Margins& m) {
    DesignSize size(static_cast<int>(m.a.size()), static_cast<int>(m.b.size()));
    if ((o.a_levels && *o.a_levels != size.a_levels()) || (o.b_levels && *o.b_levels != size.b_levels())) {
      throw InputError("--I/--J do not match the margin lengths");
    }
    return size;
  }

  RecordFormat record_format(const Options& o) {
    return o.format == "json" ? RecordFormat::json : RecordFormat::grid;
  }

  int emit(const Report& r, const Options& o, int code) {
    if (o.json_report) {
      out_ << render_json(r);
    } else {
      out_ << render_text(r);
      for (const std::string& d : r.diagnostics) err_ << d << '\n';
    }
    return code;
  }

  int check(const Options& o);
  int matrix(const Options& o);
  int det(const Options& o);
  int count(const Options& o);
  int enumerate(const Options& o);
  int generate(const Options& o);
  int sample(const Options& o);
  int decompose(const Options& o);
  int find_cycle_cmd(const Options& o);
  int basis(const Options& o);
  int walk(const Options& o);
  int fiber(const Options& o);
  int verify(const Options& o);

  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
};

int Runner::check(const Options& o) {
  const Fraction f = read_fraction(o.file);
  const std::size_t want = static_cast<std::size_t>(f.size().parameters());
  Report r{"check"};
  r.payload["I"] = f.size().a_levels();
  r.payload["J"] = f.size().b_levels();
  r.payload["points"] = f.cardinality();
  r.payload["required_points"] = want;

  bool saturated = false;
  if (f.cardinality() != want) {
    r.payload["verdict"] = "wrong size";
    r.lines.push_back("wrong size: " + std::to_string(f.cardinality()) + " points, a saturated " +
                      std::to_string(f.size().a_levels()) + "x" + std::to_string(f.size().b_levels()) +
                      " fraction has " + std::to_string(want));
  } else if (auto cycle = find_cycle(f)) {
    r.payload["verdict"] = "not saturated";
    r.payload["cycle"] = points_json(cycle->points().points());
    r.lines.push_back("not saturated: cycle = " + to_string(cycle->points()));
  } else {
    saturated = true;
    r.payload["verdict"] = "saturated";
    r.lines.push_back("saturated");
  }
  r.payload["saturated"] = saturated;
  r.ok = saturated;

  if (o.oracle) {
    const bool by_cycles = is_saturated(f);
    const bool by_det = is_saturated_by_determinant(f);
    r.payload["oracle_agrees"] = by_cycles == by_det && by_cycles == saturated;
    r.lines.push_back(std::string("oracle: cycle test ") + (by_cycles ? "saturated" : "not saturated") +
                      ", determinant test " + (by_det ? "saturated" : "not saturated"));
    if (by_cycles != by_det || by_cycles != saturated) {
      r.ok = false;
      r.diagnostics.push_back("error: cycle and determinant certificates disagree");
      return emit(r, o, kDisagreement);
    }
  }
  return emit(r, o, saturated ? kSuccess : kFailure);
}

int Runner::matrix(const Options& o) {
  Report r{"matrix"};
  ModelMatrix x = [&] {
    if (o.a_levels || o.b_levels) return build_full_model_matrix(read_size(o));
    const Fraction f = read_fraction(o.file);
    return restrict(build_full_model_matrix(f.size()), f);
  }();
  r.payload["I"] = x.size.a_levels();
  r.payload["J"] = x.size.b_levels();
  r.payload["row_points"] = points_json(x.row_points);
  r.payload["rows"] = rows_json(x.values);
  for (std::size_t k = 0; k < x.values.rows(); ++k) r.lines.push_back(join_row(x.values.row(k)));
  return emit(r, o, kSuccess);
}

int Runner::det(const Options& o) {
  const Fraction f = read_fraction(o.file);
  const ModelMatrix xf = restrict(build_full_model_matrix(f.size()), f);
  if (!xf.values.square()) {
    throw std::invalid_argument("X_F is " + std::to_string(xf.values.rows()) + "x" +
                                std::to_string(xf.values.cols()) + "; the determinant needs " +
                                std::to_string(xf.values.cols()) + " points");
  }
  const std::int64_t d = integer_determinant(xf.values);
  Report r{"det"};
  r.payload["determinant"] = d;
  r.lines.push_back(std::to_string(d));
  return emit(r, o, kSuccess);
}

int Runner::count(const Options& o) {
  Report r{"count"};
  if (!o.margins.empty()) {
    const Margins m = read_margins(o);
    const DesignSize size = size_of_margins(o, m);
    const BigInt n = count_with_margins(m);
    r.payload["I"] = size.a_levels();
    r.payload["J"] = size.b_levels();
    r.payload["margins"] = {{"a", m.a}, {"b", m.b}};
    r.payload["count"] = n.str();
    r.lines.push_back(n.str());
    return emit(r, o, kSuccess);
  }
  const DesignSize size = read_size(o);
  const BigInt n = count_saturated(size);
  r.payload["I"] = size.a_levels();
  r.payload["J"] = size.b_levels();
  r.payload["count"] = n.str();
  r.lines.push_back(n.str());
  if (o.probability) {
    const BigInt subsets = binomial(size.cells(), size.parameters());
    const std::string rounded = to_decimal(saturation_probability(size), 2);
    r.payload["subsets"] = subsets.str();
    r.payload["probability"] = rounded;
    r.lines.push_back(n.str() + "/" + subsets.str() + " = " + rounded);
  }
  return emit(r, o, kSuccess);
}

int Runner::enumerate(const Options& o) {
  const RecordFormat fmt = record_format(o);
  std::optional<Margins> filter;
  DesignSize size = [&] {
    if (o.margins.empty()) return read_size(o);
    filter = read_margins(o);
    return size_of_margins(o, *filter);
  }();
  for_each_saturated(
      size,
      [&](const Fraction& f) {
        if (!filter || margins(f) == *filter) write_record(out_, f, fmt);
        return true;
      },
      o.cap.value_or(kDefaultEnumerationCap));
  return kSuccess;
}

int Runner::generate(const Options& o) {
  const Margins m = read_margins(o);
  size_of_margins(o, m);
  const RecordFormat fmt = record_format(o);
  for_each_with_margins(m, [&](const Fraction& f) {
    write_record(out_, f, fmt);
    return true;
  });
  return kSuccess;
}

int Runner::sample(const Options& o) {
  const DesignSize size = read_size(o);
  Rng rng(*o.seed);
  const RecordFormat fmt = record_format(o);
  for (std::uint64_t k = 0; k < o.count; ++k) write_record(out_, sample_uniform_saturated(size, rng), fmt);
  return kSuccess;
}

int Runner::decompose(const Options& o) {
  const Fraction f = read_fraction(o.file);
  const KCycle cycle(f);
  const OAPair pair = decompose_cycle(cycle);
  Report r{"decompose"};
  r.payload["k"] = cycle.k();
  r.payload["oa1"] = points_json(pair.first.points());
  r.payload["oa2"] = points_json(pair.second.points());
  r.lines.push_back("k = " + std::to_string(cycle.k()));
  r.lines.push_back("OA1: " + to_string(pair.first));
  r.lines.push_back("OA2: " + to_string(pair.second));
  return emit(r, o, kSuccess);
}

int Runner::find_cycle_cmd(const Options& o) {
  const Fraction f = read_fraction(o.file);
  Report r{"find-cycle"};
  if (auto cycle = find_cycle(f)) {
    r.payload["acyclic"] = false;
    r.payload["k"] = cycle->k();
    r.payload["cycle"] = points_json(cycle->points().points());
    r.lines.push_back(to_string(cycle->points()));
  } else {
    r.payload["acyclic"] = true;
    r.payload["cycle"] = nullptr;
    r.lines.push_back("acyclic");
  }
  return emit(r, o, kSuccess);
}

int Runner::basis(const Options& o) {
  const DesignSize size = read_size(o);
  const auto moves = markov_basis(size, o.max_degree, o.cap.value_or(kDefaultBasisCap));
  Report r{"basis"};
  r.payload["I"] = size.a_levels();
  r.payload["J"] = size.b_levels();
  r.payload["moves"] = json::array();
  for (std::size_t k = 0; k < moves.size(); ++k) {
    if (k) r.lines.emplace_back();
    json rows = json::array();
    for (int a = 1; a <= size.a_levels(); ++a) {
      std::vector<int> row;
      std::string line;
      for (int b = 1; b <= size.b_levels(); ++b) {
        row.push_back(moves[k].at(a, b));
        line += (b > 1 ? " " : "") + std::to_string(moves[k].at(a, b));
      }
      rows.push_back(row);
      r.lines.push_back(line);
    }
    r.payload["moves"].push_back(rows);
  }
  return emit(r, o, kSuccess);
}

int Runner::walk(const Options& o) {
  const Fraction start = read_fraction(o.start);
  const auto moves = markov_basis(start.size(), o.max_degree, o.cap.value_or(kDefaultBasisCap));
  const RecordFormat fmt = record_format(o);
  WalkOptions opts{o.steps, *o.seed, o.burn_in, o.emit_every};
  random_walk(to_table(start), moves, opts,
              [&](std::uint64_t, const BinaryTable& t) { write_record(out_, from_table(t), fmt); });
  return kSuccess;
}

int Runner::fiber(const Options& o) {
  const Margins m = read_margins(o);
  const DesignSize size = size_of_margins(o, m);
  const RecordFormat fmt = record_format(o);
  for (const BinaryTable& t : fiber_enumerate(m, size, o.cap.value_or(kDefaultFiberCap))) {
    write_record(out_, from_table(t), fmt);
  }
  return kSuccess;
}

int Runner::verify(const Options& o) {
  const Margins m = read_margins(o);
  const DesignSize size = size_of_margins(o, m);
  const std::uint64_t cap = o.cap.value_or(kDefaultFiberCap);
  const auto moves = markov_basis(size, o.max_degree, kDefaultBasisCap);
  const std::size_t tables = fiber_enumerate(m, size, cap).size();
  const bool connected = verify_connectivity(m, size, moves, cap);
  Report r{"verify"};
  r.ok = connected;
  r.payload["margins"] = {{"a", m.a}, {"b", m.b}};
  r.payload["tables"] = tables;
  r.payload["moves"] = moves.size();
  r.payload["connected"] = connected;
  r.lines.push_back(std::string(connected ? "connected" : "not connected") + ": " + std::to_string(tables) +
                    " tables with margins " + level_list(m.a) + " / " + level_list(m.b) + ", " +
                    std::to_string(moves.size()) + " moves");
  return emit(r, o, connected ? kSuccess : kFailure);
}

int Runner::dispatch(const std::string& verb, const Options& o) {
  static const std::map<std::string, int (Runner::*)(const Options&)> table{
      {"check", &Runner::check},       {"matrix", &Runner::matrix},
      {"det", &Runner::det},           {"count", &Runner::count},
      {"enumerate", &Runner::enumerate}, {"generate", &Runner::generate},
      {"sample", &Runner::sample},     {"decompose", &Runner::decompose},
      {"find-cycle", &Runner::find_cycle_cmd}, {"basis", &Runner::basis},
      {"walk", &Runner::walk},         {"fiber", &Runner::fiber},
      {"verify", &Runner::verify},
  };
  try {
    return (this->*table.at(verb))(o);
  } catch (const InputError& e) {
    err_ << "error: " << e.what() << '\n';
    return verb == "check" ? kUsage : kFailure;
  } catch (const std::exception& e) {
    err_ << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Saturated fractions of two-factor designs and fixed-margin binary tables", "satfrac"};
  app.require_subcommand(1);
  Options o;

  auto add_size = [&](CLI::App* sub, bool required) {
    auto* i = sub->add_option("--I", o.a_levels, "levels of factor A");
    auto* j = sub->add_option("--J", o.b_levels, "levels of factor B");
    if (required) {
      i->required();
      j->required();
    }
  };
  auto add_margins = [&](CLI::App* sub, bool required) {
    auto* m = sub->add_option("--margins", o.margins, "A and B margins, e.g. 3,1,2 3,1,1,1")->expected(2);
    if (required) m->required();
  };
  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "fraction file (grid or JSON); '-' for stdin");
  };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json_report, "print a JSON report"); };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "record format")->check(CLI::IsMember({"grid", "json"}));
  };
  auto add_cap = [&](CLI::App* sub) { sub->add_option("--cap", o.cap, "size limit for exhaustive output"); };

  auto* check = app.add_subcommand("check", "certify saturation (exit 0 saturated, 1 not, 2 bad input)");
  add_file(check);
  add_json(check);
  check->add_flag("--oracle", o.oracle, "also run the determinant test and fail on disagreement");

  auto* matrix = app.add_subcommand("matrix", "print X for --I/--J, or X_F for a fraction file");
  add_file(matrix);
  add_size(matrix, false);
  add_json(matrix);

  auto* det = app.add_subcommand("det", "exact determinant of X_F");
  add_file(det);
  add_json(det);

  auto* count = app.add_subcommand("count", "number of saturated fractions");
  add_size(count, false);
  add_margins(count, false);
  add_json(count);
  count->add_flag("--probability", o.probability, "also print the share of (I+J-1)-point subsets");

  auto* enumerate = app.add_subcommand("enumerate", "stream every saturated fraction");
  add_size(enumerate, false);
  add_margins(enumerate, false);
  add_format(enumerate);
  add_cap(enumerate);

  auto* generate = app.add_subcommand("generate", "stream the saturated fractions with given margins");
  add_margins(generate, true);
  add_format(generate);

  auto* sample = app.add_subcommand("sample", "uniform random saturated fractions");
  add_size(sample, true);
  sample->add_option("--seed", o.seed, "random seed")->required();
  sample->add_option("--count", o.count, "number of draws");
  add_format(sample);

  auto* decompose = app.add_subcommand("decompose", "split a k-cycle into two orthogonal arrays");
  add_file(decompose);
  add_json(decompose);

  auto* find = app.add_subcommand("find-cycle", "print a cycle contained in the fraction, or 'acyclic'");
  add_file(find);
  add_json(find);

  auto* basis = app.add_subcommand("basis", "circuit Markov basis of the I x J design");
  add_size(basis, true);
  basis->add_option("--max-degree", o.max_degree, "largest circuit degree (default min(I,J))");
  add_cap(basis);
  add_json(basis);

  auto* walk = app.add_subcommand("walk", "fixed-margin Markov chain from a start table");
  walk->add_option("--start", o.start, "start fraction file")->required();
  walk->add_option("--steps", o.steps, "number of steps")->required();
  walk->add_option("--seed", o.seed, "random seed")->required();
  walk->add_option("--emit-every", o.emit_every, "emit every M-th state (0: none)");
  walk->add_option("--burn-in", o.burn_in, "steps before the first emitted state");
  walk->add_option("--max-degree", o.max_degree, "largest circuit degree in the basis");
  add_cap(walk);
  add_format(walk);

  auto* fiber = app.add_subcommand("fiber", "every 0/1 table with the given margins");
  add_margins(fiber, true);
  add_cap(fiber);
  add_format(fiber);

  auto* verify = app.add_subcommand("verify", "check that the basis connects a fiber (exit 1 if not)");
  add_margins(verify, true);
  verify->add_option("--max-degree", o.max_degree, "largest circuit degree in the basis");
  add_cap(verify);
  add_json(verify);

  std::vector<std::string> storage{"satfrac"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  if (chosen->get_help_ptr() != nullptr && chosen->get_help_ptr()->count() > 0) {
    out << chosen->help();
    return kSuccess;
  }
  Runner runner(in, out, err);
  return runner.dispatch(chosen->get_name(), o);
}

}  // namespace satfrac::cli
