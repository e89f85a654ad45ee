#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "partalg/repmat.hpp"
#include "partalg/serialize.hpp"
#include "partalg/verify_suites.hpp"

namespace {

using namespace partalg;

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return 0;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open " << out_path << " for writing\n";
    return 2;
  }
  file << text;
  if (text.empty() || text.back() != '\n') file << '\n';
  return 0;
}

std::string poly_label(const DeltaPolynomial& p) { return p.to_string(); }

std::string table_of_element(const AlgebraElement& element) {
  std::ostringstream out;
  if (element.is_zero()) out << "0\n";
  for (const auto& [diagram, coeff] : element.terms())
    out << "(" << poly_label(coeff) << ")  " << diagram.to_string() << "\n";
  return out.str();
}

std::string table_of_decomposition(const RestrictionDecomposition& d) {
  std::ostringstream out;
  for (const auto& layer : d.layers) {
    out << "layer " << layer.tuple.to_string() << "\n";
    for (const auto& rec : layer.records)
      out << "  record mu=" << rec.mu.to_string()
          << " muN=" << rec.mu_plain.to_string()
          << " muL=" << rec.mu_labelled.to_string()
          << " lamL=" << rec.left_weight.to_string()
          << " lamR=" << rec.right_weight.to_string() << " mult="
          << format_bigint(rec.multiplicity) << "\n";
    for (const auto& [pair, mult] : layer.cell_multiplicities)
      out << "  cell (" << layer.tuple.left_rank() << ","
          << pair.first.to_string() << ") x (" << layer.tuple.right_rank()
          << "," << pair.second.to_string() << ") mult "
          << format_bigint(mult) << "\n";
  }
  out << "cells\n";
  for (const auto& [key, mult] : d.cells)
    out << "  (" << key.left_rank << "," << key.left_shape.to_string()
        << ") x (" << key.right_rank << "," << key.right_shape.to_string()
        << ") mult " << format_bigint(mult) << "\n";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partition algebra toolkit"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string out_path;
  app.add_option("--format", format, "output format: json or table")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_option("--out", out_path, "write output to a file");

  // mult
  auto* mult = app.add_subcommand("mult", "multiply two basis diagrams");
  int mult_n = 0;
  std::vector<std::string> mult_args;
  mult->add_option("--n", mult_n, "strand count")->required();
  mult->add_option("diagrams", mult_args, "two diagram literals")
      ->expected(2)
      ->required();

  // decompose
  auto* dec = app.add_subcommand("decompose", "standard form of a diagram");
  int dec_n = 0;
  std::string dec_arg;
  dec->add_option("--n", dec_n, "strand count")->required();
  dec->add_option("diagram", dec_arg, "diagram literal")->required();

  // dims
  auto* dims = app.add_subcommand("dims", "cell module dimensions");
  int dims_n = 0, dims_r = -1;
  std::string dims_lambda, dims_delta;
  bool dims_matrices = false;
  dims->add_option("--n", dims_n, "strand count")->required();
  dims->add_option("--r", dims_r, "label count");
  dims->add_option("--lambda", dims_lambda, "shape, e.g. [2,1]");
  dims->add_option("--delta", dims_delta, "loop parameter, e.g. 7 or 7/2");
  dims->add_flag("--matrices", dims_matrices,
                 "dump action matrices (needs --r, --lambda, --delta)");

  // halfenum
  auto* halfenum = app.add_subcommand("halfenum", "list one-row diagrams");
  int he_n = 0, he_r = 0;
  halfenum->add_option("--n", he_n, "dot count")->required();
  halfenum->add_option("--r", he_r, "label count")->required();

  // branch
  auto* branch = app.add_subcommand("branch", "restrict a cell space across a wall");
  int br_m = 0, br_n = 0, br_r = 0;
  std::string br_lambda;
  branch->add_option("--m", br_m, "left strand count")->required();
  branch->add_option("--n", br_n, "right strand count")->required();
  branch->add_option("--r", br_r, "label count")->required();
  branch->add_option("--lambda", br_lambda, "shape of weight r")->required();

  // structconst
  auto* sc = app.add_subcommand("structconst", "product of two classes");
  int sc_r1 = 0, sc_r2 = 0;
  std::string sc_l1, sc_l2, sc_delta;
  sc->add_option("--r1", sc_r1, "first label count")->required();
  sc->add_option("--lambda1", sc_l1, "first shape")->required();
  sc->add_option("--r2", sc_r2, "second label count")->required();
  sc->add_option("--lambda2", sc_l2, "second shape")->required();
  sc->add_option("--delta", sc_delta, "not accepted here");

  // ringtable
  auto* rt = app.add_subcommand("ringtable", "all products up to a total");
  int rt_total = 0;
  std::string rt_delta;
  rt->add_option("--total", rt_total, "largest combined label count")->required();
  rt->add_option("--delta", rt_delta, "not accepted here");

  // verify
  auto* verify = app.add_subcommand("verify", "run self-check suites");
  std::string verify_suite;
  std::uint64_t verify_seed = 2024;
  verify->add_option("--suite", verify_suite, "run a single suite by name");
  verify->add_option("--seed", verify_seed, "seed for sampled checks");

  for (CLI::App* sub : {mult, dec, dims, halfenum, branch, sc, rt, verify})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (*mult) {
      const auto a = PartitionDiagram::parse(mult_args[0], mult_n);
      const auto b = PartitionDiagram::parse(mult_args[1], mult_n);
      const AlgebraElement product = AlgebraElement(a) * AlgebraElement(b);
      if (format == "json") return emit(to_json(product).dump(2), out_path);
      return emit(table_of_element(product), out_path);
    }

    if (*dec) {
      const auto d = PartitionDiagram::parse(dec_arg, dec_n);
      const StandardForm form = decompose(d);
      if (format == "json") {
        Json pi = Json::array();
        for (int i = 0; i < form.pi.degree(); ++i) pi.push_back(form.pi(i) + 1);
        return emit(Json{{"n", dec_n},
                         {"top", to_json(form.top)},
                         {"bottom", to_json(form.bottom)},
                         {"pi", pi}}
                        .dump(2),
                    out_path);
      }
      std::ostringstream text;
      text << "top     " << form.top.to_string() << "\n"
           << "bottom  " << form.bottom.to_string() << "\n"
           << "pi      " << form.pi.to_one_line_string() << "\n";
      return emit(text.str(), out_path);
    }

    if (*dims) {
      if (dims_matrices) {
        if (dims_r < 0 || dims_lambda.empty() || dims_delta.empty()) {
          std::cerr << "error: --matrices needs --r, --lambda and --delta\n";
          return 2;
        }
        const auto shape = IntegerPartition::parse(dims_lambda);
        const Rational delta = parse_rational(dims_delta);
        const CellModuleRealization cell =
            realize(CellIndex{dims_n, dims_r, shape}, delta);
        Json matrices = Json::array();
        for (const auto& d : diagram_basis(dims_n)) {
          const RatMatrix m = cell.action(d);
          Json rows = Json::array();
          for (int i = 0; i < m.rows(); ++i) {
            Json row = Json::array();
            for (int j = 0; j < m.cols(); ++j)
              row.push_back(format_rational(m.at(i, j)));
            rows.push_back(row);
          }
          matrices.push_back(Json{{"diagram", d.to_string()}, {"rows", rows}});
        }
        return emit(Json{{"n", dims_n},
                         {"r", dims_r},
                         {"lambda", to_json(shape)},
                         {"delta", format_rational(delta)},
                         {"dimension", cell.dimension()},
                         {"matrices", matrices}}
                        .dump(2),
                    out_path);
      }
      Json cells = Json::array();
      std::ostringstream text;
      BigInt square_sum = 0;
      for (int r = 0; r <= dims_n; ++r) {
        for (const auto& shape : enumerate_integer_partitions(r)) {
          if (dims_r >= 0 && r != dims_r) continue;
          if (!dims_lambda.empty() &&
              !(IntegerPartition::parse(dims_lambda) == shape))
            continue;
          const BigInt halves = half_diagram_count(dims_n, r);
          const BigInt f = standard_tableaux_count(shape);
          const BigInt dim = halves * f;
          square_sum += dim * dim;
          cells.push_back(Json{{"r", r},
                               {"lambda", to_json(shape)},
                               {"half_count", format_bigint(halves)},
                               {"tableaux", format_bigint(f)},
                               {"dim", format_bigint(dim)}});
          text << "r=" << r << " lambda=" << shape.to_string() << " half="
               << format_bigint(halves) << " f=" << format_bigint(f)
               << " dim=" << format_bigint(dim) << "\n";
        }
      }
      if (format == "json")
        return emit(Json{{"n", dims_n}, {"cells", cells}}.dump(2), out_path);
      return emit(text.str(), out_path);
    }

    if (*halfenum) {
      const auto halves = enumerate_half_diagrams(he_n, he_r);
      if (format == "json") {
        Json items = Json::array();
        for (const auto& h : halves) items.push_back(to_json(h));
        return emit(Json{{"n", he_n},
                         {"r", he_r},
                         {"count", static_cast<long long>(halves.size())},
                         {"items", items}}
                        .dump(2),
                    out_path);
      }
      std::ostringstream text;
      for (const auto& h : halves) text << h.to_string() << "\n";
      return emit(text.str(), out_path);
    }

    if (*branch) {
      const auto shape = IntegerPartition::parse(br_lambda);
      const auto result = restriction_decomposition(br_m, br_n, br_r, shape);
      if (format == "json") return emit(to_json(result).dump(2), out_path);
      return emit(table_of_decomposition(result), out_path);
    }

    if (*sc) {
      if (!sc_delta.empty()) {
        std::cerr << "error: structconst works with formal classes; --delta "
                     "is not accepted\n";
        return 2;
      }
      const ClassLabel x{sc_r1, IntegerPartition::parse(sc_l1)};
      const ClassLabel y{sc_r2, IntegerPartition::parse(sc_l2)};
      const auto constants = structure_constants(x, y);
      if (format == "json") return emit(constants_json(constants).dump(2), out_path);
      std::ostringstream text;
      for (const auto& [label, value] : constants)
        text << "r=" << label.r << " lambda=" << label.shape.to_string()
             << " a=" << format_bigint(value) << "\n";
      return emit(text.str(), out_path);
    }

    if (*rt) {
      if (!rt_delta.empty()) {
        std::cerr << "error: ringtable works with formal classes; --delta is "
                     "not accepted\n";
        return 2;
      }
      const auto rows = ring_table(rt_total);
      if (format == "json") return emit(ring_table_json(rows).dump(2), out_path);
      std::ostringstream text;
      for (const auto& row : rows) {
        text << row.x.to_string() << " * " << row.y.to_string() << " =";
        if (row.product.empty()) text << " 0";
        bool first = true;
        for (const auto& [label, value] : row.product) {
          text << (first ? " " : " + ");
          if (value != 1) text << format_bigint(value) << "*";
          text << label.to_string();
          first = false;
        }
        text << "\n";
      }
      return emit(text.str(), out_path);
    }

    if (*verify) {
      bool all_ok = true;
      bool found = verify_suite.empty();
      std::ostringstream text;
      for (const auto& suite : verify_suites()) {
        if (!verify_suite.empty() && suite.name != verify_suite) continue;
        found = true;
        for (const auto& result : suite.run(verify_seed)) {
          text << (result.passed ? "[PASS] " : "[FAIL] ") << suite.name << ": "
               << result.name;
          if (!result.passed && !result.detail.empty())
            text << " (" << result.detail << ")";
          text << "\n";
          all_ok = all_ok && result.passed;
        }
      }
      if (!found) {
        std::cerr << "error: unknown suite '" << verify_suite << "'\n";
        return 2;
      }
      const int code = emit(text.str(), out_path);
      if (code != 0) return code;
      return all_ok ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
