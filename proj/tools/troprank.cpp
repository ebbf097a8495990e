// troprank: command-line front end. Every subcommand prints one JSON report on stdout.
// Exit codes: 0 success, 2 bad input (domain/shape/unreadable), 3 budget exhausted, 4 internal error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>

#include "troprank/convex.hpp"
#include "troprank/core.hpp"
#include "troprank/det.hpp"
#include "troprank/errors.hpp"
#include "troprank/io.hpp"
#include "troprank/lifts.hpp"
#include "troprank/matroids.hpp"
#include "troprank/rank.hpp"
#include "troprank/solve.hpp"
#include "troprank/svg.hpp"

using nlohmann::ordered_json;
using namespace troprank;

namespace {

constexpr int kOk = 0;
constexpr int kBadInput = 2;
constexpr int kBudget = 3;
constexpr int kInternal = 4;

ordered_json rat(const Rational& q) { return to_string(q); }

ordered_json vec(const TropVector& v) {
  ordered_json a = ordered_json::array();
  for (const auto& q : v) a.push_back(rat(q));
  return a;
}

ordered_json mat(const TropMatrix& m) {
  ordered_json a = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vec(m.row(i)));
  return a;
}

ordered_json one_based(const std::vector<std::size_t>& v) {
  ordered_json a = ordered_json::array();
  for (auto k : v) a.push_back(k + 1);
  return a;
}

ordered_json report(const std::string& command) { return {{"schema", 1}, {"command", command}}; }

TropMatrix load(const std::string& path) {
  if (path.empty() || path == "-") {
    std::string text(std::istreambuf_iterator<char>(std::cin), {});
    return parse_matrix(text).matrix;
  }
  return read_matrix_file(path).matrix;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_det(const std::string& file) {
  TropMatrix m = load(file);
  auto cert = trop_det(m);
  ordered_json r = report("det");
  r["value"] = rat(cert.det_value);
  r["singular"] = cert.singular();
  r["sigma"] = one_based(cert.sigma);
  if (cert.sigma2) r["sigma2"] = one_based(*cert.sigma2);
  r["u"] = vec(cert.u);
  r["v"] = vec(cert.v);
  emit(r);
  return kOk;
}

ordered_json tropical_json(const TropicalRank& t) {
  return {{"rank", t.rank}, {"rows", one_based(t.rows)}, {"cols", one_based(t.cols)}, {"upper_verified", t.upper_verified}};
}

ordered_json barvinok_json(const BarvinokRank& b) {
  return {{"exact", b.exact},
          {"lo", b.lo},
          {"hi", b.hi},
          {"nodes", b.nodes},
          {"witness", {{"x", mat(b.witness.x)}, {"y", mat(b.witness.y)}}}};
}

ordered_json kapranov_json(const KapranovBounds& k) {
  return {{"lo", k.lo}, {"hi", k.hi}, {"exact", k.exact}, {"rule", rule_tag(k.rule)}};
}

int cmd_rank(const std::string& file, const std::string& kind) {
  TropMatrix m = load(file);
  ordered_json r = report("rank");
  bool exhausted = false;
  auto put_tropical = [&](const TropicalRank& t) {
    if (t.upper_verified) r["tropical"] = t.rank;
    else r["tropical"] = {{"lo", t.rank}, {"hi", std::min(m.rows(), m.cols())}};
    r["tropical_certificate"] = tropical_json(t);
    exhausted |= !t.upper_verified;
  };
  auto put_barvinok = [&](const BarvinokRank& b) {
    if (b.exact) r["barvinok"] = b.hi;
    else r["barvinok"] = {{"lo", b.lo}, {"hi", b.hi}};
    r["barvinok_certificate"] = barvinok_json(b);
    exhausted |= !b.exact;
  };
  if (kind == "tropical") {
    put_tropical(tropical_rank(m));
  } else if (kind == "barvinok") {
    put_barvinok(barvinok_rank(m));
  } else {
    RankReport all = rank_report(m);
    if (!rank_chain_holds(all)) throw InternalError("rank chain violated");
    if (kind == "all") {
      put_tropical(all.tropical);
      put_barvinok(all.barvinok);
    }
    r["kapranov"] = kapranov_json(all.kapranov);
    if (kind == "kapranov") r["tropical_certificate"] = tropical_json(all.tropical);
  }
  emit(r);
  return exhausted ? kBudget : kOk;
}

int cmd_hull(const std::string& file, bool cells, bool dim_only, const std::string& svg) {
  TropMatrix m = load(file);
  ordered_json r = report("hull");
  if (dim_only) {
    r["dim"] = hull_dimension(m);
  } else {
    auto cs = enumerate_hull_cells(m);
    std::size_t dim = 0;
    std::vector<std::size_t> counts;
    for (const auto& c : cs) {
      dim = std::max(dim, c.dim);
      if (counts.size() <= c.dim) counts.resize(c.dim + 1, 0);
      ++counts[c.dim];
    }
    r["dim"] = dim;
    r["cell_counts"] = counts;
    if (cells) {
      ordered_json list = ordered_json::array();
      for (const auto& c : cs) {
        ordered_json type = ordered_json::array();
        for (const auto& s : c.type.sets) type.push_back(one_based(s));
        list.push_back({{"type", type}, {"dim", c.dim}, {"witness", vec(c.witness)}});
      }
      r["cells"] = list;
    }
  }
  if (!svg.empty()) {
    std::string doc = render_hull_svg(m);
    std::ofstream out(svg, std::ios::binary);
    if (!(out << doc)) throw DomainError("cannot write '" + svg + "'");
    r["svg"] = svg;
  }
  emit(r);
  return kOk;
}

int cmd_solve(const std::string& mfile, const std::string& bfile) {
  TropMatrix m = load(mfile);
  TropMatrix bm = load(bfile);
  TropVector b;
  if (bm.cols() == 1) b = bm.column(0);
  else if (bm.rows() == 1) b = bm.row(0);
  else throw ShapeError("right-hand side must be a single row or column");
  if (b.size() != m.rows()) throw ShapeError("right-hand side length differs from the number of rows");
  auto s = solve_status(m, b);
  ordered_json r = report("solve");
  r["status"] = s.kind == SolveStatus::Kind::unique     ? "unique"
                : s.kind == SolveStatus::Kind::multiple ? "multiple"
                                                        : "inconsistent";
  r["principal_solution"] = vec(s.x);
  if (!s.residual_rows.empty()) r["residual_rows"] = one_based(s.residual_rows);
  if (s.slack_column) r["slack_column"] = *s.slack_column + 1;
  emit(r);
  return kOk;
}

int cmd_matroid(const std::string& name, const std::vector<std::size_t>& params, bool matrix_only) {
  Matroid m = builtin(name, params);
  TropMatrix c = cocircuit_matrix(m);
  if (matrix_only) {
    std::cout << to_json(c);
    return kOk;
  }
  ordered_json r = report("matroid");
  r["name"] = name;
  r["ground_size"] = m.ground_size();
  r["rank"] = m.rank();
  r["bases"] = m.bases().size();
  r["loops"] = m.loops();
  r["cocircuits"] = m.cocircuits();
  r["cocircuit_matrix"] = mat(c);
  emit(r);
  return kOk;
}

int cmd_lift(const std::string& file, bool rank2, bool barvinok, bool verify) {
  TropMatrix m = load(file);
  ordered_json r = report("lift");
  if (!rank2 && !barvinok) {
    rank2 = tropical_rank(m).rank == 2;
    barvinok = !rank2;
  }
  PuiseuxMatrix f(0, 0);
  bool exhausted = false;
  if (rank2) {
    f = rank2_lift(m);
    r["method"] = "rank2";
    r["rank"] = 2;
  } else {
    auto b = barvinok_rank(m);
    f = barvinok_lift(m, b.witness);
    r["method"] = "barvinok";
    r["rank_at_most"] = b.hi;
    r["barvinok_certificate"] = barvinok_json(b);
    exhausted = !b.exact;
  }
  ordered_json entries = ordered_json::array();
  for (std::size_t i = 0; i < f.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < f.cols(); ++j) row.push_back(f(i, j).to_string());
    entries.push_back(row);
  }
  r["entries"] = entries;
  if (verify) {
    TropMatrix v = valuation_matrix(f);
    r["verified"] = {{"valuation_matches", v == m}, {"lift_rank", lift_rank(f)}};
    if (v != m) throw InternalError("lift valuation does not reproduce the matrix");
  }
  emit(r);
  return exhausted ? kBudget : kOk;
}

int cmd_cn(std::size_t n, bool barvinok, bool matrix_only) {
  TropMatrix c = classical_identity(n);
  if (matrix_only) {
    std::cout << to_json(c);
    return kOk;
  }
  ordered_json r = report("cn");
  r["n"] = n;
  r["barvinok"] = cn_barvinok_rank(n);
  if (barvinok) {
    r["method"] = "formula";
    if (n <= 6) {
      auto b = barvinok_rank(c);
      r["search"] = barvinok_json(b);
    }
  } else {
    r["tropical"] = tropical_rank(c).rank;
  }
  emit(r);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact min-plus matrix ranks, hulls, solvers, matroids and lifts"};
  app.require_subcommand(1);

  std::string file, file2, kind = "all", svg, name;
  bool cells = false, dim_only = false, matrix_only = false, rank2 = false, barvinok = false, verify = false;
  std::vector<std::size_t> params;
  std::size_t n = 0;

  auto* det = app.add_subcommand("det", "tropical determinant with optimality certificate");
  det->add_option("FILE", file, "matrix file (CSV or JSON); '-' or omitted reads stdin");

  auto* rank = app.add_subcommand("rank", "tropical, Barvinok and Kapranov ranks");
  rank->add_option("FILE", file, "matrix file; '-' or omitted reads stdin");
  rank->add_option("--kind", kind, "which rank")->check(CLI::IsMember({"tropical", "barvinok", "kapranov", "all"}));

  auto* hull = app.add_subcommand("hull", "bounded cells of the tropical convex hull of the columns");
  hull->add_option("FILE", file, "matrix file; '-' or omitted reads stdin");
  hull->add_flag("--cells", cells, "list every cell with its type and a witness point");
  hull->add_flag("--dim", dim_only, "print only the hull dimension");
  hull->add_option("--svg", svg, "write an SVG drawing (three-row matrices only)");

  auto* solve = app.add_subcommand("solve", "solve M x = b in the min-plus semiring");
  solve->add_option("M_FILE", file, "matrix file")->required();
  solve->add_option("B_FILE", file2, "right-hand side as a one-row or one-column matrix file")->required();

  auto* matroid = app.add_subcommand("matroid", "built-in matroids and their cocircuit matrices");
  matroid->add_option("NAME", name, "uniform, fano or non_fano")->required();
  matroid->add_flag("--cocircuit-matrix", matrix_only, "print only the cocircuit matrix as a matrix file");
  matroid->add_option("--params", params, "n,r for uniform")->delimiter(',');

  auto* lift = app.add_subcommand("lift", "Puiseux-polynomial lift with the given valuations");
  lift->add_option("FILE", file, "matrix file; '-' or omitted reads stdin");
  auto* r2 = lift->add_flag("--rank2", rank2, "rank-2 lift (tropical rank 2 required)");
  auto* bv = lift->add_flag("--barvinok", barvinok, "lift from a Barvinok decomposition");
  r2->excludes(bv);
  lift->add_flag("--verify", verify, "recompute valuations and the lift rank");

  auto* cn = app.add_subcommand("cn", "the classical identity C_n (1 on the diagonal, 0 elsewhere)");
  cn->add_option("N", n, "size")->required()->check(CLI::PositiveNumber);
  auto* cb = cn->add_flag("--barvinok", barvinok, "Barvinok rank");
  auto* cm = cn->add_flag("--matrix", matrix_only, "print the matrix as a matrix file");
  cb->excludes(cm);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*det) return cmd_det(file);
    if (*rank) return cmd_rank(file, kind);
    if (*hull) return cmd_hull(file, cells, dim_only, svg);
    if (*solve) return cmd_solve(file, file2);
    if (*matroid) return cmd_matroid(name, params, matrix_only);
    if (*lift) return cmd_lift(file, rank2, barvinok, verify);
    if (*cn) return cmd_cn(n, barvinok, matrix_only);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const ShapeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
