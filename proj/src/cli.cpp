#include "hamwalk/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <string>

#include "hamwalk/bounds.hpp"
#include "hamwalk/corpus.hpp"
#include "hamwalk/errors.hpp"
#include "hamwalk/grinberg.hpp"
#include "hamwalk/reduction.hpp"
#include "hamwalk/walks.hpp"

namespace hamwalk::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("FileNotFound", "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

template <typename T>
json opt_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

void print_warnings(std::ostream& out, const std::vector<std::string>& warnings, bool quiet) {
  if (quiet) return;
  for (const std::string& w : warnings) out << "warning: " << w << '\n';
}

template <typename T>
std::string join(const std::vector<T>& xs, const char* sep = " ") {
  std::ostringstream ss;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) ss << sep;
    ss << xs[i];
  }
  return ss.str();
}

struct Options {
  bool json_out = false;
  bool quiet = false;

  std::string graph_file, walk_file;
  std::vector<int> lengths;
  long long cap = -1;
  bool solve = false;
  int limit = 20;
  int spectrum_limit = 9;
  int outer_face = 1;
  std::string witness_file;
  std::string fixture_name;
  std::vector<std::string> fixture_params;
  bool want_walk = false;
};

int cmd_faces(const Options& o, std::ostream& out) {
  PlanarEmbedding g = PlanarEmbedding::parse(read_file(o.graph_file));
  FaceSet fs = trace_faces(g);
  if (o.json_out) {
    json jf = json::array();
    for (const Face& f : fs.faces) {
      jf.push_back({{"id", f.id}, {"length", f.length()}, {"vertices", face_vertex_cycle(g, f)}});
    }
    emit(out, {{"n", g.num_vertices()},
               {"m", g.num_edges()},
               {"faces", jf},
               {"lengths", face_lengths(fs)}});
    return 0;
  }
  out << "n=" << g.num_vertices() << " m=" << g.num_edges() << " faces=" << fs.count() << '\n';
  for (const Face& f : fs.faces) {
    out << "face " << f.id << ": length " << f.length() << ": " << join(face_vertex_cycle(g, f))
        << '\n';
  }
  return 0;
}

int cmd_grinberg(const Options& o, std::ostream& out) {
  const bool from_file = !o.graph_file.empty();
  if (from_file == !o.lengths.empty()) {
    fail("BadParams", "give a graph file or --lengths, not both");
  }

  json j;
  GrinbergSet s;
  std::vector<std::string> warnings;
  std::vector<int> lengths = o.lengths;
  if (from_file) {
    PlanarEmbedding g = PlanarEmbedding::parse(read_file(o.graph_file));
    GrinbergAnalysis ga = analyze_embedding(g);
    s = ga.set;
    lengths = ga.lengths;
    warnings = ga.warnings;
    j["n"] = g.num_vertices();
    j["hamiltonian_lower_bound"] = g.num_vertices() + repeat_lower_bound(s.number());
  } else {
    s = grinberg_set(lengths);
  }
  j["lengths"] = lengths;
  j["set"] = s.values;
  j["g"] = s.number();
  j["repeat_lower_bound"] = repeat_lower_bound(s.number());
  if (o.cap >= 0) j["feasible_repeat_counts"] = feasible_repeat_counts(s, o.cap);
  if (from_file) j["warnings"] = warnings;

  if (o.json_out) {
    emit(out, j);
    return 0;
  }
  print_warnings(out, warnings, o.quiet);
  out << "lengths: " << join(lengths) << '\n';
  out << "grinberg set: {" << join(s.values) << "}\n";
  out << "g=" << s.number() << " repeat_lower_bound=" << repeat_lower_bound(s.number()) << '\n';
  if (from_file) out << "hamiltonian_number >= " << j["hamiltonian_lower_bound"].get<long long>() << '\n';
  if (o.cap >= 0) {
    out << "feasible repeat counts <= " << o.cap << ": "
        << join(feasible_repeat_counts(s, o.cap)) << '\n';
  }
  return 0;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  PlanarEmbedding g = PlanarEmbedding::parse(read_file(o.graph_file));
  ClosedWalk witness;
  const ClosedWalk* wp = nullptr;
  if (!o.witness_file.empty()) {
    witness = parse_walk(read_file(o.witness_file));
    wp = &witness;
  }
  BoundsReport r = bounds_report(g, o.solve, o.limit, wp);
  if (o.json_out) {
    emit(out, {{"n", r.n},
               {"lower_trivial", r.lower_trivial},
               {"lower_grinberg", r.lower_grinberg},
               {"grinberg_on_doubled", r.grinberg_on_doubled},
               {"upper_elementary", r.upper_elementary},
               {"upper_gh", opt_json(r.upper_gh)},
               {"upper_bermond", opt_json(r.upper_bermond)},
               {"gh_connectivity", r.gh_connectivity},
               {"gh_diameter", r.gh_diameter},
               {"bermond_c", r.bermond_c},
               {"min_upper", r.min_upper()},
               {"exact", opt_json(r.exact)},
               {"certified", r.certified},
               {"witness_length", opt_json(r.witness_length)},
               {"warnings", r.warnings}});
    return 0;
  }
  print_warnings(out, r.warnings, o.quiet);
  out << "n=" << r.n << '\n';
  out << "lower: trivial=" << r.lower_trivial << " grinberg=" << r.lower_grinberg;
  if (r.grinberg_on_doubled) out << " (from doubled graph)";
  out << '\n';
  out << "upper: elementary=" << r.upper_elementary;
  if (r.upper_gh) {
    out << " goodman_hedetniemi=" << *r.upper_gh << " (k=" << r.gh_connectivity
        << " d=" << r.gh_diameter << ")";
  }
  if (r.upper_bermond) out << " bermond=" << *r.upper_bermond << " (c=" << r.bermond_c << ")";
  out << '\n';
  if (r.witness_length) out << "witness walk length: " << *r.witness_length << '\n';
  if (r.exact) {
    out << "h=" << *r.exact << (r.certified ? " (certified)" : "") << '\n';
  } else {
    out << "h in [" << r.lower_grinberg << ", " << r.min_upper() << "]\n";
  }
  return 0;
}

int cmd_solve(const Options& o, std::ostream& out) {
  PlanarEmbedding g = PlanarEmbedding::parse(read_file(o.graph_file));
  SolveResult r = hamiltonian_number_exact(g, o.limit);
  if (o.json_out) {
    emit(out, {{"h", r.h},
               {"ordering", r.ordering.vertices},
               {"walk", r.walk.vertices},
               {"warnings", r.warnings}});
    return 0;
  }
  print_warnings(out, r.warnings, o.quiet);
  out << "h=" << r.h << '\n';
  out << "ordering: " << join(r.ordering.vertices) << '\n';
  out << "walk: " << serialize_walk(r.walk);
  return 0;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  PlanarEmbedding g = PlanarEmbedding::parse(read_file(o.graph_file));
  std::vector<long long> values = hamiltonian_spectrum(g, o.spectrum_limit);
  if (o.json_out) {
    emit(out, {{"n", g.num_vertices()}, {"values", values}, {"h", values.front()}});
    return 0;
  }
  out << "spectrum: " << join(values) << '\n';
  out << "h=" << values.front() << '\n';
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  PlanarEmbedding g = PlanarEmbedding::parse(read_file(o.graph_file));
  ClosedWalk w = parse_walk(read_file(o.walk_file));
  WalkStats st = validate_walk(g, w);
  require_spanning(st);
  if (o.json_out) {
    json mult = json::object();
    for (size_t v = 0; v < st.multiplicities.size(); ++v) {
      if (st.multiplicities[v] > 0) mult[std::to_string(v + 1)] = st.multiplicities[v];
    }
    emit(out, {{"n", g.num_vertices()},
               {"length", st.length},
               {"repeats", st.repeats},
               {"spanning", st.spanning},
               {"extra_visits", mult}});
    return 0;
  }
  out << "valid closed spanning walk on " << g.num_vertices() << " vertices\n";
  out << "length=" << st.length << " repeats=" << st.repeats << '\n';
  if (st.repeats > 0 && !o.quiet) {
    std::vector<std::string> rep;
    for (size_t v = 0; v < st.multiplicities.size(); ++v) {
      if (st.multiplicities[v] > 0) {
        rep.push_back(std::to_string(v + 1) + " (" + std::to_string(st.multiplicities[v] + 1) +
                      " visits)");
      }
    }
    out << "repeated: " << join(rep, ", ") << '\n';
  }
  return 0;
}

json reduction_json(const ReductionReport& r) {
  return {{"phi", r.phi},
          {"sum_m", r.sum_m},
          {"n_plus", r.n_plus},
          {"n_minus", r.n_minus},
          {"delta_abs", r.delta_abs},
          {"nu", r.nu},
          {"pi", r.pi},
          {"f", r.f},
          {"g", r.grinberg_num},
          {"epsilon", r.epsilon},
          {"epsilon_constant", r.epsilon_constant},
          {"f_in_set", r.f_in_set},
          {"checks",
           {{"class_count", r.eq1_ok},
            {"balance", r.balance_ok},
            {"signed_sum", r.eq3_ok},
            {"repeat_bound", r.theorem_ok},
            {"repeat_identity", r.rho_identity_ok}}},
          {"warnings", r.warnings}};
}

void print_reduction_text(const ReductionReport& r, const Options& o, std::ostream& out) {
  print_warnings(out, r.warnings, o.quiet);
  out << "phi=" << r.phi << " sum_m=" << r.sum_m << '\n';
  out << "n_plus=" << r.n_plus << " n_minus=" << r.n_minus << " delta=" << r.delta_abs
      << " nu=" << r.nu << " pi=" << r.pi << '\n';
  out << "f=" << r.f << " g=" << r.grinberg_num << (r.f_in_set ? " (f in grinberg set)" : "")
      << '\n';
  std::string eps;
  for (int e : r.epsilon) {
    if (!eps.empty()) eps += ' ';
    eps += (e > 0 ? '+' : '-');
  }
  out << "epsilon per host face: " << eps << '\n';
  auto tag = [](bool ok) { return ok ? "ok" : "FAIL"; };
  out << "checks: class_count=" << tag(r.eq1_ok) << " balance=" << tag(r.balance_ok)
      << " signed_sum=" << tag(r.eq3_ok) << " repeat_bound=" << tag(r.theorem_ok)
      << " repeat_identity=" << tag(r.rho_identity_ok) << '\n';
}

int cmd_reduce(const Options& o, std::ostream& out) {
  PlanarEmbedding g = PlanarEmbedding::parse(read_file(o.graph_file));
  ClosedWalk w = parse_walk(read_file(o.walk_file));
  ReductionReport r = reduction_report(g, w, o.outer_face);
  if (o.json_out) {
    emit(out, reduction_json(r));
  } else {
    print_reduction_text(r, o, out);
  }
  return 0;
}

int cmd_theorem_check(const Options& o, std::ostream& out) {
  PlanarEmbedding g = PlanarEmbedding::parse(read_file(o.graph_file));
  ClosedWalk w = parse_walk(read_file(o.walk_file));
  ReductionReport r = reduction_report(g, w, o.outer_face);
  const long long bound = repeat_lower_bound(r.grinberg_num);
  std::string verdict = "rho=" + std::to_string(r.sum_m) + " >= g/2=" + std::to_string(bound);
  verdict += r.sum_m == bound ? " (tight)" : " (slack " + std::to_string(r.sum_m - bound) + ")";
  verdict += "; f=" + std::to_string(r.f);
  if (o.json_out) {
    json j = reduction_json(r);
    j["verdict"] = verdict;
    emit(out, j);
  } else {
    print_reduction_text(r, o, out);
    out << verdict << '\n';
  }
  if (!r.all_ok()) {
    fail("ReductionCheckFailed", "a reduction identity failed; see the checks field");
  }
  return 0;
}

int cmd_corpus(const Options& o, std::ostream& out) {
  if (o.fixture_name.empty()) {
    if (o.json_out) {
      emit(out, {{"fixtures", fixture_names()}});
    } else {
      for (const std::string& name : fixture_names()) out << name << '\n';
    }
    return 0;
  }
  Fixture f = fixture(o.fixture_name, o.fixture_params);
  if (o.want_walk) {
    if (!f.witness) fail("BadParams", "fixture '" + f.name + "' stores no witness walk");
    if (o.json_out) {
      emit(out, {{"name", f.name}, {"walk", f.witness->vertices}});
    } else {
      out << serialize_walk(*f.witness);
    }
    return 0;
  }
  if (o.json_out) {
    json j = {{"name", f.name},
              {"lengths", f.lengths},
              {"text", f.embedding ? json(f.embedding->serialize()) : json(nullptr)},
              {"walk", f.witness ? json(f.witness->vertices) : json(nullptr)},
              {"known_set", f.known_set.empty() ? json(nullptr) : json(f.known_set)},
              {"known_h", opt_json(f.known_h)}};
    emit(out, j);
    return 0;
  }
  if (f.embedding) {
    out << f.embedding->serialize();
  } else {
    out << "# " << f.name << ": face-length vector only, no embedding\n";
    out << "# lengths: " << join(f.lengths) << '\n';
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"planar walk toolkit: Grinberg sets, walk-length bounds, exact Hamiltonian "
               "numbers, and closed-walk reductions"};
  app.name("hamwalk");
  app.require_subcommand(1);
  app.add_flag("--json", o.json_out, "machine-readable JSON on stdout");
  app.add_flag("-q,--quiet", o.quiet, "suppress warnings in text output");

  auto* faces = app.add_subcommand("faces", "trace the faces of an embedded graph");
  faces->add_option("file", o.graph_file, "graph file")->required();

  auto* grin = app.add_subcommand("grinberg", "Grinberg set and repeat lower bound");
  grin->add_option("file", o.graph_file, "graph file");
  grin->add_option("--lengths", o.lengths, "face-length vector instead of a graph file")
      ->delimiter(',');
  grin->add_option("--cap", o.cap, "also list feasible repeat counts up to this cap");

  auto* bounds = app.add_subcommand("bounds", "lower and upper bounds on the hamiltonian number");
  bounds->add_option("file", o.graph_file, "graph file")->required();
  bounds->add_flag("--solve", o.solve, "run the exact solver");
  bounds->add_option("--limit", o.limit, "largest n the solver accepts")->capture_default_str();
  bounds->add_option("--witness", o.witness_file, "closed spanning walk file to certify with");

  auto* solve = app.add_subcommand("solve", "exact hamiltonian number with an optimal walk");
  solve->add_option("file", o.graph_file, "graph file")->required();
  solve->add_option("--limit", o.limit, "largest n accepted")->capture_default_str();

  auto* spectrum = app.add_subcommand("spectrum", "all cyclic-ordering costs");
  spectrum->add_option("file", o.graph_file, "graph file")->required();
  spectrum->add_option("--limit", o.spectrum_limit, "largest n accepted")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "check a closed spanning walk against its graph");
  verify->add_option("graph", o.graph_file, "graph file")->required();
  verify->add_option("walk", o.walk_file, "walk file")->required();

  auto* reduce = app.add_subcommand("reduce", "face classes and sign identities of a walk");
  reduce->add_option("graph", o.graph_file, "graph file")->required();
  reduce->add_option("walk", o.walk_file, "walk file")->required();
  reduce->add_option("--outer-face", o.outer_face, "host face whose class signs +1")
      ->capture_default_str();

  auto* theorem = app.add_subcommand("theorem-check", "verify every reduction identity");
  theorem->add_option("graph", o.graph_file, "graph file")->required();
  theorem->add_option("walk", o.walk_file, "walk file")->required();
  theorem->add_option("--outer-face", o.outer_face, "host face whose class signs +1")
      ->capture_default_str();

  auto* corpus = app.add_subcommand("corpus", "emit a named example graph (no name: list them)");
  corpus->add_option("name", o.fixture_name, "fixture name");
  corpus->add_option("params", o.fixture_params, "fixture parameters");
  corpus->add_flag("--walk", o.want_walk, "emit the stored witness walk instead");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (faces->parsed()) return cmd_faces(o, out);
    if (grin->parsed()) return cmd_grinberg(o, out);
    if (bounds->parsed()) return cmd_bounds(o, out);
    if (solve->parsed()) return cmd_solve(o, out);
    if (spectrum->parsed()) return cmd_spectrum(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (reduce->parsed()) return cmd_reduce(o, out);
    if (theorem->parsed()) return cmd_theorem_check(o, out);
    if (corpus->parsed()) return cmd_corpus(o, out);
  } catch (const Error& e) {
    err << e.name() << ": " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "InternalError: " << e.what() << '\n';
    return 1;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace hamwalk::cli
