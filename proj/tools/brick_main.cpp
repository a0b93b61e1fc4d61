// brick: command-line front end for the brickpoly library.
//
// Verbs: net, enum, poly, assoc, multi, embed. Deterministic output: the same
// argv always produces the same bytes. Domain errors exit 1 with the error
// name on stderr; usage errors exit 2.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "brick/enumeration.hpp"
#include "brick/hull_oracle.hpp"
#include "brick/json_io.hpp"
#include "brick/network.hpp"
#include "brick/polytope.hpp"
#include "brick/triangulations.hpp"

namespace {

struct NetOpts {
  std::string word;
  int x = 0;
  int y = 0;
  std::string dup;
  std::string json_file;
  int kernel_k = 0;
  std::string reflect;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void add_net_flags(CLI::App* cmd, NetOpts& o) {
  cmd->add_option("--word", o.word, "alternating network of a word over {a,b}");
  cmd->add_option("--x", o.x, "two-level network with m parallel commutators");
  cmd->add_option("--y", o.y, "three-level network with m alternating commutators");
  cmd->add_option("--dup", o.dup, "duplicated bubble network, edges i-j,i-j,...");
  cmd->add_option("--json", o.json_file, "read a network from a JSON file");
  cmd->add_option("--kernel", o.kernel_k, "erase the outermost k levels");
  cmd->add_option("--reflect", o.reflect, "reflect: v (vertical) or h (horizontal)");
}

brick::DupGraph parse_dup(const std::string& spec) {
  brick::DupGraph g;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto dash = tok.find('-');
    if (dash == std::string::npos) throw UsageError("--dup edges must look like i-j,i-j");
    int a = 0, b = 0;
    try {
      a = std::stoi(tok.substr(0, dash));
      b = std::stoi(tok.substr(dash + 1));
    } catch (const std::exception&) {
      throw UsageError("--dup edges must be integer pairs i-j");
    }
    g.edges.emplace_back(a, b);
    g.n = std::max({g.n, a, b});
  }
  if (g.edges.empty()) throw UsageError("--dup needs at least one edge");
  return g;
}

brick::Network build_network(const NetOpts& o) {
  int sources = !o.word.empty();
  sources += o.x > 0;
  sources += o.y > 0;
  sources += !o.dup.empty();
  sources += !o.json_file.empty();
  if (sources != 1)
    throw UsageError("pick exactly one network source: --word, --x, --y, --dup, --json");
  std::optional<brick::Network> net;
  if (!o.word.empty()) net = brick::alternating_network(o.word);
  if (o.x > 0) net = brick::x_network(o.x);
  if (o.y > 0) net = brick::y_network(o.y);
  if (!o.dup.empty()) net = brick::duplicated_network(parse_dup(o.dup));
  if (!o.json_file.empty()) {
    std::ifstream in(o.json_file);
    if (!in) throw UsageError("cannot open " + o.json_file);
    std::stringstream buf;
    buf << in.rdbuf();
    net = brick::network_from_json(buf.str());
  }
  if (o.kernel_k > 0) net = brick::kernel(*net, o.kernel_k);
  if (!o.reflect.empty()) {
    if (o.reflect == "v")
      net = brick::reflect(*net, brick::Axis::vertical);
    else if (o.reflect == "h")
      net = brick::reflect(*net, brick::Axis::horizontal);
    else
      throw UsageError("--reflect takes v or h");
  }
  return *net;
}

std::string bits_of(const std::vector<int>& v) {
  std::string s(v.size(), '0');
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) s[i] = '1';
  return s;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

std::string read_stdin() {
  std::stringstream buf;
  buf << std::cin.rdbuf();
  return buf.str();
}

std::string diag_list(const brick::KTriangulation& t) {
  std::string s;
  for (const auto& [a, b] : t.diagonals) {
    if (!s.empty()) s += ' ';
    s += std::to_string(a) + "-" + std::to_string(b);
  }
  return s;
}

int run_net(const NetOpts& no) {
  std::cout << brick::network_to_json(build_network(no)) << "\n";
  return 0;
}

int run_enum(const NetOpts& no, bool dot, bool decreasing, int jobs) {
  brick::Network net = build_network(no);
  brick::EnumOptions opt;
  opt.jobs = jobs;
  if (dot || decreasing) {
    brick::FlipGraph fg = brick::flip_graph(net, opt);
    if (decreasing) brick::decreasing_orientation(fg);  // validates before printing
    std::cout << brick::flip_graph_dot(fg, decreasing);
    return 0;
  }
  std::vector<brick::Arrangement> all = brick::all_arrangements(net, opt);
  std::cout << "count: " << all.size() << "\n";
  for (const brick::Arrangement& a : all) std::cout << a.mark_string() << "\n";
  return 0;
}

int run_poly(const NetOpts& no, const std::string& mode, int jobs) {
  brick::Network net = build_network(no);
  brick::EnumOptions opt;
  opt.jobs = jobs;
  brick::BrickPolytope p = brick::build_polytope(net, opt);
  if (mode == "fvector") {
    std::cout << "f-vector:";
    for (long long f : p.f_vector) std::cout << " " << f;
    std::cout << "\n";
  } else if (mode == "facets") {
    for (const brick::Facet& f : p.facets)
      std::cout << "F " << bits_of(f.normal) << " " << f.rhs << "\n";
  } else if (mode == "summands") {
    for (const brick::Brick& b : brick::bricks(net)) {
      std::cout << "brick " << b.band << " " << b.left_wall << " " << b.right_wall << " depth "
                << b.depth << "\n";
      for (const std::vector<int>& s : brick::minkowski_summand(net, b, opt))
        std::cout << "S " << join(s) << "\n";
    }
  } else if (mode == "gp") {
    brick::GPCoordinates gp = brick::gp_coordinates(p);
    for (std::size_t mask = 1; mask < gp.z.size(); ++mask) {
      std::string bits(gp.n, '0');
      for (int i = 0; i < gp.n; ++i)
        if (mask >> i & 1u) bits[i] = '1';
      std::cout << "z " << bits << " " << gp.z[mask] << "\n";
    }
    for (std::size_t mask = 1; mask < gp.y.size(); ++mask) {
      if (gp.y[mask] == 0) continue;
      std::string bits(gp.n, '0');
      for (int i = 0; i < gp.n; ++i)
        if (mask >> i & 1u) bits[i] = '1';
      std::cout << "y " << bits << " " << gp.y[mask] << "\n";
    }
  } else if (mode == "verify") {
    brick::OracleReport r = brick::hull_oracle_verify(p, p.all_vectors);
    std::cout << "oracle ok: vertices=" << r.vertices_checked
              << " nonvertices=" << r.nonvertices_checked << " facets=" << r.facets_checked
              << " derived=" << r.derived_facets << "\n";
  } else {
    std::cout << brick::polytope_dump(p);
  }
  return 0;
}

int run_assoc(const std::string& word, int k, const std::string& mode, const std::string& flip_arg,
              int jobs) {
  if (word.empty()) throw UsageError("assoc needs --word");
  brick::EnumOptions opt;
  opt.jobs = jobs;
  if (mode == "cyclo") {
    auto fixed = brick::cyclohedron_vertices(word);
    std::cout << "count: " << fixed.size() << "\n";
    for (const auto& [t, w] : fixed) std::cout << "T " << diag_list(t) << " : " << join(w) << "\n";
    return 0;
  }
  brick::Duality dual(word, k);
  if (mode == "stars" || mode == "flip") {
    brick::KTriangulation t = brick::triangulation_from_text(read_stdin());
    if (t.n != dual.polygon().n() || t.k != k)
      brick::fail(brick::ErrorCode::invalid_argument, "triangulation header disagrees with --word/--k");
    t = dual.complete(t.diagonals);
    if (mode == "stars") {
      for (const std::vector<int>& s : dual.k_stars(t)) std::cout << "star " << join(s) << "\n";
    } else {
      auto comma = flip_arg.find(',');
      if (comma == std::string::npos) throw UsageError("--flip takes i,j");
      int i = 0, j = 0;
      try {
        i = std::stoi(flip_arg.substr(0, comma));
        j = std::stoi(flip_arg.substr(comma + 1));
      } catch (const std::exception&) {
        throw UsageError("--flip takes integer i,j");
      }
      auto [flipped, f] = dual.flip_diagonal(t, {i, j});
      std::cout << "f: " << f.first << " " << f.second << "\n";
      std::cout << brick::triangulation_to_text(flipped);
    }
    return 0;
  }
  std::vector<brick::KTriangulation> all = dual.all_triangulations(opt);
  std::cout << "count: " << all.size() << "\n";
  if (mode == "hl") {
    for (const brick::KTriangulation& t : all)
      std::cout << "hl " << join(brick::hl_coordinates(dual.polygon(), t)) << "\n";
  } else {
    for (const brick::KTriangulation& t : all) std::cout << "T " << diag_list(t) << "\n";
  }
  return 0;
}

int run_multi(const std::vector<int>& valid_pq, const std::string& dsigma, bool facet_check, int n,
              int k) {
  if (!valid_pq.empty()) {
    if (valid_pq.size() != 2) throw UsageError("--valid takes p q");
    std::vector<std::string> seqs = brick::valid_sequences(valid_pq[0], valid_pq[1]);
    std::cout << "count: " << seqs.size() << "\n";
    for (const std::string& s : seqs) std::cout << s << "\n";
    return 0;
  }
  if (!dsigma.empty()) {
    if (k <= 0) throw UsageError("--dsigma needs --k");
    int nn = static_cast<int>(dsigma.size()) + 2 * k;
    for (const auto& [a, b] : brick::d_sigma(nn, k, dsigma))
      std::cout << a << " " << b << "\n";
    return 0;
  }
  if (facet_check) {
    if (n <= 0) throw UsageError("--facet-check needs --n");
    brick::Duality dual(std::string(n - 2, 'b'), 2);
    brick::BrickPolytope p = brick::build_polytope(dual.kernel_network());
    std::vector<brick::KTriangulation> tris = dual.all_triangulations();
    std::vector<std::vector<int>> vecs;
    for (const brick::KTriangulation& t : tris)
      vecs.push_back(brick::brick_vector(dual.to_arrangement(t)));
    std::map<std::vector<int>, int> vindex;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) vindex[p.vertices[i]] = static_cast<int>(i);
    std::set<std::vector<int>> distinct(vecs.begin(), vecs.end());
    auto value = [&](const std::vector<int>& normal, const std::vector<int>& x) {
      long long s = 0;
      for (std::size_t c = 0; c < normal.size(); ++c) s += normal[c] * x[c];
      return s;
    };
    std::set<int> facets_hit;
    std::vector<std::string> sigmas = brick::valid_sequences(2, n - 4);
    for (const std::string& sigma : sigmas) {
      std::set<std::pair<int, int>> relevant;
      for (std::pair<int, int> d : brick::d_sigma(n, 2, sigma))
        if (brick::classify_diagonal(dual.polygon(), 2, d) == brick::DiagClass::relevant)
          relevant.insert(d);
      std::set<std::vector<int>> on_facet;
      std::set<int> incident;
      for (std::size_t i = 0; i < tris.size(); ++i) {
        bool all_in = true;
        for (const auto& d : relevant)
          if (!tris[i].diagonals.count(d)) {
            all_in = false;
            break;
          }
        if (!all_in) continue;
        on_facet.insert(vecs[i]);
        auto it = vindex.find(vecs[i]);
        if (it != vindex.end()) incident.insert(it->second);
      }
      std::vector<int> inc(incident.begin(), incident.end());
      int found = -1;
      for (std::size_t f = 0; f < p.facets.size(); ++f)
        if (p.facets[f].vertices == inc) {
          if (found >= 0)
            brick::fail(brick::ErrorCode::oracle_mismatch, "two facets share an incident set");
          found = static_cast<int>(f);
        }
      if (found < 0)
        brick::fail(brick::ErrorCode::oracle_mismatch,
                    "no facet matches the D(sigma) incident vertices for sigma=" + sigma);
      facets_hit.insert(found);
      const brick::Facet& facet = p.facets[found];
      std::vector<int> want(sigma.size());
      for (std::size_t i = 0; i < sigma.size(); ++i) want[i] = sigma[i] - '0';
      if (facet.normal != want)
        brick::fail(brick::ErrorCode::oracle_mismatch,
                    "facet normal differs from sigma=" + sigma);
      // The duals containing D(sigma) land exactly on the facet: their brick
      // vectors are the tight points of the cloud, vertices included.
      for (const std::vector<int>& v : on_facet)
        if (value(facet.normal, v) != facet.rhs)
          brick::fail(brick::ErrorCode::oracle_mismatch,
                      "a dual containing D(sigma) misses the facet for sigma=" + sigma);
      for (const std::vector<int>& v : distinct)
        if (value(facet.normal, v) == facet.rhs && !on_facet.count(v))
          brick::fail(brick::ErrorCode::oracle_mismatch,
                      "a tight brick vector has no dual containing D(sigma) for sigma=" + sigma);
    }
    if (facets_hit.size() != p.facets.size() || sigmas.size() != p.facets.size())
      brick::fail(brick::ErrorCode::oracle_mismatch,
                  "valid sequences and facets do not correspond bijectively");
    std::cout << "facet-check: ok facets=" << p.facets.size() << "\n";
    return 0;
  }
  throw UsageError("multi needs one of --valid, --dsigma, --facet-check");
}

int run_embed(const NetOpts& no) {
  brick::Network net = build_network(no);
  brick::UniversalityEmbedding emb = brick::universality_embedding(net);
  std::cout << "host: " << brick::network_to_json(emb.host) << "\n";
  std::cout << "witness: " << join(emb.witness) << "\n";
  std::cout << "frozen: " << join(emb.frozen) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"brick polytopes of sorting networks"};
  app.require_subcommand(1);

  NetOpts no;
  int jobs = 1;

  CLI::App* net_cmd = app.add_subcommand("net", "build and echo a network as JSON");
  add_net_flags(net_cmd, no);

  CLI::App* enum_cmd = app.add_subcommand("enum", "enumerate the supported arrangements");
  add_net_flags(enum_cmd, no);
  bool dot = false, decreasing = false;
  enum_cmd->add_flag("--dot", dot, "print the flip graph in DOT format");
  enum_cmd->add_flag("--decreasing", decreasing, "print the decreasing orientation in DOT format");
  enum_cmd->add_option("--jobs", jobs, "worker threads for enumeration");

  CLI::App* poly_cmd = app.add_subcommand("poly", "build the brick polytope");
  add_net_flags(poly_cmd, no);
  bool f_fvector = false, f_facets = false, f_summands = false, f_gp = false, f_verify = false;
  poly_cmd->add_flag("--fvector", f_fvector, "print the f-vector only");
  poly_cmd->add_flag("--facets", f_facets, "print the facet inequalities");
  poly_cmd->add_flag("--summands", f_summands, "print the per-brick Minkowski summands");
  poly_cmd->add_flag("--gp", f_gp, "print the generalized-permutahedron z/y values");
  poly_cmd->add_flag("--verify", f_verify, "cross-check against the exact hull oracle");
  poly_cmd->add_option("--jobs", jobs, "worker threads for enumeration");

  CLI::App* assoc_cmd = app.add_subcommand("assoc", "triangulations through the duality");
  std::string assoc_word;
  int assoc_k = 1;
  bool f_hl = false, f_cyclo = false, f_stars = false;
  std::string flip_arg;
  assoc_cmd->add_option("--word", assoc_word, "polygon word over {a,b}");
  assoc_cmd->add_option("--k", assoc_k, "triangulation order k (default 1)");
  assoc_cmd->add_flag("--hl", f_hl, "print the per-vertex triangle coordinates");
  assoc_cmd->add_flag("--cyclo", f_cyclo, "print the centrally symmetric triangulations");
  assoc_cmd->add_flag("--stars", f_stars, "read a triangulation on stdin, print its k-stars");
  assoc_cmd->add_option("--flip", flip_arg, "read a triangulation on stdin, flip diagonal i,j");
  assoc_cmd->add_option("--jobs", jobs, "worker threads for enumeration");

  CLI::App* multi_cmd = app.add_subcommand("multi", "valid sequences and facet data");
  std::vector<int> valid_pq;
  std::string dsigma;
  bool f_facet_check = false;
  int multi_n = 0, multi_k = 0;
  multi_cmd->add_option("--valid", valid_pq, "list the p-valid sequences of length q")
      ->expected(2);
  multi_cmd->add_option("--dsigma", dsigma, "diagonal set D(sigma) of a 0/1 sequence");
  multi_cmd->add_flag("--facet-check", f_facet_check,
                      "match D(sigma) incident sets with the facets of the bubble 2-kernel");
  multi_cmd->add_option("--n", multi_n, "polygon size for --facet-check");
  multi_cmd->add_option("--k", multi_k, "k for --dsigma");

  CLI::App* embed_cmd = app.add_subcommand("embed", "universality embedding report");
  add_net_flags(embed_cmd, no);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (net_cmd->parsed()) return run_net(no);
    if (enum_cmd->parsed()) return run_enum(no, dot, decreasing, jobs);
    if (poly_cmd->parsed()) {
      int modes = f_fvector + f_facets + f_summands + f_gp + f_verify;
      if (modes > 1) throw UsageError("poly modes are mutually exclusive");
      std::string mode = f_fvector     ? "fvector"
                         : f_facets    ? "facets"
                         : f_summands  ? "summands"
                         : f_gp        ? "gp"
                         : f_verify    ? "verify"
                                       : "";
      return run_poly(no, mode, jobs);
    }
    if (assoc_cmd->parsed()) {
      int modes = f_hl + f_cyclo + f_stars + !flip_arg.empty();
      if (modes > 1) throw UsageError("assoc modes are mutually exclusive");
      std::string mode = f_hl                ? "hl"
                         : f_cyclo           ? "cyclo"
                         : f_stars           ? "stars"
                         : !flip_arg.empty() ? "flip"
                                             : "";
      return run_assoc(assoc_word, assoc_k, mode, flip_arg, jobs);
    }
    if (multi_cmd->parsed()) return run_multi(valid_pq, dsigma, f_facet_check, multi_n, multi_k);
    if (embed_cmd->parsed()) return run_embed(no);
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const brick::Error& e) {
    std::cerr << e.name() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 2;
}
