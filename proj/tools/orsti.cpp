// Command-line front end: builds index archives from input files and runs
// queries against them. Results print one per line in ascending order;
// --json switches to one structured record per line. Exit codes: 0 success,
// 2 input error, 3 usage or kind error.

#include <CLI11.hpp>
#include <json.hpp>

#include <orsti/archive.hpp>

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace {

using nlohmann::json;

// Maps to exit 3 where ordinary std::exception maps to exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_raw(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read input: " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

// Text inputs drop one trailing newline so files produced by editors and
// echo index the intended bytes.
std::string read_text(const std::string& path) {
  std::string data = read_raw(path);
  if (!data.empty() && data.back() == '\n') {
    data.pop_back();
    if (!data.empty() && data.back() == '\r') data.pop_back();
  }
  if (data.empty()) throw std::runtime_error("empty input: " + path);
  return data;
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::string decode_hex(const std::string& s) {
  if (s.size() % 2 != 0) throw std::runtime_error("pattern hex: odd digit count");
  std::string out;
  out.reserve(s.size() / 2);
  for (std::size_t i = 0; i < s.size(); i += 2) {
    const int hi = hex_digit(s[i]);
    const int lo = hex_digit(s[i + 1]);
    if (hi < 0 || lo < 0) throw std::runtime_error("pattern hex: invalid digit");
    out.push_back(static_cast<char>(hi * 16 + lo));
  }
  return out;
}

orsti::index_t as_index(std::int64_t v, const char* name) {
  if (v < 0 || v > 0x7fffffff) {
    throw std::runtime_error(std::string(name) + ": value out of range");
  }
  return static_cast<orsti::index_t>(v);
}

std::int64_t parse_int(const std::string& s, const char* what) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw std::runtime_error(std::string(what) + ": not an integer: " + s);
  }
  if (used != s.size()) {
    throw std::runtime_error(std::string(what) + ": not an integer: " + s);
  }
  return v;
}

std::vector<std::string> split_lines(const std::string& data) {
  std::vector<std::string> lines;
  std::istringstream in(data);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

// One node per line, "parent weight", node ids in line order, parent 0 at
// the root. The returned arrays are packed without the unused slot 0.
std::pair<std::vector<orsti::index_t>, std::vector<std::int64_t>> parse_tree(
    const std::string& path) {
  const std::vector<std::string> lines = split_lines(read_raw(path));
  if (lines.empty()) throw std::runtime_error("empty input: " + path);
  std::vector<orsti::index_t> parent;
  std::vector<std::int64_t> weight;
  for (const std::string& line : lines) {
    std::istringstream in(line);
    std::int64_t p = 0;
    std::int64_t w = 0;
    std::string extra;
    if (!(in >> p >> w) || (in >> extra)) {
      throw std::runtime_error("tree input: expected \"parent weight\" per line");
    }
    parent.push_back(as_index(p, "tree parent"));
    weight.push_back(w);
  }
  return {std::move(parent), std::move(weight)};
}

// One point per line, "x y", labels assigned in line order from 1.
std::vector<orsti::Point2> parse_points(const std::string& path) {
  const std::vector<std::string> lines = split_lines(read_raw(path));
  if (lines.empty()) throw std::runtime_error("empty input: " + path);
  std::vector<orsti::Point2> points;
  orsti::index_t label = 1;
  for (const std::string& line : lines) {
    std::istringstream in(line);
    std::int64_t x = 0;
    std::int64_t y = 0;
    std::string extra;
    if (!(in >> x >> y) || (in >> extra)) {
      throw std::runtime_error("point input: expected \"x y\" per line");
    }
    points.push_back({as_index(x, "point x"), as_index(y, "point y"), label});
    ++label;
  }
  return points;
}

struct BuildArgs {
  std::string kind;
  std::vector<std::string> inputs;
  std::string out;
  std::int64_t d = -1;
  bool has_d = false;
};

void require_one_input(const BuildArgs& args) {
  if (args.inputs.size() != 1) {
    throw UsageError("--kind " + args.kind + " takes exactly one --input");
  }
}

int run_build(const BuildArgs& args) {
  orsti::Archive a;
  if (args.kind == "sa") {
    require_one_input(args);
    a.kind = orsti::ArchiveKind::sa;
    a.text = read_text(args.inputs[0]);
    const orsti::SuffixIndex idx{orsti::Text(a.text)};
    a.sa.assign(idx.sa().begin() + 1, idx.sa().end());
  } else if (args.kind == "docs" || args.kind == "topk") {
    a.kind = args.kind == "docs" ? orsti::ArchiveKind::docs : orsti::ArchiveKind::topk;
    for (const std::string& path : args.inputs) {
      a.documents.push_back(read_text(path));
    }
    std::vector<orsti::Text> docs;
    docs.reserve(a.documents.size());
    for (const std::string& doc : a.documents) docs.emplace_back(doc);
    if (args.kind == "docs") {
      const orsti::DocumentIndex idx{docs};
      (void)idx;
    } else {
      const orsti::TopKIndex idx{docs, {}};
      (void)idx;
    }
  } else if (args.kind == "one-error") {
    require_one_input(args);
    a.kind = orsti::ArchiveKind::one_error;
    a.text = read_text(args.inputs[0]);
    const orsti::OneErrorIndex idx{orsti::Text(a.text)};
    (void)idx;
  } else if (args.kind == "lz") {
    require_one_input(args);
    a.kind = orsti::ArchiveKind::lz;
    a.text = read_text(args.inputs[0]);
    const orsti::Lz77Index idx{orsti::Text(a.text)};
    a.parse = idx.parse();
  } else if (args.kind == "scq") {
    require_one_input(args);
    a.kind = orsti::ArchiveKind::scq;
    a.text = read_text(args.inputs[0]);
    const orsti::ScqIndex idx{orsti::Text(a.text)};
    (void)idx;
  } else if (args.kind == "restricted") {
    require_one_input(args);
    a.kind = orsti::ArchiveKind::restricted;
    a.text = read_text(args.inputs[0]);
    const orsti::RestrictedIndex idx{orsti::Text(a.text)};
    (void)idx;
  } else if (args.kind == "wanc") {
    require_one_input(args);
    a.kind = orsti::ArchiveKind::wanc;
    auto tree = parse_tree(args.inputs[0]);
    a.parent = std::move(tree.first);
    a.weight = std::move(tree.second);
    std::vector<orsti::index_t> parent(a.parent.size() + 1, 0);
    std::vector<std::int64_t> weight(a.weight.size() + 1, 0);
    std::copy(a.parent.begin(), a.parent.end(), parent.begin() + 1);
    std::copy(a.weight.begin(), a.weight.end(), weight.begin() + 1);
    const orsti::WeightedTree tree_check = orsti::WeightedTree::build(parent, weight);
    (void)tree_check;
  } else if (args.kind == "gap") {
    require_one_input(args);
    if (!args.has_d) throw UsageError("--kind gap requires --d");
    a.kind = orsti::ArchiveKind::gap;
    a.text = read_text(args.inputs[0]);
    a.gap = args.d;
    const orsti::GapIndex idx{orsti::Text(a.text), as_index(args.d, "--d")};
    (void)idx;
  } else if (args.kind == "geo") {
    require_one_input(args);
    a.kind = orsti::ArchiveKind::geo;
    a.points = parse_points(args.inputs[0]);
    const orsti::GeoTextIndex idx{a.points};
    (void)idx;
  } else {
    throw UsageError("unknown build kind: " + args.kind);
  }
  orsti::save_archive(a, args.out);
  return 0;
}

struct QueryArgs {
  std::string sub;
  std::string index_path;
  std::string pattern;
  std::string pattern2;
  bool pattern_hex = false;
  bool as_json = false;
  std::optional<std::int64_t> i, j, k, l, r, leaf, t, d;
  std::string rect;
};

orsti::ArchiveKind required_kind(const std::string& sub) {
  if (sub == "sa-range" || sub == "occ" || sub == "locus") return orsti::ArchiveKind::sa;
  if (sub == "docs") return orsti::ArchiveKind::docs;
  if (sub == "topk") return orsti::ArchiveKind::topk;
  if (sub == "one-error" || sub == "at-most-one") return orsti::ArchiveKind::one_error;
  if (sub == "gap") return orsti::ArchiveKind::gap;
  if (sub == "scq" || sub == "ilcp") return orsti::ArchiveKind::scq;
  if (sub == "pri-report" || sub == "rank" || sub == "select" ||
      sub == "successive" || sub == "nonoverlap") {
    return orsti::ArchiveKind::restricted;
  }
  if (sub == "wanc") return orsti::ArchiveKind::wanc;
  if (sub == "primary-occ") return orsti::ArchiveKind::lz;
  if (sub == "geo-report") return orsti::ArchiveKind::geo;
  throw UsageError("unknown query subcommand: " + sub);
}

const char* kind_name(orsti::ArchiveKind kind) {
  switch (kind) {
    case orsti::ArchiveKind::sa: return "sa";
    case orsti::ArchiveKind::docs: return "docs";
    case orsti::ArchiveKind::one_error: return "one-error";
    case orsti::ArchiveKind::lz: return "lz";
    case orsti::ArchiveKind::scq: return "scq";
    case orsti::ArchiveKind::restricted: return "restricted";
    case orsti::ArchiveKind::topk: return "topk";
    case orsti::ArchiveKind::wanc: return "wanc";
    case orsti::ArchiveKind::gap: return "gap";
    case orsti::ArchiveKind::geo: return "geo";
  }
  return "unknown";
}

orsti::index_t need(const std::optional<std::int64_t>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag ") + flag);
  return as_index(*v, flag);
}

void print_positions(const std::vector<orsti::index_t>& v, bool as_json,
                     const char* key) {
  for (const orsti::index_t p : v) {
    if (as_json) {
      std::cout << json{{key, p}}.dump() << '\n';
    } else {
      std::cout << p << '\n';
    }
  }
}

void print_pair(orsti::index_t a, orsti::index_t b, bool as_json,
                const char* ka, const char* kb) {
  if (as_json) {
    std::cout << json{{ka, a}, {kb, b}}.dump() << '\n';
  } else {
    std::cout << a << ' ' << b << '\n';
  }
}

std::string hex_byte(char c) {
  static const char* digits = "0123456789abcdef";
  const unsigned char u = static_cast<unsigned char>(c);
  return {digits[u >> 4], digits[u & 0xf]};
}

void print_parse(const orsti::LzParse& parse, bool as_json) {
  for (const orsti::LzPhrase& ph : parse.phrases) {
    if (as_json) {
      json rec{{"f", ph.f}, {"l", ph.l}};
      rec["c"] = ph.has_c ? json(hex_byte(ph.c)) : json(nullptr);
      std::cout << rec.dump() << '\n';
    } else {
      std::cout << ph.f << ' ' << ph.l << ' '
                << (ph.has_c ? hex_byte(ph.c) : std::string("-")) << '\n';
    }
  }
}

int run_query(const QueryArgs& args) {
  const orsti::ArchiveKind want = required_kind(args.sub);
  const orsti::Archive archive = orsti::load_archive(args.index_path);
  if (archive.kind != want) {
    throw UsageError(std::string("kind mismatch: subcommand ") + args.sub +
                     " needs a " + kind_name(want) + " archive, got " +
                     kind_name(archive.kind));
  }
  std::string pattern = args.pattern;
  std::string pattern2 = args.pattern2;
  if (args.pattern_hex) {
    pattern = decode_hex(pattern);
    pattern2 = decode_hex(pattern2);
  }

  if (args.sub == "sa-range") {
    const orsti::SuffixIndex idx = orsti::open_sa(archive);
    const orsti::SaRange range = idx.sa_range(pattern);
    if (!range.empty()) print_pair(range.lo, range.hi, args.as_json, "lo", "hi");
  } else if (args.sub == "occ") {
    const orsti::SuffixIndex idx = orsti::open_sa(archive);
    print_positions(idx.occurrences(pattern), args.as_json, "pos");
  } else if (args.sub == "locus") {
    const orsti::LocusIndex idx = orsti::open_locus(archive);
    const orsti::SaRange range =
        idx.locus_range(need(args.i, "--i"), need(args.j, "--j"));
    print_pair(range.lo, range.hi, args.as_json, "lo", "hi");
  } else if (args.sub == "docs") {
    const orsti::DocumentIndex idx = orsti::open_docs(archive);
    print_positions(orsti::list_documents(idx, pattern), args.as_json, "doc");
  } else if (args.sub == "topk") {
    const orsti::TopKIndex idx = orsti::open_topk(archive);
    const auto hits = idx.topk(pattern, need(args.k, "--k"));
    for (const auto& [doc, weight] : hits) {
      if (args.as_json) {
        std::cout << json{{"doc", doc}, {"weight", weight}}.dump() << '\n';
      } else {
        std::cout << doc << ' ' << weight << '\n';
      }
    }
  } else if (args.sub == "one-error") {
    const orsti::OneErrorIndex idx = orsti::open_one_error(archive);
    print_positions(idx.query_one_mismatch(pattern), args.as_json, "pos");
  } else if (args.sub == "at-most-one") {
    const orsti::OneErrorIndex idx = orsti::open_one_error(archive);
    print_positions(idx.query_at_most_one(pattern), args.as_json, "pos");
  } else if (args.sub == "gap") {
    if (args.d && *args.d != archive.gap) {
      throw UsageError("--d does not match the archive's gap length");
    }
    const orsti::GapIndex idx = orsti::open_gap(archive);
    print_positions(idx.query(pattern, pattern2), args.as_json, "pos");
  } else if (args.sub == "scq") {
    const orsti::ScqIndex idx = orsti::open_scq(archive);
    print_parse(idx.scq(need(args.i, "--i"), need(args.j, "--j")), args.as_json);
  } else if (args.sub == "ilcp") {
    const orsti::ScqIndex idx = orsti::open_scq(archive);
    const auto [t, len] =
        idx.ilcp(need(args.k, "--k"), need(args.l, "--l"), need(args.r, "--r"));
    print_pair(t, len, args.as_json, "t", "len");
  } else if (args.sub == "pri-report") {
    const orsti::RestrictedIndex idx = orsti::open_restricted(archive);
    print_positions(idx.pri_report(pattern, need(args.i, "--i"), need(args.j, "--j")),
                    args.as_json, "pos");
  } else if (args.sub == "rank") {
    const orsti::RestrictedIndex idx = orsti::open_restricted(archive);
    const std::int64_t count = idx.substring_rank(pattern, need(args.k, "--k"));
    if (args.as_json) {
      std::cout << json{{"count", count}}.dump() << '\n';
    } else {
      std::cout << count << '\n';
    }
  } else if (args.sub == "select") {
    const orsti::RestrictedIndex idx = orsti::open_restricted(archive);
    const auto pos = idx.substring_select(pattern, need(args.k, "--k"));
    if (pos) print_positions({*pos}, args.as_json, "pos");
  } else if (args.sub == "successive") {
    const orsti::RestrictedIndex idx = orsti::open_restricted(archive);
    const auto pos = idx.successive(pattern, need(args.i, "--i"));
    if (pos) print_positions({*pos}, args.as_json, "pos");
  } else if (args.sub == "nonoverlap") {
    const orsti::RestrictedIndex idx = orsti::open_restricted(archive);
    print_positions(idx.non_overlapping(pattern), args.as_json, "pos");
  } else if (args.sub == "wanc") {
    const orsti::WeightedTree tree = orsti::open_wanc(archive);
    if (!args.t) throw UsageError("missing required flag --t");
    const orsti::index_t node =
        tree.weighted_ancestor(need(args.leaf, "--leaf"), *args.t);
    if (args.as_json) {
      std::cout << json{{"node", node}}.dump() << '\n';
    } else {
      std::cout << node << '\n';
    }
  } else if (args.sub == "primary-occ") {
    const orsti::Lz77Index idx = orsti::open_lz(archive);
    print_positions(idx.primary_occurrences(pattern), args.as_json, "pos");
  } else if (args.sub == "geo-report") {
    if (args.rect.empty()) throw UsageError("missing required flag --rect");
    std::vector<std::int64_t> coords;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = args.rect.find(',', start);
      coords.push_back(parse_int(args.rect.substr(start, comma - start), "--rect"));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (coords.size() != 4) throw UsageError("--rect takes X1,X2,Y1,Y2");
    const orsti::GeoTextIndex idx = orsti::open_geo(archive);
    const std::vector<orsti::Point2> hits =
        idx.report(as_index(coords[0], "--rect"), as_index(coords[1], "--rect"),
                   as_index(coords[2], "--rect"), as_index(coords[3], "--rect"));
    for (const orsti::Point2& p : hits) {
      if (args.as_json) {
        std::cout << json{{"x", p.x}, {"y", p.y}, {"label", p.label}}.dump() << '\n';
      } else {
        std::cout << p.x << ' ' << p.y << ' ' << p.label << '\n';
      }
    }
  } else {
    throw UsageError("unknown query subcommand: " + args.sub);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"text indexing toolkit built on orthogonal range searching"};
  app.require_subcommand(1);

  BuildArgs build_args;
  CLI::App* build = app.add_subcommand("build", "build an index archive");
  build->add_option("--kind", build_args.kind, "index kind")
      ->required()
      ->check(CLI::IsMember({"sa", "docs", "one-error", "lz", "scq", "restricted",
                             "topk", "wanc", "gap", "geo"}));
  build->add_option("--input", build_args.inputs, "input file, - for stdin")
      ->required();
  build->add_option("--out", build_args.out, "archive path")->required();
  CLI::Option* build_d =
      build->add_option("--d", build_args.d, "gap length for --kind gap");

  QueryArgs query_args;
  CLI::App* query = app.add_subcommand("query", "run one query against an archive");
  query->add_option("sub", query_args.sub, "query subcommand")->required();
  query->add_option("--index", query_args.index_path, "archive path")->required();
  query->add_option("--pattern", query_args.pattern, "pattern bytes");
  query->add_option("--pattern2", query_args.pattern2, "second pattern for gap");
  query->add_flag("--pattern-hex", query_args.pattern_hex,
                  "patterns are hex-encoded bytes");
  query->add_flag("--json", query_args.as_json, "one structured record per line");
  query->add_option("--i", query_args.i, "query parameter");
  query->add_option("--j", query_args.j, "query parameter");
  query->add_option("--k", query_args.k, "query parameter");
  query->add_option("--l", query_args.l, "query parameter");
  query->add_option("--r", query_args.r, "query parameter");
  query->add_option("--leaf", query_args.leaf, "query node");
  query->add_option("--t", query_args.t, "weight threshold");
  query->add_option("--d", query_args.d, "gap length check");
  query->add_option("--rect", query_args.rect, "rectangle X1,X2,Y1,Y2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (build->parsed()) {
      build_args.has_d = build_d->count() > 0;
      return run_build(build_args);
    }
    return run_query(query_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
