#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <orsti/archive.hpp>
#include <orsti/suffix_index.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace fs = std::filesystem;

namespace {

fs::path tmp_dir() {
  static const fs::path dir = [] {
    const fs::path d = fs::temp_directory_path() / "orsti_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path tmp_file(const std::string& name, const std::string& contents) {
  const fs::path p = tmp_dir() / name;
  std::ofstream out(p, std::ios::binary);
  out << contents;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

// Runs the tool through the shell; prefix lets a test pipe bytes to stdin.
RunResult run_cli(const std::string& args, const std::string& prefix = "") {
  const fs::path out = tmp_dir() / "run_stdout.txt";
  const fs::path err = tmp_dir() / "run_stderr.txt";
  const std::string cmd = prefix + ORSTI_CLI_PATH + " " + args + " > " +
                          out.string() + " 2> " + err.string();
  const int raw = std::system(cmd.c_str());
  RunResult r;
  if (WIFEXITED(raw)) r.code = WEXITSTATUS(raw);
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::string idx_path(const std::string& name) {
  return (tmp_dir() / name).string();
}

}  // namespace

TEST_CASE("suffix archive anchors through the tool") {
  const fs::path miss = tmp_file("miss.txt", "mississippi\n");
  const RunResult built =
      run_cli("build --kind sa --input " + miss.string() + " --out " + idx_path("miss.idx"));
  REQUIRE(built.code == 0);

  const RunResult range =
      run_cli("query sa-range --pattern si --index " + idx_path("miss.idx"));
  CHECK(range.code == 0);
  CHECK(range.out == "8 9\n");

  const RunResult all =
      run_cli("query occ --pattern '' --index " + idx_path("miss.idx"));
  CHECK(all.code == 0);
  CHECK(all.out == "1\n2\n3\n4\n5\n6\n7\n8\n9\n10\n11\n");

  const RunResult occ =
      run_cli("query occ --pattern i --index " + idx_path("miss.idx"));
  CHECK(occ.out == "2\n5\n8\n11\n");

  const RunResult again =
      run_cli("query occ --pattern i --index " + idx_path("miss.idx"));
  CHECK(occ.out == again.out);

  const RunResult hex =
      run_cli("query occ --pattern 7369 --pattern-hex --index " + idx_path("miss.idx"));
  const RunResult plain =
      run_cli("query occ --pattern si --index " + idx_path("miss.idx"));
  CHECK(hex.out == plain.out);

  const RunResult locus =
      run_cli("query locus --i 2 --j 5 --index " + idx_path("miss.idx"));
  CHECK(locus.out == "3 4\n");

  const RunResult stdin_build = run_cli(
      "build --kind sa --input - --out " + idx_path("stdin.idx"), "printf mississippi | ");
  REQUIRE(stdin_build.code == 0);
  CHECK(slurp(idx_path("stdin.idx")) == slurp(idx_path("miss.idx")));
}

TEST_CASE("document archives and ranked retrieval") {
  const fs::path d1 = tmp_file("d1.txt", "abab\n");
  const fs::path d2 = tmp_file("d2.txt", "ab\n");
  const fs::path d3 = tmp_file("d3.txt", "b\n");
  const std::string inputs = " --input " + d1.string() + " --input " + d2.string() +
                             " --input " + d3.string();
  REQUIRE(run_cli("build --kind topk" + inputs + " --out " + idx_path("topk.idx")).code == 0);
  REQUIRE(run_cli("build --kind docs" + inputs + " --out " + idx_path("docs.idx")).code == 0);

  const RunResult top =
      run_cli("query topk --k 2 --pattern ab --index " + idx_path("topk.idx"));
  CHECK(top.code == 0);
  CHECK(top.out == "1 2\n2 1\n");

  const RunResult docs =
      run_cli("query docs --pattern b --index " + idx_path("docs.idx"));
  CHECK(docs.out == "1\n2\n3\n");
}

TEST_CASE("substring compression and phrase output format") {
  const fs::path aba = tmp_file("aba.txt", "abaabaabaaba");
  REQUIRE(run_cli("build --kind scq --input " + aba.string() + " --out " +
                  idx_path("aba.idx")).code == 0);

  const RunResult ilcp =
      run_cli("query ilcp --k 8 --l 4 --r 7 --index " + idx_path("aba.idx"));
  CHECK(ilcp.code == 0);
  CHECK(ilcp.out == "5 5\n");

  const RunResult parse_out =
      run_cli("query scq --i 1 --j 12 --index " + idx_path("aba.idx"));
  REQUIRE(parse_out.code == 0);
  orsti::LzParse parse;
  parse.source_length = 12;
  std::istringstream lines(parse_out.out);
  std::string f, l, c;
  while (lines >> f >> l >> c) {
    orsti::LzPhrase ph;
    ph.f = std::stoi(f);
    ph.l = std::stoi(l);
    if (c != "-") {
      ph.has_c = true;
      ph.c = static_cast<char>(std::stoi(c, nullptr, 16));
    }
    parse.phrases.push_back(ph);
  }
  CHECK(orsti::lz_decompress(parse).bytes() == "abaabaabaaba");

  REQUIRE(run_cli("build --kind lz --input " + aba.string() + " --out " +
                  idx_path("lz.idx")).code == 0);
  const RunResult pri =
      run_cli("query primary-occ --pattern aba --index " + idx_path("lz.idx"));
  CHECK(pri.out == "1\n4\n10\n");
}

TEST_CASE("remaining query families answer through archives") {
  const fs::path miss = tmp_file("miss2.txt", "mississippi\n");
  const std::string in = miss.string();

  REQUIRE(run_cli("build --kind restricted --input " + in + " --out " +
                  idx_path("res.idx")).code == 0);
  CHECK(run_cli("query pri-report --pattern ssi --i 1 --j 11 --index " +
                idx_path("res.idx")).out == "3\n6\n");
  CHECK(run_cli("query rank --pattern ssi --k 6 --index " + idx_path("res.idx")).out ==
        "2\n");
  CHECK(run_cli("query select --pattern ssi --k 2 --index " + idx_path("res.idx")).out ==
        "6\n");
  CHECK(run_cli("query select --pattern ssi --k 9 --index " + idx_path("res.idx")).out ==
        "");
  CHECK(run_cli("query successive --pattern ssi --i 4 --index " + idx_path("res.idx")).out ==
        "6\n");
  CHECK(run_cli("query nonoverlap --pattern issi --index " + idx_path("res.idx")).out ==
        "2\n");

  REQUIRE(run_cli("build --kind one-error --input " + in + " --out " +
                  idx_path("oe.idx")).code == 0);
  CHECK(run_cli("query one-error --pattern sse --index " + idx_path("oe.idx")).out ==
        "3\n6\n");
  CHECK(run_cli("query at-most-one --pattern ssi --index " + idx_path("oe.idx")).out ==
        "3\n6\n");

  REQUIRE(run_cli("build --kind gap --d 1 --input " + in + " --out " +
                  idx_path("gap.idx")).code == 0);
  CHECK(run_cli("query gap --pattern s --pattern2 s --index " + idx_path("gap.idx")).out ==
        "4\n");

  const fs::path tree = tmp_file("tree.txt", "0 0\n1 5\n1 3\n2 4\n");
  REQUIRE(run_cli("build --kind wanc --input " + tree.string() + " --out " +
                  idx_path("tree.idx")).code == 0);
  CHECK(run_cli("query wanc --leaf 4 --t 3 --index " + idx_path("tree.idx")).out == "2\n");
  CHECK(run_cli("query wanc --leaf 4 --t 9 --index " + idx_path("tree.idx")).out == "4\n");

  const fs::path pts = tmp_file("pts.txt", "1 1\n2 3\n3 2\n");
  REQUIRE(run_cli("build --kind geo --input " + pts.string() + " --out " +
                  idx_path("geo.idx")).code == 0);
  CHECK(run_cli("query geo-report --rect 1,3,1,3 --index " + idx_path("geo.idx")).out ==
        "1 1 1\n2 3 2\n3 2 3\n");
  CHECK(run_cli("query geo-report --rect 2,3,1,2 --index " + idx_path("geo.idx")).out ==
        "3 2 3\n");
}

TEST_CASE("exit codes separate input errors from usage errors") {
  const fs::path miss = tmp_file("miss3.txt", "mississippi\n");
  REQUIRE(run_cli("build --kind sa --input " + miss.string() + " --out " +
                  idx_path("sa3.idx")).code == 0);

  const fs::path empty = tmp_file("empty.txt", "");
  const RunResult empty_build =
      run_cli("build --kind sa --input " + empty.string() + " --out " + idx_path("e.idx"));
  CHECK(empty_build.code == 2);
  CHECK(empty_build.err.find("empty input") != std::string::npos);

  CHECK(run_cli("build --kind sa --input " + idx_path("absent.txt") + " --out " +
                idx_path("e.idx")).code == 2);
  CHECK(run_cli("build --kind gap --input " + miss.string() + " --out " +
                idx_path("e.idx")).code == 3);
  CHECK(run_cli("build --kind bogus --input " + miss.string() + " --out " +
                idx_path("e.idx")).code == 3);

  CHECK(run_cli("query docs --pattern a --index " + idx_path("sa3.idx")).code == 3);
  CHECK(run_cli("query bogus --index " + idx_path("sa3.idx")).code == 3);
  CHECK(run_cli("query occ --pattern zz --pattern-hex --index " + idx_path("sa3.idx")).code ==
        2);
  CHECK(run_cli("query occ --pattern a --index " + idx_path("absent.idx")).code == 2);
  CHECK(run_cli("query occ --pattern a").code == 3);
  CHECK(run_cli("query ilcp --k 1 --l 1 --index " + idx_path("sa3.idx")).code == 3);

  tmp_file("corrupt.idx", "ORSTIxxxx");
  CHECK(run_cli("query occ --pattern a --index " + idx_path("corrupt.idx")).code == 2);

  REQUIRE(run_cli("build --kind gap --d 2 --input " + miss.string() + " --out " +
                  idx_path("gap2.idx")).code == 0);
  CHECK(run_cli("query gap --pattern s --pattern2 s --d 1 --index " +
                idx_path("gap2.idx")).code == 3);
}

TEST_CASE("json mode emits one record per line") {
  using nlohmann::json;
  const fs::path miss = tmp_file("miss4.txt", "mississippi\n");
  REQUIRE(run_cli("build --kind sa --input " + miss.string() + " --out " +
                  idx_path("sa4.idx")).code == 0);

  const RunResult range =
      run_cli("query sa-range --pattern si --json --index " + idx_path("sa4.idx"));
  const json rec = json::parse(range.out);
  CHECK(rec.at("lo") == 8);
  CHECK(rec.at("hi") == 9);

  const RunResult occ =
      run_cli("query occ --pattern i --json --index " + idx_path("sa4.idx"));
  std::istringstream lines(occ.out);
  std::string line;
  std::vector<int> positions;
  while (std::getline(lines, line)) {
    positions.push_back(json::parse(line).at("pos").get<int>());
  }
  CHECK(positions == std::vector<int>{2, 5, 8, 11});
}

TEST_CASE("archive round-trip equals a fresh index and shared readers agree") {
  const std::string text = "abracadabraabracadabra";
  const fs::path file = tmp_file("abra.txt", text);
  REQUIRE(run_cli("build --kind sa --input " + file.string() + " --out " +
                  idx_path("abra.idx")).code == 0);

  const orsti::SuffixIndex fresh{orsti::Text(text)};
  for (const std::string pattern : {"a", "abra", "cad", "zz", "bra"}) {
    std::ostringstream want;
    for (const orsti::index_t p : fresh.occurrences(pattern)) want << p << '\n';
    const RunResult got =
        run_cli("query occ --pattern " + pattern + " --index " + idx_path("abra.idx"));
    CHECK(got.out == want.str());
  }

  const orsti::Archive archive = orsti::load_archive(idx_path("abra.idx"));
  const orsti::SuffixIndex shared = orsti::open_sa(archive);
  std::vector<std::vector<orsti::index_t>> results(4);
  std::vector<std::thread> readers;
  for (int w = 0; w < 4; ++w) {
    readers.emplace_back([&shared, &results, w] {
      std::vector<orsti::index_t> acc;
      for (int round = 0; round < 50; ++round) {
        const auto occ = shared.occurrences(w % 2 == 0 ? "abra" : "a");
        acc.insert(acc.end(), occ.begin(), occ.end());
      }
      results[static_cast<std::size_t>(w)] = std::move(acc);
    });
  }
  for (std::thread& th : readers) th.join();
  CHECK(results[0] == results[2]);
  CHECK(results[1] == results[3]);
  CHECK(results[0].size() == 200);
}
