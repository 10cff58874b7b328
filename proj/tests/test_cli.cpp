#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

const fs::path& tmp() {
  static const fs::path dir = [] {
    fs::path d(SU11_TEST_TMP);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Run run(const std::string& args) {
  const std::string cmd = std::string("\"") + SU11_CLI + "\" " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

void write(const fs::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  f << text;
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

std::string path(const std::string& name) { return "\"" + (tmp() / name).string() + "\""; }

}  // namespace

TEST_CASE("spectrum writes the table") {
  const Run r = run("spectrum --grid 1e-2:1e2:50");
  CHECK(r.code == 0);
  CHECK(lines(r.out) == 51);
  CHECK(r.out.rfind("x,x_tilde,F_quad,F_paper_u,F_paper_prop,F_derived,f_quad,f_paper\n", 0) == 0);
  const Run lin = run("spectrum --grid 1:2:3 --linear");
  CHECK(lin.code == 0);
  CHECK(lin.out.find("\n1.5,") != std::string::npos);
  CHECK(run("spectrum --grid 2:1:3").code == 2);
  CHECK(run("spectrum --grid nonsense").code == 2);
}

TEST_CASE("sample output, weights and seeds") {
  const Run a = run("sample -n 500 --seed 42");
  CHECK(a.code == 0);
  CHECK(lines(a.out) == 501);
  CHECK(a.out.rfind("omega,weight\n", 0) == 0);
  const Run e = run("sample -n 500 --seed 42 --weight exp");
  std::istringstream in(e.out);
  std::string line;
  std::getline(in, line);
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    const auto cells = split(line);
    REQUIRE(cells.size() == 2);
    const double w = std::stod(cells[1]);
    CHECK(w > 0.0);
    CHECK(w <= 1.0);
    ++rows;
  }
  CHECK(rows == 500);
  CHECK(run("sample -n 500 --seed 43").out != a.out);
  CHECK(run("sample -n 500 --seed 42").out == a.out);
  CHECK(run("sample -n 500 --weight bogus").code == 2);
  CHECK(run("sample -n 0").code == 2);
}

TEST_CASE("thread count does not change any output") {
  for (const std::string cmd : {"sample -n 20000 --weight exp", "spectrum --grid 1e-2:1e3:120",
                                "reweight --grid 1e-2:1e3:60 --weight exp", "moments -n 20000 --json"}) {
    const Run one = run(cmd + " --threads 1");
    const Run eight = run(cmd + " --threads 8");
    CHECK(one.code == 0);
    CHECK(one.out == eight.out);
    CHECK(run(cmd + " --threads 1").out == one.out);
  }
}

TEST_CASE("--out writes the same bytes as stdout") {
  const Run s = run("spectrum --grid 1:10:7");
  CHECK(run("spectrum --grid 1:10:7 --out " + path("s.csv")).code == 0);
  CHECK(slurp(tmp() / "s.csv") == s.out);
  CHECK(run("spectrum --out /nonexistent-dir/x.csv").code == 2);
}

TEST_CASE("plot renders an SVG and rejects bad tables") {
  REQUIRE(run("spectrum --grid 1e-2:1e2:40 --out " + path("p.csv")).code == 0);
  const Run svg = run("plot --in " + path("p.csv"));
  CHECK(svg.code == 0);
  CHECK(svg.out.rfind("<svg", 0) == 0);
  std::size_t polylines = 0;
  for (std::size_t pos = svg.out.find("<polyline"); pos != std::string::npos; pos = svg.out.find("<polyline", pos + 1)) {
    ++polylines;
  }
  CHECK(polylines == 1);
  CHECK(run("plot --in " + path("p.csv")).out == svg.out);

  write(tmp() / "bad.csv", "x,x_tilde,F_quad,F_paper_u,F_paper_prop,F_derived,f_quad,f_paper\n1,2,3\n");
  CHECK(run("plot --in " + path("bad.csv")).code == 2);
  write(tmp() / "empty.csv", "");
  CHECK(run("plot --in " + path("empty.csv")).code == 2);
  write(tmp() / "header_only.csv", "x,x_tilde,F_quad,F_paper_u,F_paper_prop,F_derived,f_quad,f_paper\n");
  CHECK(run("plot --in " + path("header_only.csv")).code == 2);
  CHECK(run("plot --in " + path("missing.csv")).code == 2);
  CHECK(run("plot").code == 2);
}

TEST_CASE("reweight with the uniform weight reproduces f_quad bitwise") {
  const Run s = run("spectrum --grid 1e-2:1e2:40");
  const Run w = run("reweight --grid 1e-2:1e2:40 --weight uniform");
  REQUIRE(s.code == 0);
  REQUIRE(w.code == 0);
  std::istringstream a(s.out), b(w.out);
  std::string la, lb;
  std::getline(a, la);
  std::getline(b, lb);
  CHECK(lb == "x,rho,weight,f_base,f_weighted,F_weighted");
  std::size_t rows = 0;
  while (std::getline(a, la) && std::getline(b, lb)) {
    const auto ca = split(la), cb = split(lb);
    CHECK(cb[0] == ca[0]);
    CHECK(cb[3] == ca[6]);
    CHECK(cb[4] == ca[6]);
    CHECK(cb[5] == ca[2]);
    ++rows;
  }
  CHECK(rows == 40);
  write(tmp() / "w.csv", "rho,weight\n0,1\n2,0.5\n");
  CHECK(run("reweight --grid 1:10:3 --weight-table " + path("w.csv")).code == 0);
  CHECK(run("reweight --grid 1:10:3 --weight exp --weight-table " + path("w.csv")).code == 2);
  CHECK(run("reweight --weight custom").code == 2);
}

TEST_CASE("moments JSON schema") {
  const Run r = run("moments -n 20000 --json");
  REQUIRE(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["weight"] == "uniform");
  CHECK(j["samples"] == 20000);
  CHECK(j["mean"]["quadrature"]["value"].get<double>() == doctest::Approx(16.7551608191455639).epsilon(1e-8));
  CHECK(j["mean"]["paper_claim"]["status"] == "discrepancy");
  CHECK(j["truncated_second_moment"].size() == 3);
  CHECK(j["second_moment"]["finite"] == false);
  CHECK(j["second_moment"]["strictly_increasing"] == true);
  // Keys serialise in sorted order.
  std::string prev;
  for (auto it = j.begin(); it != j.end(); ++it) {
    CHECK(it.key() > prev);
    prev = it.key();
  }
  const Run g = run("moments -n 2000 --json --weight gaussian");
  const nlohmann::json jg = nlohmann::json::parse(g.out);
  CHECK(jg["second_moment"]["finite"] == true);
  CHECK(jg["mean"]["paper_claim"].is_null());
  const Run text = run("moments -n 2000");
  CHECK(text.code == 0);
  CHECK(text.out.find("second moment divergent") != std::string::npos);
  CHECK(run("moments --cuts 10,5").code == 2);
  CHECK(run("moments --cuts 10,x").code == 2);
}

TEST_CASE("verify exit codes") {
  const Run ok = run("verify -n 20000 --trials 100");
  CHECK(ok.code == 0);
  const nlohmann::json j = nlohmann::json::parse(ok.out);
  std::size_t discrepancies = 0;
  for (const auto& [name, c] : j.items()) {
    CHECK(c["status"] != "fail");
    if (c["status"] == "discrepancy") ++discrepancies;
  }
  CHECK(discrepancies >= 2);
  const Run strict = run("verify -n 2000 --trials 10 --tol 1e-30");
  CHECK(strict.code == 2);
  const nlohmann::json js = nlohmann::json::parse(strict.out);
  std::size_t step_failures = 0;
  for (const auto& [name, c] : js.items()) {
    if (c["details"].contains("error_class") && c["details"]["error_class"] == "step_size") ++step_failures;
  }
  CHECK(step_failures > 0);
  CHECK(run("verify --fd-step -1").code == 2);
}

TEST_CASE("argument errors exit 2") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("spectrum --no-such-flag").code == 2);
  CHECK(run("sample -n abc").code == 2);
  CHECK(run("--help").code == 0);
  CHECK(run("sample --help").code == 0);
}

TEST_CASE("config files") {
  write(tmp() / "a.cfg", "# comment\nseed = 7\nn=3\ncommand=sample\n");
  const Run c = run("--config " + path("a.cfg"));
  CHECK(c.code == 0);
  CHECK(c.out == run("sample -n 3 --seed 7").out);
  // Flags win over the file.
  CHECK(run("sample --config " + path("a.cfg") + " -n 5").out == run("sample -n 5 --seed 7").out);
  CHECK(run("sample --config " + path("a.cfg") + " --seed 8").out == run("sample -n 3 --seed 8").out);
  // An explicit subcommand wins over the command key.
  write(tmp() / "b.cfg", "command=sample\ngrid=1:2:3\nlinear=true\n");
  const Run sp = run("spectrum --config " + path("b.cfg"));
  CHECK(sp.out == run("spectrum --grid 1:2:3 --linear").out);
  const Run printed = run("spectrum --config " + path("b.cfg") + " --print-config");
  CHECK(printed.out.find("grid=1:2:3\n") != std::string::npos);
  CHECK(printed.out.find("linear=true\n") != std::string::npos);

  write(tmp() / "bad_key.cfg", "frob=1\n");
  CHECK(run("sample --config " + path("bad_key.cfg")).code == 2);
  write(tmp() / "bad_line.cfg", "seed 7\n");
  CHECK(run("sample --config " + path("bad_line.cfg")).code == 2);
  write(tmp() / "bad_value.cfg", "seed=abc\n");
  CHECK(run("sample --config " + path("bad_value.cfg")).code == 2);
  write(tmp() / "bad_bool.cfg", "json=maybe\n");
  CHECK(run("moments --config " + path("bad_bool.cfg")).code == 2);
  CHECK(run("sample --config " + path("nope.cfg")).code == 2);
}
