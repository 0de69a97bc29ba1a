// Integration test for the trimat command line tool. Takes the binary path
// as argv[1], runs it against scratch files, and checks the exit-code
// contract: 0 true/success, 1 false/infeasible, 2 usage error, 3 budget.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

std::string g_binary;
std::filesystem::path g_dir;
int g_failures = 0;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

RunResult run(const std::string& args) {
  auto out_file = g_dir / "stdout.txt";
  auto err_file = g_dir / "stderr.txt";
  std::string cmd = g_binary + " " + args + " >" + out_file.string() + " 2>" + err_file.string();
  int raw = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out_file);
  r.err = slurp(err_file);
  return r;
}

void expect(bool ok, const std::string& what, const RunResult& r) {
  if (ok) return;
  ++g_failures;
  std::cerr << "FAIL: " << what << "\n  exit=" << r.exit_code << "\n  stdout: " << r.out
            << "\n  stderr: " << r.err << "\n";
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: trimat_cli_test <path-to-trimat>\n";
    return 2;
  }
  g_binary = argv[1];
  g_dir = std::filesystem::temp_directory_path() / "trimat_cli_test";
  std::filesystem::create_directories(g_dir);

  auto indep_file = g_dir / "indep.txt";
  write_file(indep_file, "3\n2 0 0\n1 1 0\n");
  auto circuit_file = g_dir / "circuit.json";
  write_file(circuit_file, R"({"n": 3, "cells": [[2,0,0],[1,1,0],[1,0,1]]})");
  auto bad_file = g_dir / "bad.txt";
  write_file(bad_file, "3\n1 1\n");

  {
    RunResult r = run("rank --n 4");
    expect(r.exit_code == 0 && r.out == "4\n", "rank of the full ground set", r);
  }
  {
    RunResult r = run("indep --n 2");
    expect(r.exit_code == 1 && contains(r.out, "false") && contains(r.out, "(0,0,0;2)") &&
               contains(r.out, "3 cells"),
           "full T_2 is dependent with the whole grid as witness", r);
  }
  {
    RunResult r = run("indep --cells " + indep_file.string());
    expect(r.exit_code == 0 && r.out == "true\n", "a two-cell set in T_3 is independent", r);
  }
  {
    RunResult r = run("closure --cells " + indep_file.string());
    expect(r.exit_code == 0 && contains(r.out, "1 0 1"), "closure picks up the third cell", r);
  }
  {
    RunResult r = run("circuit --cells " + circuit_file.string());
    expect(r.exit_code == 0 && r.out == "true\n", "the collinear triple is a circuit", r);
  }
  {
    RunResult r = run("hull --cells " + circuit_file.string());
    expect(r.exit_code == 0 && r.out == "(1,0,0;2)\n", "hull of the circuit", r);
  }
  {
    RunResult r = run("basis --cells " + circuit_file.string());
    expect(r.exit_code == 1 && contains(r.out, "false"), "a circuit is not a basis", r);
  }
  {
    RunResult r = run("flat --cells " + circuit_file.string());
    expect(r.exit_code == 0 && contains(r.out, "true") && contains(r.out, "geometric reading: no"),
           "the candidate flat splits the two readings", r);
  }
  {
    RunResult r = run("tile --cells " + indep_file.string() + " --tiles rhombus,t1");
    expect(r.exit_code == 0 && contains(r.err, "t1=1"),
           "independent holes tile with one type-1 trapezoid", r);
  }
  {
    RunResult r = run("tile --cells " + circuit_file.string() + " --tiles rhombus,t1,t2");
    expect(r.exit_code == 1 && contains(r.out, "infeasible"),
           "a size-3 circuit admits no trapezoid tiling", r);
  }
  {
    RunResult r = run("min-type2 --cells " + indep_file.string());
    expect(r.exit_code == 0 && r.out == "0\n", "independent holes need no type-2 tiles", r);
  }
  {
    RunResult r = run("annulus --n 5 --tri 1,2,1,1 --format ascii");
    int rows = 0;
    for (char ch : r.out)
      if (ch == '\n') ++rows;
    expect(r.exit_code == 0 && rows == 5 && contains(r.err, "t1=4"),
           "annulus tiling renders five rows with four trapezoids", r);
  }
  {
    RunResult r = run("enum --n 3 --kind bases");
    int rows = 0;
    for (char ch : r.out)
      if (ch == '\n') ++rows;
    expect(r.exit_code == 0 && rows == 17 && contains(r.err, "total: 17"),
           "seventeen bases at order three", r);
  }
  {
    RunResult r = run("render --cells " + circuit_file.string() + " --format svg");
    expect(r.exit_code == 0 && contains(r.out, "<svg") && contains(r.out, "class=\"hole\""),
           "region rendering emits SVG with hole polygons", r);
  }
  {
    RunResult r = run("verify --n 2 --format json-report");
    expect(r.exit_code == 0 && contains(r.out, "\"all_passed\": true") &&
               contains(r.err, "PASS"),
           "verification succeeds at order two", r);
  }
  {
    RunResult a = run("verify --n 3 --budget default --seed 7");
    std::string first = a.out;
    RunResult b = run("verify --n 3 --budget default --seed 7");
    expect(a.exit_code == 0 && b.exit_code == 0 && first == b.out && !first.empty(),
           "verification output is byte-stable", b);
  }

  // usage and input errors
  {
    RunResult r = run("frobnicate --n 3");
    expect(r.exit_code == 2, "unknown command is a usage error", r);
  }
  {
    RunResult r = run("indep");
    expect(r.exit_code == 2, "indep without a set is a usage error", r);
  }
  {
    RunResult r = run("indep --cells " + bad_file.string());
    expect(r.exit_code == 2 && contains(r.err, "line 2"),
           "malformed documents are reported with positions", r);
  }
  {
    RunResult r = run("indep --cells " + indep_file.string() + " --n 4");
    expect(r.exit_code == 2 && contains(r.err, "conflicts"), "n mismatch is refused", r);
  }
  {
    RunResult r = run("tile --n 3 --tiles rhombus,up");
    expect(r.exit_code == 2, "unsupported tile combination is a usage error", r);
  }
  {
    RunResult r = run("verify --n 3 --budget never");
    expect(r.exit_code == 2 && contains(r.err, "--budget"), "budget must be a count or default", r);
  }
  {
    RunResult r = run("enum --n 7 --kind bases --budget 1000");
    expect(r.exit_code == 3 && contains(r.err, "budget"),
           "an oversize enumeration reports budget exhaustion", r);
  }
  {
    RunResult r = run("--help");
    expect(r.exit_code == 0 && contains(r.out, "verify"), "help lists the commands", r);
  }

  if (g_failures == 0) {
    std::cout << "cli: all checks passed\n";
    return 0;
  }
  std::cerr << "cli: " << g_failures << " checks failed\n";
  return 1;
}
