#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "cli_harness.hpp"

TEST_CASE("golden outputs") {
  for (const auto& c : cli::cases()) {
    CAPTURE(c.args);
    CHECK(cli::verify(c) == "");
  }
}

TEST_CASE("global flags work before and after the command") {
  const auto a = cli::run("--json validate catalog:K5");
  const auto b = cli::run("validate catalog:K5 --json");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  const auto q = cli::run("validate catalog:B3 --quiet");
  CHECK(q.output.find("split") == std::string::npos);
}

TEST_CASE("DOT export to a file is byte-stable") {
  const auto dir = std::filesystem::temp_directory_path();
  const std::string p1 = (dir / "declat_k5_a.dot").string();
  const std::string p2 = (dir / "declat_k5_b.dot").string();
  CHECK(cli::run("export-dot data/k5.json -o " + p1).exit_code == 0);
  CHECK(cli::run("export-dot catalog:K5 -o " + p2).exit_code == 0);
  const std::string a = cli::read_file(p1);
  CHECK(!a.empty());
  CHECK(a == cli::read_file(p2));
  CHECK(a == cli::read_file(std::string(DECLAT_TEST_DIR) + "/golden/dot_k5.dot"));
  std::remove(p1.c_str());
  std::remove(p2.c_str());
  CHECK(cli::run("export-dot catalog:K5 -o /nonexistent-dir/x.dot").exit_code == 2);
}

TEST_CASE("threaded sweep matches the serial one") {
  const auto serial = cli::run("sweep --max-n 8");
  const auto threaded = cli::run("sweep --max-n 8 --threads 4");
  CHECK(serial.exit_code == 0);
  CHECK(serial.output == threaded.output);
}
