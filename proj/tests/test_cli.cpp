#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(MARKOV_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string cfg(const std::string& name) { return std::string(MARKOV_CONFIGS) + "/" + name; }

std::string doubling() { return " --map " + cfg("doubling.map"); }

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Cli, ValidateMap) {
  const CliRun r = run("validate-map --map " + cfg("three_symbol.map"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("symbols 3"), std::string::npos);
  EXPECT_NE(r.out.find("1 1 0"), std::string::npos);
}

TEST(Cli, PressureOfLebesgueIsZero) {
  const CliRun r = run("pressure" + doubling() + " --potential " + cfg("lebesgue.pot"));
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string header, value;
  std::getline(in, header);
  std::getline(in, value);
  EXPECT_EQ(header, "pressure");
  EXPECT_NEAR(std::stod(value), 0.0, 1e-12);
}

TEST(Cli, SpectrumAndCriticalCsv) {
  const CliRun s = run("spectrum" + doubling() + " --potential " + cfg("bernoulli07.pot") + " --qmin -2 --qmax 2 --points 5");
  ASSERT_EQ(s.code, 0);
  EXPECT_EQ(s.out.substr(0, s.out.find('\n')), "q,eta,alpha,dim");
  EXPECT_EQ(lines(s.out), 6u);
  const CliRun c = run("critical" + doubling() + " --potential " + cfg("bernoulli07.pot"));
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(c.out.substr(0, c.out.find('\n')), "alpha_minus,alpha_max,alpha_plus,hdim");
}

TEST(Cli, StochasticOutputIsReproducible) {
  const std::string hit = "--seed 5 hitting" + doubling() + " --potential-x " + cfg("bernoulli07.pot") +
                          " --potential-y " + cfg("lebesgue.pot") + " --trials 6 --jmax 10 --nmax 20000";
  const CliRun a = run(hit), b = run(hit), c = run("--workers 1 " + hit);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
  EXPECT_EQ(lines(a.out), 1u + 6u * 7u);

  const std::string cover = "--seed 5 cover" + doubling() + " --potential " + cfg("bernoulli07.pot") +
                            " --kappa 1.3 --horizon 4096 --resolution 10 --samples 4";
  const CliRun u = run(cover), v = run("--workers 1 " + cover);
  ASSERT_EQ(u.code, 0);
  EXPECT_EQ(u.out, v.out);
  EXPECT_EQ(u.out.substr(0, u.out.find('\n')), "x_id,kappa,m,M,fraction,boxcount");
}

TEST(Cli, OutFileMatchesStdout) {
  const std::string path = ::testing::TempDir() + "cli_out.csv";
  const std::string args = "critical" + doubling() + " --potential " + cfg("bernoulli07.pot");
  const CliRun a = run(args);
  const CliRun b = run("--out " + path + " " + args);
  ASSERT_EQ(b.code, 0);
  EXPECT_TRUE(b.out.empty());
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(ss.str(), a.out);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("--help").code, 0);
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("no-such-command").code, 1);
  EXPECT_EQ(run("validate-map --map " + cfg("missing.map")).code, 1);
  EXPECT_EQ(run("pressure" + doubling() + " --potential " + cfg("three_symbol.pot")).code, 1);
  EXPECT_EQ(run("hitting" + doubling() + " --potential-x " + cfg("lebesgue.pot") + " --potential-y " +
                cfg("lebesgue.pot"))
                .code,
            1);
  // eta at q = 1000 leaves the widened bracket.
  EXPECT_EQ(run("spectrum" + doubling() + " --potential " + cfg("bernoulli07.pot") + " --qmin 1000 --qmax 1001 --points 2")
                .code,
            2);
  EXPECT_EQ(run("--seed 1 cover-growth" + doubling() + " --potential " + cfg("bernoulli07.pot") +
                " --kappa 1.4 --a 1 --b 0.5 --n 4 --l 6 --imax 8")
                .code,
            1);
}

TEST(Cli, VerifySubset) {
  const CliRun r = run("--seed 7 verify --criteria 1,2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("criterion 1"), std::string::npos);
  EXPECT_NE(r.out.find("criterion 2"), std::string::npos);
  EXPECT_EQ(lines(r.out), 2u);
}
