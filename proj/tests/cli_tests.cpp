// End-to-end checks of the command-line tool: exit-code contract, record
// round-trips through files, byte-determinism of seeded runs, and the CSV
// report shape. Runs the real binary through the shell.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void expect(bool ok, const std::string& what) {
  std::cout << (ok ? "[ok]   " : "[FAIL] ") << what << std::endl;
  if (!ok) ++g_failures;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void put(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

const fs::path kDir = "cli_scratch";

// run the tool with the given arguments, capturing stdout; returns the
// exit code (-1 when the process died abnormally)
int run(const std::string& args, const fs::path& capture = {}) {
  std::string cmd = std::string("\"") + ZPK_CLI_PATH + "\" " + args;
  if (!capture.empty())
    cmd += " > " + capture.string() + " 2> " + (kDir / "stderr.txt").string();
  else
    cmd += " > /dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

int main() {
  fs::remove_all(kDir);
  fs::create_directories(kDir);

  const std::string identity2 = R"({"p":2,"k":1,"n":2,"rows":[[1,0],[0,1]]})";
  const std::string swap2 = R"({"p":2,"k":1,"n":2,"rows":[[0,1],[1,0]]})";
  const std::string shear2 = R"({"p":2,"k":1,"n":2,"rows":[[1,1],[0,1]]})";
  put(kDir / "id.json", identity2);
  put(kDir / "swap.json", swap2);
  put(kDir / "shear.json", shear2);

  // --- exit-code contract ---------------------------------------------

  expect(run("coset-eq --m 1 --random 3 --related --seed 5") == 0,
         "equal cosets exit 0");
  // the upper shear moves the first basis vector, the identity does not;
  // no pair inside the depth-1 subgroup can intertwine them
  expect(run("coset-eq --m 1 --a " + (kDir / "id.json").string() + " --b " +
             (kDir / "shear.json").string()) == 1,
         "distinct cosets exit 1");
  put(kDir / "broken.json", "{\"p\": 2,");
  expect(run("canon --m 1 --in " + (kDir / "broken.json").string()) == 2,
         "malformed input exits 2");
  expect(run("canon --m 1 --in " + (kDir / "no_such_file.json").string()) == 2,
         "missing input file exits 2");
  expect(run("bogus-subcommand") == 2, "unknown subcommand exits 2");
  expect(run("canon --m 1 --no-such-flag") == 2, "unknown flag exits 2");
  expect(run("canon --in " + (kDir / "id.json").string()) == 2,
         "missing required option exits 2");

  const std::string theta_train =
      R"({"alpha":1,"gamma":1,"parts":[{"p":2,"k":1,"n":2,"rows":[[0,1],[1,0]]}]})";
  put(kDir / "train_a.json", theta_train);
  expect(run("stabilize --a " + (kDir / "train_a.json").string() + " --b " +
             (kDir / "train_a.json").string() + " --jmax 1") == 3,
         "unconfirmed stabilization exits 3");
  expect(run("stabilize --a " + (kDir / "train_a.json").string() + " --b " +
             (kDir / "train_a.json").string()) == 0,
         "default scan length stabilizes, exit 0");

  // --- certificate round-trip through files ----------------------------

  const fs::path cert = kDir / "cert.json";
  expect(run("canon --p 3 --k 1 --m 1 --random 4 --seed 9 --out " + cert.string(),
             kDir / "canon_stdout.json") == 0,
         "normalization of a random input exits 0");
  expect(run("verify --in " + cert.string()) == 0, "emitted certificate verifies");
  // a certificate whose product side is wrong must be rejected
  put(kDir / "bad_cert.json",
      std::string(R"({"p":2,"k":1,"m":1,"g":)") + swap2 + R"(,"q":)" + identity2 +
          R"(,"r":)" + identity2 + R"(,"out":)" + identity2 + "}");
  expect(run("verify --in " + (kDir / "bad_cert.json").string()) == 1,
         "forged certificate is rejected with exit 1");

  // --- reports ----------------------------------------------------------

  const fs::path d1 = kDir / "det1.json", d2 = kDir / "det2.json";
  expect(run("coset-eq --m 1 --random 3 --related --seed 42", d1) == 0 &&
             run("coset-eq --m 1 --random 3 --related --seed 42", d2) == 0 &&
             !slurp(d1).empty() && slurp(d1) == slurp(d2),
         "seeded runs are byte-identical");
  expect(contains(slurp(d1), "\"decision\": \"yes\"") && contains(slurp(d1), "\"witness\""),
         "equality report carries the decision and a witness");

  const fs::path dist = kDir / "dist.json";
  expect(run("coset-dist --m 1 --a " + (kDir / "swap.json").string() + " --b " +
                 (kDir / "swap.json").string() + " --method both",
             dist) == 0 &&
             contains(slurp(dist), "\"agree\": true"),
         "both distance methods agree on a coset with itself");

  put(kDir / "id9.json", R"({"p":3,"k":2,"n":2,"rows":[[1,0],[0,1]]})");
  expect(run("coset-dist --m 1 --a " + (kDir / "id9.json").string() + " --b " +
             (kDir / "id9.json").string()) == 3,
         "distance sweep past the budget exits 3");

  const fs::path orbits = kDir / "orbits.csv";
  expect(run("orbits --p 2 --k 2 --n 1 --nlo 1 --nhi 3", orbits) == 0 &&
             slurp(orbits) ==
                 "n,p,k,N,orbit_count,stabilized\n"
                 "1,2,2,1,3,true\n"
                 "1,2,2,2,3,true\n"
                 "1,2,2,3,3,true\n",
         "orbit report is the expected CSV");

  const fs::path fact = kDir / "factor.json";
  expect(run("factor --m 1 --p 2 --k 2 --random 4 --seed 3", fact) == 0 &&
             contains(slurp(fact), "\"verified\": true"),
         "factorization reports a verified product");

  const std::string left =
      R"({"alpha":1,"gamma":0,"parts":[{"p":2,"k":1,"n":2,"rows":[[0,1],[1,0]]}]})";
  const std::string right =
      R"({"alpha":0,"gamma":1,"parts":[{"p":2,"k":1,"n":2,"rows":[[1,1],[0,1]]}]})";
  put(kDir / "left.json", left);
  put(kDir / "right.json", right);
  const fs::path prod = kDir / "prod.json";
  expect(run("train-prod --a " + (kDir / "left.json").string() + " --b " +
                 (kDir / "right.json").string(),
             prod) == 0 &&
             contains(slurp(prod), "\"parts\""),
         "composable tuple cosets multiply, exit 0");
  expect(run("train-prod --a " + (kDir / "train_a.json").string() + " --b " +
             (kDir / "right.json").string()) == 2,
         "non-composable depths are a usage error, exit 2");

  expect(run("assoc-check --a " + (kDir / "train_a.json").string() + " --b " +
             (kDir / "train_a.json").string() + " --c " + (kDir / "train_a.json").string()) == 0,
         "bracketings of a composable triple agree");

  // --- built-in property suite -----------------------------------------

  expect(run("selftest") == 0, "built-in property suite passes");

  if (g_failures == 0) {
    std::cout << "cli: all checks hold" << std::endl;
    return 0;
  }
  std::cout << "cli: " << g_failures << " check(s) failed" << std::endl;
  return 1;
}
