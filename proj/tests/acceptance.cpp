// One line per acceptance criterion; exit status 1 if any fails.

#include <cstdio>
#include <cstring>

#include "qf2/verify.hpp"

int main(int argc, char** argv) {
  using namespace qf2::verify;
  Scale scale = Scale::full;
  if (argc > 1) {
    const auto s = parse_scale(argv[1]);
    if (!s) {
      std::fprintf(stderr, "usage: %s [small|full]\n", argv[0]);
      return 2;
    }
    scale = *s;
  }
  int failures = 0;
  const auto checks = acceptance(scale);
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const Check& c = checks[i];
    std::printf("%s criterion %zu: %s (%zu checked, %.1f s)%s%s\n", c.pass ? "PASS" : "FAIL", i + 1, c.name.c_str(),
                c.checked, c.seconds, c.detail.empty() ? "" : " - ", c.detail.c_str());
    failures += !c.pass;
  }
  return failures == 0 ? 0 : 1;
}
