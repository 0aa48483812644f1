#include <cstdlib>
#include <random>

#include "allab/parallel.hpp"
#include "doctest.h"

using namespace allab;

namespace {

struct EnvGuard {
  explicit EnvGuard(const char* value) {
    if (value) {
      setenv("ALLAB_THREADS", value, 1);
    } else {
      unsetenv("ALLAB_THREADS");
    }
  }
  ~EnvGuard() { unsetenv("ALLAB_THREADS"); }
};

}  // namespace

TEST_CASE("worker_count respects ALLAB_THREADS") {
  {
    EnvGuard g("3");
    CHECK(worker_count() == 3);
  }
  {
    EnvGuard g("1");
    CHECK(worker_count() == 1);
  }
  {
    EnvGuard g("0");  // 0 = auto
    CHECK(worker_count() >= 1);
  }
  {
    EnvGuard g("junk");
    CHECK(worker_count() >= 1);
  }
  {
    EnvGuard g(nullptr);
    CHECK(worker_count() >= 1);
  }
}

TEST_CASE("find_first returns the global minimum hit under parallelism") {
  // Large enough to cross the parallel threshold; hits scattered by a seeded
  // generator so sequential and parallel scans must agree exactly.
  const std::uint64_t n = 1u << 18;
  std::mt19937_64 rng(42);
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t first_hit = rng() % n;
    const std::uint64_t stride = 1 + rng() % 977;
    auto pred = [&](std::uint64_t i) { return i >= first_hit && (i - first_hit) % stride == 0; };

    std::optional<std::uint64_t> seq, par;
    {
      EnvGuard g("1");
      seq = find_first(n, pred);
    }
    {
      EnvGuard g("4");
      par = find_first(n, pred);
    }
    REQUIRE(seq.has_value());
    CHECK(*seq == first_hit);
    REQUIRE(par.has_value());
    CHECK(*par == *seq);
  }
  EnvGuard g("4");
  CHECK_FALSE(find_first(n, [](std::uint64_t) { return false; }).has_value());
  CHECK(find_first(0, [](std::uint64_t) { return true; }) == std::nullopt);
}
