#include "pupper/harness.hpp"
#include "pupper/solver.hpp"
#include "support.hpp"

#include <doctest.h>

#include <numeric>

using namespace pupper;
using namespace pupper::testing;

namespace {

// Reconstruction written directly against the naive propagation routine.
Assignment reference_rebuild (const CnfFormula &f, const Assignment &alpha,
                              const std::vector<Var> &order) {
  PartialAssignment result = unit_propagate_naive (f, PartialAssignment (f.num_vars ()));
  for (const Var v : order) {
    if (result.assigned (v))
      continue;
    result.set (v, alpha[v]);
    result = unit_propagate_naive (f, result);
  }
  return result.to_assignment ();
}

// Loop body of the search written out from scratch: reconstruct, reset on
// every 'frequency'-th iteration, then keep a strictly better assignment.
struct ReferenceCopy {
  const CnfFormula &f;
  SolverConfig config;
  Rng rng;
  Assignment alpha, best;
  EmaState ema;
  std::uint64_t n = 0;

  ReferenceCopy (const CnfFormula &formula, SolverConfig c, std::uint64_t seed)
      : f (formula), config (c), rng (seed) {
    alpha = random_init (f.num_vars (), rng);
    best = alpha;
    ema = EmaState::from (alpha, config.rho);
  }
  std::size_t count (const Assignment &a) const { return evaluate (f, a).satisfied_count; }
  void step () {
    ++n;
    alpha = prioritized_unit_prop (f, alpha, ema, config.policy, rng);
    const bool reset = config.resetting_enabled && n % config.reset_frequency == 0;
    if (reset && !config.best_update_first)
      alpha = best;
    if (count (alpha) > count (best))
      best = alpha;
    if (reset && config.best_update_first)
      alpha = best;
  }
};

CnfFormula planted (std::size_t n, std::size_t m, std::uint64_t seed) {
  Rng rng (seed);
  return generate_planted_ksat (n, m, 3, rng).first;
}

} // namespace

TEST_CASE ("random initialization") {
  Rng rng (1);
  CHECK (random_init (0, rng).size () == 0);
  Rng a (42), b (42);
  CHECK (random_init (100, a) == random_init (100, b));
  for (const std::uint64_t seed : {1, 2, 3, 4, 5}) {
    Rng r (seed);
    const Assignment alpha = random_init (10000, r);
    std::size_t ones = 0;
    for (Var v = 1; v <= alpha.size (); v++)
      ones += alpha[v];
    CHECK (ones >= 4500);
    CHECK (ones <= 5500);
  }
}

TEST_CASE ("rebuild follows the given order") {
  const CnfFormula f = formula (2, {{-1, 2}});
  const Assignment alpha = assignment ({true, false});
  CHECK (rebuild_assignment (f, alpha, std::vector<Var>{1, 2}) == assignment ({true, true}));
  CHECK (rebuild_assignment (f, alpha, std::vector<Var>{2, 1}) == assignment ({false, false}));
}

TEST_CASE ("unit clauses of the formula are propagated before any decision") {
  const CnfFormula f = formula (2, {{1, 2}, {-1}});
  const Assignment alpha = assignment ({true, false});
  CHECK (rebuild_assignment (f, alpha, std::vector<Var>{1, 2}) == assignment ({false, true}));
  SolverConfig config;
  for (const std::uint64_t seed : {0, 1, 2, 3}) {
    config.seed = seed;
    CHECK (pupper_solve (formula (1, {{1}}), config).status == Status::satisfiable);
  }
}

TEST_CASE ("prioritized reconstruction") {
  SUBCASE ("no clauses copies the assignment") {
    const CnfFormula f (5, {});
    const Assignment alpha = assignment ({true, false, true, true, false});
    for (const auto policy : {PriorityPolicy::high_to_low, PriorityPolicy::low_to_high,
                              PriorityPolicy::random_order}) {
      EmaState ema (std::vector<double> (5, 0.5), 0.9);
      Rng rng (3);
      CHECK (prioritized_unit_prop (f, alpha, ema, policy, rng) == alpha);
    }
  }
  SUBCASE ("first iteration uses index order") {
    const CnfFormula f = formula (2, {{-1, 2}});
    const Assignment alpha = assignment ({true, false});
    EmaState ema = EmaState::from (alpha, 0.9);
    Rng rng (3);
    CHECK (prioritized_unit_prop (f, alpha, ema, PriorityPolicy::high_to_low, rng) ==
           assignment ({true, true}));
    CHECK (ema.ema == std::vector<double>{1.0, 0.0});
  }
  SUBCASE ("random order draws its permutation from the generator") {
    Rng gen (17);
    const CnfFormula f = generate_uniform_ksat (30, 120, 3, gen);
    const Assignment alpha = random_init (30, gen);
    EmaState ema (std::vector<double> (30, 0.25), 0.9);
    Rng rng (5), mirror (5);
    const Assignment result =
        prioritized_unit_prop (f, alpha, ema, PriorityPolicy::random_order, rng);
    std::vector<Var> order (30);
    std::iota (order.begin (), order.end (), Var (1));
    mirror.shuffle (std::span<Var> (order));
    CHECK (result == reference_rebuild (f, alpha, order));
    CHECK (rng == mirror);
    // The EMA is updated even though the ranking ignores it.
    for (Var v = 1; v <= 30; v++)
      CHECK (ema.ema[v - 1] == 0.25 * 0.9 + (alpha[v] ? 1.0 : 0.0) * (1 - 0.9));
  }
  SUBCASE ("length mismatch") {
    EmaState ema (std::vector<double> (2, 0.5), 0.9);
    Rng rng (1);
    CHECK_THROWS_AS (prioritized_unit_prop (running_example (), Assignment (2), ema,
                                            PriorityPolicy::high_to_low, rng),
                     std::invalid_argument);
  }
}

TEST_CASE ("reconstruction agrees with the naive reference and is total") {
  Rng rng (321);
  for (int round = 0; round < 300; round++) {
    const std::size_t n = 1 + rng.below (15);
    const CnfFormula f = random_formula (rng, n, rng.below (50), 3);
    const Assignment alpha = random_init (n, rng);
    std::vector<Var> order (n);
    std::iota (order.begin (), order.end (), Var (1));
    rng.shuffle (std::span<Var> (order));
    const Assignment fast = rebuild_assignment (f, alpha, order);
    REQUIRE (fast == reference_rebuild (f, alpha, order));
    CHECK (fast.size () == n);
  }
}

TEST_CASE ("search copy follows the reference loop exactly") {
  Rng gen (77);
  const CnfFormula f = generate_uniform_ksat (40, 180, 3, gen);
  const OccurrenceIndex index (f);
  for (const bool resetting : {true, false})
    for (const bool best_first : {false, true})
      for (const auto policy : {PriorityPolicy::high_to_low, PriorityPolicy::low_to_high,
                                PriorityPolicy::random_order}) {
        SolverConfig config;
        config.resetting_enabled = resetting;
        config.best_update_first = best_first;
        config.policy = policy;
        config.reset_frequency = 3;
        config.rho = 0.8;
        SearchCopy copy (index, config, 1234);
        ReferenceCopy reference (f, config, 1234);
        for (int i = 0; i < 40 && !copy.solved (); i++) {
          copy.step ();
          reference.step ();
          REQUIRE (copy.current () == reference.alpha);
          REQUIRE (copy.best () == reference.best);
          REQUIRE (copy.ema ().ema == reference.ema.ema);
          copy.check_invariants ();
        }
      }
}

TEST_CASE ("reset iterations discard improvements") {
  // With frequency 1 every iteration resets before the best update, so the
  // best assignment can never change.
  Rng gen (4);
  const CnfFormula f = generate_uniform_ksat (30, 140, 3, gen);
  const OccurrenceIndex index (f);
  SolverConfig config;
  config.reset_frequency = 1;
  SearchCopy copy (index, config, 9);
  const Assignment initial = copy.best ();
  for (int i = 0; i < 20; i++) {
    copy.step ();
    CHECK (copy.best () == initial);
    CHECK (copy.current () == initial);
  }
}

TEST_CASE ("single copy solve") {
  SolverConfig config;
  config.seed = 99;
  SUBCASE ("no clauses") {
    const SolveOutcome out = pupper_solve (CnfFormula (4, {}), config);
    CHECK (out.status == Status::satisfiable);
    CHECK (out.iterations_used == 0);
    Rng rng (99);
    CHECK (out.assignment == random_init (4, rng));
  }
  SUBCASE ("complementary pair exhausts the budget") {
    config.max_iterations = 100;
    const SolveOutcome out = pupper_solve (formula (1, {{1}, {-1}}), config);
    CHECK (out.status == Status::unknown);
    CHECK (out.best_count == 1);
    CHECK (out.iterations_used == 100);
    CHECK_FALSE (out.winning_copy);
  }
  SUBCASE ("planted instance") {
    const CnfFormula f = planted (20, 80, 31);
    const SolveOutcome out = pupper_solve (f, config);
    REQUIRE (out.status == Status::satisfiable);
    CHECK (evaluate (f, out.assignment).satisfied);
    CHECK (out.best_count == 80);
    CHECK (out.winning_copy == 0u);
  }
}

TEST_CASE ("one copy behaves like the single copy solver") {
  const CnfFormula f = planted (40, 170, 8);
  for (const std::uint64_t seed : {1, 2, 3}) {
    SolverConfig config;
    config.seed = seed;
    config.max_iterations = 2000;
    const SolveOutcome multi = multi_copy_solve (f, config);
    config.seed = derive_seed (seed, 0);
    CHECK (multi.same_result (pupper_solve (f, config)));
  }
}

TEST_CASE ("round robin matches independent runs") {
  // Copy i on its own would finish after t_i iterations; interleaved, the
  // winner is the copy minimizing (t_i, i) and the rounds before its last
  // one ran every copy.
  const std::size_t k = 3;
  for (std::uint64_t instance = 0; instance < 6; instance++) {
    const CnfFormula f = planted (60, 250, 100 + instance);
    SolverConfig config;
    config.seed = instance;
    config.num_copies = k;
    config.max_iterations = 300000;
    std::vector<std::uint64_t> alone (k);
    for (std::size_t i = 0; i < k; i++) {
      SolverConfig single = config;
      single.seed = derive_seed (config.seed, i);
      single.max_iterations = 100000;
      const SolveOutcome out = pupper_solve (f, single);
      alone[i] = out.status == Status::satisfiable ? out.iterations_used : UINT64_MAX;
    }
    std::size_t w = 0;
    for (std::size_t i = 1; i < k; i++)
      if (alone[i] < alone[w])
        w = i;
    REQUIRE (alone[w] != UINT64_MAX);
    const SolveOutcome out = multi_copy_solve (f, config);
    REQUIRE (out.status == Status::satisfiable);
    CHECK (out.winning_copy == w);
    const std::uint64_t expected =
        alone[w] == 0 ? 0 : (alone[w] - 1) * k + (w + 1);
    CHECK (out.iterations_used == expected);
    for (std::size_t i = 0; i < k; i++)
      CHECK (out.copy_iterations[i] ==
             (alone[w] == 0 ? 0 : (i <= w ? alone[w] : alone[w] - 1)));
  }
}

TEST_CASE ("first copy to finish wins") {
  // Found by scanning suite seeds: alone, copy 0 finishes at iteration 3 and
  // copy 1 at iteration 5.  Resets use frequency 4, since with the default 5
  // a reset discards whatever iteration 5 finds.
  Rng gen (0);
  const CnfFormula f = generate_planted_ksat (20, 80, 3, gen).first;
  SolverConfig config;
  config.reset_frequency = 4;
  config.max_iterations = 50;
  config.seed = 1596;
  for (const std::uint64_t expected : {3, 5}) {
    SolverConfig single = config;
    single.seed = derive_seed (config.seed, expected == 3 ? 0 : 1);
    const SolveOutcome alone = pupper_solve (f, single);
    REQUIRE (alone.status == Status::satisfiable);
    CHECK (alone.iterations_used == expected);
  }
  config.num_copies = 2;
  const SolveOutcome out = multi_copy_solve (f, config);
  REQUIRE (out.status == Status::satisfiable);
  CHECK (out.winning_copy == 0u);
  CHECK (out.iterations_used == 5);
  CHECK (out.iterations_used <= 6);
  CHECK (out.copy_iterations == std::vector<std::uint64_t>{3, 2});
}

TEST_CASE ("budget splitting on an unsatisfiable formula") {
  const CnfFormula f = formula (1, {{1}, {-1}});
  SolverConfig config;
  config.num_copies = 4;
  config.max_iterations = 100;
  SUBCASE ("total budget, single thread") {
    const SolveOutcome out = multi_copy_solve (f, config);
    CHECK (out.status == Status::unknown);
    CHECK (out.best_count == 1);
    CHECK (out.iterations_used == 100);
    CHECK (out.copy_iterations == std::vector<std::uint64_t> (4, 25));
  }
  SUBCASE ("uneven split") {
    config.max_iterations = 10;
    CHECK (multi_copy_solve (f, config).copy_iterations ==
           std::vector<std::uint64_t>{3, 3, 2, 2});
  }
  SUBCASE ("budget per copy") {
    config.budget_per_copy = true;
    const SolveOutcome out = multi_copy_solve (f, config);
    CHECK (out.iterations_used == 400);
    CHECK (out.copy_iterations == std::vector<std::uint64_t> (4, 100));
  }
  SUBCASE ("threads share the total budget") {
    config.threads = 4;
    const SolveOutcome out = multi_copy_solve (f, config);
    CHECK (out.status == Status::unknown);
    CHECK (out.iterations_used == 100);
  }
  SUBCASE ("threads with budget per copy") {
    config.threads = 2;
    config.budget_per_copy = true;
    const SolveOutcome out = multi_copy_solve (f, config);
    CHECK (out.copy_iterations == std::vector<std::uint64_t> (4, 100));
  }
  SUBCASE ("zero wall clock stops immediately") {
    config.wall_clock_limit = 0.0;
    const SolveOutcome out = multi_copy_solve (f, config);
    CHECK (out.status == Status::unknown);
    CHECK (out.iterations_used == 0);
  }
}

TEST_CASE ("unknown outcome reports the best copy") {
  Rng gen (12);
  const CnfFormula f = generate_uniform_ksat (30, 200, 3, gen); // ratio 6.7
  SolverConfig config;
  config.num_copies = 5;
  config.max_iterations = 200;
  const SolveOutcome out = multi_copy_solve (f, config);
  REQUIRE (out.status == Status::unknown);
  CHECK (evaluate (f, out.assignment).satisfied_count == out.best_count);
  const OccurrenceIndex index (f);
  std::size_t best = 0;
  Assignment best_assignment;
  for (std::size_t i = 0; i < 5; i++) {
    SolverConfig single = config;
    SearchCopy copy (index, single, derive_seed (config.seed, i));
    for (int s = 0; s < 40; s++)
      copy.step ();
    if (i == 0 || copy.best_count () > best) {
      best = copy.best_count ();
      best_assignment = copy.best ();
    }
  }
  CHECK (out.best_count == best);
  CHECK (out.assignment == best_assignment);
}

TEST_CASE ("threaded solve returns a valid model") {
  const CnfFormula f = planted (80, 330, 55);
  SolverConfig config;
  config.num_copies = 4;
  config.threads = 4;
  config.seed = 3;
  const SolveOutcome out = multi_copy_solve (f, config);
  REQUIRE (out.status == Status::satisfiable);
  CHECK (evaluate (f, out.assignment).satisfied);
  REQUIRE (out.winning_copy);
  CHECK (*out.winning_copy < 4);
}

TEST_CASE ("single thread runs are deterministic") {
  const CnfFormula f = planted (60, 255, 77);
  SolverConfig config;
  config.num_copies = 8;
  config.seed = 2;
  const SolveOutcome a = multi_copy_solve (f, config), b = multi_copy_solve (f, config);
  CHECK (a.same_result (b));
}

TEST_CASE ("configuration validation") {
  const CnfFormula f = running_example ();
  auto rejects = [&] (auto mutate) {
    SolverConfig config;
    mutate (config);
    CHECK_THROWS_AS (multi_copy_solve (f, config), std::invalid_argument);
  };
  rejects ([] (SolverConfig &c) { c.max_iterations = 0; });
  rejects ([] (SolverConfig &c) { c.reset_frequency = 0; });
  rejects ([] (SolverConfig &c) { c.num_copies = 0; });
  rejects ([] (SolverConfig &c) { c.threads = 0; });
  rejects ([] (SolverConfig &c) { c.rho = 1.5; });
  rejects ([] (SolverConfig &c) { c.rho = -0.1; });
}

TEST_CASE ("policy names") {
  for (const auto policy : {PriorityPolicy::high_to_low, PriorityPolicy::low_to_high,
                            PriorityPolicy::random_order})
    CHECK (parse_policy (to_string (policy)) == policy);
  CHECK (parse_policy ("high_to_low") == PriorityPolicy::high_to_low);
  CHECK_FALSE (parse_policy ("sideways"));
}
