"""Survey futility rates over random permutation groups.

Generates seeded random groups, runs all three futility tests on every
enumerated base pair, and reports per-degree futile fractions, shape
counts, and per-method timings. Any disagreement between methods aborts
the run; zero disagreements is the expected state.

Usage:
    python3 scripts/futility_survey.py --groups 200 --seed 7
    python3 scripts/futility_survey.py --json
"""

import argparse
import json
import random
import sys
import time
from collections import Counter
from dataclasses import asdict, dataclass

from orbgraph.futility import is_futile_fast, is_futile_oracle, is_futile_structural
from orbgraph.orbital import build_orbital_graph, enumerate_base_pairs, is_self_paired
from orbgraph.perm import Permutation, PermGroup


@dataclass(frozen=True)
class SurveyConfig:
    groups: int = 200
    min_degree: int = 4
    max_degree: int = 9
    max_generators: int = 3
    seed: int = 99


def random_group(rng: random.Random, cfg: SurveyConfig) -> PermGroup:
    degree = rng.randint(cfg.min_degree, cfg.max_degree)
    gens = []
    for _ in range(rng.randint(1, cfg.max_generators)):
        images = list(range(1, degree + 1))
        rng.shuffle(images)
        gens.append(Permutation(images))
    return PermGroup(degree, tuple(gens))


@dataclass
class DegreeStats:
    groups: int = 0
    pairs: int = 0
    futile: int = 0
    self_paired: int = 0


def run_survey(cfg: SurveyConfig):
    rng = random.Random(cfg.seed)
    per_degree = {d: DegreeStats() for d in range(cfg.min_degree, cfg.max_degree + 1)}
    shapes = Counter()
    timings = {"fast": 0.0, "structural": 0.0, "oracle": 0.0}

    for _ in range(cfg.groups):
        group = random_group(rng, cfg)
        stats = per_degree[group.degree]
        stats.groups += 1
        for alpha, beta in enumerate_base_pairs(group):
            stats.pairs += 1

            t0 = time.perf_counter()
            fast = is_futile_fast(group, alpha, beta)
            t1 = time.perf_counter()
            graph = build_orbital_graph(group, alpha, beta)
            verdict = is_futile_structural(graph, group)
            t2 = time.perf_counter()
            oracle = is_futile_oracle(graph, group)
            t3 = time.perf_counter()

            timings["fast"] += t1 - t0
            timings["structural"] += t2 - t1
            timings["oracle"] += t3 - t2

            if not (fast == verdict.futile == oracle):
                sys.exit(
                    f"method disagreement at degree {group.degree}, "
                    f"pair ({alpha},{beta}), generators "
                    f"{[g.cycle_string() for g in group.generators]}"
                )
            if fast:
                stats.futile += 1
            shapes[verdict.shape] += 1
            if is_self_paired(graph):
                stats.self_paired += 1

    return per_degree, shapes, timings


def report(cfg: SurveyConfig, per_degree, shapes, timings) -> None:
    print(f"surveyed {cfg.groups} groups, seed {cfg.seed}")
    print(f"{'degree':<8}{'groups':>7}{'pairs':>7}{'futile':>8}{'fraction':>10}{'self-paired':>13}")
    for degree, s in sorted(per_degree.items()):
        if s.groups == 0:
            continue
        frac = s.futile / s.pairs if s.pairs else 0.0
        print(
            f"{degree:<8}{s.groups:>7}{s.pairs:>7}{s.futile:>8}"
            f"{frac:>10.3f}{s.self_paired:>13}"
        )
    total_pairs = sum(s.pairs for s in per_degree.values())
    print(f"shapes over {total_pairs} pairs: "
          + ", ".join(f"{k} {v}" for k, v in shapes.most_common()))
    for method, secs in timings.items():
        print(f"{method:<12} {secs:.3f}s total, {1e6 * secs / total_pairs:.1f}us/pair")
    print("all three methods agreed on every pair")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    defaults = SurveyConfig()
    parser.add_argument("--groups", type=int, default=defaults.groups)
    parser.add_argument("--seed", type=int, default=defaults.seed)
    parser.add_argument("--min-degree", type=int, default=defaults.min_degree)
    parser.add_argument("--max-degree", type=int, default=defaults.max_degree)
    parser.add_argument("--max-generators", type=int, default=defaults.max_generators)
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    args = parser.parse_args(argv)

    cfg = SurveyConfig(
        groups=args.groups,
        min_degree=args.min_degree,
        max_degree=args.max_degree,
        max_generators=args.max_generators,
        seed=args.seed,
    )
    if cfg.min_degree < 2 or cfg.max_degree < cfg.min_degree:
        parser.error("need 2 <= min-degree <= max-degree")

    per_degree, shapes, timings = run_survey(cfg)
    if args.json:
        payload = {
            "config": asdict(cfg),
            "per_degree": {
                str(d): vars(s) for d, s in sorted(per_degree.items()) if s.groups
            },
            "shapes": dict(shapes),
            "timings_seconds": timings,
        }
        print(json.dumps(payload, indent=2))
    else:
        report(cfg, per_degree, shapes, timings)
    return 0


if __name__ == "__main__":
    sys.exit(main())
