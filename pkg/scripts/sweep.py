#!/usr/bin/env python3
"""Randomised agreement sweep: Bezout route vs Sylvester and root oracles.

    python scripts/sweep.py --instances 1000 --max-degree 12 --seed 0
"""
import argparse
import random
import time
from collections import Counter
from dataclasses import asdict, dataclass
from fractions import Fraction

from bezout_subres import (
    Poly,
    from_power,
    make_custom_basis,
    make_newton_basis,
    make_power_basis,
    root_based_subresultant,
    subresultant_chain,
    sylvester_subresultant,
)


@dataclass
class SweepConfig:
    instances: int = 500
    max_degree: int = 12
    max_numerator: int = 9
    max_denominator: int = 4
    with_roots: bool = True
    seed: int = 0


def rational(rng, cfg, nonzero=False):
    while True:
        q = Fraction(rng.randint(-cfg.max_numerator, cfg.max_numerator),
                     rng.randint(1, cfg.max_denominator))
        if q or not nonzero:
            return q


def random_basis(rng, cfg, size):
    kind = rng.choice(["power", "newton", "custom"])
    if kind == "power":
        return make_power_basis(size)
    if kind == "newton":
        return make_newton_basis([rational(rng, cfg) for _ in range(size)])
    return make_custom_basis(
        [[1]] + [[rational(rng, cfg) for _ in range(i)] + [1] for i in range(1, size + 1)])


def run(cfg: SweepConfig) -> Counter:
    rng = random.Random(cfg.seed)
    stats = Counter()
    for _ in range(cfg.instances):
        n = rng.randint(2, cfg.max_degree)
        m = rng.randint(0, n - 1)
        if cfg.with_roots and rng.random() < 0.3:
            roots = sorted({rational(rng, cfg) for _ in range(n)})
            n = len(roots)
            m = min(m, n - 1)
            lead = rational(rng, cfg, nonzero=True)
            F = Poly.from_roots(roots, lead)
        else:
            roots = None
            F = Poly([rational(rng, cfg) for _ in range(n)] + [rational(rng, cfg, nonzero=True)])
        G = Poly([rational(rng, cfg) for _ in range(m)] + [rational(rng, cfg, nonzero=True)])
        b = random_basis(rng, cfg, n)
        chain = subresultant_chain(from_power(F, b), from_power(G, b))
        for k, S in enumerate(chain.polys):
            S = S.to_power()
            stats["checks"] += 1
            stats["sylvester_mismatch"] += S != sylvester_subresultant(F, G, k)
            if roots is not None:
                stats["root_checks"] += 1
                stats["roots_mismatch"] += S != root_based_subresultant(roots, lead, G, k)
        stats[f"gcd_degree_{next(k for k, s in enumerate(chain.principals) if s)}"] += 1
    return stats


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, value in asdict(SweepConfig()).items():
        flag = "--" + name.replace("_", "-")
        if isinstance(value, bool):
            parser.add_argument(flag, action=argparse.BooleanOptionalAction, default=value)
        else:
            parser.add_argument(flag, type=type(value), default=value)
    cfg = SweepConfig(**vars(parser.parse_args()))
    start = time.perf_counter()
    stats = run(cfg)
    print(f"config: {cfg}")
    for key in sorted(stats):
        print(f"  {key:>20}: {stats[key]}")
    print(f"elapsed: {time.perf_counter() - start:.2f}s")
    return 1 if stats["sylvester_mismatch"] or stats["roots_mismatch"] else 0


if __name__ == "__main__":
    raise SystemExit(main())
