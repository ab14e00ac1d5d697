"""Sweep affine families: structured m_p* and Δ against full enumeration.

Candidates are single-field families GF(p^n) with d | p^n - 1 prime to p,
e | n, and the twist condition satisfied; anything build_affine_spec rejects
is skipped.
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from twofrob.fields import InvalidFamily, build_affine_spec, structured_counts, to_permutation_group
from twofrob.formulas import m_p_star
from twofrob.graphs import delta_components
from twofrob.group import enumerate_group
from twofrob.primes import is_prime


@dataclass
class SweepConfig:
    max_k: int = 256
    max_order: int = 20_000
    primes: tuple[int, ...] = (2, 3, 5, 7, 11, 13)


def candidates(cfg: SweepConfig):
    for p in cfg.primes:
        n = 1
        while p**n <= cfg.max_k:
            q = p**n
            for d in range(3, q):
                if (q - 1) % d or not is_prime(d):
                    continue
                for e in range(2, n + 1):
                    if n % e == 0 and q * d * e <= cfg.max_order:
                        yield [(p, n)], d, e
            n += 1


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-k", type=int, default=SweepConfig.max_k)
    ap.add_argument("--max-order", type=int, default=SweepConfig.max_order)
    args = ap.parse_args()
    cfg = SweepConfig(max_k=args.max_k, max_order=args.max_order)
    mismatches = 0
    for fields, d, e in candidates(cfg):
        try:
            spec = build_affine_spec(fields, d, e)
        except InvalidFamily:
            continue
        sc = structured_counts(spec)
        t0 = time.perf_counter()
        G = enumerate_group(to_permutation_group(spec))
        brute = delta_components(G).component_count
        enum_ms = m_p_star(G, fields[0][0]) if sc.m_p_star is not None else None
        if sc.delta_component_count is None:
            print(f"{spec.describe():<36} case {sc.case_label}  no structured count  Δ brute {brute}")
            continue
        ok = brute == sc.delta_component_count and enum_ms == sc.m_p_star
        mismatches += not ok
        print(
            f"{spec.describe():<36} case {sc.case_label}  m* {sc.m_p_star}/{enum_ms}  "
            f"Δ {sc.delta_component_count}/{brute}  {time.perf_counter() - t0:.2f}s  {'ok' if ok else 'MISMATCH'}"
        )
    raise SystemExit(1 if mismatches else 0)


if __name__ == "__main__":
    main()
