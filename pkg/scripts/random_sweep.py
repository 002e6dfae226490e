"""Tally decomposition outcomes and invariant violations over random networks."""

from __future__ import annotations

import argparse
import random
from collections import Counter
from dataclasses import dataclass, fields

from crndecomp.decomp import build_decomposition, summarize_types
from crndecomp.generate import RandomNetworkConfig, random_network, random_plndk
from crndecomp.kinetics import cf_rm, check_transform_invariants, classify_plk


@dataclass
class SweepConfig:
    seed: int = 0
    networks: int = 1000
    kinetic_systems: int = 200


def sweep(cfg: SweepConfig, net_cfg: RandomNetworkConfig) -> Counter:
    rng = random.Random(cfg.seed)
    tally: Counter = Counter()
    for _ in range(cfg.networks):
        net = random_network(rng, net_cfg)
        p, f = build_decomposition(net, "P"), build_decomposition(net, "F")
        ts = summarize_types(f)
        tally[f"F {'independent' if f.independent else 'dependent'}"] += 1
        tally[ts.overall] += 1
        if (p.independent, p.incidence_independent) != (f.independent, f.incidence_independent):
            tally["VIOLATION P/F flags"] += 1
        if not ts.all_checks_pass:
            tally["VIOLATION delta vs w_II"] += 1
    for _ in range(cfg.kinetic_systems):
        ks = random_plndk(rng, net_cfg)
        after, _ = cf_rm(ks, "ri_plus")
        inv = check_transform_invariants(ks, after)
        if classify_plk(after).kind != "PL-RDK":
            tally["VIOLATION not PL-RDK"] += 1
        if not (inv.orientation_sizes_equal and inv.reversibility_preserved):
            tally["VIOLATION ri_plus orientation"] += 1
        if inv.f_independent[0] != inv.f_independent[1]:
            tally["VIOLATION ri_plus independence"] += 1
        if inv.incidence_changed:
            tally["ri_plus incidence-independence changed"] += 1
    return tally


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    for f in fields(SweepConfig):
        ap.add_argument(f"--{f.name.replace('_', '-')}", type=int, default=f.default)
    args = ap.parse_args()
    cfg = SweepConfig(**{f.name: getattr(args, f.name) for f in fields(SweepConfig)})
    for key, count in sorted(sweep(cfg, RandomNetworkConfig()).items()):
        print(f"{key:45s} {count}")


if __name__ == "__main__":
    main()
