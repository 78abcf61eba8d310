"""Outcome and node-count statistics of the self-dual subcode search on random codes."""

import argparse
import random
import statistics
from collections import defaultdict
from dataclasses import dataclass

from framedcodes import Codeword, LinearCode, find_self_dual_subcode_wrt
from framedcodes.selfdual import search_nodes_used


@dataclass
class StatsConfig:
    samples: int = 400
    min_n: int = 8
    max_n: int = 24
    seed: int = 0
    doubly_even: bool = False


def sample(rnd: random.Random, n: int) -> tuple[LinearCode, Codeword]:
    m = rnd.randrange(2, n + 1, 2)
    beta = sum(1 << i for i in rnd.sample(range(n), m))
    k = rnd.randint(1, n)
    rows = [beta] + [rnd.getrandbits(n) & beta for _ in range(k)]
    rows = [r ^ (r & -r) if r.bit_count() & 1 else r for r in rows]
    return LinearCode(n, rows), Codeword(n, beta)


def main(cfg: StatsConfig) -> None:
    rnd = random.Random(cfg.seed)
    found: dict[int, list[int]] = defaultdict(lambda: [0, 0])
    nodes: dict[int, list[int]] = defaultdict(list)
    for _ in range(cfg.samples):
        c, beta = sample(rnd, rnd.randint(cfg.min_n, cfg.max_n))
        m = beta.weight
        ok = find_self_dual_subcode_wrt(c, beta, cfg.doubly_even) is not None
        found[m][0] += ok
        found[m][1] += 1
        nodes[m].append(search_nodes_used(c, beta, cfg.doubly_even))
    print(f"{'wt(beta)':>8} {'found':>9} {'median nodes':>13} {'max nodes':>10}")
    for m in sorted(found):
        hit, tot = found[m]
        print(f"{m:>8} {hit:>4}/{tot:<4} {statistics.median(nodes[m]):>13g} {max(nodes[m]):>10}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    for name, default in vars(StatsConfig()).items():
        if isinstance(default, bool):
            ap.add_argument(f"--{name.replace('_', '-')}", action="store_true")
        else:
            ap.add_argument(f"--{name.replace('_', '-')}", type=type(default), default=default)
    main(StatsConfig(**vars(ap.parse_args())))
