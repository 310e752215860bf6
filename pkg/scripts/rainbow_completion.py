#!/usr/bin/env python3
"""Which minimal trees can be completed to chromatic number l with only
(l-1)(l-2)/2 extra edges?

For each cluster on a small grid this compares the Type-I tree, the Type-II
tree and the greedy path-type tree, reporting whether each contains a
connected subgraph hitting every colour exactly once.
"""

from __future__ import annotations

import argparse

from chroma.embodiment import has_rainbow_connected_subgraph, path_type_tree, type1_tree, type2_tree
from chroma.errors import ChromaError
from chroma.generators import cluster_grid


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--l-max", type=int, default=4)
    ap.add_argument("--size-max", type=int, default=4)
    args = ap.parse_args()

    print("cluster      type1 type2 path")
    no_rainbow = 0
    for c in cluster_grid(3, args.l_max, args.size_max):
        try:
            path = "yes" if has_rainbow_connected_subgraph(path_type_tree(c)) else "no"
        except ChromaError:
            path = "-"
        no_rainbow += path == "no"
        t1 = "yes" if has_rainbow_connected_subgraph(type1_tree(c)) else "no"
        t2 = "yes" if has_rainbow_connected_subgraph(type2_tree(c)) else "no"
        print(f"{','.join(map(str, c.sizes)):<12} {t1:>5} {t2:>5} {path:>4}")
    print(f"\npath-type trees without a rainbow subgraph: {no_rainbow}")


if __name__ == "__main__":
    main()
