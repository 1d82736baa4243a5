#!/usr/bin/env python3
"""Write every connected graph on 1..7 vertices (one per isomorphism class)
as graph6, taken from the networkx graph atlas."""

import sys

import networkx as nx


def main(path):
    count = 0
    with open(path, "w") as out:
        for g in nx.graph_atlas_g():
            if g.number_of_nodes() == 0 or not nx.is_connected(g):
                continue
            out.write(nx.to_graph6_bytes(g, header=False).decode().strip() + "\n")
            count += 1
    print(f"wrote {count} graphs to {path}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data/connected_upto7.g6")
