#!/usr/bin/env python3
"""Regenerates the bundled benchmark corpus under data/corpus/.

Every instance is seeded, so rerunning the script reproduces the files
byte for byte.
"""
import pathlib
import random

import networkx as nx
import numpy as np
from scipy.spatial import Delaunay

OUT = pathlib.Path(__file__).resolve().parent.parent / "data" / "corpus"


def write_mtx(name, g, weighted):
    g = nx.convert_node_labels_to_integers(g)
    edges = sorted((max(u, v), min(u, v), d.get("weight", 1)) for u, v, d in g.edges(data=True))
    field = "integer" if weighted else "pattern"
    lines = [f"%%MatrixMarket matrix coordinate {field} symmetric",
             f"% {name}",
             f"{g.number_of_nodes()} {g.number_of_nodes()} {len(edges)}"]
    for i, j, w in edges:
        lines.append(f"{i + 1} {j + 1} {w}" if weighted else f"{i + 1} {j + 1}")
    (OUT / f"{name}.mtx").write_text("\n".join(lines) + "\n")


def largest_component(g):
    return g.subgraph(max(nx.connected_components(g), key=len)).copy()


def write_hgr(name, nv, hyperedges, weights):
    lines = [f"{len(hyperedges)} {nv}" + (" 1" if weights else "")]
    for idx, h in enumerate(hyperedges):
        pins = " ".join(str(v + 1) for v in h)
        lines.append(f"{weights[idx]} {pins}" if weights else pins)
    (OUT / f"{name}.hgr").write_text("\n".join(lines) + "\n")


def netlist(nv, ne, rng, weighted):
    """Hyperedges of 2-6 pins drawn from a sliding window, plus a chain so the
    bipartite model is connected."""
    hyperedges = [[i, i + 1] for i in range(nv - 1)]
    for _ in range(ne - len(hyperedges)):
        size = rng.randint(2, 6)
        center = rng.randrange(nv)
        window = [v for v in range(center - 12, center + 13) if 0 <= v < nv]
        hyperedges.append(sorted(rng.sample(window, min(size, len(window)))))
    rng.shuffle(hyperedges)
    weights = [rng.randint(1, 4) for _ in hyperedges] if weighted else None
    return hyperedges, weights


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    rng = random.Random(20100401)

    write_mtx("grid2d_40x40", nx.grid_2d_graph(40, 40), weighted=False)
    write_mtx("grid3d_18", nx.grid_graph(dim=[18, 18, 18]), weighted=False)

    pts = np.random.default_rng(7).random((2500, 2))
    tri = Delaunay(pts)
    mesh = nx.Graph()
    for simplex in tri.simplices:
        for a in range(3):
            for b in range(a + 1, 3):
                mesh.add_edge(int(simplex[a]), int(simplex[b]))
    write_mtx("delaunay_2500", mesh, weighted=False)

    ba = nx.barabasi_albert_graph(5000, 3, seed=11)
    write_mtx("barabasi_albert_5000", ba, weighted=False)

    ws = nx.connected_watts_strogatz_graph(4000, 6, 0.1, seed=13)
    for u, v in ws.edges():
        ws[u][v]["weight"] = rng.randint(1, 5)
    write_mtx("watts_strogatz_4000_weighted", ws, weighted=True)

    rgg = largest_component(nx.random_geometric_graph(3000, 0.04, seed=17))
    write_mtx("geometric_3000", rgg, weighted=False)

    write_hgr("netlist_800_weighted", 800, *netlist(800, 1100, rng, weighted=True))
    write_hgr("netlist_1500", 1500, *netlist(1500, 2000, rng, weighted=False))
    write_hgr("netlist_400_weighted", 400, *netlist(400, 600, rng, weighted=True))


if __name__ == "__main__":
    main()
