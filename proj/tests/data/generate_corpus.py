"""Writes every graph on at most 7 vertices (one per isomorphism class) in graph6.

The graph atlas shipped with networkx is used as an independent source so the
C++ enumerator and parser can be checked against it.
"""
import networkx as nx

with open("atlas_upto7.g6", "w") as out:
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() == 0:
            continue
        out.write(nx.to_graph6_bytes(g, header=False).decode().strip() + "\n")
