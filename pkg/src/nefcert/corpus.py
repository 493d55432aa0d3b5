"""Built-in instance corpus shared by the CLI and the acceptance suite."""

from __future__ import annotations

from .configurations import Configuration, as_configuration
from .graphs import Graph, family, reduced_edge_configuration
from .linalg import IntMatrix

GRAPH_FAMILIES: tuple[tuple[str, str, tuple], ...] = (
    ("cycle3", "cycle", (3,)),
    ("cycle4", "cycle", (4,)),
    ("cycle5", "cycle", (5,)),
    ("cycle6", "cycle", (6,)),
    ("path3", "path", (3,)),
    ("path4", "path", (4,)),
    ("path5", "path", (5,)),
    ("k23", "complete_bipartite", (2, 3)),
    ("k33", "complete_bipartite", (3, 3)),
    ("bowtie", "bowtie", ()),
    ("bridged_triangles", "bridged_triangles", ()),
)

# graphs whose edge configurations enter the basis-structure criteria
UNIMODULAR_GRAPHS = ("cycle3", "cycle4", "cycle5", "cycle6",
                     "path3", "path4", "path5", "k23", "bowtie")


def corpus_graphs() -> list[tuple[str, Graph]]:
    return [(name, family(kind, params)) for name, kind, params in GRAPH_FAMILIES]


def identity_configurations(max_dim: int = 4) -> list[tuple[str, Configuration]]:
    return [(f"identity_d{d}", as_configuration(IntMatrix.identity(d)))
            for d in range(1, max_dim + 1)]


def unimodular_corpus() -> list[tuple[str, Configuration]]:
    """Identity configurations d = 1..4 plus the (row-reduced, if bipartite)
    edge configurations of the odd-cycle-condition graphs."""
    out = list(identity_configurations())
    for name, G in corpus_graphs():
        if name in UNIMODULAR_GRAPHS:
            A, _ = reduced_edge_configuration(G)
            out.append((name, A))
    return out
