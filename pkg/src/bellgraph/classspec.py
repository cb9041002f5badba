"""Finitely defined hereditary classes ``Free(G_1, ..., G_s)``."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import FormatError, InvalidClassSpec
from .graph import Graph, contains, is_isomorphic, parse_graph


@dataclass(frozen=True)
class ClassSpec:
    """Minimal forbidden induced subgraphs of a hereditary class.

    The empty list is the class of all graphs; build it with
    :meth:`unconstrained`.
    """

    forbidden: tuple[Graph, ...]
    names: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        forbidden = tuple(self.forbidden)
        object.__setattr__(self, "forbidden", forbidden)
        names = tuple(self.names) or tuple(f"G{i + 1}" for i in range(len(forbidden)))
        if len(names) != len(forbidden):
            raise ValueError("one name per forbidden graph")
        object.__setattr__(self, "names", names)
        for i, a in enumerate(forbidden):
            for j, b in enumerate(forbidden):
                if i == j:
                    continue
                if i < j and is_isomorphic(a, b):
                    raise InvalidClassSpec(f"forbidden graphs {names[i]} and {names[j]} are isomorphic")
                if a.n <= b.n and contains(b, a):
                    raise InvalidClassSpec(
                        f"forbidden list is not an antichain: {names[i]} is induced in {names[j]}"
                    )

    @classmethod
    def of(cls, *graphs: Graph) -> "ClassSpec":
        return cls(tuple(graphs))

    @classmethod
    def unconstrained(cls) -> "ClassSpec":
        return cls(())

    @property
    def m(self) -> int:
        """Order of the largest forbidden graph (0 when nothing is forbidden)."""
        return max((g.n for g in self.forbidden), default=0)

    def admits(self, g: Graph) -> bool:
        """True iff ``g`` avoids every forbidden graph."""
        return not any(f.n <= g.n and contains(g, f) for f in self.forbidden)

    def to_text(self) -> str:
        return "".join(f"graph {name}\n{g.to_text()}" for name, g in zip(self.names, self.forbidden))


def parse_graph_blocks(text: str) -> tuple[list[str], list[Graph]]:
    """Split ``graph <name>`` blocks; each block is a graph in text format."""
    blocks: list[tuple[str, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line.startswith("graph"):
            parts = line.split(maxsplit=1)
            if parts[0] != "graph" or len(parts) != 2:
                raise FormatError(f"line {lineno}: expected 'graph <name>'")
            blocks.append((parts[1], []))
        elif not line or line.startswith("#"):
            continue
        elif not blocks:
            raise FormatError(f"line {lineno}: graph data before the first 'graph <name>' line")
        else:
            blocks[-1][1].append(line)
    graphs = []
    for name, lines in blocks:
        try:
            graphs.append(parse_graph("\n".join(lines)))
        except FormatError as exc:
            raise FormatError(f"graph {name}: {exc}") from None
    return [name for name, _ in blocks], graphs


def parse_class_spec(text: str) -> ClassSpec:
    names, graphs = parse_graph_blocks(text)
    return ClassSpec(tuple(graphs), tuple(names))


def read_class_spec(path) -> ClassSpec:
    with open(path) as fh:
        return parse_class_spec(fh.read())
