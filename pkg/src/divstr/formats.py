"""Text file formats: string sets, Sigma-DAGs, 3DM families and graphs.

All formats are line based; ``#`` starts a comment and blank lines are ignored.
"""
from __future__ import annotations

from pathlib import Path

from .dag import SigmaDag, validate
from .reductions import ThreeDMInstance, UGraph
from .strings import Alphabet, InvalidInputError, StringSet, Word, word_str


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _read(path_or_text: str | Path, is_text: bool) -> str:
    return str(path_or_text) if is_text else Path(path_or_text).read_text()


def parse_words(text: str) -> tuple[Alphabet, list[Word]]:
    """String-set file body -> alphabet and strings (lengths may differ)."""
    alphabet = None
    words: list[Word] = []
    for lineno, line in _lines(text):
        parts = line.split()
        if alphabet is None:
            if parts[0] != "alphabet" or len(parts) < 2:
                raise InvalidInputError(f"line {lineno}: expected 'alphabet <tok> ...'")
            alphabet = Alphabet(tuple(parts[1:]))
            continue
        if len(parts) == 1 and parts[0] not in alphabet and alphabet.single_char:
            parts = list(parts[0])
        try:
            alphabet.encode(parts)
        except InvalidInputError as exc:
            raise InvalidInputError(f"line {lineno}: {exc}") from None
        words.append(tuple(parts))
    if alphabet is None:
        raise InvalidInputError("missing 'alphabet' header")
    return alphabet, words


def read_words(path: str | Path) -> tuple[Alphabet, list[Word]]:
    return parse_words(Path(path).read_text())


def read_string_set(path: str | Path) -> StringSet:
    alphabet, words = read_words(path)
    return StringSet(alphabet, tuple(words))


def format_words(alphabet: Alphabet, words, header: str = "") -> str:
    lines = [f"# {line}" for line in header.splitlines()]
    lines.append("alphabet " + " ".join(alphabet.symbols))
    sep = "" if alphabet.single_char else " "
    lines.extend(sep.join(w) for w in words)
    return "\n".join(lines) + "\n"


def parse_dag(text: str) -> SigmaDag:
    """Sigma-DAG file -> validated SigmaDag."""
    r = None
    alphabet = None
    ids: list[str] = []
    index: dict[str, int] = {}
    edges = []
    source = sink = None

    def vid(name, lineno):
        if name not in index:
            raise InvalidInputError(f"line {lineno}: undeclared vertex {name!r}")
        return index[name]

    for lineno, line in _lines(text):
        key, *args = line.split()
        if key == "dag" and len(args) == 1:
            r = int(args[0])
        elif key == "alphabet" and args:
            alphabet = Alphabet(tuple(args))
        elif key == "vertex" and len(args) == 1:
            if args[0] in index:
                raise InvalidInputError(f"line {lineno}: duplicate vertex {args[0]!r}")
            index[args[0]] = len(ids)
            ids.append(args[0])
        elif key == "edge" and len(args) == 3:
            if alphabet is None:
                raise InvalidInputError(f"line {lineno}: edge before alphabet")
            if args[1] not in alphabet:
                raise InvalidInputError(f"line {lineno}: label {args[1]!r} not in alphabet")
            edges.append((vid(args[0], lineno), args[1], vid(args[2], lineno)))
        elif key == "source" and len(args) == 1:
            source = vid(args[0], lineno)
        elif key == "sink" and len(args) == 1:
            sink = vid(args[0], lineno)
        else:
            raise InvalidInputError(f"line {lineno}: cannot parse {line!r}")
    if alphabet is None:
        raise InvalidInputError("missing 'alphabet' directive")
    g = SigmaDag(alphabet, ids, edges, source=source, sink=sink, r=r)
    validate(g)
    return g


def read_dag(path: str | Path) -> SigmaDag:
    return parse_dag(Path(path).read_text())


def format_dag(g: SigmaDag) -> str:
    g.require_valid()
    lines = [f"dag {g.r}", "alphabet " + " ".join(g.alphabet.symbols)]
    lines += [f"vertex {name}" for name in g.ids]
    syms = g.alphabet.symbols
    for u in range(g.n_vertices):
        for lab, v in g.out[u]:
            lines.append(f"edge {g.ids[u]} {syms[lab]} {g.ids[v]}")
    lines += [f"source {g.ids[g.source]}", f"sink {g.ids[g.sink]}"]
    return "\n".join(lines) + "\n"


def _header_n(lines, what):
    try:
        lineno, first = next(lines)
    except StopIteration:
        raise InvalidInputError(f"empty {what} file") from None
    parts = first.split()
    if len(parts) != 2 or parts[0] != "n":
        raise InvalidInputError(f"line {lineno}: expected 'n <int>'")
    return int(parts[1])


def parse_3dm(text: str) -> ThreeDMInstance:
    lines = _lines(text)
    n = _header_n(lines, "3DM")
    triples = []
    for lineno, line in lines:
        parts = line.split()
        if len(parts) != 3:
            raise InvalidInputError(f"line {lineno}: expected a triple")
        triples.append(tuple(int(p) for p in parts))
    return ThreeDMInstance(n, tuple(triples))


def format_3dm(inst: ThreeDMInstance) -> str:
    return "\n".join([f"n {inst.n}"] + [" ".join(map(str, t)) for t in inst.triples]) + "\n"


def parse_graph(text: str) -> UGraph:
    lines = _lines(text)
    n = _header_n(lines, "graph")
    edges = []
    for lineno, line in lines:
        parts = line.split()
        if len(parts) != 2:
            raise InvalidInputError(f"line {lineno}: expected an edge 'i j'")
        edges.append((int(parts[0]), int(parts[1])))
    return UGraph(n, frozenset(edges))


def format_graph(g: UGraph) -> str:
    return "\n".join([f"n {g.n}"] + [f"{u} {v}" for u, v in sorted(g.edges)]) + "\n"


def show(w) -> str:
    return word_str(w)
