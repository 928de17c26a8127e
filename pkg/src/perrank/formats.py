"""Plain-text file formats.

Dense matrix::

    rows cols
    a11 a12 ...
    ...

entries whitespace-separated, rationals written ``p/q``. Coordinate files use a
``%%MatrixMarket matrix coordinate <field> <symmetry>`` header with 1-based
triplets. Graph files::

    n m
    u v s        (m lines, 1-based u < v, s in {+, -, +1, -1})

Lines starting with ``#`` are comments in dense and graph files.
"""

from __future__ import annotations

import sys
from fractions import Fraction

from .errors import InputError
from .matrix import Matrix, as_scalar, format_scalar
from .signed_graph import SignedGraph

GRAPH_SUFFIXES = (".graph", ".edges", ".el")
MM_SUFFIXES = (".mtx", ".mm")
SIGN_TOKENS = {"+": 1, "-": -1, "+1": 1, "-1": -1}


def _content_lines(text: str, comment: str = "#") -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith(comment)]


def _int(tok: str, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise InputError(f"expected an integer for {what}, got {tok!r}") from None


def parse_dense(text: str) -> Matrix:
    lines = _content_lines(text)
    if not lines:
        raise InputError("empty matrix file")
    header = lines[0].split()
    if len(header) != 2:
        raise InputError(f"dense header must be 'rows cols', got {lines[0]!r}")
    nrows, ncols = _int(header[0], "rows"), _int(header[1], "cols")
    if nrows < 0 or ncols < 0:
        raise InputError("dimensions must be nonnegative")
    tokens = " ".join(lines[1:]).split()
    if len(tokens) != nrows * ncols:
        raise InputError(f"header declares {nrows}x{ncols} = {nrows * ncols} entries, found {len(tokens)}")
    return Matrix.from_flat(nrows, ncols, [as_scalar(t) for t in tokens])


def parse_matrix_market(text: str) -> Matrix:
    raw = [ln.strip() for ln in text.splitlines()]
    if not raw or not raw[0].lower().startswith("%%matrixmarket"):
        raise InputError("missing %%MatrixMarket header")
    head = raw[0].split()
    if len(head) != 5 or head[1].lower() != "matrix" or head[2].lower() != "coordinate":
        raise InputError(f"unsupported MatrixMarket header {raw[0]!r}")
    field, symmetry = head[3].lower(), head[4].lower()
    if field not in ("integer", "real", "rational", "pattern"):
        raise InputError(f"unsupported MatrixMarket field {field!r}")
    if symmetry not in ("general", "symmetric", "skew-symmetric"):
        raise InputError(f"unsupported MatrixMarket symmetry {symmetry!r}")
    body = [ln for ln in raw[1:] if ln and not ln.startswith("%")]
    if not body:
        raise InputError("missing size line")
    size = body[0].split()
    if len(size) != 3:
        raise InputError(f"size line must be 'rows cols nnz', got {body[0]!r}")
    nrows, ncols, nnz = (_int(t, "size") for t in size)
    if len(body) - 1 != nnz:
        raise InputError(f"size line declares {nnz} entries, found {len(body) - 1}")
    if symmetry != "general" and nrows != ncols:
        raise InputError("symmetric storage needs a square matrix")
    rows = [[Fraction(0)] * ncols for _ in range(nrows)]
    seen = set()
    for ln in body[1:]:
        toks = ln.split()
        want = 2 if field == "pattern" else 3
        if len(toks) != want:
            raise InputError(f"bad coordinate line {ln!r}")
        i, j = _int(toks[0], "row") - 1, _int(toks[1], "col") - 1
        if not (0 <= i < nrows and 0 <= j < ncols):
            raise InputError(f"coordinate ({i + 1}, {j + 1}) out of range")
        if (i, j) in seen:
            raise InputError(f"duplicate coordinate ({i + 1}, {j + 1})")
        seen.add((i, j))
        v = Fraction(1) if field == "pattern" else as_scalar(toks[2])
        if field == "integer" and v.denominator != 1:
            raise InputError(f"non-integer value {toks[2]!r} in an integer file")
        rows[i][j] = v
        if symmetry == "symmetric" and i != j:
            rows[j][i] = v
        elif symmetry == "skew-symmetric":
            if i == j:
                raise InputError("skew-symmetric files cannot store diagonal entries")
            rows[j][i] = -v
    return Matrix(rows, ncols)


def parse_graph(text: str) -> SignedGraph:
    lines = _content_lines(text)
    if not lines:
        raise InputError("empty graph file")
    header = lines[0].split()
    if len(header) != 2:
        raise InputError(f"graph header must be 'n m', got {lines[0]!r}")
    n, m = _int(header[0], "n"), _int(header[1], "m")
    if len(lines) - 1 != m:
        raise InputError(f"header declares {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        toks = ln.split()
        if len(toks) != 3:
            raise InputError(f"edge line must be 'u v s', got {ln!r}")
        u, v = _int(toks[0], "u"), _int(toks[1], "v")
        if not 1 <= u < v <= n:
            raise InputError(f"edge {u} {v}: need 1 <= u < v <= n")
        if toks[2] not in SIGN_TOKENS:
            raise InputError(f"edge sign must be one of + - +1 -1, got {toks[2]!r}")
        edges.append((u - 1, v - 1, SIGN_TOKENS[toks[2]]))
    return SignedGraph(n, edges)


def detect_format(path: str, text: str) -> str:
    low = path.lower()
    if low.endswith(GRAPH_SUFFIXES):
        return "graph"
    if low.endswith(MM_SUFFIXES) or text.lstrip().lower().startswith("%%matrixmarket"):
        return "mm"
    lines = _content_lines(text)
    if len(lines) > 1 and any(ln.split()[-1] in ("+", "-") for ln in lines[1:]):
        return "graph"
    return "dense"


def read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def load(path: str, fmt: str = "auto") -> Matrix | SignedGraph:
    """Read a matrix or signed graph, sniffing the format when ``fmt`` is auto."""
    text = read_text(path)
    if fmt == "auto":
        fmt = detect_format(path, text)
    if fmt == "graph":
        return parse_graph(text)
    if fmt == "mm":
        return parse_matrix_market(text)
    if fmt == "dense":
        return parse_dense(text)
    raise InputError(f"unknown format {fmt!r}")


def load_matrix(path: str, fmt: str = "auto") -> Matrix:
    obj = load(path, fmt)
    return obj.adjacency() if isinstance(obj, SignedGraph) else obj


def load_graph(path: str, fmt: str = "auto"):
    from .signed_graph import graph_from_matrix

    obj = load(path, fmt)
    return obj if isinstance(obj, SignedGraph) else graph_from_matrix(obj)


def dump_dense(a: Matrix) -> str:
    lines = [f"{a.nrows} {a.ncols}"]
    lines += [" ".join(format_scalar(v) for v in row) for row in a.rows()]
    return "\n".join(lines) + "\n"


def dump_graph(g: SignedGraph) -> str:
    edges = g.sorted_edges()
    lines = [f"{g.n} {len(edges)}"]
    lines += [f"{u + 1} {v + 1} {'+' if s > 0 else '-'}" for u, v, s in edges]
    return "\n".join(lines) + "\n"


def dump(obj) -> str:
    return dump_graph(obj) if isinstance(obj, SignedGraph) else dump_dense(obj)


def save(obj, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump(obj))


def default_suffix(obj) -> str:
    return ".graph" if isinstance(obj, SignedGraph) else ".txt"


__all__ = [
    "parse_dense", "parse_matrix_market", "parse_graph", "detect_format", "load", "load_matrix",
    "load_graph", "dump_dense", "dump_graph", "dump", "save", "default_suffix",
]
