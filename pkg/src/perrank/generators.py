"""Seeded instance generators for each matrix class the theorems cover.

Randomness comes from SplitMix64 so a seed reproduces the same instance on any
platform and in any language that implements the same generator.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InputError
from .matrix import Matrix
from .signed_graph import SignedGraph

MASK64 = (1 << 64) - 1

MATRIX_KINDS = ("pm1_symmetric", "nonneg_symmetric", "gram_psd")
GRAPH_KINDS = ("balanced_signed", "unbalanced_signed", "uniform_odd_parity")
KINDS = MATRIX_KINDS + GRAPH_KINDS


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, m: int) -> int:
        """Uniform integer in [0, m) by rejection (no modulo bias)."""
        if m <= 0:
            raise ValueError("below() needs m >= 1")
        limit = (1 << 64) - ((1 << 64) % m)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % m

    def randint(self, lo: int, hi: int) -> int:
        return lo + self.below(hi - lo + 1)

    def chance(self, p: Fraction) -> bool:
        """True with probability exactly p (to 2^-64 resolution)."""
        return self.next_u64() * p.denominator < p.numerator << 64

    def sign(self) -> int:
        return 1 if self.next_u64() >> 63 else -1

    def shuffled(self, items) -> list:
        out = list(items)
        for i in range(len(out) - 1, 0, -1):
            j = self.below(i + 1)
            out[i], out[j] = out[j], out[i]
        return out


@dataclass(frozen=True)
class GenConfig:
    kind: str
    n: int
    density: Fraction = Fraction(1, 2)
    seed: int = 0
    r: int | None = None  # inner dimension for gram_psd (default n)
    bound: int | None = None  # entry bound for nonneg_symmetric / gram_psd
    switching: tuple[int, ...] | None = field(default=None)  # forced D for balanced_signed

    def __post_init__(self):
        object.__setattr__(self, "density", Fraction(self.density))
        if self.kind not in KINDS:
            raise InputError(f"unknown kind {self.kind!r}; choose from {', '.join(KINDS)}")
        if self.n < 1:
            raise InputError("n must be at least 1")
        if not 0 <= self.density <= 1:
            raise InputError("density must lie in [0, 1]")
        if self.r is not None and self.r < 0:
            raise InputError("r must be nonnegative")
        if self.bound is not None and self.bound < 1:
            raise InputError("bound must be at least 1")
        if self.switching is not None:
            if len(self.switching) != self.n or any(x not in (1, -1) for x in self.switching):
                raise InputError("switching must be n entries of +1/-1")
        if self.kind == "unbalanced_signed" and self.n < 3:
            raise InputError("unbalanced_signed needs n >= 3")

    def with_seed(self, seed: int) -> "GenConfig":
        return GenConfig(self.kind, self.n, self.density, seed, self.r, self.bound, self.switching)

    @property
    def is_graph_kind(self) -> bool:
        return self.kind in GRAPH_KINDS


def generate(cfg: GenConfig) -> Matrix | SignedGraph:
    rng = SplitMix64(cfg.seed)
    return _BUILDERS[cfg.kind](cfg, rng)


def generate_matrix(cfg: GenConfig) -> Matrix:
    """Like :func:`generate` but graph kinds come back as signed adjacency matrices."""
    out = generate(cfg)
    return out.adjacency() if isinstance(out, SignedGraph) else out


def _pm1_symmetric(cfg, rng):
    n = cfg.n
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.chance(cfg.density):
                rows[i][j] = rows[j][i] = rng.sign()
    return Matrix(rows, n)


def _nonneg_symmetric(cfg, rng):
    n, bound = cfg.n, cfg.bound or 3
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            if rng.chance(cfg.density):
                rows[i][j] = rows[j][i] = rng.randint(1, bound)
    return Matrix(rows, n)


def _gram_psd(cfg, rng):
    n = cfg.n
    r = n if cfg.r is None else cfg.r
    bound = cfg.bound or 2
    g = [[rng.randint(-bound, bound) if rng.chance(cfg.density) else 0 for _ in range(r)] for _ in range(n)]
    return Matrix([[sum(a * b for a, b in zip(gi, gj)) for gj in g] for gi in g], n)


def _balanced_signed(cfg, rng):
    n = cfg.n
    d = cfg.switching if cfg.switching is not None else tuple(rng.sign() for _ in range(n))
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.chance(cfg.density):
                edges.append((i, j, d[i] * d[j]))
    return SignedGraph(n, edges)


def _unbalanced_signed(cfg, rng):
    n = cfg.n
    a, b, c = sorted(rng.shuffled(range(n))[:3])
    s1, s2 = rng.sign(), rng.sign()
    forced = {(a, b): s1, (b, c): s2, (a, c): -s1 * s2}
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if (i, j) in forced:
                edges.append((i, j, forced[(i, j)]))
            elif rng.chance(cfg.density):
                edges.append((i, j, rng.sign()))
    return SignedGraph(n, edges)


def _uniform_odd_parity(cfg, rng, max_cycle: int = 6):
    """Random cactus whose every cycle carries an odd number of negative edges.

    In a cactus each cycle is its own block, so no further cycles arise from
    combining them and the whole graph has all-negative cycle parity. The
    first block is a cycle whenever n >= 3; later blocks are cycles with
    probability ``density``, pendant edges otherwise.
    """
    n = cfg.n
    edges = []
    used = 1
    while used < n:
        attach = rng.below(used)
        remaining = n - used
        want_cycle = remaining >= 2 and (used == 1 or rng.chance(cfg.density))
        if want_cycle:
            new = rng.randint(2, min(remaining, max_cycle - 1))
            ring = [attach] + list(range(used, used + new))
            signs = [rng.sign() for _ in range(new)]
            prod = 1
            for s in signs:
                prod *= s
            signs.append(-prod)
            for k, s in enumerate(signs):
                edges.append((ring[k], ring[(k + 1) % len(ring)], s))
            used += new
        else:
            edges.append((attach, used, rng.sign()))
            used += 1
    label = rng.shuffled(range(n))
    return SignedGraph(n, [(label[u], label[v], s) for u, v, s in edges])


_BUILDERS = {
    "pm1_symmetric": _pm1_symmetric,
    "nonneg_symmetric": _nonneg_symmetric,
    "gram_psd": _gram_psd,
    "balanced_signed": _balanced_signed,
    "unbalanced_signed": _unbalanced_signed,
    "uniform_odd_parity": _uniform_odd_parity,
}

NAMED_EXAMPLES = {
    "example_gen": ((0, 1), (0, 0)),
    "matrix_B": ((0, 0, 1, -1), (0, 0, 1, 1), (1, 1, 0, 1), (-1, 1, 1, 0)),
}


def named_example(name: str) -> Matrix:
    """The two named worked matrices: ``example_gen`` (2x2) and ``matrix_B`` (4x4)."""
    try:
        return Matrix(NAMED_EXAMPLES[name])
    except KeyError:
        raise InputError(f"unknown example {name!r}; choose from {', '.join(NAMED_EXAMPLES)}") from None
