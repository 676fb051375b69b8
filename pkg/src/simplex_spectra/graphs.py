"""Finite graphs with a fixed vertex ordering, graph6 I/O, and generators.

Every graph carries the total ordering 0 < 1 < ... < n-1 on its vertices.
All sign computations downstream (coboundary matrices, cycle vectors) are
taken relative to this ordering, so generators fix a deterministic order:
label-lexicographic for the combinatorial families, the format order for
graph6 input.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

#: Generators refuse outputs beyond this many vertices unless overridden.
DEFAULT_MAX_VERTICES = 5000


class GraphSizeError(ValueError):
    """A generator was asked for a graph beyond the configured size cap."""


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position at fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class Graph:
    """Undirected simple graph on vertices 0..n-1, immutable after creation.

    ``labels``, when given, are human-readable names (unique, one per
    vertex); they never affect adjacency or ordering.
    """

    __slots__ = ("n", "_adj", "_masks", "labels")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (),
                 labels: Optional[Sequence[str]] = None):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj = tuple(frozenset(s) for s in adj)
        self._masks = tuple(sum(1 << w for w in s) for s in adj)
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n or len(set(labels)) != n:
                raise ValueError("labels must be unique and count n")
        self.labels = labels

    def neighbors(self, v: int) -> frozenset:
        return self._adj[v]

    def neighbor_mask(self, v: int) -> int:
        """Neighbors of v as a bitmask (bit w set iff v ~ w)."""
        return self._masks[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges (u, v) with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in sorted(self._adj[u]) if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(s) for s in self._adj) // 2

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            for w in self._adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def num_components(self) -> int:
        seen = set()
        count = 0
        for s in range(self.n):
            if s in seen:
                continue
            count += 1
            stack = [s]
            seen.add(s)
            while stack:
                for w in self._adj[stack.pop()]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
        return count

    def relabeled(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex v renamed perm[v] (same edge set up to renaming)."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        edges = [(perm[u], perm[v]) for u, v in self.edges()]
        return Graph(self.n, edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    __hash__ = None

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"


@dataclass(frozen=True)
class SrgParams:
    """Strong regularity parameters (v, k, lambda, mu)."""

    v: int
    k: int
    lam: int
    mu: int

    def __post_init__(self):
        if min(self.v, self.k, self.lam, self.mu) < 0:
            raise ValueError("parameters must be nonnegative")
        if self.k * (self.k - self.lam - 1) != (self.v - self.k - 1) * self.mu:
            raise ValueError(f"infeasible SRG parameters {self.as_tuple()}")

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.v, self.k, self.lam, self.mu)

    @property
    def is_conference(self) -> bool:
        v = self.v
        return (self.k * 2 == v - 1 and self.lam * 4 == v - 5 and self.mu * 4 == v - 1)


@dataclass(frozen=True)
class PointLineGeometry:
    """A point-line incidence structure together with its collinearity graph.

    Every line induces a clique in ``graph`` and any two points lie on at
    most one line; both are checked at construction.
    """

    graph: Graph
    lines: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen_pairs = set()
        for line in self.lines:
            for a, b in itertools.combinations(line, 2):
                if not self.graph.has_edge(a, b):
                    raise ValueError(f"line {line} is not a clique")
                if (a, b) in seen_pairs:
                    raise ValueError(f"points {a},{b} lie on two lines")
                seen_pairs.add((a, b))

    def lines_through(self, p: int) -> list[tuple[int, ...]]:
        return [line for line in self.lines if p in line]


# ---------------------------------------------------------------------------
# graph6 (McKay's format)
# ---------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (short or long size header).

    Raises Graph6Error with the offending byte offset on malformed input.
    """
    if text.startswith(_G6_HEADER):
        text = text[len(_G6_HEADER):]
    data = text.strip()
    if not data:
        raise Graph6Error("empty graph6 string", 0)
    vals = []
    for off, ch in enumerate(data):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise Graph6Error(f"character {ch!r} outside 63..126", off)
        vals.append(c - 63)
    if vals[0] < 63:
        n = vals[0]
        body_start = 1
    else:
        if len(vals) >= 2 and vals[1] == 63:
            raise Graph6Error("graphs beyond 258047 vertices unsupported", 1)
        if len(vals) < 4:
            raise Graph6Error("truncated long size header", len(vals))
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        if not 63 <= n <= 258047:
            raise Graph6Error(f"long header value {n} out of range", 1)
        body_start = 4
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    have = len(vals) - body_start
    if have < need:
        raise Graph6Error(f"body too short: {have} chars, need {need}", len(data))
    if have > need:
        raise Graph6Error(f"body too long: {have} chars, need {need}", body_start + need)
    # Upper-triangle bits run column-major: (0,1),(0,2),(1,2),(0,3),...
    pair_iter = ((i, j) for j in range(1, n) for i in range(j))
    edges = []
    for k in range(need):
        group = vals[body_start + k]
        for b in range(6):
            bit = (group >> (5 - b)) & 1
            if 6 * k + b < nbits:
                ij = next(pair_iter)
                if bit:
                    edges.append(ij)
            elif bit:
                raise Graph6Error("nonzero padding bits", body_start + k)
    return Graph(n, edges)


def write_graph6(g: Graph) -> str:
    """Encode a graph in canonical graph6 (zero padding, minimal header)."""
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    elif n <= 258047:
        out = [chr(126), chr(63 + (n >> 12)), chr(63 + ((n >> 6) & 63)), chr(63 + (n & 63))]
    else:
        raise ValueError("write_graph6 supports at most 258047 vertices")
    bits = 0
    nbits = 0
    for j in range(1, n):
        mask = g.neighbor_mask(j)
        for i in range(j):
            bits = (bits << 1) | ((mask >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(bits + 63))
                bits = nbits = 0
    if nbits:
        out.append(chr((bits << (6 - nbits)) + 63))
    return "".join(out)


def read_graph6_file(path: str) -> list[Graph]:
    """Read one graph6 string per line, skipping blanks and '>' header lines."""
    graphs = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith(">"):
                continue
            graphs.append(parse_graph6(line))
    return graphs


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------

def _check_size(n: int, max_vertices: int):
    if n > max_vertices:
        raise GraphSizeError(f"generator output has {n} vertices, cap is {max_vertices}")


def complete_graph(n: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    _check_size(n, max_vertices)
    return Graph(n, itertools.combinations(range(n), 2))


def cycle_graph(n: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    _check_size(n, max_vertices)
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    _check_size(n, max_vertices)
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def triangular_graph(n: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    """Line graph of K_n: vertices are the 2-subsets of {1..n} in lex order,
    adjacent when the subsets share one element."""
    if n < 2:
        raise ValueError("triangular graph needs n >= 2")
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    _check_size(len(pairs), max_vertices)
    edges = [(a, b) for a, b in itertools.combinations(range(len(pairs)), 2)
             if len(set(pairs[a]) & set(pairs[b])) == 1]
    labels = ["{%d,%d}" % p for p in pairs]
    return Graph(len(pairs), edges, labels)


def pair_vertex_index(n: int, i: int, j: int) -> int:
    """Vertex id of the 2-subset {i, j} of {1..n} under the lex ordering
    used by triangular_graph."""
    if not (1 <= i <= n and 1 <= j <= n and i != j):
        raise ValueError(f"need distinct i,j in 1..{n}")
    if i > j:
        i, j = j, i
    # pairs (1,2),(1,3),...,(1,n),(2,3),... ; block for first element i
    return (i - 1) * n - i * (i - 1) // 2 + (j - i) - 1


def hamming_graph(d: int, a: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    """Words of length d over an a-letter alphabet, adjacent when they differ
    in exactly one coordinate.  Vertices in lex order of the words."""
    if d < 1 or a < 1:
        raise ValueError("need word length >= 1 and alphabet size >= 1")
    n = a ** d
    _check_size(n, max_vertices)
    words = list(itertools.product(range(a), repeat=d))
    widx = {w: i for i, w in enumerate(words)}
    edges = []
    for w in words:
        for pos in range(d):
            for c in range(w[pos] + 1, a):
                edges.append((widx[w], widx[w[:pos] + (c,) + w[pos + 1:]]))
    labels = ["".join(map(str, w)) if a <= 10 else str(w) for w in words]
    return Graph(n, edges, labels)


def kneser_graph(n: int, t: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    """t-subsets of {1..n} in lex order, adjacent iff disjoint."""
    if not n >= 2 * t >= 2:
        raise ValueError("kneser graph needs n >= 2t >= 2")
    subsets = list(itertools.combinations(range(1, n + 1), t))
    _check_size(len(subsets), max_vertices)
    edges = [(i, j) for i, j in itertools.combinations(range(len(subsets)), 2)
             if not set(subsets[i]) & set(subsets[j])]
    labels = ["{" + ",".join(map(str, s)) + "}" for s in subsets]
    return Graph(len(subsets), edges, labels)


#: Irreducible polynomials (ascending coefficients, monic implied) for the
#: supported prime-power Paley fields.
_FIELD_TABLES = {
    9: (3, (1, 0)),        # x^2 + 1 over GF(3)
    25: (5, (2, 1)),       # x^2 + x + 2 over GF(5)
    49: (7, (3, 1)),       # x^2 + x + 3 over GF(7)
    81: (3, (2, 1, 0, 0)),  # x^4 + x + 2 over GF(3)
}


def _field_elements(p: int, reduction: tuple[int, ...]):
    """Elements and multiplication for GF(p^deg) as coefficient tuples."""
    deg = len(reduction)
    elements = list(itertools.product(range(p), repeat=deg))

    def mul(x, y):
        prod = [0] * (2 * deg - 1)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    prod[i + j] = (prod[i + j] + xi * yj) % p
        for k in range(2 * deg - 2, deg - 1, -1):
            c = prod[k]
            if c:
                prod[k] = 0
                for j, rj in enumerate(reduction):
                    prod[k - deg + j] = (prod[k - deg + j] - c * rj) % p
        return tuple(prod[:deg])

    return elements, mul


def paley_graph(q: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    """Elements of GF(q) with x ~ y iff x - y is a nonzero square; q must be
    1 mod 4 and either prime or one of the built-in prime powers."""
    if q % 4 != 1:
        raise ValueError("paley graph needs q = 1 (mod 4)")
    _check_size(q, max_vertices)
    if _is_prime(q):
        squares = {x * x % q for x in range(1, q)}
        edges = [(x, y) for x, y in itertools.combinations(range(q), 2)
                 if (y - x) % q in squares]
        return Graph(q, edges, [str(x) for x in range(q)])
    if q not in _FIELD_TABLES:
        raise ValueError(f"paley graph over q={q} unsupported (primes and {sorted(_FIELD_TABLES)})")
    p, reduction = _FIELD_TABLES[q]
    elements, mul = _field_elements(p, reduction)
    squares = {mul(x, x) for x in elements if any(x)}
    eidx = {e: i for i, e in enumerate(elements)}
    edges = []
    for x, y in itertools.combinations(elements, 2):
        diff = tuple((a - b) % p for a, b in zip(y, x))
        if diff in squares:
            edges.append((eidx[x], eidx[y]))
    labels = [str(e) for e in elements]
    return Graph(q, edges, labels)


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    for w in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if m % w == 0:
            return m == w
        if m < w * w:
            return True
    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def _projective_points(dim: int, q: int) -> list[tuple[int, ...]]:
    """Projective points of GF(q)^dim, normalized so the first nonzero
    coordinate is 1, sorted lexicographically."""
    pts = set()
    for v in itertools.product(range(q), repeat=dim):
        if not any(v):
            continue
        lead = next(c for c in v if c)
        inv = pow(lead, q - 2, q)
        pts.add(tuple(c * inv % q for c in v))
    return sorted(pts)


def _symplectic_form(x, y, q: int) -> int:
    s = 0
    for i in range(0, len(x), 2):
        s += x[i] * y[i + 1] - x[i + 1] * y[i]
    return s % q


def symplectic_graph(r: int, q: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    """Projective points of a 2r-dimensional symplectic space over GF(q),
    adjacent iff the alternating form is nonzero on representatives."""
    if r < 2:
        raise ValueError("symplectic graph needs r >= 2")
    if not _is_prime(q):
        raise ValueError("symplectic graph needs q prime")
    n = (q ** (2 * r) - 1) // (q - 1)
    _check_size(n, max_vertices)
    pts = _projective_points(2 * r, q)
    edges = [(i, j) for i, j in itertools.combinations(range(n), 2)
             if _symplectic_form(pts[i], pts[j], q) != 0]
    labels = [":".join(map(str, p)) for p in pts]
    return Graph(n, edges, labels)


def gq_w3_geometry(q: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> PointLineGeometry:
    """The symplectic generalized quadrangle of order (q, q): projective
    points of a 4-dimensional symplectic space, lines the totally isotropic
    2-subspaces.  Construction verifies that every triangle of the point
    graph lies in exactly one line."""
    if not _is_prime(q) or q > 5:
        raise ValueError("supported field sizes: q prime, q <= 5")
    pts = _projective_points(4, q)
    n = len(pts)
    _check_size(n, max_vertices)
    pidx = {p: i for i, p in enumerate(pts)}
    edges = [(i, j) for i, j in itertools.combinations(range(n), 2)
             if _symplectic_form(pts[i], pts[j], q) == 0]
    labels = [":".join(map(str, p)) for p in pts]
    graph = Graph(n, edges, labels)
    lines = set()
    for i, j in edges:
        x, y = pts[i], pts[j]
        line = {j}
        for a in range(q):
            z = tuple((a * xc + yc) % q for xc, yc in zip(x, y))
            lead = next(c for c in z if c)
            inv = pow(lead, q - 2, q)
            line.add(pidx[tuple(c * inv % q for c in z)])
        line.add(i)
        lines.add(tuple(sorted(line)))
    geometry = PointLineGeometry(graph, tuple(sorted(lines)))
    _verify_unique_lines(geometry)
    return geometry


def _verify_unique_lines(geom: PointLineGeometry):
    """Every 3-clique of the point graph must lie in exactly one line."""
    g = geom.graph
    line_sets = [frozenset(l) for l in geom.lines]
    for a in range(g.n):
        na = g.neighbor_mask(a)
        for b in sorted(g.neighbors(a)):
            if b <= a:
                continue
            common = na & g.neighbor_mask(b)
            c = common >> (b + 1)
            v = b + 1
            while c:
                if c & 1:
                    hits = sum(1 for ls in line_sets if {a, b, v} <= ls)
                    if hits != 1:
                        raise ValueError(f"triangle {(a, b, v)} lies on {hits} lines")
                c >>= 1
                v += 1


def srg_parameters(g: Graph) -> Optional[SrgParams]:
    """Strong regularity parameters, or None when the graph is not strongly
    regular (complete and empty graphs also return None)."""
    n = g.n
    if n < 2:
        return None
    k = g.degree(0)
    if any(g.degree(v) != k for v in range(1, n)):
        return None
    lam = mu = None
    for u in range(n):
        mu_u = g.neighbor_mask(u)
        for v in range(u + 1, n):
            common = (mu_u & g.neighbor_mask(v)).bit_count()
            if g.has_edge(u, v):
                if lam is None:
                    lam = common
                elif lam != common:
                    return None
            else:
                if mu is None:
                    mu = common
                elif mu != common:
                    return None
    if lam is None or mu is None:
        # complete or empty graph
        return None
    return SrgParams(n, k, lam, mu)


def complement(g: Graph) -> Graph:
    """Complement on the same ordered vertex set."""
    edges = [(u, v) for u, v in itertools.combinations(range(g.n), 2)
             if not g.has_edge(u, v)]
    return Graph(g.n, edges, g.labels)


#: CLI-addressable generators: name -> (callable, number of int arguments).
GENERATORS = {
    "complete": (complete_graph, 1),
    "cycle": (cycle_graph, 1),
    "path": (path_graph, 1),
    "triangular": (triangular_graph, 1),
    "hamming": (hamming_graph, 2),
    "kneser": (kneser_graph, 2),
    "paley": (paley_graph, 1),
    "symplectic": (symplectic_graph, 2),
    "gq-w3": (lambda q, **kw: gq_w3_geometry(q, **kw).graph, 1),
}


def generate(spec: str, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    """Build a graph from a "family:arg1,arg2" string (e.g. "triangular:7")."""
    name, _, argstr = spec.partition(":")
    if name not in GENERATORS:
        raise ValueError(f"unknown generator {name!r}; choices: {sorted(GENERATORS)}")
    fn, nargs = GENERATORS[name]
    try:
        args = [int(a) for a in argstr.split(",")] if argstr else []
    except ValueError:
        raise ValueError(f"generator arguments must be integers: {argstr!r}") from None
    if len(args) != nargs:
        raise ValueError(f"generator {name} takes {nargs} argument(s), got {len(args)}")
    return fn(*args, max_vertices=max_vertices)
