"""Clique complexes and their signed incidence structure.

Faces are strictly increasing vertex tuples under the graph's global
ordering.  The signed incidence number of a face F and a codimension-1
subface K is (-1)^j where F minus its j-th smallest vertex equals K; the
coboundary matrix for dimension i collects these numbers with rows indexed
by the (i+1)-faces and columns by the i-faces.
"""

from __future__ import annotations

from typing import Optional

import numpy as np

from .graphs import Graph

Face = tuple[int, ...]

#: Default guard against face-count explosion during clique enumeration.
DEFAULT_MAX_FACES = 2_000_000


class FaceCountError(RuntimeError):
    """Clique enumeration exceeded the configured face cap."""


class IntMatrix:
    """Sparse integer matrix with named row/column index spaces.

    Entries are held in a dict keyed by (row, col); explicit zeros are never
    stored.  The space tags record which face dimension each index space
    refers to, so products are checked for compatible shapes and spaces.
    """

    __slots__ = ("nrows", "ncols", "entries", "row_space", "col_space")

    def __init__(self, nrows: int, ncols: int,
                 entries: Optional[dict[tuple[int, int], int]] = None,
                 row_space: str = "", col_space: str = ""):
        self.nrows = nrows
        self.ncols = ncols
        self.entries = {k: v for k, v in (entries or {}).items() if v != 0}
        self.row_space = row_space
        self.col_space = col_space

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.ncols, self.nrows,
                         {(c, r): v for (r, c), v in self.entries.items()},
                         row_space=self.col_space, col_space=self.row_space)

    @property
    def T(self) -> "IntMatrix":
        return self.transpose()

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        if self.col_space and other.row_space and self.col_space != other.row_space:
            raise ValueError(f"index space mismatch {self.col_space!r} vs {other.row_space!r}")
        rows_of_other: dict[int, list[tuple[int, int]]] = {}
        for (r, c), v in other.entries.items():
            rows_of_other.setdefault(r, []).append((c, v))
        out: dict[tuple[int, int], int] = {}
        for (r, k), v in self.entries.items():
            for c, w in rows_of_other.get(k, ()):
                key = (r, c)
                out[key] = out.get(key, 0) + v * w
        return IntMatrix(self.nrows, other.ncols, out,
                         row_space=self.row_space, col_space=other.col_space)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, 0) + v
        return IntMatrix(self.nrows, self.ncols, out,
                         row_space=self.row_space, col_space=self.col_space)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    __hash__ = None

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def get(self, r: int, c: int) -> int:
        return self.entries.get((r, c), 0)

    def is_symmetric(self) -> bool:
        if self.nrows != self.ncols:
            return False
        return all(self.entries.get((c, r), 0) == v for (r, c), v in self.entries.items())

    def is_zero(self) -> bool:
        return not self.entries

    def trace(self) -> int:
        return sum(v for (r, c), v in self.entries.items() if r == c)

    def inf_norm(self) -> int:
        sums = [0] * self.nrows
        for (r, _), v in self.entries.items():
            sums[r] += abs(v)
        return max(sums, default=0)

    def row_lists(self) -> list[list[tuple[int, int]]]:
        rows: list[list[tuple[int, int]]] = [[] for _ in range(self.nrows)]
        for (r, c), v in self.entries.items():
            rows[r].append((c, v))
        return rows

    def matvec(self, x: list[int]) -> list[int]:
        """Exact integer matrix-vector product."""
        if len(x) != self.ncols:
            raise ValueError("vector length mismatch")
        out = [0] * self.nrows
        for (r, c), v in self.entries.items():
            out[r] += v * x[c]
        return out

    def to_dense(self) -> np.ndarray:
        a = np.zeros(self.shape, dtype=np.int64)
        for (r, c), v in self.entries.items():
            a[r, c] = v
        return a

    def to_dense_rows(self) -> list[list[int]]:
        rows = [[0] * self.ncols for _ in range(self.nrows)]
        for (r, c), v in self.entries.items():
            rows[r][c] = v
        return rows

    @staticmethod
    def zero(nrows: int, ncols: int, row_space: str = "", col_space: str = "") -> "IntMatrix":
        return IntMatrix(nrows, ncols, {}, row_space=row_space, col_space=col_space)

    def __repr__(self) -> str:
        return f"IntMatrix({self.nrows}x{self.ncols}, nnz={self.nnz})"


class CliqueComplex:
    """Faces of a graph's clique complex grouped by dimension.

    ``faces[d]`` is the lexicographically sorted list of d-dimensional faces
    (cliques on d+1 vertices); ``index[d]`` maps each face to its position.
    The empty face in dimension -1 is implicit.
    """

    __slots__ = ("graph", "max_dim", "faces", "index")

    def __init__(self, graph: Graph, max_dim: int, faces: list[list[Face]]):
        self.graph = graph
        self.max_dim = max_dim
        self.faces = faces
        self.index = [{f: k for k, f in enumerate(fl)} for fl in faces]

    def num_faces(self, i: int) -> int:
        if i == -1:
            return 1
        if 0 <= i <= self.max_dim and i < len(self.faces):
            return len(self.faces[i])
        return 0

    def faces_of(self, i: int) -> list[Face]:
        if 0 <= i < len(self.faces):
            return self.faces[i]
        return []

    def face_position(self, face: Face) -> int:
        return self.index[len(face) - 1][face]

    def space_tag(self, i: int) -> str:
        return f"dim{i}"

    def __repr__(self) -> str:
        counts = ",".join(str(len(fl)) for fl in self.faces)
        return f"CliqueComplex(max_dim={self.max_dim}, faces=[{counts}])"


def clique_complex(g: Graph, max_dim: Optional[int] = 2,
                   max_faces: int = DEFAULT_MAX_FACES) -> CliqueComplex:
    """Enumerate all cliques of dimension <= max_dim by ordered backtracking
    over common neighborhoods.  max_dim=None expands to the clique number.
    """
    if max_dim is not None and max_dim < 0:
        raise ValueError("max_dim must be >= 0")
    faces: list[list[Face]] = [[(v,) for v in range(g.n)]]
    total = g.n
    masks = {(v,): g.neighbor_mask(v) for v in range(g.n)}
    dim = 0
    while (max_dim is None or dim < max_dim) and faces[dim]:
        next_faces: list[Face] = []
        next_masks: dict[Face, int] = {}
        for face in faces[dim]:
            ext = masks[face] >> (face[-1] + 1)
            v = face[-1] + 1
            while ext:
                if ext & 1:
                    new = face + (v,)
                    next_faces.append(new)
                    next_masks[new] = masks[face] & g.neighbor_mask(v)
                ext >>= 1
                v += 1
        total += len(next_faces)
        if total > max_faces:
            raise FaceCountError(f"complex exceeds {max_faces} faces")
        if not next_faces:
            break
        faces.append(next_faces)
        masks = next_masks
        dim += 1
    resolved_dim = max_dim if max_dim is not None else len(faces) - 1
    while len(faces) <= (resolved_dim if resolved_dim >= 0 else 0):
        faces.append([])
    return CliqueComplex(g, resolved_dim, faces)


def face_sign(F: Face, K: Face) -> int:
    """Signed incidence number of F and K: (-1)^j if K is F with its j-th
    smallest vertex removed, else 0."""
    if len(K) != len(F) - 1:
        return 0
    j = None
    ki = 0
    for pos, v in enumerate(F):
        if ki < len(K) and K[ki] == v:
            ki += 1
        elif j is None:
            j = pos
        else:
            return 0
    if ki != len(K):
        return 0
    return -1 if (j % 2) else 1


def epsilon(F: Face, F2: Face) -> int:
    """Product of the signs of F and F2 against their common subface, when
    the two i-faces overlap in i vertices; 0 otherwise."""
    if len(F) != len(F2):
        raise ValueError("faces must have equal dimension")
    common = tuple(sorted(set(F) & set(F2)))
    if len(common) != len(F) - 1:
        return 0
    return face_sign(F, common) * face_sign(F2, common)


def coboundary(X: CliqueComplex, i: int) -> IntMatrix:
    """Signed incidence matrix from i-faces to (i+1)-faces.

    i = -1 gives the column of ones over the empty face.  Requires
    i + 1 <= max_dim; an empty face list in dimension i+1 yields a 0 x m
    matrix.
    """
    if i < -1 or i + 1 > X.max_dim:
        raise ValueError(f"coboundary dimension {i} out of range (max_dim={X.max_dim})")
    if i == -1:
        ent = {(v, 0): 1 for v in range(X.graph.n)}
        return IntMatrix(X.graph.n, 1, ent, row_space=X.space_tag(0), col_space=X.space_tag(-1))
    rows = X.faces_of(i + 1)
    idx = X.index[i]
    ent: dict[tuple[int, int], int] = {}
    for r, H in enumerate(rows):
        sign = 1
        for j in range(len(H)):
            K = H[:j] + H[j + 1:]
            ent[(r, idx[K])] = sign
            sign = -sign
    return IntMatrix(len(rows), X.num_faces(i), ent,
                     row_space=X.space_tag(i + 1), col_space=X.space_tag(i))


def boundary(X: CliqueComplex, i: int) -> IntMatrix:
    """Boundary matrix for dimension i: the transpose of coboundary(X, i-1)."""
    return coboundary(X, i - 1).transpose()


def face_degree(X: CliqueComplex, F: Face) -> int:
    """Number of (i+1)-faces containing the i-face F."""
    if len(F) > X.max_dim:
        raise ValueError(f"faces one dimension above {F} exceed max_dim={X.max_dim}")
    g = X.graph
    m = g.neighbor_mask(F[0])
    for v in F[1:]:
        m &= g.neighbor_mask(v)
    return m.bit_count()


# ---------------------------------------------------------------------------
# MatrixMarket export (coordinate integer), for external verification
# ---------------------------------------------------------------------------

def write_matrix_market(m: IntMatrix, path: str, comment: str = ""):
    with open(path, "w") as fh:
        fh.write("%%MatrixMarket matrix coordinate integer general\n")
        if comment:
            fh.write(f"%{comment}\n")
        fh.write(f"{m.nrows} {m.ncols} {m.nnz}\n")
        for (r, c) in sorted(m.entries):
            fh.write(f"{r + 1} {c + 1} {m.entries[(r, c)]}\n")


def read_matrix_market(path: str) -> IntMatrix:
    with open(path) as fh:
        header = fh.readline()
        if "coordinate" not in header or "integer" not in header:
            raise ValueError(f"unsupported MatrixMarket header: {header.strip()!r}")
        line = fh.readline()
        while line.startswith("%"):
            line = fh.readline()
        nrows, ncols, nnz = map(int, line.split())
        entries = {}
        for _ in range(nnz):
            r, c, v = fh.readline().split()
            entries[(int(r) - 1, int(c) - 1)] = int(v)
    return IntMatrix(nrows, ncols, entries)
