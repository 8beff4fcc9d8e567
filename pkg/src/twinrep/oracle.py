"""Paper-independent irreducibility checks.

Two detectors validate every verdict the decision procedure produces:

* Burnside test: a set of d x d complex matrices acts irreducibly iff the
  unital algebra they generate has dimension d^2.  The dimension is computed
  by a worklist closure over flattened matrices with incremental row
  reduction; rank over the exact Gaussian-rational subfield equals rank over
  C, so exact-mode answers are valid verdicts over C.
* Common eigenline enumeration for involutions: every one-dimensional
  invariant subspace of a family of involutions is a common +-1 eigenvector,
  found by intersecting eigenspaces incrementally.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .linalg import DimensionError, Matrix, Subspace, kernel
from .scalars import _tol


def _unwrap(images):
    mats = [img.matrix if hasattr(img, "matrix") else img for img in images]
    if not mats:
        raise DimensionError("need at least one image")
    d = mats[0].rows
    for m in mats:
        if m.rows != d or m.cols != d:
            raise DimensionError("mixed image dimensions")
        if m.exact != mats[0].exact:
            raise DimensionError("mixed image backends")
    return mats, d


@dataclass
class ClosureResult:
    dim: int
    basis: list  # matrices spanning the generated algebra
    rank_gap: float  # float mode: min accepted / max rejected reduction residual


class _RowSpan:
    """Incremental RREF over flattened matrices; tracks borderline margins."""

    def __init__(self, exact, eps, scale):
        self.exact = exact
        self.eps = eps
        self.scale = scale
        self.rows = []  # (pivot index, normalized row)
        self.min_acc = math.inf
        self.max_rej = 0.0

    def insert(self, vec):
        v = list(vec)
        for p, row in self.rows:
            f = v[p]
            if f.re == 0 and f.im == 0:
                continue
            v = [x if (y.re == 0 and y.im == 0) else x - f * y
                 for x, y in zip(v, row)]
        if self.exact:
            pivot = next((i for i, x in enumerate(v) if not x.is_zero()), None)
            if pivot is None:
                return False
        else:
            mag, pivot = max((x.magnitude(), i) for i, x in enumerate(v))
            rel = mag / max(1.0, self.scale)
            if mag <= self.eps * max(1.0, self.scale):
                self.max_rej = max(self.max_rej, rel)
                return False
            self.min_acc = min(self.min_acc, rel)
        inv = v[pivot].inv()
        v = [x * inv for x in v]
        for i, (p, row) in enumerate(self.rows):
            f = row[pivot]
            if f.re == 0 and f.im == 0:
                continue
            self.rows[i] = (p, [x if (y.re == 0 and y.im == 0) else x - f * y
                                for x, y in zip(row, v)])
        self.rows.append((pivot, v))
        return True

    @property
    def gap(self):
        if self.max_rej == 0.0:
            return math.inf
        if self.min_acc == math.inf:
            return 0.0
        return self.min_acc / self.max_rej


def algebra_closure(images, tol=None):
    """Basis of the unital algebra generated by the images.

    Seeds with {I, images...}; whenever a product escapes the current span it
    joins the basis and its one-step products with every generator are
    enqueued.  Growth is capped at d^2 (exceeding it flags an arithmetic
    bug, it is impossible mathematically)."""
    mats, d = _unwrap(images)
    exact = mats[0].exact
    eps = _tol(tol).eps
    scale = max(m.max_magnitude() for m in mats) if not exact else 0.0
    span = _RowSpan(exact, eps, max(1.0, scale))
    basis = []
    queue = deque([Matrix.identity(d, exact)] + list(mats))
    rounds = 0
    while queue:
        rounds += 1
        if rounds > 4 * d * d * (len(mats) + 1) * (d * d + 1):
            raise ArithmeticError("algebra closure failed to terminate")
        m = queue.popleft()
        flat = [x for row in m.data for x in row]
        if span.insert(flat):
            basis.append(m)
            if len(basis) > d * d:
                raise ArithmeticError(
                    "algebra closure exceeded d^2 = %d" % (d * d))
            for g in mats:
                queue.append(g @ m)
                queue.append(m @ g)
    return ClosureResult(len(basis), basis, span.gap)


def algebra_dimension(images, tol=None):
    return algebra_closure(images, tol).dim


def is_irreducible_oracle(images, tol=None):
    """Burnside: irreducible iff the generated algebra is all of d x d."""
    mats, d = _unwrap(images)
    return algebra_dimension(mats, tol) == d * d


def _eigenspaces(m, tol=None):
    d = m.rows
    exact = m.exact
    one = Matrix.identity(d, exact)
    out = []
    for sign in (1, -1):
        shifted = (m - one) if sign == 1 else (m + one)
        ker = kernel(shifted, tol)
        if ker.dim:
            out.append(ker)
    return out


def _normalized_direction(v, tol=None):
    entries = v.column_entries()
    if v.exact:
        lead = next(x for x in entries if not x.is_zero())
    else:
        mag, idx = max((x.magnitude(), i) for i, x in enumerate(entries))
        lead = entries[idx]
    inv = lead.inv()
    return [x * inv for x in entries]


def common_eigenlines(images, tol=None):
    """All lines fixed (up to sign) by every involution in the list.

    Intersects the +-1 eigenspaces of the images incrementally and returns
    the one-dimensional intersections, deduplicated by span.  Raises on a
    non-involution input."""
    mats, d = _unwrap(images)
    exact = mats[0].exact
    ident = Matrix.identity(d, exact)
    for m in mats:
        if not (m @ m).eq(ident, tol):
            raise ValueError("common_eigenlines expects involutions")
    candidates = _eigenspaces(mats[0], tol)
    for m in mats[1:]:
        eigs = _eigenspaces(m, tol)
        new = []
        for c in candidates:
            for e in eigs:
                inter = c.intersect(e, tol)
                if inter.dim:
                    new.append(inter)
        candidates = new
        if not candidates:
            return []
    lines = []
    seen = []
    for c in candidates:
        if c.dim != 1:
            continue
        direction = _normalized_direction(c.basis[0], tol)
        dup = False
        for s in seen:
            if all(x.eq(y, tol) for x, y in zip(direction, s)):
                dup = True
                break
        if not dup:
            seen.append(direction)
            lines.append(Subspace(d, [Matrix.column(direction)],
                                  _assume_independent=True))
    return lines
