"""Root data for the classical families GL, SL, Sp, SO, O.

Weights are handled in epsilon coordinates throughout: length-N integer
vectors for GL/SL (type A), length-l vectors for Sp(2l), SO(2l+1), SO(2l)
and O(N).  The Weyl group is realized as signed permutations (no sign
changes for type A, all for B/C, evenly many for D), so chamber reduction
is sorting plus sign normalization.

O(N) labels are partitions subject to the two-column constraint: the
lengths of the first two columns of the Young diagram must sum to at
most N.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


class LabelError(ValueError):
    """Raised when label data violates the constraints of its family."""


_GROUP_RE = re.compile(r"^\s*(GL|SL|Sp|SO|O)\s*\(\s*(\d+)\s*\)\s*$")


@dataclass(frozen=True)
class GroupSpec:
    family: str  # GL | SL | Sp | SO | O
    n: int       # matrix size N

    def __post_init__(self):
        if self.family not in ("GL", "SL", "Sp", "SO", "O"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < 1:
            raise ValueError("matrix size must be positive")
        if self.family == "SL" and self.n < 2:
            raise ValueError("SL needs N >= 2")
        if self.family == "Sp":
            if self.n % 2 or self.n < 2:
                raise ValueError("Sp needs even N >= 2")
        if self.family == "O" and self.n < 3:
            raise ValueError("O needs N >= 3")
        if self.family == "SO" and self.n < 3:
            # this also excludes the degenerate D_1 = SO(2)
            raise ValueError("SO needs N >= 3")

    @property
    def rank(self):
        if self.family == "GL":
            return self.n
        if self.family == "SL":
            return self.n - 1
        return self.n // 2

    @property
    def cartan_type(self):
        if self.family in ("GL", "SL"):
            return "A"
        if self.family == "Sp":
            return "C"
        if self.n % 2:
            return "B"
        return "D"

    def __str__(self):
        return f"{self.family}({self.n})"


def parse_group(text: str) -> GroupSpec:
    m = _GROUP_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse group spec {text!r}; expected e.g. Sp(4)")
    return GroupSpec(m.group(1), int(m.group(2)))


@dataclass(frozen=True)
class RepLabel:
    """An irreducible label: dominant weight data tagged with its group.

    data holds Dynkin labels for SL, a partition for O, and epsilon
    coordinates for everything else.
    """

    group: GroupSpec
    data: tuple

    def __str__(self):
        return ",".join(str(x) for x in self.data) if self.data else "0"

    def eps(self):
        """Epsilon-coordinate highest weight (length N for GL/SL, l otherwise)."""
        g = self.group
        if g.family == "SL":
            # Dynkin (a_1..a_{N-1}) -> decreasing vector with last entry 0
            out = []
            tail = 0
            for a in reversed(self.data):
                tail += a
                out.append(tail)
            out.reverse()
            return tuple(out) + (0,)
        if g.family == "O":
            return o_label_eps(self)
        return self.data

    def size(self):
        """Total of the epsilon entries (partition size for partitions)."""
        return sum(abs(x) for x in self.eps())


# ---------------------------------------------------------------------------
# simple roots and related vectors
# ---------------------------------------------------------------------------

def _unit(dim, i, val=1):
    v = [0] * dim
    v[i] = val
    return tuple(v)


def simple_roots(g: GroupSpec):
    """Simple roots in epsilon coordinates (count == rank)."""
    t, l = g.cartan_type, g.rank
    if t == "A":
        dim = g.n
        return [
            tuple(a - b for a, b in zip(_unit(dim, i), _unit(dim, i + 1)))
            for i in range(dim - 1)
        ]
    roots = [
        tuple(a - b for a, b in zip(_unit(l, i), _unit(l, i + 1)))
        for i in range(l - 1)
    ]
    if t == "B":
        roots.append(_unit(l, l - 1))
    elif t == "C":
        roots.append(_unit(l, l - 1, 2))
    else:  # D
        last = [0] * l
        last[l - 2] = 1
        last[l - 1] = 1
        roots.append(tuple(last))
    return roots


def positive_roots(g: GroupSpec):
    t = g.cartan_type
    dim = g.n if t == "A" else g.rank
    roots = []
    for i in range(dim):
        for j in range(i + 1, dim):
            v = [0] * dim
            v[i], v[j] = 1, -1
            roots.append(tuple(v))
    if t == "A":
        return roots
    for i in range(dim):
        for j in range(i + 1, dim):
            v = [0] * dim
            v[i], v[j] = 1, 1
            roots.append(tuple(v))
    if t == "B":
        roots.extend(_unit(dim, i) for i in range(dim))
    elif t == "C":
        roots.extend(_unit(dim, i, 2) for i in range(dim))
    return roots


def two_rho(g: GroupSpec):
    """2*rho as an integer epsilon vector (type A uses a root-orthogonal shift)."""
    t = g.cartan_type
    if t == "A":
        n = g.n
        # (N-1, N-2, ..., 0) doubled; differs from rho by a multiple of (1,..,1)
        return tuple(2 * (n - 1 - i) for i in range(n))
    l = g.rank
    if t == "B":
        return tuple(2 * (l - i) - 1 for i in range(l))
    if t == "C":
        return tuple(2 * (l - i) for i in range(l))
    return tuple(2 * (l - 1 - i) for i in range(l))


# ---------------------------------------------------------------------------
# Weyl chamber reduction
# ---------------------------------------------------------------------------

def _sort_desc_sign(vals):
    """Stable insertion sort to weakly decreasing order; returns (sorted, parity sign)."""
    vals = list(vals)
    sign = 1
    for i in range(1, len(vals)):
        j = i
        while j > 0 and vals[j - 1] < vals[j]:
            vals[j - 1], vals[j] = vals[j], vals[j - 1]
            sign = -sign
            j -= 1
    return vals, sign


def weyl_normalize(g: GroupSpec, v):
    """Dominant representative of the plain (unshifted) Weyl orbit of v.

    Returns (dominant vector, det of the group element used, on_wall flag);
    on_wall means the stabilizer of v is nontrivial.
    """
    t = g.cartan_type
    v = tuple(v)
    if t == "A":
        srt, sign = _sort_desc_sign(v)
        wall = any(srt[i] == srt[i + 1] for i in range(len(srt) - 1))
        return tuple(srt), sign, wall
    if t in ("B", "C"):
        flips = sum(1 for x in v if x < 0)
        srt, sign = _sort_desc_sign(abs(x) for x in v)
        sign *= -1 if flips % 2 else 1
        wall = any(x == 0 for x in srt) or any(
            srt[i] == srt[i + 1] for i in range(len(srt) - 1)
        )
        return tuple(srt), sign, wall
    # type D: evenly many sign changes; determinant is the sorting parity
    flips = sum(1 for x in v if x < 0)
    srt, sign = _sort_desc_sign(abs(x) for x in v)
    wall = any(srt[i] == srt[i + 1] for i in range(len(srt) - 1))
    if flips % 2 and not wall:
        if srt[-1] == 0:
            pass  # absorb the odd flip into the zero entry
        else:
            srt[-1] = -srt[-1]
    return tuple(srt), sign, wall


def dominance_reduce(g: GroupSpec, w, shifted=True):
    """Reduce w to the dominant chamber; the shifted form acts through w+rho.

    Returns (dominant weight, sign, on_wall).  With shifted=True the weight
    on a wall contributes zero to character sums (Racah-Speiser bookkeeping);
    the returned weight is then the dominant conjugate of w+rho minus rho.
    """
    if not shifted:
        return weyl_normalize(g, w)
    tr = two_rho(g)
    doubled = tuple(2 * x + r for x, r in zip(w, tr))
    dom2, sign, wall = weyl_normalize(g, doubled)
    dom = tuple((x - r) // 2 for x, r in zip(dom2, tr))
    return dom, sign, wall


# ---------------------------------------------------------------------------
# label validation
# ---------------------------------------------------------------------------

def chi_involution(label_or_weight, group: GroupSpec | None = None):
    """Diagram flip of type D: negate the last epsilon coordinate.

    Accepts either a RepLabel for SO(2l) or a bare epsilon vector together
    with the group.
    """
    if isinstance(label_or_weight, RepLabel):
        g = label_or_weight.group
        if g.cartan_type != "D" or g.family != "SO":
            raise ValueError("chi involution lives on SO(2l) labels")
        v = list(label_or_weight.data)
        v[-1] = -v[-1]
        return RepLabel(g, tuple(v))
    if group is None or group.cartan_type != "D":
        raise ValueError("chi involution needs a type-D group")
    v = list(label_or_weight)
    v[-1] = -v[-1]
    return tuple(v)


def chi_dynkin(dynkin):
    """The same involution on Dynkin labels: swap the last two."""
    v = list(dynkin)
    v[-1], v[-2] = v[-2], v[-1]
    return tuple(v)


def partition_conjugate(p):
    if not p:
        return ()
    out = []
    for i in range(1, p[0] + 1):
        out.append(sum(1 for x in p if x >= i))
    return tuple(out)


def o_associated_partition(g: GroupSpec, p):
    """The partner partition with first column replaced by N - (its length)."""
    cols = list(partition_conjugate(p))
    if not cols:
        cols = [0]
    cols[0] = g.n - cols[0]
    cols = [c for c in cols if c > 0]
    if sorted(cols, reverse=True) != cols:
        raise LabelError(f"partition {p} has no valid associate in {g}")
    return partition_conjugate(tuple(cols))


def label_validate(g: GroupSpec, data) -> RepLabel:
    """Accept exactly the irreducible labels of the family, or raise LabelError."""
    data = tuple(int(x) for x in data)
    fam, l = g.family, g.rank
    if fam == "GL":
        if len(data) != g.n:
            raise LabelError(f"GL({g.n}) labels have length {g.n}")
        if any(data[i] < data[i + 1] for i in range(len(data) - 1)):
            raise LabelError("GL labels must be weakly decreasing")
    elif fam == "SL":
        if len(data) != g.n - 1:
            raise LabelError(f"SL({g.n}) Dynkin labels have length {g.n - 1}")
        if any(x < 0 for x in data):
            raise LabelError("SL Dynkin labels must be nonnegative")
    elif fam == "Sp" or (fam == "SO" and g.n % 2):
        if len(data) != l:
            raise LabelError(f"{g} labels have length {l}")
        if any(x < 0 for x in data):
            raise LabelError(f"{g} labels must be nonnegative (no spin weights)")
        if any(data[i] < data[i + 1] for i in range(l - 1)):
            raise LabelError(f"{g} labels must be weakly decreasing")
    elif fam == "SO":
        if len(data) != l:
            raise LabelError(f"{g} labels have length {l}")
        if any(data[i] < data[i + 1] for i in range(l - 2)) or (
            l >= 2 and data[l - 2] < abs(data[l - 1])
        ):
            raise LabelError(
                f"{g} labels must be weakly decreasing with |last| bounded"
            )
    else:  # O
        data = tuple(x for x in data if x != 0)
        if any(x <= 0 for x in data):
            raise LabelError("partitions have positive parts")
        if any(data[i] < data[i + 1] for i in range(len(data) - 1)):
            raise LabelError("partitions are weakly decreasing")
        cols = partition_conjugate(data)
        c1 = cols[0] if cols else 0
        c2 = cols[1] if len(cols) > 1 else 0
        if c1 + c2 > g.n:
            raise LabelError(
                f"two-column constraint violated: {c1} + {c2} > {g.n}"
            )
    return RepLabel(g, data)


def o_label_eps(label: RepLabel):
    """Epsilon weight of the SO-constituent attached to an O(N) partition.

    Partitions with more than l = floor(N/2) rows are first replaced by
    their associate (the determinant twist does not change the torus
    restriction).  For even N with exactly l rows this returns the
    constituent with positive last entry.
    """
    g = label.group
    l = g.rank
    p = label.data
    if len(p) > l:
        p = o_associated_partition(g, p)
    return tuple(p) + (0,) * (l - len(p))


def trivial_label(g: GroupSpec) -> RepLabel:
    if g.family == "O":
        return RepLabel(g, ())
    if g.family == "SL":
        return RepLabel(g, (0,) * (g.n - 1))
    return RepLabel(g, (0,) * g.rank)


def vector_label(g: GroupSpec) -> RepLabel:
    """Label of the defining (vector) representation."""
    if g.family == "O":
        return RepLabel(g, (1,))
    if g.family == "SL":
        return RepLabel(g, (1,) + (0,) * (g.n - 2))
    return RepLabel(g, (1,) + (0,) * (g.rank - 1))


def eps_to_label(g: GroupSpec, eps) -> RepLabel:
    """Label whose epsilon weight is the given dominant vector (connected families)."""
    if g.family == "O":
        raise ValueError("use partition data for O labels")
    if g.family == "SL":
        shifted = [x - eps[-1] for x in eps]
        dynkin = tuple(shifted[i] - shifted[i + 1] for i in range(len(eps) - 1))
        return label_validate(g, dynkin)
    return label_validate(g, eps)


# ---------------------------------------------------------------------------
# dimensions
# ---------------------------------------------------------------------------

def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


@lru_cache(maxsize=None)
def weyl_dim(label: RepLabel) -> int:
    """Dimension by the Weyl product formula (exact)."""
    g = label.group
    if g.family == "O":
        return o_dim(label)
    lam = label.eps()
    tr = two_rho(g)
    num = Fraction(1)
    for a in positive_roots(g):
        num *= Fraction(_dot([2 * x for x in lam], a) + _dot(tr, a), _dot(tr, a))
    assert num.denominator == 1
    return int(num)


def o_dim(label: RepLabel) -> int:
    g = label.group
    l = g.rank
    p = label.data
    if len(p) > l:
        p = o_associated_partition(g, p)
    so = GroupSpec("SO", g.n)
    if g.n % 2 == 0 and len(p) == l:
        plus = tuple(p)
        minus = tuple(p[:-1]) + (-p[-1],)
        return weyl_dim(RepLabel(so, plus)) + weyl_dim(RepLabel(so, minus))
    return weyl_dim(RepLabel(so, tuple(p) + (0,) * (l - len(p))))
