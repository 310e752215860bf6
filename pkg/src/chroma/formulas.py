"""Closed-form index formulas and their audit against direct computation.

Every formula is evaluated exactly as printed, in exact rational
arithmetic, typos included. Whether it is right is decided only by
comparing against the oracle, which builds the graph and computes the
index directly (exhaustive permutation search for extremes).

Sums whose upper limit is below the lower limit are empty (zero).
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from . import embodiment as emb
from .cluster import ColourCluster, canonicalize, parse_cluster
from .errors import ChromaError
from .generators import tree_from_prufer
from .sequences import fibonacci, sequence_cluster
from .zagreb import ZagrebExtrema, chromatic_indices, extremal_indices

F = Fraction


class FormulaId(str, enum.Enum):
    TREE_M1_BOUNDS = "TREE_M1_BOUNDS"
    TREE_M2 = "TREE_M2"
    TREE_M3 = "TREE_M3"
    COR_L2_BOUNDS = "COR_L2_BOUNDS"
    P33_M1 = "P33_M1"
    P33_M2 = "P33_M2"
    P33_M3 = "P33_M3"
    L34_M2_CLOSED = "L34_M2_CLOSED"
    L34_M3_CLOSED = "L34_M3_CLOSED"
    P35_M1_MIN = "P35_M1_MIN"
    P35_M1_MAX = "P35_M1_MAX"
    P35_M2_MIN = "P35_M2_MIN"
    P35_M2_MIN_ALT = "P35_M2_MIN_ALT"
    P35_M2_MAX = "P35_M2_MAX"
    P35_M3_MIN = "P35_M3_MIN"
    P35_M3_MAX = "P35_M3_MAX"
    C36_M1_MIN = "C36_M1_MIN"
    C36_M1_MAX = "C36_M1_MAX"
    C36_M2_MIN = "C36_M2_MIN"
    C36_M2_MAX = "C36_M2_MAX"
    C36_M3_MIN = "C36_M3_MIN"
    C36_M3_MAX = "C36_M3_MAX"
    P37_M1_MIN = "P37_M1_MIN"
    P37_M1_MAX = "P37_M1_MAX"
    P37_M2_MIN = "P37_M2_MIN"
    P37_M2_MAX = "P37_M2_MAX"
    P37_M3_MIN = "P37_M3_MIN"
    P37_M3_MAX = "P37_M3_MAX"
    C38_M1_MIN = "C38_M1_MIN"
    C38_M1_MAX = "C38_M1_MAX"
    C38_M2_MIN = "C38_M2_MIN"
    C38_M2_MAX = "C38_M2_MAX"
    C38_M3_MIN = "C38_M3_MIN"
    C38_M3_MAX = "C38_M3_MAX"
    T41_TYPE1_M1_MIN = "T41_TYPE1_M1_MIN"
    T41_TYPE1_M1_MAX = "T41_TYPE1_M1_MAX"
    T41_TYPE1_M2_MIN = "T41_TYPE1_M2_MIN"
    T41_TYPE1_M2_MAX = "T41_TYPE1_M2_MAX"
    T41_TYPE1_M3_MIN = "T41_TYPE1_M3_MIN"
    T41_TYPE1_M3_MAX = "T41_TYPE1_M3_MAX"
    T41_TYPE2_M1_MIN = "T41_TYPE2_M1_MIN"
    T41_TYPE2_M1_MAX = "T41_TYPE2_M1_MAX"
    T41_TYPE2_M2_MIN = "T41_TYPE2_M2_MIN"
    T41_TYPE2_M2_MAX = "T41_TYPE2_M2_MAX"
    T41_TYPE2_M3_MIN = "T41_TYPE2_M3_MIN"
    T41_TYPE2_M3_MAX = "T41_TYPE2_M3_MAX"
    R42_M1MIN_CLOSED = "R42_M1MIN_CLOSED"
    T43_TYPE1_M1_MIN = "T43_TYPE1_M1_MIN"
    T43_TYPE1_M1_MAX = "T43_TYPE1_M1_MAX"
    T43_TYPE1_M2_MIN = "T43_TYPE1_M2_MIN"
    T43_TYPE1_M2_MAX = "T43_TYPE1_M2_MAX"
    T43_TYPE1_M3_MIN = "T43_TYPE1_M3_MIN"
    T43_TYPE1_M3_MAX = "T43_TYPE1_M3_MAX"
    T43_TYPE2_M1_MIN = "T43_TYPE2_M1_MIN"
    T43_TYPE2_M1_MAX = "T43_TYPE2_M1_MAX"
    T43_TYPE2_M2_MIN = "T43_TYPE2_M2_MIN"
    T43_TYPE2_M2_MAX = "T43_TYPE2_M2_MAX"
    T43_TYPE2_M3_MIN = "T43_TYPE2_M3_MIN"
    T43_TYPE2_M3_MAX = "T43_TYPE2_M3_MAX"
    FIB_SUM = "FIB_SUM"
    FIB_SUMSQ = "FIB_SUMSQ"
    FIB_SUMCUBE = "FIB_SUMCUBE"
    FIB_SUMQUAD = "FIB_SUMQUAD"


ID_ORDER = {fid: k for k, fid in enumerate(FormulaId)}


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


Value = Fraction | Interval


def _S(lo: int, hi: int, f: Callable[[int], object]) -> Fraction:
    return sum((F(f(i)) for i in range(lo, hi + 1)), F(0))


def _SS(jlo: int, jhi: int, ilo: Callable[[int], int], ihi: Callable[[int], int], f: Callable[[int, int], object]) -> Fraction:
    return sum((_S(ilo(j), ihi(j), lambda i: f(j, i)) for j in range(jlo, jhi + 1)), F(0))


# --- parameter schemas -------------------------------------------------------

SCHEMA_TREE = "tree"  # {"prufer": [...]}, n = len + 2 >= 4
SCHEMA_L2 = "cluster_l2"  # {"cluster": [r1, r2]}
SCHEMA_PARTITE = "partite"  # {"n": part size, "r": number of parts >= 2}
SCHEMA_CLUSTER = "cluster"  # {"cluster": [...]}
SCHEMA_ELL = "ell"  # {"l": l}
SCHEMA_FIB_RANGE = "fib_range"  # {"a": a, "l": l}, 1 <= a <= l


def _bad(msg: str = "") -> ChromaError:
    return ChromaError("bad parameters" + (f": {msg}" if msg else ""))


def _int_param(params: dict, key: str, minimum: int) -> int:
    val = params.get(key)
    if isinstance(val, bool) or not isinstance(val, int) or val < minimum:
        raise _bad(f"{key} must be an integer ≥ {minimum}")
    return val


def _tree_n(params: dict) -> int:
    seq = params.get("prufer")
    if not isinstance(seq, (list, tuple)):
        raise _bad("prufer sequence required")
    n = len(seq) + 2
    if n < 4:
        raise _bad("tree order must be ≥ 4")
    if any(not isinstance(x, int) or not 0 <= x < n for x in seq):
        raise _bad("prufer entries must lie in 0..n-1")
    return n


def _cluster_param(params: dict, ell: int | None = None) -> ColourCluster:
    try:
        c = parse_cluster(params["cluster"])
    except (KeyError, TypeError, ChromaError) as exc:
        raise _bad(str(exc)) from None
    if ell is not None and c.ell != ell:
        raise _bad(f"cluster must have ℓ = {ell}")
    if not c.is_non_increasing():
        warnings.warn(f"cluster {list(c.sizes)} is not non-increasing; canonicalized", stacklevel=3)
        c, _ = canonicalize(c)
    return c


def _theta(params: dict) -> tuple[int, Callable[[int], int]]:
    c = _cluster_param(params)
    return c.ell, lambda i: c.sizes[i - 1]


# --- verbatim evaluators -----------------------------------------------------


def _tree_bounds(p):
    n = _tree_n(p)
    return Interval(F(n + 3), F(4 * n - 3))


def _cor_bounds(p):
    c = _cluster_param(p, ell=2)
    s = c.total
    return Interval(F(s + 3), F(4 * s - 3))


def _partite(p):
    return _int_param(p, "n", 1), _int_param(p, "r", 2)


def _p33_m1(p):
    n, r = _partite(p)
    return F(n, 6) * r * (r + 1) * (2 * r + 1)


def _p33_m2(p):
    n, r = _partite(p)
    return F(n * n, 2) * _S(2, r, lambda i: i * i * (i - 1))


def _p33_m3(p):
    n, r = _partite(p)
    return n * n * _S(1, r - 1, lambda i: i * (r - 1))


def _l34_m2(p):
    n, r = _partite(p)
    return F(n * n * (2 * r**4 - r * (2 * r + 1) * (r + 3)), 24)


def _l34_m3(p):
    n, r = _partite(p)
    return F(n * n * r * (r - 1) ** 2, 2)


def _m1_min(p):
    L, th = _theta(p)
    return _S(1, L, lambda i: th(i) * i * i)


def _m1_max(p):
    L, th = _theta(p)
    return _S(1, L, lambda i: th(i) * (L - (i - 1)) ** 2)


def _p35_m2_min(p):
    L, th = _theta(p)
    return 2 * (L - 1) + _S(2, L, lambda i: th(i) * i)


def _p35_m2_min_alt(p):
    L, th = _theta(p)
    return 2 * (th(1) - 1) + _S(2, L, lambda i: th(i) * i)


def _p35_m2_max(p):
    L, th = _theta(p)
    return L * (L - 1) ** 2 + _S(2, L, lambda i: th(i) * L * (L - (i - 1)))


def _p35_m3_min(p):
    L, th = _theta(p)
    return (L - 1) + _S(2, L, lambda i: th(i) * (i - 1))


def _p35_m3_max(p):
    L, th = _theta(p)
    return (L - 1) ** 2 + _S(2, L, lambda i: th(i) * (L - (i - 1)))


def _c36_clique_m2_min(L: int) -> Fraction:
    return _SS(2, L - 1, lambda j: j + 1, lambda j: L, lambda j, i: j * i)


def _c36_clique_m2_max(L: int) -> Fraction:
    return _SS(1, L - 2, lambda j: j + 1, lambda j: L - 1, lambda j, i: j * i)


def _c36_clique_m3(L: int) -> Fraction:
    return _SS(2, L - 2, lambda j: j + 1, lambda j: L - 1, lambda j, i: i * (L + 1 - 2 * i))


def _ell_of(p) -> int:
    return _cluster_param(p).ell


def _c36_m2_min(p):
    return _p35_m2_min(p) + _c36_clique_m2_min(_ell_of(p))


def _c36_m2_max(p):
    return _p35_m2_max(p) + _c36_clique_m2_max(_ell_of(p))


def _c36_m3_min(p):
    return _p35_m3_min(p) + _c36_clique_m3(_ell_of(p))


def _c36_m3_max(p):
    return _p35_m3_max(p) + _c36_clique_m3(_ell_of(p))


def _p37_m2_min(p):
    L, th = _theta(p)
    return 2 * (th(1) - 1) + _S(1, L - 1, lambda i: i * (i + 1) * th(i + 1))


def _p37_m2_max(p):
    L, th = _theta(p)
    return L * (L - 1) * (th(1) - 1) + _S(1, L - 1, lambda i: i * (i + 1) * th(L - (i - 1)))


def _p37_m3_min(p):
    L, th = _theta(p)
    return _S(1, L, th) - L


def _p37_m3_max(p):
    L, th = _theta(p)
    return (th(1) - 1) ** 2 + _S(2, L, lambda i: (L - (i - 1)) * th(i))


def _c38_clique_m2(L: int) -> Fraction:
    return _SS(1, L - 2, lambda j: j + 2, lambda j: L, lambda j, i: j * i)


def _triangular_sum(jlo: int, jhi: int) -> Fraction:
    # sum_{j} sum_{i=1}^{j} i
    return _SS(jlo, jhi, lambda j: 1, lambda j: j, lambda j, i: i)


def _c38_m2_min(p):
    return _p37_m2_min(p) + _c38_clique_m2(_ell_of(p))


def _c38_m2_max(p):
    return _p37_m2_max(p) + _c38_clique_m2(_ell_of(p))


def _c38_m3_min(p):
    L, th = _theta(p)
    return _S(1, L, th) - L + _triangular_sum(1, L - 1) - (L - 2)


def _c38_m3_max(p):
    L = _ell_of(p)
    return _p37_m3_max(p) + _triangular_sum(1, L - 2)


def _ell(p) -> int:
    return _int_param(p, "l", 1)


# mirror naturals, theta_i = l - (i - 1)


def _t41_1_m1_min(p):
    L = _ell(p)
    return _S(1, L, lambda i: (L - (i - 1)) * i * i)


def _t41_1_m1_max(p):
    L = _ell(p)
    return _S(1, L, lambda i: (L - (i - 1)) ** 3)


def _t41_1_m2_min(p):
    L = _ell(p)
    return 2 * (L - 1) + _S(2, L, lambda i: i * (L - (i - 1))) + _c36_clique_m2_min(L)


def _t41_1_m2_max(p):
    L = _ell(p)
    return L * (L - 1) ** 2 + _S(2, L, lambda i: L * (L - (i - 1)) ** 2) + _c36_clique_m2_max(L)


def _t41_1_m3_min(p):
    L = _ell(p)
    return (L - 1) + _S(2, L, lambda i: (i - 1) * (L - (i - 1))) + _c36_clique_m3(L)


def _t41_1_m3_max(p):
    L = _ell(p)
    return (L - 1) ** 2 + _S(2, L, lambda i: (L - (i - 1)) ** 2) + _c36_clique_m3(L)


def _t41_2_m2_min(p):
    L = _ell(p)
    return 2 * (L - 1) + _S(1, L - 1, lambda i: i * (i + 1) * (L - i)) + _c38_clique_m2(L)


def _t41_2_m2_max(p):
    L = _ell(p)
    return L * (L - 1) * (L - 1) + _S(1, L - 1, lambda i: 2 * i * (i + 1) * (i - 1)) + _c38_clique_m2(L)


def _t41_2_m3_min(p):
    L = _ell(p)
    return _S(1, L, lambda i: L - (i - 1)) - L + _triangular_sum(1, L - 1) - (L - 2)


def _t41_2_m3_max(p):
    L = _ell(p)
    return (L - 1) ** 2 + _S(2, L, lambda i: (L - (i - 1)) ** 2) + _triangular_sum(1, L - 2)


def _r42(p):
    L = _ell(p)
    return F(L**4 + 4 * L**3 + 5 * L**2 + 2 * L, 12)


# mirror Fibonacci, theta_i = f_{l - (i - 1)}


def _fm(L: int, i: int) -> int:
    return fibonacci(L - (i - 1))


def _t43_m1_min(p):
    L = _ell(p)
    return _S(1, L, lambda i: _fm(L, i) * i * i)


def _t43_m1_max(p):
    L = _ell(p)
    return _S(1, L, lambda i: _fm(L, i) * (L - (i - 1)) ** 2)


def _t43_1_m2_min(p):
    L = _ell(p)
    return 2 * (fibonacci(L) - 1) + _S(2, L, lambda i: i * _fm(L, i)) + _c36_clique_m2_min(L)


def _t43_1_m2_max(p):
    L = _ell(p)
    return (
        L * (fibonacci(L) - 1) ** 2
        + _S(2, L, lambda i: _fm(L, i) * L * (L - (i - 1)))
        + _c36_clique_m2_max(L)
    )


def _t43_1_m3_min(p):
    L = _ell(p)
    return (L - 1) + _S(2, L, lambda i: _fm(L, i) * (i - 1)) + _c36_clique_m3(L)


def _t43_1_m3_max(p):
    L = _ell(p)
    return (L - 1) ** 2 + _S(2, L, lambda i: _fm(L, i) * (L - (i - 1))) + _c36_clique_m3(L)


def _t43_2_m2_min(p):
    L = _ell(p)
    return 2 * (fibonacci(L) - 1) + _S(1, L - 1, lambda i: fibonacci(i - 1) * i * (i + 1)) + _c38_clique_m2(L)


def _t43_2_m2_max(p):
    L = _ell(p)
    return (
        L * (L - 1) * (fibonacci(L) - 1)
        + _S(1, L - 1, lambda i: fibonacci(i) * i * (i + 1))
        + _c38_clique_m2(L)
    )


def _t43_2_m3_min(p):
    L = _ell(p)
    return _S(1, L, lambda i: _fm(L, i)) - L + _triangular_sum(1, L - 1) - (L - 2)


def _t43_2_m3_max(p):
    L = _ell(p)
    return (
        (fibonacci(L) - 1) ** 2
        + _S(2, L, lambda i: _fm(L, i) * (L - (i - 1)))
        + _triangular_sum(1, L - 2)
    )


def _fib_range(p) -> tuple[int, int]:
    a, L = _int_param(p, "a", 1), _int_param(p, "l", 1)
    if a > L:
        raise _bad("need a ≤ l")
    return a, L


def _fib_sum(p):
    a, L = _fib_range(p)
    return F(fibonacci(L + 2) - fibonacci(a + 1))


def _fib_sumsq(p):
    L = _ell(p)
    return F(fibonacci(L + 1) * fibonacci(L + 2))


def _fib_sumcube(p):
    L = _ell(p)
    return F(fibonacci(3 * L + 2) + 6 * (-1) ** (L + 1) * fibonacci(L - 1) + 5)


def _fib_sumquad(p):
    L = _ell(p)
    return F(fibonacci(4 * L + 2) + 4 * (-1) ** (L + 1) * fibonacci(2 * L + 1) + 6 * L + 3)


# --- oracles -----------------------------------------------------------------


@lru_cache(maxsize=4096)
def _extrema(kind: str, sizes: tuple[int, ...], limit: int | None) -> ZagrebExtrema:
    cluster = ColourCluster(sizes)
    if cluster.ell == 1:
        cg = emb.null_embodiment(cluster)
    else:
        cg = emb.embody(kind, cluster)
    return extremal_indices(cg, limit=limit)


def _pick(ext: ZagrebExtrema, index: int, which: str) -> Fraction:
    e = ext.index(index)
    return F(e.min if which == "min" else e.max)


def _tree_oracle(p, limit):
    _tree_n(p)
    ext = extremal_indices(tree_from_prufer(p["prufer"]), limit=limit)
    return ext


def _oracle_tree_m1(p, limit):
    e = _tree_oracle(p, limit).m1
    return Interval(F(e.min), F(e.max))


def _oracle_tree_m(k):
    def oracle(p, limit):
        e = _tree_oracle(p, limit).index(k)
        return Interval(F(e.min), F(e.max))

    return oracle


def _oracle_cor(p, limit):
    c = _cluster_param(p, ell=2)
    e = _extrema("type1_tree", c.sizes, limit).m1
    return Interval(F(e.min), F(e.max))


def _oracle_partite(k):
    def oracle(p, limit):
        n, r = _partite(p)
        cg = emb.multipartite_max(ColourCluster((n,) * r))
        return F(chromatic_indices(cg).as_tuple()[k - 1])

    return oracle


def _oracle_cluster(kind, k, which):
    def oracle(p, limit):
        c = _cluster_param(p)
        return _pick(_extrema(kind, c.sizes, limit), k, which)

    return oracle


def _oracle_seq(seq, kind, k, which):
    def oracle(p, limit):
        L = _ell(p)
        c = sequence_cluster(seq, L)
        return _pick(_extrema(kind, c.sizes, limit), k, which)

    return oracle


def _direct_fib_power(power):
    def oracle(p, limit):
        L = _ell(p)
        return F(sum(fibonacci(i) ** power for i in range(1, L + 1)))

    return oracle


def _oracle_fib_sum(p, limit):
    a, L = _fib_range(p)
    return F(sum(fibonacci(i) for i in range(a, L + 1)))


# --- registry ----------------------------------------------------------------


@dataclass(frozen=True)
class FormulaSpec:
    schema: str
    evaluate: Callable[[dict], Value]
    oracle: Callable[[dict, int | None], Value]
    bound: bool = False
    reading: str = ""

    @property
    def interpreted(self) -> bool:
        return bool(self.reading)


_EMPTY_RANGE = "double sums read as printed; a sum whose upper limit is below its lower limit is empty"
_I_EQ_I = "inner sum printed with lower limit i=i; read as i=1"
_ALT_FIRST = (
    "first term read as 2(r1 - 1), counting the class-1 leaves on v_{2,1}, "
    "instead of the printed 2(l - 1)"
)
_FINAL_FORM = "final simplified form used; the intermediate expression has unparseable limits"


def _type_family(prefix: str, kind: str, entries: dict) -> dict:
    out = {}
    for suffix, (fn, reading) in entries.items():
        k = int(suffix[1])
        which = suffix.split("_")[1].lower()
        out[FormulaId(f"{prefix}_{suffix}")] = FormulaSpec(
            SCHEMA_CLUSTER, fn, _oracle_cluster(kind, k, which), reading=reading
        )
    return out


def _seq_family(prefix: str, seq: str, entries: dict) -> dict:
    out = {}
    for suffix, (fn, reading) in entries.items():
        tkind, rest = suffix.split("_", 1)
        k = int(rest[1])
        which = rest.split("_")[1].lower()
        kind = f"{tkind.lower()}_complete"
        out[FormulaId(f"{prefix}_{suffix}")] = FormulaSpec(
            SCHEMA_ELL, fn, _oracle_seq(seq, kind, k, which), reading=reading
        )
    return out


FORMULAS: dict[FormulaId, FormulaSpec] = {
    FormulaId.TREE_M1_BOUNDS: FormulaSpec(SCHEMA_TREE, _tree_bounds, _oracle_tree_m1, bound=True),
    FormulaId.TREE_M2: FormulaSpec(SCHEMA_TREE, lambda p: F(2 * (_tree_n(p) - 1)), _oracle_tree_m(2)),
    FormulaId.TREE_M3: FormulaSpec(SCHEMA_TREE, lambda p: F(_tree_n(p) - 1), _oracle_tree_m(3)),
    FormulaId.COR_L2_BOUNDS: FormulaSpec(SCHEMA_L2, _cor_bounds, _oracle_cor, bound=True),
    FormulaId.P33_M1: FormulaSpec(SCHEMA_PARTITE, _p33_m1, _oracle_partite(1)),
    FormulaId.P33_M2: FormulaSpec(SCHEMA_PARTITE, _p33_m2, _oracle_partite(2)),
    FormulaId.P33_M3: FormulaSpec(SCHEMA_PARTITE, _p33_m3, _oracle_partite(3)),
    FormulaId.L34_M2_CLOSED: FormulaSpec(SCHEMA_PARTITE, _l34_m2, _oracle_partite(2)),
    FormulaId.L34_M3_CLOSED: FormulaSpec(SCHEMA_PARTITE, _l34_m3, _oracle_partite(3)),
}
FORMULAS.update(
    _type_family(
        "P35",
        "type1_tree",
        {
            "M1_MIN": (_m1_min, ""),
            "M1_MAX": (_m1_max, ""),
            "M2_MIN": (_p35_m2_min, ""),
            "M2_MIN_ALT": (_p35_m2_min_alt, _ALT_FIRST),
            "M2_MAX": (_p35_m2_max, ""),
            "M3_MIN": (_p35_m3_min, ""),
            "M3_MAX": (_p35_m3_max, ""),
        },
    )
)
FORMULAS.update(
    _type_family(
        "C36",
        "type1_complete",
        {
            "M1_MIN": (_m1_min, ""),
            "M1_MAX": (_m1_max, ""),
            "M2_MIN": (_c36_m2_min, _EMPTY_RANGE),
            "M2_MAX": (_c36_m2_max, _EMPTY_RANGE),
            "M3_MIN": (_c36_m3_min, _EMPTY_RANGE),
            "M3_MAX": (_c36_m3_max, _EMPTY_RANGE),
        },
    )
)
FORMULAS.update(
    _type_family(
        "P37",
        "type2_tree",
        {
            "M1_MIN": (_m1_min, ""),
            "M1_MAX": (_m1_max, ""),
            "M2_MIN": (_p37_m2_min, ""),
            "M2_MAX": (_p37_m2_max, ""),
            "M3_MIN": (_p37_m3_min, ""),
            "M3_MAX": (_p37_m3_max, ""),
        },
    )
)
FORMULAS.update(
    _type_family(
        "C38",
        "type2_complete",
        {
            "M1_MIN": (_m1_min, ""),
            "M1_MAX": (_m1_max, ""),
            "M2_MIN": (_c38_m2_min, ""),
            "M2_MAX": (_c38_m2_max, ""),
            "M3_MIN": (_c38_m3_min, _FINAL_FORM),
            "M3_MAX": (_c38_m3_max, _I_EQ_I),
        },
    )
)
FORMULAS.update(
    _seq_family(
        "T41",
        "s1",
        {
            "TYPE1_M1_MIN": (_t41_1_m1_min, ""),
            "TYPE1_M1_MAX": (_t41_1_m1_max, ""),
            "TYPE1_M2_MIN": (_t41_1_m2_min, _EMPTY_RANGE),
            "TYPE1_M2_MAX": (_t41_1_m2_max, _EMPTY_RANGE),
            "TYPE1_M3_MIN": (_t41_1_m3_min, _EMPTY_RANGE),
            "TYPE1_M3_MAX": (_t41_1_m3_max, _EMPTY_RANGE),
            "TYPE2_M1_MIN": (_t41_1_m1_min, ""),
            "TYPE2_M1_MAX": (_t41_1_m1_max, "unbalanced parenthesis in (l-(i-1)^3 read as (l-(i-1))^3"),
            "TYPE2_M2_MIN": (_t41_2_m2_min, ""),
            "TYPE2_M2_MAX": (_t41_2_m2_max, ""),
            "TYPE2_M3_MIN": (_t41_2_m3_min, _FINAL_FORM),
            "TYPE2_M3_MAX": (_t41_2_m3_max, _I_EQ_I),
        },
    )
)
FORMULAS[FormulaId.R42_M1MIN_CLOSED] = FormulaSpec(
    SCHEMA_ELL, _r42, _oracle_seq("s1", "type1_complete", 1, "min")
)
FORMULAS.update(
    _seq_family(
        "T43",
        "s2",
        {
            "TYPE1_M1_MIN": (_t43_m1_min, ""),
            "TYPE1_M1_MAX": (_t43_m1_max, ""),
            "TYPE1_M2_MIN": (_t43_1_m2_min, _EMPTY_RANGE),
            "TYPE1_M2_MAX": (_t43_1_m2_max, _EMPTY_RANGE),
            "TYPE1_M3_MIN": (_t43_1_m3_min, _EMPTY_RANGE),
            "TYPE1_M3_MAX": (_t43_1_m3_max, _EMPTY_RANGE),
            "TYPE2_M1_MIN": (_t43_m1_min, ""),
            "TYPE2_M1_MAX": (_t43_m1_max, ""),
            "TYPE2_M2_MIN": (_t43_2_m2_min, ""),
            "TYPE2_M2_MAX": (_t43_2_m2_max, ""),
            "TYPE2_M3_MIN": (_t43_2_m3_min, _FINAL_FORM),
            "TYPE2_M3_MAX": (_t43_2_m3_max, _I_EQ_I),
        },
    )
)
FORMULAS.update(
    {
        FormulaId.FIB_SUM: FormulaSpec(SCHEMA_FIB_RANGE, _fib_sum, _oracle_fib_sum),
        FormulaId.FIB_SUMSQ: FormulaSpec(SCHEMA_ELL, _fib_sumsq, _direct_fib_power(2)),
        FormulaId.FIB_SUMCUBE: FormulaSpec(SCHEMA_ELL, _fib_sumcube, _direct_fib_power(3)),
        FormulaId.FIB_SUMQUAD: FormulaSpec(SCHEMA_ELL, _fib_sumquad, _direct_fib_power(4)),
    }
)
assert set(FORMULAS) == set(FormulaId)


def evaluate_formula(fid: FormulaId | str, params: dict) -> Value:
    return FORMULAS[FormulaId(fid)].evaluate(params)


def oracle_value(fid: FormulaId | str, params: dict, limit: int | None = None) -> Value:
    return FORMULAS[FormulaId(fid)].oracle(params, limit)


# --- comparison --------------------------------------------------------------


class Status(str, enum.Enum):
    MATCH = "match"
    MISMATCH = "mismatch"
    BOUND_HOLDS = "bound_holds"
    BOUND_VIOLATED = "bound_violated"
    ERROR = "error"


def _fmt(x: Value | None) -> str | None:
    if x is None:
        return None
    if isinstance(x, Interval) and x.lo == x.hi:
        return str(x.lo)
    return str(x)


@dataclass(frozen=True)
class ComparisonRecord:
    formula_id: FormulaId
    params: dict
    formula_value: Value | None
    oracle_value: Value | None
    status: Status
    interpreted: bool = False
    note: str = ""

    @property
    def formula_integral(self) -> bool:
        x = self.formula_value
        if isinstance(x, Interval):
            return x.lo.denominator == 1 and x.hi.denominator == 1
        return x is None or x.denominator == 1

    def sort_key(self) -> tuple:
        return (ID_ORDER[self.formula_id], [self.params[k] for k in sorted(self.params)])

    def to_json(self) -> dict:
        out = {
            "id": self.formula_id.value,
            "params": self.params,
            "formula": _fmt(self.formula_value),
            "oracle": _fmt(self.oracle_value),
            "status": self.status.value,
            "interpreted": self.interpreted,
        }
        if self.note:
            out["note"] = self.note
        return out


def _status(formula: Value, oracle: Value, bound: bool) -> Status:
    if bound:
        assert isinstance(formula, Interval) and isinstance(oracle, Interval)
        ok = formula.lo <= oracle.lo <= oracle.hi <= formula.hi
        return Status.BOUND_HOLDS if ok else Status.BOUND_VIOLATED
    if isinstance(oracle, Interval):
        # claimed min = max = formula
        ok = oracle.lo == oracle.hi == formula
    else:
        ok = formula == oracle
    return Status.MATCH if ok else Status.MISMATCH


def compare(fid: FormulaId | str, params: dict, limit: int | None = None) -> ComparisonRecord:
    fid = FormulaId(fid)
    spec = FORMULAS[fid]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        f = spec.evaluate(params)
        o = spec.oracle(params, limit)
    note = ""
    if isinstance(f, Fraction) and f.denominator != 1:
        note = "non-integer formula value"
    if spec.schema in (SCHEMA_CLUSTER, SCHEMA_L2):
        c = parse_cluster(params["cluster"])
        if not c.is_non_increasing():
            note = "cluster canonicalized to " + ",".join(map(str, canonicalize(c)[0].sizes))
    return ComparisonRecord(fid, params, f, o, _status(f, o, spec.bound), spec.interpreted, note)


def safe_compare(fid: FormulaId, params: dict, limit: int | None = None) -> ComparisonRecord:
    """``compare`` that turns errors into ``error`` records."""
    try:
        return compare(fid, params, limit)
    except ChromaError as exc:
        return ComparisonRecord(
            FormulaId(fid), params, None, None, Status.ERROR, FORMULAS[FormulaId(fid)].interpreted, str(exc)
        )


def readings() -> dict[str, str]:
    return {fid.value: s.reading for fid, s in FORMULAS.items() if s.reading}


def ids_with_prefix(*prefixes: str) -> list[FormulaId]:
    return [fid for fid in FormulaId if fid.value.startswith(prefixes)]
