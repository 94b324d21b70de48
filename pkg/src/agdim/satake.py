"""Classification catalog of the irreducible Hermitian factors.

Each catalog row couples a group case (one of the ten classical families
below) with the four integers the dimension estimates consume: the complex
dimension of its Hermitian symmetric space, the dimension of its distinguished
irreducible complex representation, the self-duality type of that
representation, and whether arithmetic anisotropy forces at least one compact
real factor.

The families and their parameter constraints:

=========  ==========================  =====================================
family     parameters                  constraint
=========  ==========================  =====================================
A1         (none)                      -
D4         (none)                      -
I          p, n                        n >= 3, 1 <= p <= floor(n/2)
Iprime     n, c                        n >= 4, 2 <= c <= n - 2
II         r                           r >= 2, r != 4
III1       r                           r >= 2
III2       r                           r >= 2
IV1even    p  (group SO(2p-2, 2))      p >= 3, p != 4
IV1odd     p  (group SO(2p-1, 2))      p >= 2
IV2        r                           r >= 3, r != 4
=========  ==========================  =====================================

The excluded parameters r = 4 (II, IV2) and p = 4 (IV1even) are absorbed by
the separate D4 row.  The catalog is immutable data; no representation theory
is computed here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

__all__ = [
    "SYMPLECTIC",
    "ORTHOGONAL",
    "NON_SELF_DUAL",
    "FAMILIES",
    "CaseLabel",
    "SatakeCase",
    "case",
    "classify",
    "hss_dimension",
    "rep_dimension",
    "duality_type",
    "min_compact_factors",
    "min_multiplicity",
    "iter_cases",
    "catalog_json",
]

SYMPLECTIC = "symplectic"
ORTHOGONAL = "orthogonal"
NON_SELF_DUAL = "non-self-dual"

# Family iteration order is fixed so that catalog exports are deterministic.
FAMILIES = ("A1", "D4", "I", "Iprime", "II", "III1", "III2", "IV1even", "IV1odd", "IV2")

_PARAM_NAMES: dict[str, tuple[str, ...]] = {
    "A1": (),
    "D4": (),
    "I": ("p", "n"),
    "Iprime": ("n", "c"),
    "II": ("r",),
    "III1": ("r",),
    "III2": ("r",),
    "IV1even": ("p",),
    "IV1odd": ("p",),
    "IV2": ("r",),
}


@dataclass(frozen=True, order=True)
class CaseLabel:
    """A catalog case: family name plus its integer parameters, validated
    against the family's constraint on construction."""

    family: str
    params: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        _validate(self.family, self.params)

    def param(self, name: str) -> int:
        return self.params[_PARAM_NAMES[self.family].index(name)]

    def params_dict(self) -> dict[str, int]:
        return dict(zip(_PARAM_NAMES[self.family], self.params))

    def __str__(self) -> str:
        if not self.params:
            return self.family
        inner = ", ".join(f"{k}={v}" for k, v in self.params_dict().items())
        return f"{self.family}({inner})"


def case(family: str, **params: int) -> CaseLabel:
    """Construct a validated label, e.g. ``case("I", p=3, n=7)``."""
    if family not in _PARAM_NAMES:
        raise ValueError(f"unknown case family {family!r} (known: {FAMILIES})")
    names = _PARAM_NAMES[family]
    if set(params) != set(names):
        raise ValueError(f"case {family} takes parameters {names} (got {tuple(params)})")
    return CaseLabel(family, tuple(params[name] for name in names))


def _validate(family: str, params: tuple[int, ...]) -> None:
    names = _PARAM_NAMES.get(family)
    if names is None:
        raise ValueError(f"unknown case family {family!r} (known: {FAMILIES})")
    if len(params) != len(names):
        raise ValueError(f"case {family} takes parameters {names} (got {params})")
    values = dict(zip(names, params))
    if family == "I":
        p, n = values["p"], values["n"]
        if n < 3:
            raise ValueError(f"case I requires n >= 3 (got n={n})")
        if not 1 <= p <= n // 2:
            raise ValueError(f"case I requires 1 <= p <= floor(n/2) (got p={p}, n={n})")
    elif family == "Iprime":
        n, c = values["n"], values["c"]
        if n < 4:
            raise ValueError(f"case Iprime requires n >= 4 (got n={n})")
        if not 2 <= c <= n - 2:
            raise ValueError(f"case Iprime requires 2 <= c <= n-2 (got c={c}, n={n})")
    elif family == "II":
        r = values["r"]
        if r < 2 or r == 4:
            raise ValueError(f"case II requires r >= 2 with r != 4 (got r={r})")
    elif family in ("III1", "III2"):
        r = values["r"]
        if r < 2:
            raise ValueError(f"case {family} requires r >= 2 (got r={r})")
    elif family == "IV1even":
        p = values["p"]
        if p < 3 or p == 4:
            raise ValueError(f"case IV1even requires p >= 3 with p != 4 (got p={p})")
    elif family == "IV1odd":
        p = values["p"]
        if p < 2:
            raise ValueError(f"case IV1odd requires p >= 2 (got p={p})")
    elif family == "IV2":
        r = values["r"]
        if r < 3 or r == 4:
            raise ValueError(f"case IV2 requires r >= 3 with r != 4 (got r={r})")


def hss_dimension(label: CaseLabel) -> int:
    """Complex dimension of the Hermitian symmetric space of the case."""
    f = label.family
    if f == "A1":
        return 1
    if f == "D4":
        return 6
    if f == "I":
        p, n = label.params
        return p * (n - p)
    if f == "Iprime":
        return label.param("n") - 1
    if f == "II":
        r = label.param("r")
        return r * (r - 1) // 2
    if f in ("III1", "III2"):
        r = label.param("r")
        return r * (r + 1) // 2
    if f == "IV1even":
        return 2 * label.param("p") - 2
    if f == "IV1odd":
        return 2 * label.param("p") - 1
    if f == "IV2":
        return 2 * label.param("r") - 2
    raise AssertionError(f"unhandled family {f}")


def rep_dimension(label: CaseLabel) -> int:
    """Dimension of the distinguished irreducible complex representation."""
    f = label.family
    if f == "A1":
        return 2
    if f == "D4":
        return 8
    if f == "I":
        return label.param("n")
    if f == "Iprime":
        return math.comb(label.param("n"), label.param("c"))
    if f in ("II", "III1", "III2"):
        return 2 * label.param("r")
    if f == "IV1even":
        return 2 ** (label.param("p") - 1)
    if f == "IV1odd":
        return 2 ** label.param("p")
    if f == "IV2":
        return 2 ** (label.param("r") - 1)
    raise AssertionError(f"unhandled family {f}")


def duality_type(label: CaseLabel) -> str:
    """Self-duality type of the representation: symplectic, orthogonal, or
    not self-dual."""
    f = label.family
    if f == "A1":
        return SYMPLECTIC
    if f == "D4":
        return ORTHOGONAL
    if f == "I":
        return NON_SELF_DUAL
    if f == "Iprime":
        n, c = label.param("n"), label.param("c")
        if 2 * c != n:
            return NON_SELF_DUAL
        return ORTHOGONAL if c % 2 == 0 else SYMPLECTIC
    if f == "II":
        return ORTHOGONAL
    if f in ("III1", "III2"):
        return SYMPLECTIC
    if f in ("IV1even", "IV2"):
        m = label.params[0] % 4
        if m == 2:
            return SYMPLECTIC
        if m == 0:
            return ORTHOGONAL
        return NON_SELF_DUAL
    if f == "IV1odd":
        m = label.param("p") % 4
        return ORTHOGONAL if m in (0, 3) else SYMPLECTIC
    raise AssertionError(f"unhandled family {f}")


def min_compact_factors(label: CaseLabel) -> int:
    """1 when anisotropy of the ambient rational group forces at least one
    compact real factor, 0 otherwise.

    This is data, not a computation: the local-global criteria apply to a
    symmetric bilinear form of rank >= 5, a Hermitian form of rank >= 3 over a
    CM field, a Hermitian form of rank >= 2 over a quaternion algebra, a
    Hermitian form of rank >= 3 over a larger division algebra, and a
    skew-Hermitian quaternionic form of rank >= 4.  Per family:

    * I/Iprime carry a CM-Hermitian form of rank n >= 3, so always 1
      (the division-algebra subfamilies that evade this live in
      :mod:`agdim.pairs` as their own pair families);
    * II and IV2 carry a skew-Hermitian quaternionic form of rank r, so 1
      exactly when r >= 4;
    * III2 carries a quaternionic Hermitian form of rank r >= 2, so always 1;
    * IV1even/IV1odd carry a symmetric form of rank 2p >= 6 resp. 2p+1 >= 5,
      so always 1;
    * III1 carries an alternating form, which is always isotropic, and A1 and
      D4 are not covered by the criteria, so these are 0.
    """
    f = label.family
    if f in ("I", "Iprime", "III2", "IV1even", "IV1odd"):
        return 1
    if f in ("II", "IV2"):
        return 1 if label.param("r") >= 4 else 0
    return 0


def min_multiplicity(duality: str) -> int:
    """Minimum isotypic multiplicity admissible for a rational symplectic
    representation with the given irreducible self-duality type: 1 when the
    summand is already symplectic, 2 (and even) otherwise."""
    if duality == SYMPLECTIC:
        return 1
    if duality in (ORTHOGONAL, NON_SELF_DUAL):
        return 2
    raise ValueError(f"unknown duality type {duality!r}")


@dataclass(frozen=True)
class SatakeCase:
    """One fully evaluated catalog row."""

    label: CaseLabel
    hss_dim: int
    rep_dim: int
    duality: str
    min_compact_factors: int


def classify(label: CaseLabel) -> SatakeCase:
    return SatakeCase(
        label=label,
        hss_dim=hss_dimension(label),
        rep_dim=rep_dimension(label),
        duality=duality_type(label),
        min_compact_factors=min_compact_factors(label),
    )


def iter_cases(max_rep_dim: int) -> Iterator[SatakeCase]:
    """All catalog rows with rep_dim <= max_rep_dim, in deterministic order
    (family order as in the module docstring, then ascending parameters)."""
    if max_rep_dim < 2:
        return
    yield classify(CaseLabel("A1"))
    if max_rep_dim >= 8:
        yield classify(CaseLabel("D4"))
    for n in range(3, max_rep_dim + 1):
        for p in range(1, n // 2 + 1):
            yield classify(CaseLabel("I", (p, n)))
    n = 4
    while n * (n - 1) // 2 <= max_rep_dim:
        for c in range(2, n - 1):
            if math.comb(n, c) <= max_rep_dim:
                yield classify(CaseLabel("Iprime", (n, c)))
        n += 1
    for r in range(2, max_rep_dim // 2 + 1):
        if r != 4:
            yield classify(CaseLabel("II", (r,)))
    for family in ("III1", "III2"):
        for r in range(2, max_rep_dim // 2 + 1):
            yield classify(CaseLabel(family, (r,)))
    p = 3
    while 2 ** (p - 1) <= max_rep_dim:
        if p != 4:
            yield classify(CaseLabel("IV1even", (p,)))
        p += 1
    p = 2
    while 2**p <= max_rep_dim:
        yield classify(CaseLabel("IV1odd", (p,)))
        p += 1
    r = 3
    while 2 ** (r - 1) <= max_rep_dim:
        if r != 4:
            yield classify(CaseLabel("IV2", (r,)))
        r += 1


def catalog_json(max_rep_dim: int) -> list[dict]:
    """Catalog rows as JSON-ready records with fixed field names and order:
    case, params, hss_dim, rep_dim, duality, min_compact_factors."""
    return [
        {
            "case": c.label.family,
            "params": c.label.params_dict(),
            "hss_dim": c.hss_dim,
            "rep_dim": c.rep_dim,
            "duality": c.duality,
            "min_compact_factors": c.min_compact_factors,
        }
        for c in iter_cases(max_rep_dim)
    ]
