"""Symbolic solver for the first Pontryagin class of the base curvature bundle.

A candidate class k1*t1 + k2*t2 + k3*t3 + k4*t4 is pushed around the root
orbit by composed pullbacks, then constrained three ways: triviality on the
base leaf sphere, vanishing of the total tangent-bundle class, and symmetry
of the focal-manifold part.  Gaussian elimination over the rationals leaves
a one-dimensional solution line spanned by (1, 1, -1, -1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .cohomring import (
    CohClass,
    T_OF_OMEGA,
    TSignedPerm,
    euler_class_d,
    t_actions,
)
from .rootsys import WORD_TABLE, RootSystem, build_d4

# Linear form over the unknowns (k1, k2, k3, k4).
LinForm = tuple[Fraction, Fraction, Fraction, Fraction]

# A t-basis class whose coefficients are linear forms in the unknowns:
# entry i is the coefficient form of t_{i+1}.
SymbolicClass = tuple[LinForm, LinForm, LinForm, LinForm]

ZERO_FORM: LinForm = (Fraction(0),) * 4


def _unit(i: int) -> LinForm:
    return tuple(Fraction(1 if j == i else 0) for j in range(4))


def generic_class() -> SymbolicClass:
    """k1*t1 + k2*t2 + k3*t3 + k4*t4 with independent unknowns."""
    return tuple(_unit(i) for i in range(4))


def _neg(f: LinForm) -> LinForm:
    return tuple(-x for x in f)


def _add(f: LinForm, g: LinForm) -> LinForm:
    return tuple(a + b for a, b in zip(f, g))


def apply_pullback(sp: TSignedPerm, cls: SymbolicClass) -> SymbolicClass:
    """t_j -> signs[j] * t_perm[j] applied to a symbolic class."""
    out: list[LinForm] = [ZERO_FORM] * 4
    for j in range(4):
        form = cls[j] if sp.signs[j] > 0 else _neg(cls[j])
        out[sp.perm[j]] = _add(out[sp.perm[j]], form)
    return tuple(out)


#: Pullback words carrying the base class to each root's class; the base
#: root itself has the empty word.
ORBIT_WORDS: dict[int, tuple[int, ...]] = {1: (), **WORD_TABLE}


def orbit_classes(
    rs: RootSystem, generic: SymbolicClass
) -> dict[int, SymbolicClass]:
    """The twelve symbolic classes, one per positive root.

    A word of pullbacks composes contravariantly as written: the rightmost
    starred generator acts first.
    """
    acts = t_actions(rs)
    out = {}
    for idx, word in sorted(ORBIT_WORDS.items()):
        cls = generic
        for label in reversed(word):
            cls = apply_pullback(acts[label], cls)
        out[idx] = cls
    return out


@dataclass(frozen=True)
class Equation:
    """Homogeneous linear equation over (k1, k2, k3, k4) with provenance."""

    coeffs: LinForm
    label: str

    def is_trivial(self) -> bool:
        return all(c == 0 for c in self.coeffs)


def leaf_sphere_constraint() -> Equation:
    """Stable triviality of the base leaf sphere: the pairing with b1 vanishes.

    The pairing of t_i with b_1 is the first omega coordinate of t_i.
    """
    coeffs = tuple(T_OF_OMEGA[i][0] for i in range(4))
    return Equation(coeffs, "leaf-sphere pairing <p1, b1> = 0")


def sum_zero_constraint(classes: dict[int, SymbolicClass]) -> list[Equation]:
    """Vanishing of the total class: each t coefficient of the sum is zero."""
    out = []
    for i in range(4):
        total = ZERO_FORM
        for cls in classes.values():
            total = _add(total, cls[i])
        out.append(Equation(total, f"sum of all 12 classes, t{i + 1} coefficient"))
    return out


_TRANSPOSITIONS = [
    TSignedPerm((1, 0, 2, 3), (1, 1, 1, 1)),
    TSignedPerm((0, 2, 1, 3), (1, 1, 1, 1)),
    TSignedPerm((0, 1, 3, 2), (1, 1, 1, 1)),
]


def focal_sum(classes: dict[int, SymbolicClass]) -> SymbolicClass:
    total: SymbolicClass = (ZERO_FORM,) * 4
    for idx in range(7, 13):
        total = tuple(_add(a, b) for a, b in zip(total, classes[idx]))
    return total


def symmetry_constraint(classes: dict[int, SymbolicClass]) -> list[Equation]:
    """The focal part (roots 7..12) must be a symmetric function of the t_i.

    Transpositions of adjacent variables generate the full symmetric group,
    so invariance under those three suffices.
    """
    total = focal_sum(classes)
    out = []
    for n, sp in enumerate(_TRANSPOSITIONS):
        image = apply_pullback(sp, total)
        for i in range(4):
            diff = _add(image[i], _neg(total[i]))
            out.append(
                Equation(
                    diff,
                    f"focal sum symmetry, swap t{n + 1}/t{n + 2}, t{i + 1} coefficient",
                )
            )
    return out


def assemble_constraints(
    rs: RootSystem, include_symmetry: bool = True
) -> list[Equation]:
    classes = orbit_classes(rs, generic_class())
    eqs = [leaf_sphere_constraint()]
    eqs += sum_zero_constraint(classes)
    if include_symmetry:
        eqs += symmetry_constraint(classes)
    return eqs


def solve(equations: list[Equation]) -> list[list[Fraction]]:
    """Exact nullspace basis of the constraint system over (k1..k4)."""
    rows = [list(eq.coeffs) for eq in equations]
    if not rows:
        return linalg.identity(4)
    return linalg.nullspace(rows)


# ---------------------------------------------------------------------------
# Oracle tables for the orbit classes.  Coefficients are symbols over the
# reduced unknowns: after the leaf-sphere constraint the first two unknowns
# coincide ("k"), and the second table additionally substitutes k3 = -k.

TABLE_AFTER_LEAF = {
    1: ("k", "k", "k3", "k4"),
    2: ("k3", "k", "k", "k4"),
    3: ("k3", "k4", "k", "k"),
    4: ("k", "k3", "k", "k4"),
    5: ("k3", "k", "k4", "k"),
    6: ("k", "k3", "k4", "k"),
    7: ("k", "-k", "k3", "-k4"),
    8: ("k3", "k", "-k", "-k4"),
    9: ("k3", "-k4", "k", "-k"),
    10: ("k", "k3", "-k", "-k4"),
    11: ("k3", "k", "-k4", "-k"),
    12: ("k", "k3", "-k4", "-k"),
}

TABLE_FOCAL = {
    7: ("k", "-k", "-k", "-k4"),
    8: ("-k", "k", "-k", "-k4"),
    9: ("-k", "-k4", "k", "-k"),
    10: ("k", "-k", "-k", "-k4"),
    11: ("-k", "k", "-k4", "-k"),
    12: ("k", "-k", "-k4", "-k"),
}

def _substitute(form: LinForm, k3_is_minus_k: bool) -> tuple[Fraction, Fraction, Fraction]:
    """Collapse (k1, k2, k3, k4) to coordinates over (k, k3, k4) with k1=k2=k.

    With ``k3_is_minus_k`` the k3 slot is folded into k and reported as zero.
    """
    k = form[0] + form[1]
    k3 = form[2]
    k4 = form[3]
    if k3_is_minus_k:
        k, k3 = k - k3, Fraction(0)
    return (k, k3, k4)


def _symbol_to_coords(sym: str, k3_is_minus_k: bool) -> tuple[Fraction, Fraction, Fraction]:
    sign = Fraction(-1 if sym.startswith("-") else 1)
    name = sym.lstrip("-")
    base = {"k": (1, 0, 0), "k3": (0, 1, 0), "k4": (0, 0, 1)}[name]
    coords = tuple(sign * Fraction(x) for x in base)
    if k3_is_minus_k and name == "k3":
        coords = (-sign, Fraction(0), Fraction(0))
    return coords


def check_orbit_table(classes: dict[int, SymbolicClass]) -> dict[int, bool]:
    """Match all twelve classes against the after-leaf-constraint table."""
    out = {}
    for idx, symbols in TABLE_AFTER_LEAF.items():
        got = [_substitute(f, False) for f in classes[idx]]
        want = [_symbol_to_coords(s, False) for s in symbols]
        out[idx] = got == want
    return out


def check_focal_table(classes: dict[int, SymbolicClass]) -> dict[int, bool]:
    """Match the six focal classes against the table with k3 eliminated."""
    out = {}
    for idx, symbols in TABLE_FOCAL.items():
        got = [_substitute(f, True) for f in classes[idx]]
        want = [_symbol_to_coords(s, True) for s in symbols]
        out[idx] = got == want
    return out


def focal_sum_reduced(classes: dict[int, SymbolicClass]) -> list[tuple[Fraction, Fraction, Fraction]]:
    """Focal sum over the reduced unknowns (k, k3=-k folded, k4)."""
    total = focal_sum(classes)
    return [_substitute(f, True) for f in total]


# ---------------------------------------------------------------------------
# Final classes of the distinguished 4-plane bundle.


def lemma8_classes(rs: RootSystem | None = None) -> tuple[CohClass, CohClass]:
    """Euler class and the unit-coefficient Pontryagin class in omega coords.

    Returns (euler, p1_unit) where the first Pontryagin class is
    2k * (omega_2 - omega_9), reported here per unit k.  The printed source
    for this conversion has a typo (a nonexistent basis symbol); the
    derivation fixes the last basis vector.
    """
    rs = rs or build_d4(4)
    eqs = assemble_constraints(rs)
    basis = solve(eqs)
    if len(basis) != 1:
        raise ValueError(f"solution space has dimension {len(basis)}, expected 1")
    v = basis[0]
    # normalize so the span is reported as (1, 1, -1, -1)
    scale = Fraction(1) / v[0]
    v = [x * scale for x in v]
    if v != [Fraction(1), Fraction(1), Fraction(-1), Fraction(-1)]:
        raise ValueError(f"unexpected solution line: {v}")
    from .cohomring import omega_from_t

    euler = euler_class_d(rs, 1)
    p1_unit = omega_from_t(CohClass("t", tuple(v)))
    return euler, p1_unit
