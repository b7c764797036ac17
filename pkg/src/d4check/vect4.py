"""Arithmetic model of rank-4 and rank-5 bundles over the 4-sphere.

A rank-4 bundle is identified with the integer pair (a, b) of its Euler and
first Pontryagin numbers; the realizable pairs are exactly those with
2a - b divisible by 4.  Stabilization forgets the Euler number.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SphereBundleClass:
    a: int  # Euler number
    b: int  # first Pontryagin number


@dataclass(frozen=True)
class StableBundleClass:
    p1: int

    def __post_init__(self):
        if self.p1 % 2 != 0:
            raise ValueError(f"stable class must have even Pontryagin number: {self.p1}")


def tau() -> SphereBundleClass:
    """The tangent bundle of the 4-sphere."""
    return SphereBundleClass(2, 0)


def gamma() -> SphereBundleClass:
    """Real reduction of the quaternionic line bundle."""
    return SphereBundleClass(1, -2)


def zero() -> SphereBundleClass:
    return SphereBundleClass(0, 0)


def add(x: SphereBundleClass, y: SphereBundleClass) -> SphereBundleClass:
    return SphereBundleClass(x.a + y.a, x.b + y.b)


def neg(x: SphereBundleClass) -> SphereBundleClass:
    return SphereBundleClass(-x.a, -x.b)


def scalar(n: int, x: SphereBundleClass) -> SphereBundleClass:
    return SphereBundleClass(n * x.a, n * x.b)


def g_mod4(x: SphereBundleClass) -> int:
    return (2 * x.a - x.b) % 4


def is_realizable(x: SphereBundleClass) -> bool:
    """A pair is a genuine rank-4 bundle iff 2a - b vanishes mod 4."""
    return g_mod4(x) == 0


def decompose(x: SphereBundleClass) -> tuple[int, int]:
    """Write a realizable class as an integer combination of tau and gamma."""
    if not is_realizable(x):
        raise ValueError(f"class {x} is not realizable")
    n_gamma, rem_g = divmod(-x.b, 2)
    n_tau, rem_t = divmod(2 * x.a + x.b, 4)
    if rem_g or rem_t:
        raise ValueError(f"class {x} has no integral decomposition")
    return n_tau, n_gamma


def compose(n_tau: int, n_gamma: int) -> SphereBundleClass:
    return add(scalar(n_tau, tau()), scalar(n_gamma, gamma()))


def stabilize(x: SphereBundleClass) -> StableBundleClass:
    """Add a trivial line: only the Pontryagin number survives."""
    if not is_realizable(x):
        raise ValueError(f"class {x} is not realizable")
    return StableBundleClass(x.b)


def verify_exact_sequence(window: int = 20) -> dict[str, bool]:
    """Window checks of the stabilization sequence over |a|, |b| <= window.

    The kernel of stabilization must be the multiples of the tangent class,
    its image must be exactly the even integers, and the realizable pairs
    must form a subgroup of index 4.
    """
    realizable = [
        SphereBundleClass(a, b)
        for a in range(-window, window + 1)
        for b in range(-window, window + 1)
        if is_realizable(SphereBundleClass(a, b))
    ]

    kernel = {x for x in realizable if stabilize(x).p1 == 0}
    tau_multiples = {
        scalar(n, tau()) for n in range(-window, window + 1)
    }
    kernel_ok = kernel == {x for x in tau_multiples if abs(x.a) <= window}

    image = {stabilize(x).p1 for x in realizable}
    image_ok = image == set(range(-window, window + 1, 2)) if window % 2 == 0 else all(
        p % 2 == 0 for p in image
    )

    closure_ok = all(
        is_realizable(add(x, y)) and is_realizable(neg(x))
        for x in realizable[:40]
        for y in realizable[:40]
    )

    index_ok = (
        sum(
            1
            for a in range(4)
            for b in range(4)
            if is_realizable(SphereBundleClass(a, b))
        )
        == 4
    )

    roundtrip_ok = all(
        decompose(compose(n, m)) == (n, m)
        for n in range(-10, 11)
        for m in range(-10, 11)
    )

    return {
        "kernel_is_tau_multiples": kernel_ok,
        "image_is_even_integers": image_ok,
        "realizable_closed_under_group_ops": closure_ok,
        "realizable_has_index_4": index_ok,
        "decompose_roundtrip": roundtrip_ok,
    }
