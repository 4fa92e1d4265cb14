"""One-dimensional chaotic maps and dynamics diagnostics.

The primary map, AHYB, is a piecewise construction on (0, 4) with a single
control parameter A in (0, 2):

    x' = (2 + A) * x        0.0 < x < 1.5
         A + x^0.9          1.5 <= x < 3.0
         x * (A - x)        3.0 <= x < 4.0

The classic logistic map ``b*x*(1-x)`` (b in (0, 4]) and sine map
``beta*sin(pi*x)`` (beta in (0, 4]) are included as reference systems.

``map_step`` returns the raw formula value, which for the AHYB map may leave
(0, 4) entirely (branch 3 is negative for x > A).  Orbit-level routines
(``iterate``, ``lyapunov``, ``bifurcation_scan``) therefore follow every AHYB
step with the renormalization fold

    x <- 4 * frac(|round15(x)|)

which is the same fold the S-box generator applies, so emitted AHYB states
always lie in [0, 4).  Reference maps are never folded.

Branch intervals are half-open exactly as written above; the two published
variants of branch 3 (``x*(A-x)`` in the closed formula, ``A-x`` in the
generator pseudocode) are both available via ``BranchMode``.

Everything here is a pure function of its arguments: same inputs, bit-identical
outputs on one platform.
"""

import enum
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateOrbitWarning,
    DerivativeSkipWarning,
    DerivativeZero,
    NonFiniteState,
    ParamOutOfRange,
)

# Reseed value for a folded state that lands exactly on 0 (absorbing point of
# branch 1); see DegenerateOrbitWarning.
RESEED = 1e-12

# Samples with |f'| below this are skipped in Lyapunov sums.
DERIVATIVE_FLOOR = 1e-300


class MapKind(enum.Enum):
    AHYB = "ahyb"
    LOGISTIC = "logistic"
    SINE = "sine"


class BranchMode(enum.Enum):
    """Which variant of the third AHYB branch to use.

    EQUATION1 is the closed-form definition x*(A-x); ALGORITHM1 is the
    generator pseudocode's A-x.  Golden files record the mode that
    produced them.
    """

    EQUATION1 = "eq1"
    ALGORITHM1 = "alg1"


# (low, high, high_inclusive) for the control parameter of each map.
PARAM_RANGES = {
    MapKind.AHYB: (0.0, 2.0, False),
    MapKind.LOGISTIC: (0.0, 4.0, True),
    MapKind.SINE: (0.0, 4.0, True),
}


def check_param(kind: MapKind, control: float) -> None:
    """Raise ParamOutOfRange unless `control` is in the declared range."""
    lo, hi, hi_inclusive = PARAM_RANGES[kind]
    ok = control > lo and (control <= hi if hi_inclusive else control < hi)
    if not (math.isfinite(control) and ok):
        bracket = "]" if hi_inclusive else ")"
        raise ParamOutOfRange(
            f"{kind.value} control parameter must lie in ({lo:g}, {hi:g}{bracket}, "
            f"got {control!r}"
        )


@dataclass(frozen=True)
class MapParams:
    """A map kind plus its control parameter, validated on construction."""

    kind: MapKind
    control: float
    branch_mode: BranchMode = BranchMode.EQUATION1

    def __post_init__(self):
        check_param(self.kind, self.control)


def round15(x: float) -> float:
    """Round to 15 fractional digits, halves away from zero.

    Implemented as round(x * 1e15) / 1e15 in binary floating point; the
    residual binary error is accepted (single-platform determinism).
    """
    v = x * 1e15
    if v >= 0.0:
        return math.floor(v + 0.5) / 1e15
    return math.ceil(v - 0.5) / 1e15


def renormalize(x: float) -> float:
    """Fold any finite value into [0, 4): 4 * frac(|round15(x)|)."""
    if not math.isfinite(x):
        raise NonFiniteState(f"cannot renormalize non-finite value {x!r}")
    return 4.0 * (abs(round15(x)) % 1.0)


def map_step(params: MapParams, x: float) -> float:
    """One raw iteration of the map; no folding.

    For AHYB the caller is expected to keep x in (0, 4); the returned value
    may still escape that interval (renormalize it before the next step).
    """
    if not math.isfinite(x):
        raise NonFiniteState(f"map_step received non-finite state {x!r}")
    a = params.control
    if params.kind is MapKind.AHYB:
        if x < 1.5:
            y = (2.0 + a) * x
        elif x < 3.0:
            y = a + x**0.9
        elif params.branch_mode is BranchMode.ALGORITHM1:
            y = a - x
        else:
            y = x * (a - x)
    elif params.kind is MapKind.LOGISTIC:
        y = a * x * (1.0 - x)
    else:
        y = a * math.sin(math.pi * x)
    if not math.isfinite(y):
        raise NonFiniteState(f"map_step produced non-finite value from x={x!r}")
    return y


def map_derivative(params: MapParams, x: float) -> float:
    """d/dx of map_step at x, branch-consistent with map_step."""
    if not math.isfinite(x):
        raise NonFiniteState(f"map_derivative received non-finite state {x!r}")
    a = params.control
    if params.kind is MapKind.AHYB:
        if x < 1.5:
            d = 2.0 + a
        elif x < 3.0:
            d = 0.9 * x**-0.1
        elif params.branch_mode is BranchMode.ALGORITHM1:
            d = -1.0
        else:
            d = a - 2.0 * x
    elif params.kind is MapKind.LOGISTIC:
        d = a * (1.0 - 2.0 * x)
    else:
        d = a * math.pi * math.cos(math.pi * x)
    if not math.isfinite(d):
        raise NonFiniteState(f"map_derivative produced non-finite value at x={x!r}")
    return d


def _advance(params: MapParams, x: float, fold: bool) -> float:
    x = map_step(params, x)
    if fold:
        x = renormalize(x)
        if x == 0.0:
            warnings.warn(
                "folded state hit 0 exactly; reseeding to 1e-12",
                DegenerateOrbitWarning,
                stacklevel=3,
            )
            x = RESEED
    return x


def iterate(params: MapParams, x0: float, transient: int = 0, n: int = 1000) -> np.ndarray:
    """Sample an orbit: discard `transient` steps, then record `n` states.

    Returns a float64 array of the n post-transient states (entry i is the
    state after transient + i + 1 steps).  AHYB states are post-fold and lie
    in [0, 4); reference-map states are raw.
    """
    if transient < 0 or n < 0:
        raise ValueError("transient and n must be non-negative")
    fold = params.kind is MapKind.AHYB
    x = float(x0)
    for _ in range(transient):
        x = _advance(params, x, fold)
    out = np.empty(n, dtype=np.float64)
    for i in range(n):
        x = _advance(params, x, fold)
        out[i] = x
    return out


def bifurcation_scan(
    kind: MapKind,
    param_lo: float,
    param_hi: float,
    steps: int = 1000,
    x0: float = 0.3,
    transient: int = 1000,
    samples: int = 200,
    branch_mode: BranchMode = BranchMode.EQUATION1,
) -> np.ndarray:
    """Asymptotic states over an evenly spaced parameter sweep.

    Returns an (steps * samples, 2) array with columns (param, state),
    ordered by (param, iteration index).  steps == 1 degenerates to a single
    iterate at param_lo.
    """
    if steps < 1:
        raise ValueError("steps must be >= 1")
    check_param(kind, param_lo)
    check_param(kind, param_hi)
    if param_lo > param_hi:
        raise ParamOutOfRange(
            f"param_lo must not exceed param_hi, got {param_lo!r} > {param_hi!r}"
        )
    values = np.linspace(param_lo, param_hi, steps)
    out = np.empty((steps * samples, 2), dtype=np.float64)
    for k, p in enumerate(values):
        params = MapParams(kind, float(p), branch_mode)
        states = iterate(params, x0, transient, samples)
        block = out[k * samples : (k + 1) * samples]
        block[:, 0] = p
        block[:, 1] = states
    return out


def lyapunov(params: MapParams, x0: float, transient: int = 1000, n: int = 100000) -> float:
    """Lyapunov exponent estimate: (1/n) * sum of ln|f'(x_i)|.

    Uses map_derivative along the same (post-fold, for AHYB) orbit as
    iterate.  Samples with |f'| < 1e-300 are skipped and the sum is
    renormalized by the count actually used; a DerivativeSkipWarning is
    attached, and DerivativeZero is raised if more than 1% of samples were
    skipped.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    fold = params.kind is MapKind.AHYB
    x = float(x0)
    for _ in range(transient):
        x = _advance(params, x, fold)
    total = 0.0
    used = 0
    skipped = 0
    for _ in range(n):
        d = abs(map_derivative(params, x))
        if d < DERIVATIVE_FLOOR:
            skipped += 1
        else:
            total += math.log(d)
            used += 1
        x = _advance(params, x, fold)
    if skipped:
        if skipped > 0.01 * n:
            raise DerivativeZero(
                f"{skipped} of {n} samples had |f'| < {DERIVATIVE_FLOOR:g}"
            )
        warnings.warn(
            f"skipped {skipped} of {n} Lyapunov samples with |f'| < {DERIVATIVE_FLOOR:g}",
            DerivativeSkipWarning,
            stacklevel=2,
        )
    return total / used
