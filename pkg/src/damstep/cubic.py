"""Real-root extraction for cubic polynomials.

Closed-form solve (Cardano branch for one real root, trigonometric branch
for three) followed by a few Newton steps on the original polynomial; the
closed forms alone lose digits near double roots and the polish restores
them.
"""

from __future__ import annotations

import math

from .errors import DomainError

_NEWTON_STEPS = 3
# Window on the normalized discriminant for taking the double-root branch.
# Roots closer than roughly sqrt of this window (in scaled units) collapse
# to a reported double root; tighter detection is below double-precision
# discriminant noise.
_DOUBLE_ROOT_DISC = 1e-14


def _eval(c3: float, c2: float, c1: float, c0: float, x: float) -> float:
    return ((c3 * x + c2) * x + c1) * x + c0


def _polish(roots: list[float], c3: float, c2: float, c1: float, c0: float) -> list[float]:
    out = []
    for x in roots:
        p = _eval(c3, c2, c1, c0, x)
        for _ in range(_NEWTON_STEPS):
            dp = (3 * c3 * x + 2 * c2) * x + c1
            if dp == 0:
                break
            step = p / dp
            if not math.isfinite(step):
                break
            # near a double root the derivative is noise-sized; only accept
            # steps that actually reduce the residual
            p_next = _eval(c3, c2, c1, c0, x - step)
            if abs(p_next) >= abs(p):
                break
            x -= step
            p = p_next
        out.append(x)
    return out


def real_roots(c3: float, c2: float, c1: float, c0: float) -> list[float]:
    """All real roots of c3 x^3 + c2 x^2 + c1 x + c0 = 0, ascending.

    Double roots are reported twice, triple roots three times.
    """
    if c3 == 0:
        raise DomainError("leading coefficient of a cubic must be nonzero")
    p = c2 / c3
    q = c1 / c3
    r = c0 / c3
    # depressed form t^3 + a t + b with x = t - p/3
    a = q - p * p / 3
    b = 2 * p ** 3 / 27 - p * q / 3 + r
    shift = -p / 3

    scale = max(math.sqrt(abs(a)), abs(b) ** (1.0 / 3.0))
    if scale == 0:
        return [shift, shift, shift]
    an = a / (scale * scale)
    bn = b / (scale * scale * scale)
    disc = bn * bn / 4 + an ** 3 / 27

    if disc > _DOUBLE_ROOT_DISC:
        # one real root; pick the larger-magnitude cube-root argument first
        s = math.sqrt(disc)
        u3 = -bn / 2 - math.copysign(s, bn)
        u = math.copysign(abs(u3) ** (1.0 / 3.0), u3)
        v = 0.0 if u == 0 else -an / (3 * u)
        ts = [u + v]
    elif disc < -_DOUBLE_ROOT_DISC:
        m = 2 * math.sqrt(-an / 3)
        arg = 3 * bn / (an * m)
        theta = math.acos(min(1.0, max(-1.0, arg)))
        ts = [m * math.cos((theta - 2 * math.pi * k) / 3) for k in range(3)]
    else:
        # (t - td)^2 (t + 2 td): double root at td, simple root at -2 td
        td = -3 * bn / (2 * an)
        ts = [td, td, -2 * td]

    xs = _polish([t * scale + shift for t in ts], c3, c2, c1, c0)
    xs.sort()
    return xs


def largest_root_above(c3: float, c2: float, c1: float, c0: float, lo: float) -> float | None:
    """Maximum real root strictly greater than ``lo``, or None."""
    above = [x for x in real_roots(c3, c2, c1, c0) if x > lo]
    return max(above) if above else None
