"""High-precision real helpers built on mpmath.

Precision is expressed everywhere in significant decimal digits.  The one
non-obvious piece is ``compare_int``: bound checks compare an exact integer
against a transcendental expression, and a comparison decided within one
unit in the last place of the evaluated side is re-run at doubled precision
so rounding noise can never flip a verdict.
"""

from mpmath import mp, mpf

DEFAULT_PREC = 50
MAX_ESCALATION_PREC = 4096


def eval_at(fn, prec):
    """Evaluate ``fn()`` with ``prec`` significant digits and round the result."""
    with mp.workdps(prec):
        return +fn()


def compare_int(value, fn, prec, max_prec=MAX_ESCALATION_PREC):
    """Sign of ``fn() - value`` for an exact integer ``value``.

    Returns ``(sign, evaluated)`` where sign is -1, 0 or +1.  Precision is
    doubled (up to ``max_prec``) while the margin is below one ulp of the
    evaluated side.
    """
    digits = max(prec, 15)
    while True:
        with mp.workdps(digits):
            approx = fn()
            diff = approx - value
            ulp = abs(approx) * mpf(10) ** (1 - digits)
            if abs(diff) > ulp or digits >= max_prec:
                if diff > 0:
                    return 1, +approx
                if diff < 0:
                    return -1, +approx
                return 0, +approx
        digits = min(digits * 2, max_prec)


def format_hp(x, digits=15):
    """Render an mpf in mantissa-exponent form with the given digit count."""
    return mp.nstr(x, digits)
