"""Expected bracket table of the N = 2 quotient on its six-element basis,
shared by the unit tests and the acceptance suite."""

from fractions import Fraction

from onsaw.elements import AlgElem


def _elem(pairs):
    out = AlgElem()
    for sym, coeff in pairs:
        out = out + AlgElem.basis(sym) * coeff
    return out


def aw6_relation_table(alphap, alpha):
    a = lambda n: ("A", n)
    g = lambda m: ("G", m)
    one = Fraction(1)
    four = Fraction(4)
    return {
        (a(0), a(-1)): _elem([(g(1), four)]),
        (a(2), a(1)): _elem([(g(1), four)]),
        (a(1), a(0)): _elem([(g(1), four)]),
        (a(1), a(-1)): _elem([(g(2), four)]),
        (a(2), a(0)): _elem([(g(2), four)]),
        (a(2), a(-1)): _elem([(g(1), 4 * (1 - alphap)), (g(2), -4 * alpha)]),
        (g(1), a(0)): _elem([(a(1), 2 * one), (a(-1), -2 * one)]),
        (g(1), a(1)): _elem([(a(2), 2 * one), (a(0), -2 * one)]),
        (g(1), a(-1)): _elem(
            [
                (a(-1), 2 * alpha),
                (a(0), 2 * (1 + alphap)),
                (a(1), 2 * alpha),
                (a(2), 2 * one),
            ]
        ),
        (g(1), a(2)): _elem(
            [
                (a(-1), -2 * one),
                (a(0), -2 * alpha),
                (a(1), -2 * (1 + alphap)),
                (a(2), -2 * alpha),
            ]
        ),
        (g(2), a(0)): _elem(
            [
                (a(-1), 2 * alpha),
                (a(0), 2 * alphap),
                (a(1), 2 * alpha),
                (a(2), 4 * one),
            ]
        ),
        (g(2), a(1)): _elem(
            [
                (a(-1), -4 * one),
                (a(0), -2 * alpha),
                (a(1), -2 * alphap),
                (a(2), -2 * alpha),
            ]
        ),
        (g(2), a(-1)): _elem(
            [
                (a(-1), 2 * (alphap - alpha * alpha)),
                (a(0), 2 * alpha * (1 - alphap)),
                (a(1), 2 * (2 - alpha * alpha)),
                (a(2), -2 * alpha),
            ]
        ),
        (g(2), a(2)): _elem(
            [
                (a(-1), 2 * alpha),
                (a(0), 2 * (alpha * alpha - 2)),
                (a(1), 2 * alpha * (alphap - 1)),
                (a(2), 2 * (alpha * alpha - alphap)),
            ]
        ),
        (g(2), g(1)): AlgElem(),
    }
