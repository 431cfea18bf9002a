"""Sparse linear combinations of basis symbols over an exact coefficient ring.

A basis symbol is a plain tuple: ("A", n) and ("G", m) for the Onsager-side
basis, ("Wm", k), ("Wp", k), ("Gt", k) for the alternative presentation.
Tuples compare lexicographically, which happens to give exactly the normal
ordering used for PBW words (A's by index, then G's by index).

Coefficients may be int, Fraction, LaurentPoly or RatFunc; mixed coefficients
combine through the arithmetic dunders of those types.
"""

from fractions import Fraction

Sym = tuple


class AlgElem:
    """A finite linear combination of basis symbols.  Immutable by convention."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        if terms:
            self.terms = {s: c for s, c in terms.items() if c}
        else:
            self.terms = {}

    @classmethod
    def basis(cls, sym: Sym, coeff=Fraction(1)) -> "AlgElem":
        return cls({sym: coeff})

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, AlgElem):
            return NotImplemented
        out = dict(self.terms)
        for s, c in other.terms.items():
            c2 = out.get(s)
            c2 = c if c2 is None else c2 + c
            if c2:
                out[s] = c2
            else:
                out.pop(s, None)
        return AlgElem(out)

    def __sub__(self, other):
        if not isinstance(other, AlgElem):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return AlgElem({s: -c for s, c in self.terms.items()})

    def __mul__(self, coeff):
        if isinstance(coeff, AlgElem):
            raise TypeError(
                "algebra elements have no associative product; use bracket()"
            )
        return AlgElem({s: c * coeff for s, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, AlgElem):
            return NotImplemented
        if self.terms.keys() != other.terms.keys():
            return False
        return all(other.terms[s] == c for s, c in self.terms.items())

    __hash__ = None

    def coeff(self, sym: Sym):
        return self.terms.get(sym, Fraction(0))

    def map_coeffs(self, f) -> "AlgElem":
        return AlgElem({s: f(c) for s, c in self.terms.items()})

    def symbols(self):
        return set(self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: t[0])

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for sym, coeff in self.sorted_terms():
            name = f"{sym[0]}({sym[1]})"
            cs = str(coeff)
            if cs == "1":
                parts.append(name)
            elif cs == "-1":
                parts.append(f"-{name}")
            elif ("+" in cs) or ("-" in cs[1:]) or (" " in cs):
                parts.append(f"({cs})*{name}")
            else:
                parts.append(f"{cs}*{name}")
        return " + ".join(parts)

    def __repr__(self):
        return f"AlgElem({self})"


ZERO = AlgElem()
