"""Finite quotients of the Onsager algebra by symmetric linear recurrences.

A quotient is fixed by N >= 1 and coefficients (alpha_0, ..., alpha_N) with
alpha_N = 1 and the implicit symmetric extension alpha_{-n} = alpha_n.  The
imposed relations make every A_m and G_m a combination of the 3N independent
elements {A_{-N+1}, ..., A_N, G_1, ..., G_N}; `reduce` rewrites onto that
normal-form span using the two one-sided recurrences

    A_{N+p} = -sum_{n=-N}^{N-1} alpha_n A_{n+p}
    A_{p-N} = -sum_{n=-N+1}^{N} alpha_n A_{n+p}

and the G analogue.  The recursion table u_poly reproduces the same reduction
coefficients through an independent recurrence; the two are compared by
u_poly_report and any mismatch is a documented discrepancy (the reduction
oracle wins).
"""

from fractions import Fraction

from .elements import ZERO, AlgElem
from .onsager import A, G, apply_autopoly, bracket, s_n_autopoly
from .reports import Report
from .scalars import LaurentPoly, lvar


class QuotientO:
    """N and the coefficient vector (alpha_0, ..., alpha_N), alpha_N = 1."""

    def __init__(self, alphas):
        alphas = tuple(
            Fraction(a) if isinstance(a, int) else a for a in alphas
        )
        if len(alphas) < 2:
            raise ValueError("need N >= 1, i.e. at least (alpha_0, alpha_1)")
        last = alphas[-1]
        if isinstance(last, LaurentPoly):
            ok = last.is_const() and last.const_value() == 1
        else:
            ok = last == 1
        if not ok:
            raise ValueError("normalization requires alpha_N = 1")
        self.alphas = alphas
        self.N = len(alphas) - 1
        self._reduced: dict = {}
        self._upoly: dict = {}

    @classmethod
    def symbolic(cls, N: int) -> "QuotientO":
        """Quotient with symbolic coefficients, named to match common usage:
        N=1 uses alpha, N=2 uses (alphap, alpha), larger N uses alpha0.."""
        if N == 1:
            names = ["alpha"]
        elif N == 2:
            names = ["alphap", "alpha"]
        else:
            names = [f"alpha{i}" for i in range(N)]
        return cls(tuple(lvar(n) for n in names) + (Fraction(1),))

    def alpha(self, m: int):
        m = abs(m)
        return self.alphas[m] if m <= self.N else Fraction(0)

    def basis_syms(self) -> list:
        return [("A", n) for n in range(-self.N + 1, self.N + 1)] + [
            ("G", m) for m in range(1, self.N + 1)
        ]

    # -- normal form -----------------------------------------------------

    def reduce(self, x: AlgElem) -> AlgElem:
        out = ZERO
        for sym, c in x.terms.items():
            out = out + self._reduce_sym(sym) * c
        return out

    def _reduce_sym(self, sym) -> AlgElem:
        cached = self._reduced.get(sym)
        if cached is not None:
            return cached
        kind, idx = sym
        N = self.N
        if kind == "A":
            if -N + 1 <= idx <= N:
                out = AlgElem.basis(sym)
            elif idx > N:
                p = idx - N
                combo = ZERO
                for n in range(-N, N):
                    combo = combo + A(n + p) * (-self.alphas[abs(n)])
                out = self.reduce(combo)
            else:
                p = idx + N
                combo = ZERO
                for n in range(-N + 1, N + 1):
                    combo = combo + A(n + p) * (-self.alphas[abs(n)])
                out = self.reduce(combo)
        elif kind == "G":
            if idx <= N:
                out = AlgElem.basis(sym)
            else:
                p = idx - N
                combo = ZERO
                for n in range(-N, N):
                    combo = combo + G(n + p) * (-self.alphas[abs(n)])
                out = self.reduce(combo)
        else:
            raise TypeError(f"not an Onsager basis symbol: {sym}")
        self._reduced[sym] = out
        return out

    def bracket_reduced(self, x: AlgElem, y: AlgElem) -> AlgElem:
        return self.reduce(bracket(x, y))

    def __repr__(self):
        return f"QuotientO(N={self.N})"


# --- reduction-coefficient table ---------------------------------------------


def u_poly(q: QuotientO, p: int, j: int):
    """Reduction coefficient U_{p,j} computed by its own recurrence.

    Defined for p >= 0 and -N+1 <= j <= N by

        U_{0,j} = (-1)^{N+1} alpha_j
        U_{p,j} = sum_{k=0}^{p-1} (-1)^k alpha_{k-N+1} U_{p-1-k,j}
                  + (-1)^{N+p-1} alpha_{j+p} * [ j <= N-p ]

    with symmetric alpha lookup vanishing beyond index N.
    """
    N = q.N
    if p < 0 or not (-N + 1 <= j <= N):
        raise ValueError(f"u_poly indices out of range: p={p}, j={j}")
    key = (p, j)
    cached = q._upoly.get(key)
    if cached is not None:
        return cached
    if p == 0:
        out = q.alpha(j) * Fraction((-1) ** (N + 1))
    else:
        out = Fraction(0)
        for k in range(p):
            term = q.alpha(k - N + 1) * u_poly(q, p - 1 - k, j)
            out = out + (term if k % 2 == 0 else -term)
        if -N + 1 <= j <= N - p:
            extra = q.alpha(j + p) * Fraction((-1) ** (N + p - 1))
            out = out + extra
    q._upoly[key] = out
    return out


def u_poly_oracle(q: QuotientO, p: int, j: int):
    """The same coefficient read directly off reduce(A_{-N-p})."""
    reduced = q.reduce(A(-q.N - p))
    sign = Fraction((-1) ** (p + q.N))
    return reduced.coeff(("A", j)) * sign


def u_poly_report(q: QuotientO, pmax: int) -> Report:
    """Recursion versus reduction oracle for all p <= pmax; the oracle wins."""
    report = Report("upoly", params={"N": q.N, "pmax": pmax})
    for p in range(pmax + 1):
        for j in range(-q.N + 1, q.N + 1):
            rec = u_poly(q, p, j)
            ora = u_poly_oracle(q, p, j)
            report.add_discrepancy(
                f"upoly:N{q.N}:p{p}:j{j}",
                rec == ora,
                f"recursion {rec} but oracle {ora}",
            )
    return report


def forward_reduction_report(q: QuotientO, pmax: int) -> Report:
    """reduce(A_{N+p+1}) and reduce(G_{N+p+1}) against the U-table formulas."""
    report = Report("upoly-forward", params={"N": q.N, "pmax": pmax})
    for p in range(pmax + 1):
        sign = Fraction((-1) ** (p + q.N))
        expect_a = ZERO
        expect_g = ZERO
        for j in range(-q.N + 1, q.N + 1):
            u = u_poly(q, p, j)
            expect_a = expect_a + A(1 - j) * (u * sign)
            expect_g = expect_g + G(j - 1) * (u * -sign)
        got_a = q.reduce(A(q.N + p + 1))
        got_g = q.reduce(G(q.N + p + 1))
        report.add(
            f"upoly-forward:A:N{q.N}:p{p}",
            got_a == q.reduce(expect_a),
            got_a - q.reduce(expect_a),
        )
        report.add(
            f"upoly-forward:G:N{q.N}:p{p}",
            got_g == q.reduce(expect_g),
            got_g - q.reduce(expect_g),
        )
    return report


# --- quotient relations -------------------------------------------------------


def verify_sn(q: QuotientO, autopoly=None) -> Report:
    """The operator sum(alpha_n (tau1 Phi)^n) must annihilate A_0 and A_1."""
    report = Report("sn", params={"N": q.N})
    if autopoly is None:
        autopoly = s_n_autopoly(q.alphas)
    for name, x in (("sn:A0", A(0)), ("sn:A1", A(1))):
        residual = q.reduce(apply_autopoly(autopoly, x))
        report.add(f"{name}:N{q.N}", residual.is_zero(), residual)
    return report


def implied_relations_report(q: QuotientO, pmax: int = 6) -> Report:
    """All shifted relation instances must reduce to zero, |p| <= pmax."""
    report = Report("dav2", params={"N": q.N, "pmax": pmax})
    for p in range(-pmax, pmax + 1):
        ra = ZERO
        rg = ZERO
        for n in range(-q.N, q.N + 1):
            ra = ra + A(n + p) * q.alpha(n)
            rg = rg + G(n + p) * q.alpha(n)
        ra = q.reduce(ra)
        rg = q.reduce(rg)
        report.add(f"dav2:A:N{q.N}:p{p}", ra.is_zero(), ra)
        report.add(f"dav2:G:N{q.N}:p{p}", rg.is_zero(), rg)
    return report


def defining_relations(q: QuotientO) -> list:
    """All 3N(3N-1)/2 brackets of normal-form basis pairs, each reduced.

    Pairs are oriented with the later basis symbol first, so for N=1 the list
    carries [A_1, A_0], [G_1, A_0], [G_1, A_1].
    """
    syms = q.basis_syms()
    out = []
    for b in range(len(syms)):
        for a in range(b):
            lhs = (syms[b], syms[a])
            rhs = q.reduce(bracket(AlgElem.basis(syms[b]), AlgElem.basis(syms[a])))
            out.append((lhs, rhs))
    return out
