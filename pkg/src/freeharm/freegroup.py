"""Exact combinatorics of the free group on two generators.

Words are reduced ASCII strings over the alphabet ``a, b, A, B`` where the
upper-case letter is the inverse of the lower-case one.  The empty string is
the identity.  The letter order ``a < b < A < B`` fixes the shortlex order
used everywhere else in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .errors import InputError

LETTERS = "abAB"
_ORDER = {c: i for i, c in enumerate(LETTERS)}
_INV = {"a": "A", "A": "a", "b": "B", "B": "b"}

IDENTITY = ""


def check_word(w: str) -> str:
    """Validate that ``w`` is a reduced word; return it unchanged."""
    for i, c in enumerate(w):
        if c not in _ORDER:
            raise InputError(f"invalid letter {c!r} in word {w!r}")
        if i > 0 and _INV[w[i - 1]] == c:
            raise InputError(f"word {w!r} is not reduced at position {i}")
    return w


def reduce_word(letters: str) -> str:
    """Freely reduce a letter sequence, cancelling adjacent inverse pairs."""
    stack: list[str] = []
    for c in letters:
        if c not in _ORDER:
            raise InputError(f"invalid letter {c!r} in {letters!r}")
        if stack and _INV[stack[-1]] == c:
            stack.pop()
        else:
            stack.append(c)
    return "".join(stack)


def mul(u: str, v: str) -> str:
    """Product of two reduced words (cancellation happens at the junction)."""
    i, j = len(u), 0
    while i > 0 and j < len(v) and _INV[u[i - 1]] == v[j]:
        i -= 1
        j += 1
    return u[:i] + v[j:]


def inverse(w: str) -> str:
    """Inverse of a reduced word: reverse the letters and invert each."""
    return "".join(_INV[c] for c in reversed(w))


def word_length(w: str) -> int:
    return len(w)


def ball_size(r: int) -> int:
    """Number of reduced words of length at most ``r`` (2*3^r - 1)."""
    if r < 0:
        raise InputError(f"radius must be nonnegative, got {r}")
    return 2 * 3**r - 1


def ball(r: int) -> list[str]:
    """All reduced words of length <= r, in shortlex order.

    Enumeration is a breadth-first walk with children visited in letter
    order, which makes the output order reproducible.
    """
    if r < 0:
        raise InputError(f"radius must be nonnegative, got {r}")
    words = [IDENTITY]
    frontier = [IDENTITY]
    for _ in range(r):
        nxt = []
        for w in frontier:
            last = w[-1] if w else None
            for c in LETTERS:
                if last is None or _INV[last] != c:
                    nxt.append(w + c)
        words.extend(nxt)
        frontier = nxt
    return words


def shortlex_key(w: str) -> tuple[int, tuple[int, ...]]:
    """Sort key realizing the shortlex order (length, then a < b < A < B)."""
    return (len(w), tuple(_ORDER[c] for c in w))


def shortlex_less(u: str, v: str) -> bool:
    return shortlex_key(u) < shortlex_key(v)


def _allowed_after(prev: str | None) -> list[str]:
    if prev is None:
        return list(LETTERS)
    return [c for c in LETTERS if c != _INV[prev]]


def successor(w: str) -> str:
    """Next reduced word after ``w`` in the shortlex order."""
    check_word(w)
    n = len(w)
    if n == 0:
        return "a"
    out = list(w)
    for i in range(n - 1, -1, -1):
        prev = out[i - 1] if i > 0 else None
        larger = [c for c in _allowed_after(prev) if _ORDER[c] > _ORDER[out[i]]]
        if larger:
            out[i] = larger[0]
            for k in range(i + 1, n):
                out[k] = next(c for c in LETTERS if c != _INV[out[k - 1]])
            return "".join(out)
    return "a" * (n + 1)


def predecessor(w: str) -> str:
    """Previous reduced word before ``w``; the identity has none."""
    check_word(w)
    if w == IDENTITY:
        raise InputError("the identity has no shortlex predecessor")
    n = len(w)
    if w == "a" * n:
        return "B" * (n - 1)
    out = list(w)
    for i in range(n - 1, -1, -1):
        prev = out[i - 1] if i > 0 else None
        smaller = [c for c in _allowed_after(prev) if _ORDER[c] < _ORDER[out[i]]]
        if smaller:
            out[i] = smaller[-1]
            for k in range(i + 1, n):
                out[k] = next(c for c in reversed(LETTERS) if c != _INV[out[k - 1]])
            return "".join(out)
    raise AssertionError("unreachable")  # pragma: no cover


def shortlex_range(last: str) -> list[str]:
    """All reduced words up to and including ``last``, in shortlex order."""
    check_word(last)
    words = [IDENTITY]
    w = IDENTITY
    while w != last:
        w = successor(w)
        words.append(w)
    return words


def symmetric_segment(g: str) -> set[str]:
    """The inversion-closed initial segment: every h <= g and its inverse."""
    seg: set[str] = set()
    for h in shortlex_range(g):
        seg.add(h)
        seg.add(inverse(h))
    return seg


def cayley_edges(g: str, vertices: Iterable[str]) -> list[tuple[str, str]]:
    """Edges of the generalized Cayley graph induced on ``vertices``.

    Distinct vertices h and l are joined when l^-1 h lies in the symmetric
    segment of g with the identity removed.  Each unordered edge appears
    once, as the pair in input order.
    """
    verts = list(vertices)
    for v in verts:
        check_word(v)
    if len(set(verts)) != len(verts):
        raise InputError("vertices must be distinct")
    allowed = symmetric_segment(g) - {IDENTITY}
    edges = []
    for i, h in enumerate(verts):
        for ell in verts[i + 1 :]:
            if mul(inverse(ell), h) in allowed:
                edges.append((h, ell))
    return edges


# ---------------------------------------------------------------------------
# Finite permutation quotients
# ---------------------------------------------------------------------------

Perm = tuple[int, ...]


def identity_perm(d: int) -> Perm:
    return tuple(range(d))


def compose(p: Perm, q: Perm) -> Perm:
    """Composition p after q: (p∘q)(i) = p[q[i]]."""
    return tuple(p[q[i]] for i in range(len(p)))


def perm_inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def _check_perm(p: Iterable[int], d: int, name: str) -> Perm:
    t = tuple(int(v) for v in p)
    if sorted(t) != list(range(d)):
        raise InputError(f"{name} is not a permutation of 0..{d - 1}: {t}")
    return t


@dataclass(frozen=True)
class FiniteQuotientAction:
    """Generator images of an action of the free group on {1..d}.

    Permutations are stored 0-based; the JSON form uses 1-based image lists.
    """

    d: int
    sigma_a: Perm
    sigma_b: Perm

    def __post_init__(self):
        if self.d < 1:
            raise InputError(f"d must be positive, got {self.d}")
        object.__setattr__(self, "sigma_a", _check_perm(self.sigma_a, self.d, "sigma_a"))
        object.__setattr__(self, "sigma_b", _check_perm(self.sigma_b, self.d, "sigma_b"))

    def to_json_dict(self) -> dict:
        return {
            "d": self.d,
            "sigma_a": [v + 1 for v in self.sigma_a],
            "sigma_b": [v + 1 for v in self.sigma_b],
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> "FiniteQuotientAction":
        try:
            d = int(obj["d"])
            sa = tuple(int(v) - 1 for v in obj["sigma_a"])
            sb = tuple(int(v) - 1 for v in obj["sigma_b"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed action object: {exc}") from exc
        return cls(d, sa, sb)


@dataclass(frozen=True)
class QuotientClosure:
    """The finite subgroup generated by the two permutations, with the
    evaluation homomorphism from reduced words."""

    d: int
    elements: tuple[Perm, ...]
    _gens: dict  # letter -> Perm

    def evaluate(self, word: str) -> Perm:
        check_word(word)
        p = identity_perm(self.d)
        for c in word:
            p = compose(p, self._gens[c])
        return p

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Perm) -> bool:
        return p in self.elements


def quotient_closure(act: FiniteQuotientAction) -> QuotientClosure:
    """Close the generated subgroup under composition (BFS from identity)."""
    gens = {
        "a": act.sigma_a,
        "b": act.sigma_b,
        "A": perm_inverse(act.sigma_a),
        "B": perm_inverse(act.sigma_b),
    }
    seen = {identity_perm(act.d)}
    frontier = [identity_perm(act.d)]
    while frontier:
        nxt = []
        for p in frontier:
            for g in (gens["a"], gens["b"], gens["A"], gens["B"]):
                q = compose(p, g)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return QuotientClosure(act.d, tuple(sorted(seen)), gens)


def evaluate_word(act: FiniteQuotientAction, word: str) -> Perm:
    """Image of a reduced word under the action, without building the closure."""
    return quotient_closure(act).evaluate(word)
