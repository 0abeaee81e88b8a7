"""Products of a Golay pair with a periodic Golay pair.

Two constructions are provided:

* :func:`prop2_multiply` works on the SDS (X, Y): each position of Z_v gets a
  symbol in {x, -x, y, -y} from its membership in X and Y, the second
  sequence is the reversal (``i -> v-1-i``) with ``x -> y, y -> -x``, and every
  symbol is then expanded into a length-g block (``x -> U``, ``y -> V``).
* :func:`turyn_multiply` evaluates Turyn's polynomial formulas

      E(z) = 1/2 [A(z)+B(z)] C(z^g) + 1/2 [A(z)-B(z)] D(z^-g) z^(gv-g)
      F(z) = 1/2 [B(z)-A(z)] C(z^-g) z^(gv-g) + 1/2 [A(z)+B(z)] D(z^g)

  in Z[z]/(z^(gv) - 1).  The returned sequences list the coefficients of E
  and F from the top degree down (position i holds the coefficient of
  z^(gv-1-i)); this is the orientation in which the published length-68
  example is written.

Polynomials modulo z^N - 1 are int64 arrays of length N.
"""

from __future__ import annotations

import numpy as np

from . import kernels
from .pairs import Pair, is_periodic_golay_pair, sds_to_pair
from .sds import Sds
from .seqcore import as_binary


def aperiodic_autocorrelation(seq) -> np.ndarray:
    a = as_binary(seq)
    g = a.shape[0]
    return np.array([int(a[s:] @ a[: g - s]) for s in range(g)], dtype=np.int64)


def is_golay_pair(a, b) -> bool:
    a, b = as_binary(a), as_binary(b)
    if a.shape != b.shape:
        raise ValueError(f"sequence lengths differ: {a.shape[0]} vs {b.shape[0]}")
    total = aperiodic_autocorrelation(a) + aperiodic_autocorrelation(b)
    return bool(np.all(total[1:] == 0))


# --- Z[z]/(z^N - 1) -------------------------------------------------------


def poly_mul_mod(p, q) -> np.ndarray:
    p = np.asarray(p, dtype=np.int64)
    q = np.asarray(q, dtype=np.int64)
    if p.shape != q.shape or p.ndim != 1:
        raise ValueError(f"moduli differ: z^{p.shape[-1]} - 1 vs z^{q.shape[-1]} - 1")
    return kernels.cyclic_mul(p, q)


def embed(seq, N: int) -> np.ndarray:
    """The polynomial a_0 + a_1 z + ... as an element of Z[z]/(z^N - 1)."""
    a = np.asarray(seq, dtype=np.int64)
    out = np.zeros(N, dtype=np.int64)
    np.add.at(out, np.arange(a.shape[0]) % N, a)
    return out


def substitute_power(seq, power: int, N: int) -> np.ndarray:
    """c(z^power) reduced mod z^N - 1; ``power`` may be negative."""
    c = np.asarray(seq, dtype=np.int64)
    out = np.zeros(N, dtype=np.int64)
    np.add.at(out, (power * np.arange(c.shape[0])) % N, c)
    return out


def monomial(k: int, N: int) -> np.ndarray:
    out = np.zeros(N, dtype=np.int64)
    out[k % N] = 1
    return out


def conjugate(p) -> np.ndarray:
    """p(z^-1): coefficient k moves to -k mod N."""
    p = np.asarray(p, dtype=np.int64)
    return np.roll(p[::-1], 1)


def norm(p) -> np.ndarray:
    """p(z) p(z^-1) mod z^N - 1, i.e. the periodic autocorrelation of p."""
    return poly_mul_mod(p, conjugate(p))


# --- Turyn ----------------------------------------------------------------


def _halves(A, B, N):
    s = embed(A, N) + embed(B, N)
    d = embed(A, N) - embed(B, N)
    if np.any(s % 2) or np.any(d % 2):
        raise ValueError("A(z) +/- B(z) must have even coefficients")
    return s // 2, d // 2


def turyn_polynomials(G, P) -> tuple[np.ndarray, np.ndarray]:
    """E(z), F(z) as elements of Z[z]/(z^(gv) - 1), coefficients in ascending degree."""
    A, B = (as_binary(x) for x in G)
    C, D = (as_binary(x) for x in P)
    g, v = A.shape[0], C.shape[0]
    N = g * v
    half_sum, half_diff = _halves(A, B, N)
    shift = monomial(N - g, N)
    E = poly_mul_mod(half_sum, substitute_power(C, g, N)) + poly_mul_mod(
        poly_mul_mod(half_diff, substitute_power(D, -g, N)), shift
    )
    F = poly_mul_mod(poly_mul_mod(-half_diff, substitute_power(C, -g, N)), shift) + poly_mul_mod(
        half_sum, substitute_power(D, g, N)
    )
    return E, F


def turyn_multiply(G, P, periodic: bool = True) -> Pair:
    """Turyn product of the Golay pair ``G`` (length g) and ``P`` (length v).

    With ``periodic=True`` the second factor only needs to be a periodic Golay
    pair and the product is a periodic Golay pair of length gv.  With
    ``periodic=False`` both factors must be Golay pairs and so is the product
    (the formulas never wrap around, so the computation is the same).
    """
    if not is_golay_pair(*G):
        raise ValueError("first factor is not a Golay pair")
    if periodic and not is_periodic_golay_pair(*P):
        raise ValueError("second factor is not a periodic Golay pair")
    if not periodic and not is_golay_pair(*P):
        raise ValueError("second factor is not a Golay pair")
    E, F = turyn_polynomials(G, P)
    if not (np.all(np.abs(E) == 1) and np.all(np.abs(F) == 1)):
        raise RuntimeError("Turyn product has a coefficient outside {+1, -1}")
    out = Pair(E[::-1].copy(), F[::-1].copy())
    check = is_periodic_golay_pair if periodic else is_golay_pair
    if not check(*out):
        raise RuntimeError("Turyn product failed its own verification")
    return out


def turyn_identity(G, P) -> tuple[np.ndarray, np.ndarray]:
    """Both sides of E E* + F F* = g (C(z^g) C(z^-g) + D(z^g) D(z^-g)) mod z^(gv) - 1."""
    A = as_binary(G[0])
    C, D = (as_binary(x) for x in P)
    g, v = A.shape[0], C.shape[0]
    N = g * v
    E, F = turyn_polynomials(G, P)
    lhs = norm(E) + norm(F)
    Cg, Dg = substitute_power(C, g, N), substitute_power(D, g, N)
    rhs = g * (poly_mul_mod(Cg, substitute_power(C, -g, N)) + poly_mul_mod(Dg, substitute_power(D, -g, N)))
    return lhs, rhs


# --- SDS construction ------------------------------------------------------


def prop2_symbols(S: Sds) -> tuple[tuple[np.ndarray, np.ndarray], tuple[np.ndarray, np.ndarray]]:
    """Symbolic sequences as (kind, sign) arrays; kind 0 is x, kind 1 is y."""
    v = S.v
    inX = np.zeros(v, dtype=bool)
    inY = np.zeros(v, dtype=bool)
    inX[list(S.blocks[0])] = True
    inY[list(S.blocks[1])] = True
    kind = np.where(inX == inY, 0, 1).astype(np.int64)
    # x on X∩Y, -x off X∪Y, y on X∖Y, -y on Y∖X: the sign is just membership in X
    sign = np.where(inX, 1, -1).astype(np.int64)
    rkind, rsign = kind[::-1], sign[::-1]
    # x -> y keeps the sign, y -> -x flips it
    bkind = 1 - rkind
    bsign = np.where(rkind == 0, rsign, -rsign)
    return (kind, sign), (bkind, bsign)


def _expand(kind, sign, U, V) -> np.ndarray:
    blocks = np.where(kind[:, None] == 0, U[None, :], V[None, :]) * sign[:, None]
    return blocks.reshape(-1)


def prop2_multiply(G, S: Sds) -> Pair:
    U, V = (as_binary(x) for x in G)
    if not is_golay_pair(U, V):
        raise ValueError("first factor is not a Golay pair")
    sds_to_pair(S)  # raises unless S is a periodic Golay SDS
    (ka, sa), (kb, sb) = prop2_symbols(S)
    out = Pair(_expand(ka, sa, U, V), _expand(kb, sb, U, V))
    if not is_periodic_golay_pair(*out):
        raise RuntimeError("SDS product failed its own verification")
    return out
