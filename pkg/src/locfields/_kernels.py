"""Hot numeric kernels with two interchangeable backends.

Every kernel has a pure-numpy implementation and a numba-jitted twin. The
jitted backend is loaded lazily on first use, so importing the package
never pays the numba import or compilation cost. LOCFIELDS_JIT=0 forces
the numpy path; any other value (or the flag being unset) selects numba
when it is installed. Both backends stay loadable so benchmarks can
compare them directly.

Inputs are int64 arrays; callers are responsible for staying inside
int64: polynomial coefficients need p < 2**31, modular outer products
need m <= 3_037_000_499 (floor sqrt of 2**63). Both multiplication
kernels reduce (or widen) before an accumulated sum can overflow, so the
results are exact across that whole range.
"""

from __future__ import annotations

import os

import numpy as np

INT64_MODULUS_LIMIT = 3_037_000_499
INT64_PRIME_LIMIT = 1 << 31


def _np_fp_mul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    # convolve accumulates min(la, lb) unreduced products per entry, so
    # switch to exact object arithmetic when that sum could leave int64
    if min(a.shape[0], b.shape[0]) * (p - 1) * (p - 1) < (1 << 63):
        return np.convolve(a, b) % p
    prod = np.convolve(a.astype(object), b.astype(object)) % p
    return prod.astype(np.int64)


def _np_fp_rem(a: np.ndarray, f: np.ndarray, p: int) -> np.ndarray:
    """Remainder of a by a monic f, both coefficient arrays low-to-high."""
    r = a % p
    df = f.shape[0] - 1
    for i in range(r.shape[0] - 1, df - 1, -1):
        c = r[i]
        if c:
            r[i - df:i] = (r[i - df:i] - c * f[:df]) % p
            r[i] = 0
    return r[:df] if df > 0 else r[:0]


def _np_mod_outer(a: np.ndarray, b: np.ndarray, m: int) -> np.ndarray:
    return (a[:, None] * b[None, :] % m).ravel()


def _np_pow_block(g: int, t: int, m: int) -> np.ndarray:
    out = np.empty(t, dtype=np.int64)
    out[0] = 1 % m
    for i in range(1, t):
        out[i] = out[i - 1] * g % m
    return out


def _np_spf_sieve(n: int) -> np.ndarray:
    """Smallest prime factor for 0..n (entries 0 and 1 map to themselves)."""
    spf = np.arange(n + 1, dtype=np.int64)
    for i in range(2, int(n ** 0.5) + 1):
        if spf[i] == i:
            sl = spf[i * i:: i]
            np.minimum(sl, i, out=sl)
    return spf


_NUMPY_BACKEND = {
    "fp_mul": _np_fp_mul,
    "fp_rem": _np_fp_rem,
    "mod_outer": _np_mod_outer,
    "pow_block": _np_pow_block,
    "spf_sieve": _np_spf_sieve,
}

BACKENDS: dict[str, dict] = {"numpy": _NUMPY_BACKEND}

_flag = os.environ.get("LOCFIELDS_JIT", "").strip().lower()
USE_JIT = _flag not in ("0", "false", "off", "no")


def _build_numba_backend() -> dict:
    from numba import njit

    @njit(cache=True)
    def _nb_fp_mul(a, b, p):
        la, lb = a.shape[0], b.shape[0]
        n = la + lb - 1
        out = np.empty(n, dtype=np.int64)
        # reduce the accumulator only when another `step` products could
        # overflow int64: step * ((p-1)^2 + 1) <= 2^63 - 1 - p
        step = (9223372036854775807 - p) // ((p - 1) * (p - 1) + 1)
        if step < 1:
            step = 1
        for k in range(n):
            lo = k - lb + 1
            if lo < 0:
                lo = 0
            hi = k if k < la - 1 else la - 1
            acc = 0
            cnt = 0
            for i in range(lo, hi + 1):
                acc += a[i] * b[k - i]
                cnt += 1
                if cnt == step:
                    acc %= p
                    cnt = 0
            out[k] = acc % p
        return out

    @njit(cache=True)
    def _nb_fp_rem(a, f, p):
        r = a % p
        df = f.shape[0] - 1
        for i in range(r.shape[0] - 1, df - 1, -1):
            c = r[i]
            if c:
                for j in range(df):
                    r[i - df + j] = (r[i - df + j] - c * f[j]) % p
                r[i] = 0
        return r[:df] if df > 0 else r[:0]

    @njit(cache=True)
    def _nb_mod_outer(a, b, m):
        out = np.empty(a.shape[0] * b.shape[0], dtype=np.int64)
        k = 0
        for i in range(a.shape[0]):
            ai = a[i]
            for j in range(b.shape[0]):
                out[k] = ai * b[j] % m
                k += 1
        return out

    @njit(cache=True)
    def _nb_pow_block(g, t, m):
        out = np.empty(t, dtype=np.int64)
        acc = 1 % m
        out[0] = acc
        for i in range(1, t):
            acc = acc * g % m
            out[i] = acc
        return out

    @njit(cache=True)
    def _nb_spf_sieve(n):
        spf = np.arange(n + 1).astype(np.int64)
        i = 2
        while i * i <= n:
            if spf[i] == i:
                for j in range(i * i, n + 1, i):
                    if spf[j] == j:
                        spf[j] = i
            i += 1
        return spf

    return {
        "fp_mul": _nb_fp_mul,
        "fp_rem": _nb_fp_rem,
        "mod_outer": _nb_mod_outer,
        "pow_block": _nb_pow_block,
        "spf_sieve": _nb_spf_sieve,
    }


def load_backend(name: str) -> dict:
    """Return (and cache) a backend by name; loading numba may be slow
    once."""
    if name not in ("numpy", "numba"):
        raise KeyError(f"unknown backend {name!r}")
    if name not in BACKENDS:
        BACKENDS[name] = _build_numba_backend()
    return BACKENDS[name]


_resolved: dict | None = None
_resolved_name = "unresolved"


def _active() -> dict:
    global _resolved, _resolved_name
    if _resolved is None:
        _resolved = _NUMPY_BACKEND
        _resolved_name = "numpy"
        if USE_JIT:
            try:
                _resolved = load_backend("numba")
                _resolved_name = "numba"
            except ImportError:
                pass
    return _resolved


def active_backend() -> str:
    _active()
    return _resolved_name


def fp_mul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return _active()["fp_mul"](a, b, p)


def fp_rem(a: np.ndarray, f: np.ndarray, p: int) -> np.ndarray:
    return _active()["fp_rem"](a, f, p)


def mod_outer(a: np.ndarray, b: np.ndarray, m: int) -> np.ndarray:
    return _active()["mod_outer"](a, b, m)


def pow_block(g: int, t: int, m: int) -> np.ndarray:
    return _active()["pow_block"](g, t, m)


def spf_sieve(n: int) -> np.ndarray:
    return _active()["spf_sieve"](n)


_warmed = False


def warmup() -> None:
    """Run every kernel once on trivial inputs.

    Forces the one-off numba load and compilation, so callers can keep
    that cost out of measured regions.
    """
    global _warmed
    if _warmed:
        return
    a = np.array([1, 1], dtype=np.int64)
    fp_mul(a, a, 3)
    fp_rem(a, a, 3)
    mod_outer(a, a, 5)
    pow_block(2, 2, 5)
    spf_sieve(10)
    _warmed = True
