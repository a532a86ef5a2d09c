"""Annihilator operators, the locally nilpotent radical, prime and semiprime
submodules, the prime radical, and the orthogonal-sequence construction for
nil submodules.

The locally nilpotent radical is computed as the sum of the nilpotent cyclic
submodules: every locally nilpotent submodule is a sum of nilpotent cyclics,
and each nilpotent cyclic is itself locally nilpotent, so the two sums agree.
The definitional computation lives in the oracle module and is cross-checked
in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import DEFAULT_CAPS, CapExceeded
from .homspace import Homomorphism, hom_group, kernel
from .intlat import CanonicalSubgroup, IntMatrix, solve_homogeneous_congruences
from .lattice import (
    Submodule,
    distinct_cyclic_submodules,
    fully_invariant_submodules,
    is_quasi_projective,
    submodule_as_module,
)
from .product import is_locally_nilpotent, is_nil_submodule, nilpotency_index, power_trace, product


def ann_left(module, sub: Submodule) -> Submodule:
    """Intersection of the kernels of all maps from the module into ``sub``.

    The kernels of a generating set suffice: the kernel of a sum of maps
    contains the intersection of their kernels.
    """
    if sub.module != module:
        raise ValueError("submodule of a different module")
    emb = submodule_as_module(sub)
    out = Submodule.full(module)
    for g in hom_group(module, emb.module).generators:
        out = out.intersect(kernel(g))
    return out


def ann_right(module, sub: Submodule, caps=DEFAULT_CAPS) -> Submodule:
    """Sum of all submodules K with sub*K = 0.

    Computed over cyclic submodules; monotonicity of the product in its
    second argument makes the cyclic sum equal to the full definitional sum.
    """
    if sub.module != module:
        raise ValueError("submodule of a different module")
    out = Submodule.zero(module)
    for c in distinct_cyclic_submodules(module, caps):
        if product(module, sub, c).is_zero():
            out = out.sum(c)
    return out


def l_rel(module, outer: Submodule, inner: Submodule) -> Submodule:
    """ann(inner) intersected with outer; requires inner <= outer."""
    if not inner.le(outer):
        raise ValueError("inner submodule must lie inside the outer one")
    return ann_left(module, inner).intersect(outer)


def r_rel(module, outer: Submodule, inner: Submodule, caps=DEFAULT_CAPS) -> Submodule:
    """Right annihilator of inner intersected with outer; inner <= outer."""
    if not inner.le(outer):
        raise ValueError("inner submodule must lie inside the outer one")
    return ann_right(module, inner, caps).intersect(outer)


def ell(module, caps=DEFAULT_CAPS) -> Submodule:
    """The largest locally nilpotent submodule: the sum of all nilpotent
    cyclic submodules."""
    out = Submodule.zero(module)
    for c in distinct_cyclic_submodules(module, caps):
        if nilpotency_index(module, c) is not None:
            out = out.sum(c)
    return out


def _require_proper_fully_invariant(module, p: Submodule, fi_list):
    if p not in fi_list:
        raise ValueError("candidate is not fully invariant")
    if p.is_full():
        raise ValueError("prime and semiprime candidates must be proper")


def is_prime_submodule(module, p: Submodule, caps=DEFAULT_CAPS):
    """Definitional primeness over all pairs of fully invariant submodules;
    returns (True, None) or (False, (n, k)) with a witness pair."""
    fis = fully_invariant_submodules(module, caps)
    _require_proper_fully_invariant(module, p, fis)
    for n_sub in fis:
        for k_sub in fis:
            if product(module, n_sub, k_sub).le(p):
                if not (n_sub.le(p) or k_sub.le(p)):
                    return False, (n_sub, k_sub)
    return True, None


def is_semiprime_submodule(module, p: Submodule, caps=DEFAULT_CAPS):
    """Like primeness but only over diagonal pairs N*N <= P."""
    fis = fully_invariant_submodules(module, caps)
    _require_proper_fully_invariant(module, p, fis)
    for n_sub in fis:
        if product(module, n_sub, n_sub).le(p) and not n_sub.le(p):
            return False, n_sub
    return True, None


@dataclass(frozen=True)
class RadicalProfile:
    """Radical data for one module.

    ``no_primes`` flags the (hypothesis-violating) case of an empty prime
    spectrum, in which the radical intersection defaults to the module
    itself.  ``ell_locally_nilpotent`` reports, for ambients that are not
    quasi-projective, whether the computed radical is itself locally
    nilpotent; the closure-under-sums argument needs projectivity, so this is
    diagnostic rather than guaranteed.
    """

    ell: Submodule
    prime_radical: Submodule
    primes: tuple[Submodule, ...]
    semiprimes: tuple[Submodule, ...]
    nilpotency_of_radical: int | None
    no_primes: bool = False
    ell_locally_nilpotent: bool | None = None


def prime_radical(module, caps=DEFAULT_CAPS) -> RadicalProfile:
    """Intersection of all prime submodules, with the full radical profile."""
    fis = fully_invariant_submodules(module, caps)
    primes = []
    semiprimes = []
    for p in fis:
        if p.is_full():
            continue
        if is_prime_submodule(module, p, caps)[0]:
            primes.append(p)
        if is_semiprime_submodule(module, p, caps)[0]:
            semiprimes.append(p)
    no_primes = not primes
    if no_primes:
        radical = Submodule.full(module)
    else:
        radical = primes[0]
        for p in primes[1:]:
            radical = radical.intersect(p)
    ell_sub = ell(module, caps)
    if is_quasi_projective(module, caps):
        ell_loc_nil = None
    else:
        try:
            ell_loc_nil = is_locally_nilpotent(module, ell_sub, caps=caps)
        except CapExceeded:
            ell_loc_nil = None
    return RadicalProfile(
        ell=ell_sub,
        prime_radical=radical,
        primes=tuple(primes),
        semiprimes=tuple(semiprimes),
        nilpotency_of_radical=nilpotency_index(module, radical),
        no_primes=no_primes,
        ell_locally_nilpotent=ell_loc_nil,
    )


@dataclass(frozen=True)
class SubmSequence:
    """Outcome of the orthogonal-sequence construction.

    diagnostics is ("complete", k), ("hypothesis_violated", j, witness) with
    witness the nonzero left annihilator slice (or the nil-test witness when
    j = 0), or ("cap_reached", max_k).
    """

    modules_a: tuple[Submodule, ...]
    diagnostics: tuple


def subm_sequence(module, sub: Submodule, max_k: int = 8, caps=DEFAULT_CAPS) -> SubmSequence:
    """Attempt the inductive construction A_1 = r_N(N),
    A_{i+1} = r_N(A_1 * ... * A_i * N) for a fully invariant nil submodule
    with all left annihilator slices l_N(N^j) zero.

    Hypotheses are checked first; on finite modules with a nonzero nil
    submodule some slice is always nonzero, so the construction is expected
    to report a hypothesis violation rather than run.
    """
    fis = fully_invariant_submodules(module, caps)
    if sub not in fis:
        raise ValueError("sequence construction needs a fully invariant submodule")
    if sub.is_zero():
        return SubmSequence(modules_a=(), diagnostics=("complete", 0))
    verdict = is_nil_submodule(module, sub, caps)
    if not verdict.is_nil:
        return SubmSequence(
            modules_a=(), diagnostics=("hypothesis_violated", 0, verdict.witness)
        )
    trace = power_trace(module, sub)
    for j, pow_j in enumerate(trace.chain, start=1):
        slice_j = l_rel(module, sub, pow_j)
        if not slice_j.is_zero():
            return SubmSequence(
                modules_a=(), diagnostics=("hypothesis_violated", j, slice_j)
            )
    sequence = []
    prefix = None  # A_1 * ... * A_i
    for _step in range(max_k):
        if prefix is None:
            nxt = r_rel(module, sub, sub, caps)
        else:
            nxt = r_rel(module, sub, product(module, prefix, sub), caps)
        sequence.append(nxt)
        prefix = nxt if prefix is None else product(module, prefix, nxt)
        if prefix.is_zero():
            raise ArithmeticError(
                "orthogonality contract failed: prefix product vanished"
            )
        for j, a_j in enumerate(sequence):
            if not product(module, prefix, a_j).is_zero():
                raise ArithmeticError(
                    f"orthogonality contract failed at pair ({len(sequence)},{j + 1})"
                )
    return SubmSequence(modules_a=tuple(sequence), diagnostics=("cap_reached", max_k))


def annihilator_chain_index(module, sub: Submodule) -> int:
    """Least k at which the ascending chain of annihilators of the powers
    stabilizes: ann(N^k) = ann(N^(k+1))."""
    trace = power_trace(module, sub)

    def power_at(exponent):
        if exponent <= len(trace.chain):
            return trace.chain[exponent - 1]
        kind, idx = trace.terminal
        if kind == "zero":
            return Submodule.zero(module)
        period = len(trace.chain) - idx + 1
        return trace.chain[idx - 1 + (exponent - idx) % period]

    k = 1
    prev = ann_left(module, power_at(1))
    while True:
        nxt = ann_left(module, power_at(k + 1))
        if nxt == prev:
            return k
        prev = nxt
        k += 1


def end_left_annihilator(module, vectors):
    """Endomorphisms vanishing on the given elements, as a subgroup of the
    endomorphism group; returns (generators, subgroup)."""
    s = module.ngens
    d = module.inv_factors
    end = hom_group(module, module)
    nvars = s * s
    rows = []
    row_moduli = []
    # linear system: being an endomorphism, plus vanishing on each vector
    for i in range(module.ring.rank):
        a = module.actions[i]
        for k in range(s):
            for j in range(s):
                r = [0] * nvars
                for l in range(s):
                    if a[l][j]:
                        r[k * s + l] += a[l][j]
                for l in range(s):
                    if a[k][l]:
                        r[l * s + j] -= a[k][l]
                if any(v % d[k] for v in r):
                    rows.append([v % d[k] for v in r])
                    row_moduli.append(d[k])
    for k in range(s):
        for j in range(s):
            if d[j] % d[k]:
                r = [0] * nvars
                r[k * s + j] = d[j]
                rows.append(r)
                row_moduli.append(d[k])
    for vec in vectors:
        for k in range(s):
            r = [0] * nvars
            for j in range(s):
                if vec[j]:
                    r[k * s + j] = vec[j] % d[k]
            rows.append(r)
            row_moduli.append(d[k])
    col_moduli = tuple(d[k] for k in range(s) for _ in range(s))
    if nvars == 0:
        sub = CanonicalSubgroup((), [])
    else:
        sol = solve_homogeneous_congruences(
            IntMatrix.from_rows(rows, nvars) if rows else IntMatrix.zeros(0, nvars),
            row_moduli,
            col_moduli,
        )
        sub = sol.subgroup
    gens = [
        Homomorphism(
            module,
            module,
            tuple(tuple(g[k * s + j] for j in range(s)) for k in range(s)),
        )
        for g in sub.basis
    ]
    assert all(end.contains(g) for g in gens)
    return gens, sub


def kernel_intersection(module, endos) -> Submodule:
    """Common kernel of a family of endomorphisms (all of M when empty)."""
    out = Submodule.full(module)
    for f in endos:
        out = out.intersect(kernel(f))
    return out
