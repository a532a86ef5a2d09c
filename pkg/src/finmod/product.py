"""The submodule product N*K inside an ambient module M (the sum of f(N) over
all maps f from M into K), its powers, and the nilpotency notions built on it:
nilpotent, nil, and locally nilpotent submodules.

Powers are left-nested by convention; associativity of the product is only
guaranteed when the ambient module lifts against its own quotients, so traces
also record whether the two nestings diverge instead of assuming they agree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import DEFAULT_CAPS, CapExceeded
from .homspace import (
    compose,
    composition_length,
    hom_group,
    is_nilpotent_endo,
)
from .lattice import (
    Submodule,
    cyclic_submodule,
    is_quasi_projective,
    submodule_as_module,
)

_product_cache: dict = {}


def product(module, left: Submodule, right: Submodule) -> Submodule:
    """Submodule generated by the images of ``left`` under every map from the
    ambient module into ``right``.

    Generated by {f(n)} with f ranging over the Hom-group generators and n
    over the basis of ``left``; linearity makes this span the full sum.
    """
    key = (module, left, right)
    hit = _product_cache.get(key)
    if hit is not None:
        return hit
    if left.module != module or right.module != module:
        raise ValueError("product arguments must live in the ambient module")
    if left.is_zero() or right.is_zero():
        out = Submodule.zero(module)
    else:
        emb = submodule_as_module(right)
        group = hom_group(module, emb.module)
        rows = []
        for g in group.generators:
            f = compose(emb.inclusion, g)
            for row in left.basis:
                rows.append(f.apply_vec(row))
        out = Submodule.span(module, rows)
    _product_cache[key] = out
    return out


@dataclass(frozen=True)
class PowerTrace:
    """Successive powers of a submodule until they vanish or repeat.

    ``terminal`` is ("zero", i) when chain[i-1] is the zero submodule, or
    ("cycle", j) when the next power equals chain[j-1].
    ``nesting_divergence`` is the first index at which the right-nested
    sequence differs from the left-nested one, if any.
    """

    base: Submodule
    chain: tuple[Submodule, ...]
    terminal: tuple[str, int]
    nesting_divergence: int | None


def power_trace(module, base: Submodule) -> PowerTrace:
    chain = [base]
    index_of = {base: 1}
    terminal = None
    while terminal is None:
        cur = chain[-1]
        if cur.is_zero():
            terminal = ("zero", len(chain))
            break
        nxt = product(module, cur, base)
        if nxt in index_of:
            terminal = ("cycle", index_of[nxt])
            break
        chain.append(nxt)
        index_of[nxt] = len(chain)
    divergence = None
    right = base
    for i in range(1, len(chain)):
        right = product(module, base, right)
        if right != chain[i]:
            divergence = i + 1
            break
    return PowerTrace(
        base=base,
        chain=tuple(chain),
        terminal=terminal,
        nesting_divergence=divergence,
    )


def power(module, base: Submodule, exponent: int) -> Submodule:
    """Left-nested power; exponent 1 is the submodule itself."""
    if exponent < 1:
        raise ValueError("exponent must be at least 1")
    trace = power_trace(module, base)
    if exponent <= len(trace.chain):
        return trace.chain[exponent - 1]
    kind, idx = trace.terminal
    if kind == "zero":
        return Submodule.zero(module)
    # cycle: powers repeat with period len(chain) - idx + 1 from position idx
    period = len(trace.chain) - idx + 1
    offset = (exponent - idx) % period
    return trace.chain[idx - 1 + offset]


def nilpotency_index(module, base: Submodule) -> int | None:
    """Least exponent whose power vanishes, or None when the powers cycle."""
    trace = power_trace(module, base)
    kind, idx = trace.terminal
    return idx if kind == "zero" else None


@dataclass(frozen=True)
class NilVerdict:
    is_nil: bool
    witness: tuple | None  # (generator coefficients, endomorphism) on False
    bounded: bool  # True when the Hom groups were too large to enumerate


def is_nil_submodule(module, sub: Submodule, caps=DEFAULT_CAPS) -> NilVerdict:
    """Whether every map from the ambient module into each cyclic submodule
    of ``sub`` is nilpotent.

    Enumerates the Hom group into each cyclic when small enough; otherwise
    falls back to testing generators and their bounded products, flagged as a
    bounded verdict.
    """
    seen = {}
    for x in sub.elements():
        if x.is_zero():
            continue
        c = cyclic_submodule(module, x)
        if c in seen:
            continue
        seen[c] = x.coeffs
    bounded = False
    for c, rep in seen.items():
        emb = submodule_as_module(c)
        group = hom_group(module, emb.module)
        if group.order <= caps.max_hom_elements:
            candidates = (compose(emb.inclusion, f) for f in group.elements())
        else:
            bounded = True
            candidates = _bounded_products(group, module, emb)
        for endo in candidates:
            nil, _ = is_nilpotent_endo(endo)
            if not nil:
                return NilVerdict(False, (rep, endo), bounded)
    return NilVerdict(True, None, bounded)


def _bounded_products(group, module, emb):
    """Generators of a Hom group and their products up to the composition
    length bound, as maps into the cyclic target."""
    gens = [compose(emb.inclusion, g) for g in group.generators]
    for g in gens:
        yield g
    bound = composition_length(module)
    layer = list(gens)
    for _ in range(bound - 1):
        nxt = []
        for f in layer:
            for g in gens:
                h = compose(f, g)
                if not h.is_zero():
                    nxt.append(h)
                    yield h
        if not nxt:
            return
        layer = nxt


def is_locally_nilpotent(
    module,
    sub: Submodule,
    subset_cap: int = 64,
    caps=DEFAULT_CAPS,
    force_definitional: bool = False,
) -> bool:
    """Uniform vanishing of ordered products of the cyclic submodules.

    When the ambient module is quasi-projective this reduces to nilpotency of
    the (finitely generated) submodule itself.  The definitional path walks
    products of cyclic generators level by level, with the uniform length
    bounded by the composition length of the ambient module;
    ``force_definitional`` skips the reduction (useful when the reduction is
    the claim under test).
    """
    if sub.is_zero():
        return True
    if not force_definitional and is_quasi_projective(module, caps):
        return nilpotency_index(module, sub) is not None
    cyclics = {}
    for x in sub.elements():
        if x.is_zero():
            continue
        c = cyclic_submodule(module, x)
        cyclics.setdefault(c, None)
        if len(cyclics) > subset_cap:
            raise CapExceeded("cyclic generators", len(cyclics), subset_cap)
    cyclics = sorted(cyclics.keys(), key=Submodule.sort_key)
    if not cyclics:
        return True
    states = set(cyclics)
    bound = composition_length(module)
    for _level in range(2, bound + 1):
        nxt = set()
        for p in states:
            for c in cyclics:
                q = product(module, p, c)
                if not q.is_zero():
                    nxt.add(q)
        if not nxt:
            return True
        states = nxt
    return False
