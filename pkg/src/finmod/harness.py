"""Statement catalog and verification harness.

Every cataloged statement maps to an executable check over one instance
(a ring with a module over it).  Hypotheses are evaluated before conclusions,
so a vacuous pass (hypothesis not met) is always distinguishable from a real
one, and dropping a hypothesis deliberately is how counterexample searches
are run.

Corpus generation is deterministic: a fixed parametrized family list is
shuffled by a seeded generator and truncated, with two mandatory instances
(a non-quasi-projective mixed group and the smallest noncommutative
triangular ring) always present.
"""

from __future__ import annotations

import random
import zlib
from dataclasses import dataclass, field

from .algebra import (
    FiniteModule,
    FiniteRing,
    cyclic_module,
    direct_sum,
    matrix_ring,
    opposite_ring,
    product_ring,
    quotient_module,
    regular_module,
    triangular_ring,
    zn_ring,
)
from .config import DEFAULT_CAPS, CapExceeded
from .homspace import Homomorphism, compose, end_ring, hom_group
from .lattice import (
    PredicateProfile,
    Submodule,
    all_submodules,
    annihilator_lattice,
    cyclic_submodule,
    fully_invariant_submodules,
    is_goldie,
    submodule_as_module,
    uniform_dimension,
)
from .oracle import BudgetExceeded
from .product import (
    is_locally_nilpotent,
    is_nil_submodule,
    nilpotency_index,
    power_trace,
    product,
)
from .radical import (
    ann_left,
    ann_right,
    end_left_annihilator,
    ell,
    is_semiprime_submodule,
    kernel_intersection,
    l_rel,
    prime_radical,
    r_rel,
    subm_sequence,
)

STATEMENT_IDS = (
    "LEM-PRODDIRSUMM",
    "LEM-FPROD",
    "LEM-EPIPRODUCT",
    "LEM-FACTORNIL",
    "REM-LOCNIL-NIL",
    "LEM-FGNILP",
    "REM-FINSUM-NILP",
    "LEM-SUMLOCNIL",
    "PROP-LFIYRAD",
    "COR-LSP",
    "COR-NESL",
    "COR-PRNILNET",
    "EX-ZPN",
    "LEM-LSUMAS",
    "PROP-SEMIPRIME-DIRSUM",
    "COR-RSP",
    "COR-FREE-NILP",
    "PROP-MACCSACC",
    "LEM-NILPSUBNIL",
    "PROP-ACCNILLOCNIL",
    "LEM-RANNINTERSECTION",
    "LEM-DCCANNR",
    "LEM-DCCL",
    "PROP-FACTORRIGHTACC",
    "COR-DCCRN",
    "LEM-RANNNCERO",
    "PROP-SUBM",
    "LEM-ACCMODULOANN",
    "LEM-FMRET",
    "LEM-MGOLSGOL",
    "THM-MAIN",
    "COR-PRIMENILGOLDIE",
)


@dataclass(frozen=True)
class Instance:
    name: str
    ring: FiniteRing
    module: FiniteModule
    profile: PredicateProfile


@dataclass(frozen=True)
class Corpus:
    seed: int
    instances: tuple[Instance, ...]


@dataclass(frozen=True)
class VerificationReport:
    statement: str
    instance: str
    outcome: str  # pass | fail | hypothesis_not_met | skipped
    detail: str = ""
    witness: str | None = None
    exercised: int = 0
    elapsed: float = field(default=0.0, compare=False)

    def line(self) -> str:
        """Deterministic one-line rendering (timings are excluded)."""
        tag = {
            "pass": "PASS",
            "fail": "FAIL",
            "hypothesis_not_met": "HYP ",
            "skipped": "SKIP",
        }[self.outcome]
        parts = [tag, self.statement, self.instance]
        if self.outcome == "pass":
            parts.append(f"exercised={self.exercised}")
        if self.detail:
            parts.append(f"({self.detail})")
        if self.witness:
            parts.append(f"witness={self.witness}")
        return " ".join(parts)


# ---------------------------------------------------------------------------
# corpus generation


def _family_list(caps):
    """The deterministic instance family list, mandatory members first."""
    out = []
    ring4 = zn_ring(4)
    mixed, _, _ = direct_sum(cyclic_module(ring4, 2), regular_module(ring4))
    out.append(("Z2+Z4-over-Z4", mixed))
    out.append(("T2(Z2)-regular", regular_module(triangular_ring(2, 2))))

    for n in (2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15, 16, 18, 20, 21, 24, 25,
              27, 28, 30, 32, 36, 40, 45, 48, 49, 54, 60, 63, 64):
        out.append((f"Z{n}-regular", regular_module(zn_ring(n))))
    for n, d in ((4, 2), (8, 2), (8, 4), (9, 3), (12, 2), (12, 3), (12, 4),
                 (12, 6), (16, 2), (16, 4), (16, 8), (18, 6), (24, 12), (25, 5),
                 (27, 3), (27, 9), (32, 8), (36, 6), (49, 7)):
        out.append((f"Z{d}-over-Z{n}", cyclic_module(zn_ring(n), d)))
    for n, parts in ((4, (2, 4)), (8, (2, 8)), (8, (4, 8)), (8, (2, 4)),
                     (9, (3, 9)), (16, (4, 16)), (16, (2, 16)), (27, (3, 27)),
                     (12, (2, 12)), (12, (6, 12)), (18, (3, 18)), (25, (5, 25))):
        ring = zn_ring(n)
        a = cyclic_module(ring, parts[0])
        b = cyclic_module(ring, parts[1])
        summed, _, _ = direct_sum(a, b)
        out.append((f"Z{parts[0]}+Z{parts[1]}-over-Z{n}", summed))
    for n in (2, 3, 4, 5, 6):
        reg = regular_module(zn_ring(n))
        sq, _, _ = direct_sum(reg, reg)
        out.append((f"Z{n}^2-free", sq))
    reg2 = regular_module(zn_ring(2))
    cube, _, _ = direct_sum(direct_sum(reg2, reg2)[0], reg2)
    out.append(("Z2^3-free", cube))

    named_rings = [
        ("M2(Z2)", matrix_ring(2, 2)),
        ("M2(Z3)", matrix_ring(2, 3)),
        ("T2(Z3)", triangular_ring(2, 3)),
        ("T2(Z4)", triangular_ring(2, 4)),
        ("T3(Z2)", triangular_ring(3, 2)),
        ("Z4xZ6", product_ring([zn_ring(4), zn_ring(6)])),
        ("Z2xZ6", product_ring([zn_ring(2), zn_ring(6)])),
        ("Z2xT2(Z2)", product_ring([zn_ring(2), triangular_ring(2, 2)])),
        ("Z3xM2(Z2)", product_ring([zn_ring(3), matrix_ring(2, 2)])),
        ("Z6xZ6", product_ring([zn_ring(6), zn_ring(6)])),
    ]
    for name, ring in named_rings:
        out.append((f"{name}-regular", regular_module(ring)))

    # quotients of structured modules by fully invariant submodules
    for name, ring in [("T2(Z2)", triangular_ring(2, 2)),
                       ("M2(Z2)", matrix_ring(2, 2)),
                       ("T3(Z2)", triangular_ring(3, 2)),
                       ("T2(Z3)", triangular_ring(2, 3))]:
        reg = regular_module(ring)
        fis = fully_invariant_submodules(reg, caps)
        for idx, sub in enumerate(fis):
            if sub.is_zero() or sub.is_full():
                continue
            quot, _ = quotient_module(reg, sub)
            out.append((f"{name}-regular/fi{idx}", quot))
    # a couple of proper submodules as standalone modules
    t2 = regular_module(triangular_ring(2, 2))
    for idx, sub in enumerate(all_submodules(t2, caps)):
        if sub.is_zero() or sub.is_full():
            continue
        out.append((f"T2(Z2)-ideal{idx}", submodule_as_module(sub).module))
    # direct sums mixing shapes
    t2r = regular_module(triangular_ring(2, 2))
    t2sq, _, _ = direct_sum(t2r, t2r)
    out.append(("T2(Z2)^2-free", t2sq))
    j = cyclic_submodule(t2r, (0, 1, 0))
    jq, _ = quotient_module(t2r, j)
    s1, _, _ = direct_sum(t2r, jq)
    out.append(("T2(Z2)+quotient", s1))
    return out


def _end_order(module) -> int:
    group = hom_group(module, module)
    return group.order


def generate_corpus(seed: int, budget: int = 110, caps=DEFAULT_CAPS) -> Corpus:
    """Deterministic instance mix.  The two mandatory counterexample
    factories are always included; the rest is a seeded shuffle of the family
    list, truncated to the budget and filtered to sizes the per-instance
    analyses can afford."""
    families = _family_list(caps)
    mandatory = families[:2]
    rest = families[2:]
    rng = random.Random(seed)
    rng.shuffle(rest)
    chosen = list(mandatory) + rest
    instances = []
    for name, module in chosen:
        if len(instances) >= budget:
            break
        if module.order > caps.max_module_order:
            continue
        if _end_order(module) > 1024:
            continue
        try:
            profile = is_goldie(module, caps)
        except CapExceeded:
            continue
        instances.append(
            Instance(name=name, ring=module.ring, module=module, profile=profile)
        )
    return Corpus(seed=seed, instances=tuple(instances))


# ---------------------------------------------------------------------------
# statement checkers
#
# Each checker returns (exercised_count, witness_or_None, detail).  A witness
# means the conclusion failed.  Checkers may raise CapExceeded/BudgetExceeded.


def _rng_for(sid, instance):
    return random.Random(zlib.crc32(f"{sid}|{instance.name}".encode()))


def _sample(items, rng, k):
    items = list(items)
    if len(items) <= k:
        return items
    return rng.sample(items, k)


def _nonzero_proper_fi(module, caps):
    return [
        s
        for s in fully_invariant_submodules(module, caps)
        if not s.is_zero() and not s.is_full()
    ]


def _fi_nil_submodules(module, caps):
    out = []
    for s in fully_invariant_submodules(module, caps):
        if s.is_full():
            continue
        if is_nil_submodule(module, s, caps).is_nil:
            out.append(s)
    return out


def _push(module, target, hom, sub):
    """Image of a submodule under a map, as a submodule of the target."""
    return Submodule.span(target, [hom.apply_vec(r) for r in sub.basis])


def _check_proddirsumm(instance, caps):
    m = instance.module
    rng = _rng_for("LEM-PRODDIRSUMM", instance)
    lat = list(all_submodules(m, caps))
    exercised = 0
    for n_sub in _sample([s for s in lat if not s.is_zero()], rng, 5):
        emb = submodule_as_module(n_sub)
        sub_lat = list(all_submodules(emb.module, caps))
        summand = any(
            n_sub.intersect(c).is_zero() and n_sub.sum(c).is_full() for c in lat
        )
        for k_in, l_in in _sample(
            [(a, b) for a in sub_lat for b in sub_lat], rng, 8
        ):
            inner = product(emb.module, k_in, l_in)
            inner_in_m = _push(emb.module, m, emb.inclusion, inner)
            outer = product(
                m,
                _push(emb.module, m, emb.inclusion, k_in),
                _push(emb.module, m, emb.inclusion, l_in),
            )
            if not outer.le(inner_in_m):
                return exercised, f"{n_sub.describe()}:{k_in.describe()}*{l_in.describe()}", ""
            if summand and outer != inner_in_m:
                return exercised, f"summand {n_sub.describe()} equality", ""
            exercised += 1
    return exercised, None, ""


def _end_elements_sample(module, rng, k, caps):
    group = hom_group(module, module)
    if group.order <= caps.max_hom_elements:
        return _sample(list(group.elements()), rng, k)
    gens = list(group.generators)
    picks = [Homomorphism.identity(module)]
    for _ in range(k - 1):
        f = rng.choice(gens)
        g = rng.choice(gens)
        picks.append(compose(f, g))
    return picks


def _check_fprod(instance, caps):
    m = instance.module
    rng = _rng_for("LEM-FPROD", instance)
    lat = list(all_submodules(m, caps))
    endos = _end_elements_sample(m, rng, 6, caps)
    exercised = 0
    for f in endos:
        for a, b in _sample([(x, y) for x in lat for y in lat], rng, 8):
            ab = product(m, a, b)
            f_ab = _push(m, m, f, ab)
            f_b = _push(m, m, f, b)
            if f_ab != product(m, a, f_b):
                return exercised, f"f({a.describe()}*{b.describe()})", ""
            f_a = _push(m, m, f, a)
            if not product(m, f_a, b).le(ab):
                return exercised, f"f({a.describe()})*{b.describe()}", ""
            exercised += 1
    return exercised, None, ""


def _check_epiproduct(instance, caps):
    m = instance.module
    rng = _rng_for("LEM-EPIPRODUCT", instance)
    lat = list(all_submodules(m, caps))
    exercised = 0
    for k_sub in _sample(fully_invariant_submodules(m, caps), rng, 4):
        quot, proj = quotient_module(m, k_sub)
        for n_sub in _sample(lat, rng, 6):
            pn = _push(m, quot, proj, n_sub)
            lhs = _push(m, quot, proj, product(m, n_sub, n_sub))
            if lhs != product(quot, pn, pn):
                return exercised, f"K={k_sub.describe()} N={n_sub.describe()}", ""
            exercised += 1
    return exercised, None, ""


def _check_factornil(instance, caps):
    m = instance.module
    rng = _rng_for("LEM-FACTORNIL", instance)
    lat = list(all_submodules(m, caps))
    nils = [s for s in lat if is_nil_submodule(m, s, caps).is_nil]
    exercised = 0
    for n_sub in _sample(nils, rng, 3):
        for k_sub in _sample(lat, rng, 4):
            quot, proj = quotient_module(m, k_sub)
            image = _push(m, quot, proj, n_sub)
            if not is_nil_submodule(quot, image, caps).is_nil:
                return exercised, f"N={n_sub.describe()} K={k_sub.describe()}", ""
            exercised += 1
    return exercised, None, ""


def _check_locnil_nil(instance, caps):
    m = instance.module
    rng = _rng_for("REM-LOCNIL-NIL", instance)
    exercised = 0
    for s in _sample(list(all_submodules(m, caps)), rng, 8):
        loc = is_locally_nilpotent(m, s, caps=caps)
        if loc and not is_nil_submodule(m, s, caps).is_nil:
            return exercised, f"{s.describe()} locally nilpotent but not nil", ""
        if nilpotency_index(m, s) is not None and not loc:
            return exercised, f"{s.describe()} nilpotent but not locally nilpotent", ""
        exercised += 1
    return exercised, None, ""


def _check_fgnilp(instance, caps):
    m = instance.module
    rng = _rng_for("LEM-FGNILP", instance)
    exercised = 0
    for s in _sample(list(all_submodules(m, caps)), rng, 8):
        if is_locally_nilpotent(m, s, caps=caps, force_definitional=True):
            if nilpotency_index(m, s) is None:
                return exercised, s.describe(), ""
            exercised += 1
    return exercised, None, ""


def _check_finsum_nilp(instance, caps):
    m = instance.module
    rng = _rng_for("REM-FINSUM-NILP", instance)
    lat = list(all_submodules(m, caps))
    nilpotents = [s for s in lat if nilpotency_index(m, s) is not None]
    exercised = 0
    for a, b in _sample(
        [(x, y) for x in nilpotents for y in nilpotents], rng, 10
    ):
        if nilpotency_index(m, a.sum(b)) is None:
            return exercised, f"{a.describe()}+{b.describe()}", ""
        exercised += 1
    return exercised, None, ""


def _check_sumlocnil(instance, caps):
    m = instance.module
    rng = _rng_for("LEM-SUMLOCNIL", instance)
    lat = list(all_submodules(m, caps))
    locnils = [s for s in lat if is_locally_nilpotent(m, s, caps=caps)]
    exercised = 0
    for a, b in _sample([(x, y) for x in locnils for y in locnils], rng, 10):
        if not is_locally_nilpotent(m, a.sum(b), caps=caps):
            return exercised, f"{a.describe()}+{b.describe()}", ""
        exercised += 1
    return exercised, None, ""


def _check_lfiyrad(instance, caps):
    m = instance.module
    radical = ell(m, caps)
    if radical not in fully_invariant_submodules(m, caps):
        return 0, "radical not fully invariant", ""
    if not is_locally_nilpotent(m, radical, caps=caps):
        return 0, "radical not locally nilpotent", ""
    quot, _ = quotient_module(m, radical)
    if not ell(quot, caps).is_zero():
        return 1, "quotient has nonzero radical", ""
    return 3, None, ""


def _check_lsp(instance, caps):
    m = instance.module
    if m.order == 1:
        return 0, None, "zero module"
    radical = ell(m, caps)
    if radical.is_full():
        return 0, "radical is the whole module", ""
    ok, witness = is_semiprime_submodule(m, radical, caps)
    if not ok:
        return 0, witness.describe(), ""
    return 1, None, ""


def _check_nesl(instance, caps):
    m = instance.module
    profile = prime_radical(m, caps)
    if profile.no_primes:
        return 0, "empty prime spectrum", ""
    if profile.prime_radical != profile.ell:
        return 0, (
            f"radical={profile.prime_radical.describe()} "
            f"locnil={profile.ell.describe()}"
        ), ""
    return 1, None, ""


def _check_prnilnet(instance, caps):
    profile = prime_radical(instance.module, caps)
    if profile.no_primes:
        return 0, "empty prime spectrum", ""
    if profile.nilpotency_of_radical is None:
        return 0, profile.prime_radical.describe(), ""
    return 1, None, f"index={profile.nilpotency_of_radical}"


def _prime_power(n):
    p = 2
    while p * p <= n:
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            return (p, k) if n == 1 else None
        p += 1
    return (n, 1) if n > 1 else None


def _zpn_shape(instance):
    ring = instance.ring
    if ring.rank != 1:
        return None
    pk = _prime_power(ring.order)
    if pk is None:
        return None
    if instance.module != regular_module(ring):
        return None
    return pk


def _check_zpn(instance, caps):
    pk = _zpn_shape(instance)
    if pk is None:
        return 0, None, "not a cyclic prime-power regular module"
    p, n = pk
    m = instance.module
    radical = ell(m, caps)
    expected = cyclic_submodule(m, (p,))
    if radical != expected:
        return 0, radical.describe(), ""
    idx = nilpotency_index(m, radical)
    if idx != n:
        return 0, f"index={idx}", ""
    return 1, None, f"p={p} n={n}"


def _check_lsumas(instance, caps):
    m = instance.module
    exercised = 0
    partners = [m]
    reg = regular_module(m.ring)
    if reg != m:
        partners.append(reg)
    from .lattice import is_quasi_projective

    for other in partners:
        if m.order * other.order > caps.max_module_order:
            continue
        total, (ia, ib), _ = direct_sum(m, other)
        if _end_order(total) > caps.max_hom_elements:
            continue
        if not is_quasi_projective(total, caps):
            continue
        lhs = ell(total, caps)
        rhs = _push(m, total, ia, ell(m, caps)).sum(
            _push(other, total, ib, ell(other, caps))
        )
        if lhs != rhs:
            return exercised, f"{m.name}(+){other.name}", ""
        exercised += 1
    return exercised, None, ""


def _check_semiprime_dirsum(instance, caps):
    m = instance.module
    if m.order == 1:
        return 0, None, "zero module"
    from .lattice import is_quasi_projective

    exercised = 0
    partners = [m]
    reg = regular_module(m.ring)
    if reg != m:
        partners.append(reg)
    for other in partners:
        if m.order * other.order > caps.max_module_order:
            continue
        total, _, _ = direct_sum(m, other)
        if _end_order(total) > caps.max_hom_elements:
            continue
        if not is_quasi_projective(total, caps):
            continue
        sp_total = is_semiprime_submodule(total, Submodule.zero(total), caps)[0]
        sp_parts = (
            is_semiprime_submodule(m, Submodule.zero(m), caps)[0]
            and is_semiprime_submodule(other, Submodule.zero(other), caps)[0]
        )
        if sp_total != sp_parts:
            return exercised, f"{m.name}(+){other.name}", ""
        exercised += 1
    return exercised, None, ""


def _ring_semiprime(ring, caps):
    reg = regular_module(ring)
    return is_semiprime_submodule(reg, Submodule.zero(reg), caps)[0]


def _check_rsp(instance, caps):
    ring = instance.ring
    base = _ring_semiprime(ring, caps)
    reg = regular_module(ring)
    exercised = 1
    # rank-2 free modules only for oracle-scale rings; larger rings still
    # exercise the rank-1 direction
    if reg.order**2 <= 256:
        free2, _, _ = direct_sum(reg, reg)
        sp2 = is_semiprime_submodule(free2, Submodule.zero(free2), caps)[0]
        if sp2 != base:
            return exercised, f"rank2 free disagrees (ring {base}, free {sp2})", ""
        exercised += 1
    return exercised, None, f"semiprime={base}"


def _check_free_nilp(instance, caps):
    ring = instance.ring
    reg = regular_module(ring)
    base = prime_radical(reg, caps)
    base_nilp = base.nilpotency_of_radical is not None and not base.no_primes
    exercised = 1
    if reg.order**2 <= 256:
        free2, _, _ = direct_sum(reg, reg)
        prof2 = prime_radical(free2, caps)
        nilp2 = prof2.nilpotency_of_radical is not None and not prof2.no_primes
        if nilp2 != base_nilp:
            return exercised, f"rank2 free disagrees (ring {base_nilp}, free {nilp2})", ""
        exercised += 1
    return exercised, None, ""


def _element_subsets(module, rng, count, size):
    elems = [x.coeffs for x in module.elements()]
    out = []
    for _ in range(count):
        k = min(size, len(elems))
        out.append(rng.sample(elems, rng.randint(1, k)))
    return out


def _check_maccsacc(instance, caps):
    m = instance.module
    rng = _rng_for("PROP-MACCSACC", instance)
    er = end_ring(m, caps)  # finite ring: chain conditions hold with evidence
    exercised = 0
    if m.order > 1:
        for x in _element_subsets(m, rng, 4, 3):
            gens, sub = end_left_annihilator(m, x)
            common = kernel_intersection(m, gens)
            rows = list(common.basis) or [tuple(0 for _ in m.inv_factors)]
            _, sub2 = end_left_annihilator(m, rows)
            if sub != sub2:
                return exercised, "dual annihilator identity failed", ""
            exercised += 1
    return exercised, None, f"|End|={er.as_ring.order}"


def _check_nilpsubnil(instance, caps):
    m = instance.module
    fis = fully_invariant_submodules(m, caps)
    nil_fis = _fi_nil_submodules(m, caps)
    exercised = 0
    for n_sub in nil_fis:
        if n_sub.is_zero():
            continue
        for k_sub in fis:
            if not (k_sub.lt(n_sub)):
                continue
            quot, proj = quotient_module(m, k_sub)
            image = _push(m, quot, proj, n_sub)
            found = any(
                not s.is_zero()
                and s.le(image)
                and nilpotency_index(quot, s) is not None
                for s in all_submodules(quot, caps)
            )
            if not found:
                return exercised, f"N={n_sub.describe()} K={k_sub.describe()}", ""
            exercised += 1
    return exercised, None, ""


def _check_accnillocnil(instance, caps):
    m = instance.module
    exercised = 0
    for n_sub in _fi_nil_submodules(m, caps):
        if not is_locally_nilpotent(m, n_sub, caps=caps, force_definitional=True):
            return exercised, n_sub.describe(), ""
        exercised += 1
    return exercised, None, ""


def _check_rannintersection(instance, caps):
    m = instance.module
    rng = _rng_for("LEM-RANNINTERSECTION", instance)
    lat = list(all_submodules(m, caps))
    exercised = 0
    for _ in range(6):
        family = _sample(lat, rng, rng.randint(2, 3))
        meet = Submodule.full(m)
        total = Submodule.zero(m)
        for n_sub in family:
            meet = meet.intersect(ann_right(m, n_sub, caps))
            total = total.sum(n_sub)
        if meet != ann_right(m, total, caps):
            return exercised, "+".join(s.describe() for s in family), ""
        exercised += 1
    return exercised, None, ""


def _check_dccannr(instance, caps):
    m = instance.module
    rng = _rng_for("LEM-DCCANNR", instance)
    lat = list(all_submodules(m, caps))
    exercised = 0
    seen = set()
    for n_sub in _sample(lat, rng, 8):
        rn = ann_right(m, n_sub, caps)
        seen.add(rn)
        if ann_right(m, ann_left(m, rn), caps) != rn:
            return exercised, n_sub.describe(), ""
        exercised += 1
    return exercised, None, f"right-annihilator values={len(seen)}"


def _check_dccl(instance, caps):
    m = instance.module
    rng = _rng_for("LEM-DCCL", instance)
    exercised = 0
    if m.order == 1:
        return 0, None, "zero module"
    for x in _element_subsets(m, rng, 4, 3):
        gens, sub = end_left_annihilator(m, x)
        common = kernel_intersection(m, gens)
        rows = list(common.basis) or [tuple(0 for _ in m.inv_factors)]
        _, sub2 = end_left_annihilator(m, rows)
        if sub != sub2:
            return exercised, "identity (1) failed", ""
        exercised += 1
    group = hom_group(m, m)
    if group.order <= caps.max_hom_elements:
        endos = list(group.elements())
        for _ in range(3):
            y = _sample(endos, rng, 2)
            common = kernel_intersection(m, y)
            gens, _ = end_left_annihilator(
                m, list(common.basis) or [tuple(0 for _ in m.inv_factors)]
            )
            if kernel_intersection(m, gens) != common:
                return exercised, "identity (2) failed", ""
            exercised += 1
    return exercised, None, ""


def _check_factorrightacc(instance, caps):
    m = instance.module
    rng = _rng_for("PROP-FACTORRIGHTACC", instance)
    lat = list(all_submodules(m, caps))
    exercised = 0
    sizes = []
    for n_sub in _sample(lat, rng, 4):
        quot, _ = quotient_module(m, ann_right(m, n_sub, caps))
        if _end_order(quot) > caps.max_hom_elements:
            continue
        sizes.append(len(annihilator_lattice(quot, caps)))
        exercised += 1
    return exercised, None, f"annihilator poset sizes={sizes}"


def _check_dccrn(instance, caps):
    m = instance.module
    rng = _rng_for("COR-DCCRN", instance)
    exercised = 0
    l_values = set()
    r_values = set()
    for n_sub in _sample(_nonzero_proper_fi(m, caps) or list(all_submodules(m, caps)), rng, 3):
        inner = list(all_submodules(submodule_as_module(n_sub).module, caps))
        emb = submodule_as_module(n_sub)
        for k_in in _sample(inner, rng, 6):
            k_sub = _push(emb.module, m, emb.inclusion, k_in)
            l_values.add(l_rel(m, n_sub, k_sub))
            r_values.add(r_rel(m, n_sub, k_sub, caps))
            exercised += 1
    return exercised, None, f"l-values={len(l_values)} r-values={len(r_values)}"


def _check_rannncero(instance, caps):
    m = instance.module
    exercised = 0
    for n_sub in _fi_nil_submodules(m, caps):
        if n_sub.is_zero() or n_sub.is_full():
            continue
        if r_rel(m, n_sub, n_sub, caps).is_zero():
            return exercised, n_sub.describe(), ""
        exercised += 1
    return exercised, None, ""


def _check_subm(instance, caps):
    m = instance.module
    exercised = 0
    zero_out = subm_sequence(m, Submodule.zero(m), caps=caps)
    if zero_out.diagnostics != ("complete", 0):
        return exercised, "zero submodule contract", ""
    for n_sub in _fi_nil_submodules(m, caps):
        if n_sub.is_zero():
            continue
        out = subm_sequence(m, n_sub, caps=caps)
        if out.diagnostics[0] != "hypothesis_violated":
            return exercised, f"sequence ran on {n_sub.describe()}", ""
        idx = nilpotency_index(m, n_sub)
        if idx is not None and idx >= 2:
            trace = power_trace(m, n_sub)
            penult = trace.chain[idx - 2]
            if l_rel(m, n_sub, penult).is_zero():
                return exercised, f"vacuity reasoning failed on {n_sub.describe()}", ""
        exercised += 1
    return exercised, None, ""


def _check_accmoduloann(instance, caps):
    m = instance.module
    rng = _rng_for("LEM-ACCMODULOANN", instance)
    group = hom_group(m, m)
    exercised = 0
    gens = list(group.generators) + [Homomorphism.identity(m)]
    seeds = _sample(list(group.generators), rng, 2)
    for g in seeds:
        ideal_span = [compose(a, compose(g, b)) for a in gens for b in gens]
        n_sub = kernel_intersection(m, ideal_span)
        quot, _ = quotient_module(m, n_sub)
        if _end_order(quot) > caps.max_hom_elements:
            continue
        annihilator_lattice(quot, caps)  # finite evidence for the chain condition
        exercised += 1
    return exercised, None, ""


def _check_fmret(instance, caps):
    from .lattice import is_retractable

    m = instance.module
    rng = _rng_for("LEM-FMRET", instance)
    lat = list(all_submodules(m, caps))
    exercised = 0
    for n_sub in _sample(lat, rng, 4):
        for killer in (ann_right(m, n_sub, caps), ann_left(m, n_sub)):
            quot, _ = quotient_module(m, killer)
            if not is_retractable(quot, caps):
                return exercised, f"N={n_sub.describe()}", ""
            exercised += 1
    return exercised, None, ""


def _check_mgolsgol(instance, caps):
    m = instance.module
    er = end_ring(m, caps)
    if er.as_ring.rank == 0:
        return 0, None, "zero module"
    op_regular = regular_module(opposite_ring(er.as_ring))
    if op_regular.order > caps.max_module_order:
        raise CapExceeded("opposite regular module", op_regular.order, caps.max_module_order)
    right_udim = uniform_dimension(op_regular, caps)
    return 1, None, f"right-udim={right_udim} |End|={er.as_ring.order}"


def _check_main(instance, caps):
    m = instance.module
    exercised = 0
    for n_sub in _fi_nil_submodules(m, caps):
        if n_sub.is_full():
            continue
        if nilpotency_index(m, n_sub) is None:
            return exercised, n_sub.describe(), ""
        if not n_sub.is_zero():
            exercised += 1
    return exercised, None, ""


def _check_primenilgoldie(instance, caps):
    profile = prime_radical(instance.module, caps)
    if profile.no_primes:
        return 0, "empty prime spectrum", ""
    if profile.nilpotency_of_radical is None:
        return 0, profile.prime_radical.describe(), ""
    return 1, None, f"index={profile.nilpotency_of_radical}"


@dataclass(frozen=True)
class StatementSpec:
    hypotheses: tuple[str, ...]
    description: str
    checker: object


STATEMENTS: dict[str, StatementSpec] = {
    "LEM-PRODDIRSUMM": StatementSpec(
        (), "products computed in a smaller ambient contain the outer ones, "
        "with equality for direct summands", _check_proddirsumm),
    "LEM-FPROD": StatementSpec(
        ("quasi_projective",),
        "endomorphism images slide through the product", _check_fprod),
    "LEM-EPIPRODUCT": StatementSpec(
        ("quasi_projective",),
        "canonical projections preserve self-products modulo fully invariant "
        "submodules", _check_epiproduct),
    "LEM-FACTORNIL": StatementSpec(
        ("quasi_projective",),
        "images of nil submodules stay nil in quotients", _check_factornil),
    "REM-LOCNIL-NIL": StatementSpec(
        (), "locally nilpotent implies nil; nilpotent implies locally "
        "nilpotent", _check_locnil_nil),
    "LEM-FGNILP": StatementSpec(
        ("quasi_projective",),
        "finitely generated locally nilpotent submodules are nilpotent",
        _check_fgnilp),
    "REM-FINSUM-NILP": StatementSpec(
        ("quasi_projective",),
        "finite sums of nilpotent submodules are nilpotent", _check_finsum_nilp),
    "LEM-SUMLOCNIL": StatementSpec(
        ("quasi_projective",),
        "sums of locally nilpotent submodules are locally nilpotent",
        _check_sumlocnil),
    "PROP-LFIYRAD": StatementSpec(
        ("quasi_projective",),
        "the locally nilpotent radical is fully invariant and vanishes in its "
        "own quotient", _check_lfiyrad),
    "COR-LSP": StatementSpec(
        ("quasi_projective",),
        "the locally nilpotent radical is a semiprime submodule", _check_lsp),
    "COR-NESL": StatementSpec(
        ("quasi_projective",),
        "the prime radical equals the locally nilpotent radical", _check_nesl),
    "COR-PRNILNET": StatementSpec(
        ("quasi_projective", "noetherian"),
        "the prime radical of a noetherian module is nilpotent",
        _check_prnilnet),
    "EX-ZPN": StatementSpec(
        ("prime_power_cyclic_regular",),
        "the cyclic prime-power module has radical generated by p with "
        "nilpotency index n", _check_zpn),
    "LEM-LSUMAS": StatementSpec(
        ("quasi_projective",),
        "the radical of a direct sum is the sum of the radicals", _check_lsumas),
    "PROP-SEMIPRIME-DIRSUM": StatementSpec(
        ("quasi_projective",),
        "a direct sum is semiprime iff each summand is", _check_semiprime_dirsum),
    "COR-RSP": StatementSpec(
        (), "a ring is semiprime iff its free modules are", _check_rsp),
    "COR-FREE-NILP": StatementSpec(
        (), "the radical of a free module is nilpotent iff the ring's is",
        _check_free_nilp),
    "PROP-MACCSACC": StatementSpec(
        ("acc_annihilators",),
        "the endomorphism ring inherits the chain condition on right "
        "annihilators", _check_maccsacc),
    "LEM-NILPSUBNIL": StatementSpec(
        ("quasi_projective", "acc_annihilators"),
        "quotients of nested fully invariant nil submodules contain nonzero "
        "nilpotent submodules", _check_nilpsubnil),
    "PROP-ACCNILLOCNIL": StatementSpec(
        ("quasi_projective", "acc_annihilators"),
        "fully invariant nil submodules are locally nilpotent",
        _check_accnillocnil),
    "LEM-RANNINTERSECTION": StatementSpec(
        (), "right annihilators turn sums into intersections",
        _check_rannintersection),
    "LEM-DCCANNR": StatementSpec(
        ("acc_annihilators",),
        "right annihilators satisfy the triple-annihilator identity and the "
        "descending chain condition", _check_dccannr),
    "LEM-DCCL": StatementSpec(
        ("quasi_projective",),
        "kernel intersections and endomorphism annihilators determine each "
        "other", _check_dccl),
    "PROP-FACTORRIGHTACC": StatementSpec(
        ("quasi_projective", "acc_annihilators"),
        "quotients by right annihilators keep the chain condition",
        _check_factorrightacc),
    "COR-DCCRN": StatementSpec(
        ("acc_annihilators",),
        "relative annihilator families satisfy the dual chain conditions",
        _check_dccrn),
    "LEM-RANNNCERO": StatementSpec(
        ("quasi_projective", "acc_annihilators"),
        "proper fully invariant nil submodules have nonzero relative right "
        "annihilator", _check_rannncero),
    "PROP-SUBM": StatementSpec(
        ("quasi_projective", "acc_annihilators"),
        "the orthogonal sequence construction: hypothesis vacuity on finite "
        "instances plus per-step contracts", _check_subm),
    "LEM-ACCMODULOANN": StatementSpec(
        ("quasi_projective", "acc_annihilators"),
        "quotients by ideal kernel intersections keep the chain condition",
        _check_accmoduloann),
    "LEM-FMRET": StatementSpec(
        ("quasi_projective", "retractable"),
        "quotients by annihilators stay retractable", _check_fmret),
    "LEM-MGOLSGOL": StatementSpec(
        ("quasi_projective", "retractable", "goldie"),
        "the endomorphism ring is right Goldie", _check_mgolsgol),
    "THM-MAIN": StatementSpec(
        ("quasi_projective", "retractable", "goldie"),
        "fully invariant nil submodules are nilpotent", _check_main),
    "COR-PRIMENILGOLDIE": StatementSpec(
        ("quasi_projective", "retractable", "goldie"),
        "the prime radical is nilpotent", _check_primenilgoldie),
}

assert tuple(STATEMENTS) == STATEMENT_IDS


def _hypothesis_holds(name: str, instance: Instance) -> bool:
    if name == "quasi_projective":
        return instance.profile.is_quasi_projective
    if name == "retractable":
        return instance.profile.is_retractable
    if name == "goldie":
        return instance.profile.is_goldie
    if name == "acc_annihilators":
        return instance.profile.satisfies_acc_annihilators
    if name == "noetherian":
        return instance.profile.is_noetherian
    if name == "prime_power_cyclic_regular":
        return _zpn_shape(instance) is not None
    raise ValueError(f"unknown hypothesis {name!r}")


def check_statement(sid: str, instance: Instance, caps=DEFAULT_CAPS) -> VerificationReport:
    """Evaluate hypotheses first, then the conclusion checker."""
    import time

    if sid not in STATEMENTS:
        raise ValueError(f"unknown statement id {sid!r}")
    spec = STATEMENTS[sid]
    start = time.perf_counter()
    for hyp in spec.hypotheses:
        if not _hypothesis_holds(hyp, instance):
            return VerificationReport(
                statement=sid,
                instance=instance.name,
                outcome="hypothesis_not_met",
                detail=hyp,
                elapsed=time.perf_counter() - start,
            )
    try:
        exercised, witness, detail = spec.checker(instance, caps)
    except (CapExceeded, BudgetExceeded) as exc:
        return VerificationReport(
            statement=sid,
            instance=instance.name,
            outcome="skipped",
            detail=str(exc),
            elapsed=time.perf_counter() - start,
        )
    if witness is not None:
        return VerificationReport(
            statement=sid,
            instance=instance.name,
            outcome="fail",
            detail=detail,
            witness=witness,
            exercised=exercised,
            elapsed=time.perf_counter() - start,
        )
    return VerificationReport(
        statement=sid,
        instance=instance.name,
        outcome="pass",
        detail=detail,
        exercised=exercised,
        elapsed=time.perf_counter() - start,
    )


@dataclass(frozen=True)
class SuiteSummary:
    reports: tuple[VerificationReport, ...]
    counts: dict
    failed: tuple[VerificationReport, ...]

    def text(self) -> str:
        lines = [r.line() for r in self.reports]
        lines.append(
            "summary: pass={pass} fail={fail} hypothesis_not_met={hypothesis_not_met} "
            "skipped={skipped}".format(**self.counts)
        )
        return "\n".join(lines)

    @property
    def exit_code(self) -> int:
        return 1 if self.counts["fail"] else 0


def _run_one(args):
    sid, instance, caps = args
    return check_statement(sid, instance, caps)


def run_suite(corpus: Corpus, ids=None, caps=DEFAULT_CAPS, jobs: int = 1) -> SuiteSummary:
    """Run every requested statement on every instance; deterministic
    report order regardless of parallelism."""
    ids = list(ids) if ids else list(STATEMENT_IDS)
    for sid in ids:
        if sid not in STATEMENTS:
            raise ValueError(f"unknown statement id {sid!r}")
    tasks = [
        (sid, instance, caps) for instance in corpus.instances for sid in ids
    ]
    if jobs > 1:
        import concurrent.futures

        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run_one, tasks, chunksize=4))
    else:
        reports = [_run_one(t) for t in tasks]
    counts = {"pass": 0, "fail": 0, "hypothesis_not_met": 0, "skipped": 0}
    for r in reports:
        counts[r.outcome] += 1
    failed = tuple(r for r in reports if r.outcome == "fail")
    return SuiteSummary(reports=tuple(reports), counts=counts, failed=failed)


def search_counterexamples(
    sid: str, dropped_hypothesis: str | None, corpus: Corpus, caps=DEFAULT_CAPS
):
    """Re-evaluate a conclusion on instances violating exactly the dropped
    hypothesis; failures here are findings about necessity, not bugs."""
    if sid not in STATEMENTS:
        raise ValueError(f"unknown statement id {sid!r}")
    spec = STATEMENTS[sid]
    if dropped_hypothesis is None:
        return [check_statement(sid, inst, caps) for inst in corpus.instances]
    if dropped_hypothesis not in spec.hypotheses:
        raise ValueError(
            f"{sid} does not hypothesize {dropped_hypothesis!r}; "
            f"choices: {spec.hypotheses}"
        )
    import time

    out = []
    for instance in corpus.instances:
        others = [h for h in spec.hypotheses if h != dropped_hypothesis]
        if _hypothesis_holds(dropped_hypothesis, instance):
            continue
        if not all(_hypothesis_holds(h, instance) for h in others):
            continue
        start = time.perf_counter()
        try:
            exercised, witness, detail = spec.checker(instance, caps)
        except (CapExceeded, BudgetExceeded) as exc:
            out.append(
                VerificationReport(
                    statement=sid,
                    instance=instance.name,
                    outcome="skipped",
                    detail=str(exc),
                    elapsed=time.perf_counter() - start,
                )
            )
            continue
        out.append(
            VerificationReport(
                statement=sid,
                instance=instance.name,
                outcome="fail" if witness is not None else "pass",
                detail=detail,
                witness=witness,
                exercised=exercised,
                elapsed=time.perf_counter() - start,
            )
        )
    return out
