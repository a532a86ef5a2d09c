"""Brute-force oracle self-checks and main-path cross-validation on small
instances.  The full corpus-wide equivalence run lives in the acceptance
suite."""

import pytest

from finmod.algebra import (
    cyclic_module,
    direct_sum,
    quotient_module,
    regular_module,
    triangular_ring,
    zn_ring,
)
from finmod.homspace import hom_group
from finmod.lattice import (
    Submodule,
    all_submodules,
    cyclic_submodule,
    submodule_as_module,
)
from finmod.oracle import (
    BudgetExceeded,
    OracleBudget,
    brute_all_submodules,
    brute_ell,
    brute_hom_group,
    brute_product,
    brute_prime_radical,
)
from finmod.product import product
from finmod.radical import ell, prime_radical


def z4():
    return regular_module(zn_ring(4))


def z6():
    return regular_module(zn_ring(6))


SMALL_MODULES = []


def small_modules():
    if not SMALL_MODULES:
        ring4 = zn_ring(4)
        mixed, _, _ = direct_sum(cyclic_module(ring4, 2), regular_module(ring4))
        SMALL_MODULES.extend(
            [
                z4(),
                z6(),
                regular_module(zn_ring(8)),
                regular_module(zn_ring(12)),
                regular_module(triangular_ring(2, 2)),
                mixed,
            ]
        )
    return SMALL_MODULES


class TestBruteHom:
    def test_into_submodule_of_z4(self):
        m = z4()
        two_m = submodule_as_module(cyclic_submodule(m, (2,))).module
        homs = brute_hom_group(m, two_m)
        assert sorted(h.matrix for h in homs) == [((0,),), ((1,),)]

    def test_into_zero(self):
        m = z4()
        zero_mod, _ = quotient_module(m, Submodule.full(m))
        homs = brute_hom_group(m, zero_mod)
        assert len(homs) == 1

    def test_coprime(self):
        m = z6()
        src = submodule_as_module(cyclic_submodule(m, (2,))).module
        dst = submodule_as_module(cyclic_submodule(m, (3,))).module
        homs = brute_hom_group(src, dst)
        assert len(homs) == 1 and homs[0].is_zero()

    def test_budget(self):
        m = regular_module(triangular_ring(2, 2))
        with pytest.raises(BudgetExceeded):
            brute_hom_group(m, m, OracleBudget(max_hom_enumeration=4))

    def test_matches_main_path(self):
        for m in small_modules():
            got = {h.matrix for h in brute_hom_group(m, m)}
            want = {h.matrix for h in hom_group(m, m).elements()}
            assert got == want

    def test_matches_main_path_cross_pairs(self):
        mods = small_modules()
        pairs = [(a, b) for a in mods for b in mods if a.ring == b.ring]
        assert pairs
        for a, b in pairs:
            if a.order * b.order > 4096:
                continue
            got = {h.matrix for h in brute_hom_group(a, b)}
            want = {h.matrix for h in hom_group(a, b).elements()}
            assert got == want


class TestBruteProduct:
    def test_examples(self):
        m = z4()
        two_m = cyclic_submodule(m, (2,))
        assert brute_product(m, two_m, two_m).is_zero()
        assert brute_product(m, two_m, Submodule.full(m)) == two_m
        m6 = z6()
        assert brute_product(
            m6, cyclic_submodule(m6, (2,)), cyclic_submodule(m6, (3,))
        ).is_zero()

    def test_matches_main_path(self):
        for m in small_modules():
            lat = list(all_submodules(m))
            for a in lat:
                for b in lat:
                    assert brute_product(m, a, b) == product(m, a, b)


class TestBruteLattice:
    def test_z6_count(self):
        assert len(brute_all_submodules(z6())) == 4

    def test_matches_main_path(self):
        for m in small_modules():
            got = sorted(brute_all_submodules(m), key=Submodule.sort_key)
            want = list(all_submodules(m))
            assert got == want

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            brute_all_submodules(z6(), OracleBudget(max_lattice=2))


class TestBruteRadicals:
    def test_examples(self):
        m = z4()
        assert brute_ell(m) == cyclic_submodule(m, (2,))
        assert brute_prime_radical(z6()).is_zero()

    def test_zero_module(self):
        m = z4()
        zero_mod, _ = quotient_module(m, Submodule.full(m))
        assert brute_ell(zero_mod).is_zero()
        assert brute_prime_radical(zero_mod).order == 1

    def test_ell_matches_main_path(self):
        for m in small_modules():
            assert brute_ell(m) == ell(m)

    def test_prime_radical_matches_main_path(self):
        for m in small_modules():
            assert brute_prime_radical(m) == prime_radical(m).prime_radical
