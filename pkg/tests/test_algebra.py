from math import comb

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cliffrank import (
    DomainError,
    Gaussian,
    Multivector,
    Signature,
    anticommutator,
    blade_product,
    blade_product_reference,
    commutator,
    conjugation_star,
    geometric_product,
    grade_projection,
    is_group_element,
    is_lie_element,
    support_grades,
)
from cliffrank.algebra import (
    blade_from_indices,
    blade_indices,
    blade_sign_table,
    blades_of_grade,
    format_blade,
)
from cliffrank.gaussian import I

from .conftest import lie_elements, multivectors, signatures

E1, E2, E3 = 0b001, 0b010, 0b100
E12, E13, E23 = 0b011, 0b101, 0b110


def mv(sig, *pairs):
    return Multivector(sig, dict(pairs))


class TestSignature:
    def test_metric(self):
        sig = Signature(2, 1)
        assert [sig.metric(a) for a in (1, 2, 3)] == [1, 1, -1]
        assert sig.negative_mask == 0b100

    @pytest.mark.parametrize("p,q", [(0, 0), (-1, 2), (17, 0)])
    def test_rejects(self, p, q):
        with pytest.raises(DomainError):
            Signature(p, q)

    def test_splits(self):
        assert Signature.splits(2) == [Signature(2, 0), Signature(1, 1), Signature(0, 2)]


def test_blade_encoding_roundtrip():
    assert blade_from_indices([1, 3]) == E13
    assert blade_indices(0b1011) == (1, 2, 4)
    with pytest.raises(DomainError):
        blade_from_indices([2, 1])
    assert format_blade(0) == "e"
    assert format_blade(E12) == "e^{12}"
    assert format_blade(blade_from_indices([1, 10])) == "e^{1,10}"


class TestBladeProduct:
    def test_reference_examples(self):
        assert blade_product_reference(Signature(2, 0), E1, E2) == (1, E12)
        assert blade_product_reference(Signature(2, 0), E2, E1) == (-1, E12)
        assert blade_product_reference(Signature(1, 1), E2, E2) == (-1, 0)

    def test_fast_examples(self):
        # expected values frozen from blade_product_reference
        assert blade_product(Signature(2, 0), E12, E2) == (1, E1)
        assert blade_product(Signature(3, 0), E12, E23) == (1, E13)
        assert blade_product(Signature(3, 0), E23, E12) == (-1, E13)
        assert blade_product(Signature(2, 1), 0b111, 0b111) == (1, 0)
        assert blade_product(Signature(2, 1), E13, E23) == (1, E12)

    @given(signatures(max_n=6), st.data())
    def test_identity_is_neutral(self, sig, data):
        b = data.draw(st.integers(0, (1 << sig.n) - 1))
        assert blade_product(sig, 0, b) == (1, b)
        assert blade_product(sig, b, 0) == (1, b)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_fast_matches_reference(self, n):
        for sig in Signature.splits(n):
            for a in range(1 << n):
                for b in range(1 << n):
                    assert blade_product(sig, a, b) == blade_product_reference(sig, a, b)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_sign_table_matches_scalar(self, n):
        for sig in Signature.splits(n):
            table = blade_sign_table(sig)
            expected = np.array([[blade_product(sig, a, b)[0] for b in range(1 << n)]
                                 for a in range(1 << n)])
            np.testing.assert_array_equal(table, expected)

    def test_invalid_blade(self):
        with pytest.raises(DomainError):
            blade_product(Signature(2, 0), 0b100, 0)


class TestMultivector:
    def test_zero_terms_dropped(self):
        sig = Signature(2, 0)
        x = mv(sig, (0, 0), (E1, Gaussian(0, 0)), (E2, 2))
        assert x.terms == {E2: Gaussian(2)}
        assert not (x - x)
        assert len(x + (-x)) == 0

    def test_rejects_float(self):
        with pytest.raises(TypeError):
            Multivector(Signature(1, 0), {0: 0.5})

    def test_str(self):
        sig = Signature(2, 0)
        assert str(mv(sig, (0, I), (E12, -1), (E1, Gaussian(1, 1)))) == "i + (1+i)e^1 - e^{12}"
        assert str(Multivector(sig)) == "0"


class TestProducts:
    def test_identity(self):
        sig = Signature(2, 1)
        x = mv(sig, (E1, 3), (E23, I))
        assert geometric_product(sig, Multivector.scalar(sig), x) == x

    def test_generator_square(self):
        sig = Signature(1, 0)
        e1 = Multivector.blade(sig, [1])
        assert e1 * e1 == Multivector.scalar(sig)

    def test_bilinear_example(self):
        # (e1 + e2)(e1 - e2) = e1e1 - e1e2 + e2e1 - e2e2 = -2 e12, expanded with the reference
        sig = Signature(2, 0)
        x, y = mv(sig, (E1, 1), (E2, 1)), mv(sig, (E1, 1), (E2, -1))
        assert geometric_product(sig, x, y) == mv(sig, (E12, -2))

    def test_signature_mismatch(self):
        with pytest.raises(DomainError):
            Multivector.scalar(Signature(1, 0)) * Multivector.scalar(Signature(0, 1))


class TestGrades:
    def test_projection(self):
        sig = Signature(2, 0)
        x = mv(sig, (0, 1), (E12, 1))
        assert grade_projection(x, 2) == mv(sig, (E12, 1))
        assert not grade_projection(x, 1)
        with pytest.raises(DomainError):
            grade_projection(x, 3)

    def test_support(self):
        sig = Signature(3, 0)
        assert support_grades(Multivector(sig)) == frozenset()
        assert support_grades(mv(sig, (0, I), (E12, 1))) == {0, 2}
        x = commutator(sig, mv(sig, (E12, 1)), mv(sig, (E23, 1)))
        assert x == mv(sig, (E13, 2))
        assert support_grades(x) == {2}

    @given(signatures(max_n=5), st.data())
    def test_projections_partition(self, sig, data):
        x = data.draw(multivectors(sig))
        total = Multivector(sig)
        for k in range(sig.n + 1):
            total = total + grade_projection(x, k)
        assert total == x

    @pytest.mark.parametrize("n", range(1, 9))
    def test_grade_counts(self, n):
        counts = [len(blades_of_grade(n, k)) for k in range(n + 1)]
        assert counts == [comb(n, k) for k in range(n + 1)]
        assert sum(counts) == 2 ** n


class TestBrackets:
    def test_examples(self):
        sig = Signature(3, 1)
        x = mv(sig, (E13, 2), (0b1000, I))
        assert not commutator(sig, x, x)
        assert not commutator(sig, mv(sig, (0b1011, 1)), Multivector.scalar(sig))
        one = Signature(1, 0)
        e1 = Multivector.blade(one, [1])
        assert anticommutator(one, e1, e1) == Multivector.scalar(one, 2)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_defining_relation(self, n):
        for sig in Signature.splits(n):
            for a in range(1, n + 1):
                for b in range(1, n + 1):
                    got = anticommutator(sig, Multivector.blade(sig, [a]), Multivector.blade(sig, [b]))
                    want = Multivector.scalar(sig, 2 * sig.metric(a) if a == b else 0)
                    assert got == want


class TestConjugation:
    def test_examples(self):
        sig = Signature(2, 0)
        assert conjugation_star(Multivector.scalar(sig)) == Multivector.scalar(sig)
        assert conjugation_star(mv(sig, (E12, 1))) == mv(sig, (E12, -1))
        assert conjugation_star(mv(sig, (E1, I))) == mv(sig, (E1, -I))

    def test_matches_reversed_product(self):
        # (e^{a1}...e^{ak})* = e^{ak}...e^{a1}, built generator by generator
        for sig in Signature.splits(4):
            for b in range(1 << 4):
                rev = Multivector.scalar(sig)
                for a in reversed(blade_indices(b)):
                    rev = rev * Multivector.blade(sig, [a])
                assert conjugation_star(mv(sig, (b, 1))) == rev


class TestPredicates:
    def test_group(self):
        sig = Signature(1, 0)
        assert is_group_element(sig, Multivector.scalar(sig))
        assert is_group_element(sig, Multivector.blade(sig, [1]))
        assert not is_group_element(sig, Multivector.scalar(sig, 2))

    def test_group_negative_metric(self):
        # (e^1)* e^1 = -e in Cl(0,1), and a phase cannot fix it: (-i)(i)(e^1)^2 = -e
        sig = Signature(0, 1)
        assert not is_group_element(sig, Multivector.blade(sig, [1]))
        assert not is_group_element(sig, Multivector.blade(sig, [1], I))
        # (e^{12})* e^{12} = -e^1 e^2 e^1 e^2 = e^1 e^1 e^2 e^2 = e in Cl(0,2)
        sig = Signature(0, 2)
        assert is_group_element(sig, Multivector.blade(sig, [1, 2]))

    def test_lie(self):
        sig = Signature(2, 0)
        assert is_lie_element(Multivector.scalar(sig, I))
        assert is_lie_element(mv(sig, (E12, 1)))
        assert not is_lie_element(mv(sig, (E1, 1)))


@given(signatures(max_n=6), st.data())
def test_associativity(sig, data):
    x, y, z = (data.draw(multivectors(sig, max_terms=5)) for _ in range(3))
    assert (x * y) * z == x * (y * z)


@given(signatures(max_n=6), st.data())
def test_star_anti_automorphism(sig, data):
    x, y = data.draw(multivectors(sig)), data.draw(multivectors(sig))
    assert conjugation_star(x * y) == conjugation_star(y) * conjugation_star(x)
    assert conjugation_star(conjugation_star(x)) == x


@given(signatures(max_n=6), st.data())
def test_lie_closure(sig, data):
    u, v = data.draw(lie_elements(sig)), data.draw(lie_elements(sig))
    assert is_lie_element(u) and is_lie_element(v)
    assert is_lie_element(commutator(sig, u, v))


@given(signatures(max_n=6), st.data())
def test_canonical_form(sig, data):
    x, y = data.draw(multivectors(sig)), data.draw(multivectors(sig))
    for z in (x + y, x - y, x * y, commutator(sig, x, y), anticommutator(sig, x, y), conjugation_star(x)):
        assert all(c for c in z.terms.values())
