import mpmath
import pytest

from symcube.errors import CharacterError
from symcube.lfunc import quadratic_character, quadratic_character_of_prime, trivial_character


@pytest.mark.parametrize("d", [-3, -4, 5, -7, 8, -8, 12, 13, -15, 17, -19, -20])
def test_gauss_sum_square_exact_matches_numeric(d):
    chi = quadratic_character(d)
    exact = chi.gauss_sum_squared()
    assert exact == chi.parity * chi.conductor
    with mpmath.workdps(40):
        g = chi.gauss_sum(40)
        assert abs(g**2 - exact) < mpmath.mpf(10) ** -30


def test_character_values_and_parity():
    chi = quadratic_character(-4)
    assert [chi(n) for n in range(4)] == [0, 1, 0, -1]
    assert chi.parity == -1 and chi.is_real
    assert quadratic_character(5).parity == 1
    assert trivial_character().is_trivial
    assert quadratic_character_of_prime(7).label == "(-7/.)"
    assert quadratic_character(-3).conductor_exponent(3) == 1
    assert quadratic_character(12).conductor_exponent(3) is None


def test_character_guards():
    for bad in (1, 0, 6, 9, -12 * 7):
        with pytest.raises(CharacterError):
            quadratic_character(bad)
    with pytest.raises(CharacterError):
        quadratic_character(21)
    with pytest.raises(CharacterError):
        quadratic_character_of_prime(9)
