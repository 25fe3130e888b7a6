"""Exact field arithmetic: rationals and prime fields, no floats ever."""

from fractions import Fraction

import pytest

from frametc.fields import (
    F2,
    Field,
    FieldError,
    QQ,
    field_from_json,
    field_of,
    parse_field,
)


class TestRationals:
    def test_arithmetic_is_exact_fractions(self):
        a, b = Fraction(1, 3), Fraction(1, 6)
        assert QQ.add(a, b) == Fraction(1, 2)
        assert QQ.sub(a, b) == Fraction(1, 6)
        assert QQ.mul(a, b) == Fraction(1, 18)
        assert QQ.neg(a) == Fraction(-1, 3)
        assert isinstance(QQ.add(a, b), Fraction)

    def test_zero_one_types(self):
        assert QQ.zero() == 0 and isinstance(QQ.zero(), Fraction)
        assert QQ.one() == 1 and isinstance(QQ.one(), Fraction)

    def test_invert(self):
        assert QQ.invert(Fraction(2, 3)) == Fraction(3, 2)
        with pytest.raises(ZeroDivisionError):
            QQ.invert(Fraction(0))

    def test_coerce_int_to_fraction(self):
        c = QQ.coerce(7)
        assert c == 7 and isinstance(c, Fraction)

    def test_sign(self):
        assert QQ.sign_to_coeff(0) == 1
        assert QQ.sign_to_coeff(3) == -1
        assert QQ.sign_to_coeff(4) == 1

    def test_format(self):
        assert QQ.format(Fraction(-2, 3)) == "-2/3"
        assert QQ.format(Fraction(5)) == "5"


class TestPrimeFields:
    def test_arithmetic_mod_p(self):
        F5 = field_of(5)
        assert F5.add(3, 4) == 2
        assert F5.sub(1, 3) == 3
        assert F5.mul(3, 4) == 2
        assert F5.neg(2) == 3
        assert F5.neg(0) == 0

    def test_invert_fermat(self):
        F5 = field_of(5)
        for a in range(1, 5):
            assert F5.mul(a, F5.invert(a)) == 1
        with pytest.raises((ZeroDivisionError, ValueError)):
            F5.invert(0)

    def test_coerce_reduces_and_handles_fractions(self):
        F5 = field_of(5)
        assert F5.coerce(12) == 2
        assert F5.coerce(-1) == 4
        # 3/4 = 3 * inverse(4) = 3 * 4 = 12 = 2 (mod 5)
        assert F5.coerce(Fraction(3, 4)) == 2
        with pytest.raises(ZeroDivisionError):
            F5.coerce(Fraction(1, 5))

    def test_char_two_signs_collapse(self):
        assert F2.sign_to_coeff(0) == 1
        assert F2.sign_to_coeff(1) == 1
        assert F2.sign_to_coeff(17) == 1


class TestNoFloats:
    @pytest.mark.parametrize("fld", [QQ, F2, field_of(5)])
    def test_floats_rejected(self, fld):
        with pytest.raises(TypeError):
            fld.coerce(0.5)
        with pytest.raises(TypeError):
            fld.coerce(1.0)

    def test_bools_rejected(self):
        with pytest.raises(TypeError):
            QQ.coerce(True)
        with pytest.raises(TypeError):
            F2.coerce(False)


class TestConstructionAndIdentity:
    @pytest.mark.parametrize("bad", [1, 4, 6, 9, -2, 15])
    def test_non_prime_characteristic_rejected(self, bad):
        with pytest.raises(FieldError):
            Field(bad)

    @pytest.mark.parametrize("good", [0, 2, 3, 5, 97])
    def test_valid_characteristics(self, good):
        assert Field(good).characteristic == good

    def test_interning_and_equality(self):
        assert field_of(2) is field_of(2)
        assert Field(2) == field_of(2)
        assert Field(2) != Field(3)
        assert hash(Field(7)) == hash(field_of(7))

    def test_immutable(self):
        with pytest.raises(AttributeError):
            QQ.characteristic = 5

    def test_labels(self):
        assert QQ.label == "Q"
        assert F2.label == "F2"
        assert field_of(13).label == "F13"


class TestParsingAndJson:
    @pytest.mark.parametrize(
        "text,char",
        [("char=0", 0), ("char=2", 2), (" char=13 ", 13), ("char5", 5), ("7", 7)],
    )
    def test_parse_field(self, text, char):
        assert parse_field(text).characteristic == char

    @pytest.mark.parametrize("bad", ["charx", "char=", "F2", ""])
    def test_parse_field_rejects(self, bad):
        with pytest.raises(FieldError):
            parse_field(bad)

    def test_token_round_trip(self):
        for fld in (QQ, F2, field_of(7)):
            assert parse_field(fld.token()) is fld

    def test_json_round_trip(self):
        for fld in (QQ, F2, field_of(11)):
            assert field_from_json(fld.to_json()) is fld
        assert field_from_json("char=3") is field_of(3)
        with pytest.raises(FieldError):
            field_from_json({"characteristic": 2})
        with pytest.raises(FieldError):
            field_from_json(2)
