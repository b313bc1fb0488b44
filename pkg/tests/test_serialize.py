import doctest
import random

import pytest

import qeuler.qring
from qeuler.eulerian import typeB_poly
from qeuler.qring import QLaurent, QPoly, TQPoly
from qeuler.serialize import csv_rows, dumps, from_json, loads, render, to_json
from qeuler.special import q_tangent


def P(*coeffs):
    return QPoly(coeffs)


# ---------------------------------------------------------------------------
# JSON schema and round trips
# ---------------------------------------------------------------------------


def test_qpoly_schema():
    assert to_json(P(1, 2, 1)) == {"kind": "poly", "var": "q", "coeffs": ["1", "2", "1"]}
    assert to_json(QPoly()) == {"kind": "poly", "var": "q", "coeffs": []}


def test_qlaurent_schema_adds_offset():
    doc = to_json(QLaurent(P(1, 1), -2))
    assert doc["offset"] == -2
    assert doc["coeffs"] == ["1", "1"]


def test_tqpoly_schema():
    doc = to_json(TQPoly([1, QPoly(), P(0, 1)]))
    assert doc["kind"] == "bivar"
    assert [t["tdeg"] for t in doc["terms"]] == [0, 2]


def test_big_coefficients_as_decimal_strings():
    big = 10**40 + 7
    doc = to_json(P(big))
    assert doc["coeffs"] == [str(big)]
    assert from_json(doc) == P(big)


FIXED_VALUES = [
    QPoly(),
    P(5),
    P(1, -2, 0, 7),
    QLaurent(P(3, 0, 1), -4),
    QLaurent.zero(),
    TQPoly.zero(),
    TQPoly([1, P(0, 2, 2), QPoly.monomial(3)]),
    TQPoly([QLaurent(P(1), -1), QLaurent.zero(), QLaurent(P(2, 2), 3)]),
]


@pytest.mark.parametrize("value", FIXED_VALUES, ids=repr)
def test_roundtrip_fixed(value):
    assert loads(dumps(value)) == value
    assert from_json(to_json(value)) == value


def test_roundtrip_random():
    rng = random.Random(42)
    for _ in range(60):
        p = QPoly([rng.randint(-10**12, 10**12) for _ in range(rng.randrange(0, 9))])
        assert loads(dumps(p)) == p
        v = QLaurent(p, rng.randint(-5, 5))
        assert loads(dumps(v)) == v
    for _ in range(30):
        t = TQPoly(
            [
                QLaurent(QPoly([rng.randint(-99, 99) for _ in range(3)]), rng.randint(-3, 3))
                for _ in range(rng.randrange(0, 4))
            ]
        )
        assert loads(dumps(t)) == t


def test_from_json_rejects_unknown_kind():
    with pytest.raises(ValueError):
        from_json({"kind": "matrix"})


# ---------------------------------------------------------------------------
# golden text rendering
# ---------------------------------------------------------------------------


def test_render_goldens():
    assert render(P(1, 1)) == "1 + q"
    assert render(P(1, -1)) == "1 - q"
    assert render(QPoly()) == "0"
    assert render(P(0, 0, 3)) == "3q^2"
    assert render(q_tangent(2)) == "2 + 4q + 4q^2 + 4q^3 + 2q^4"
    assert render(QLaurent(P(1, 0, 2, 1), -3)) == "q^-3 + 2q^-1 + 1"
    assert render(typeB_poly(2)) == "1 + (2q + 2q^2 + 2q^3) t + q^4 t^2"
    assert render(TQPoly([1, P(0, 1)])) == "1 + q t"
    assert render(TQPoly.zero()) == "0"


def test_csv_rows():
    assert csv_rows(P(1, 0, 2)) == [(0, "1"), (2, "2")]
    assert csv_rows(QLaurent(P(1, 1), -1)) == [(-1, "1"), (0, "1")]
    assert csv_rows(TQPoly([1, P(0, 2)])) == [(0, 0, "1"), (1, 1, "2")]


def test_kernel_doctests():
    assert doctest.testmod(qeuler.qring).failed == 0
