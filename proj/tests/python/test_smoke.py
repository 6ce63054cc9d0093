import pytest

import centlab


def test_e2_invariants():
    e2 = centlab.top_row_ring(2)
    facts = centlab.analyze(e2)
    assert (facts["center"], facts["index"], facts["n"], facts["t"]) == (1, 4, 4, 3)
    assert centlab.max_noncommuting_set(e2) == (3, [1, 2, 3])


def test_products_against_python():
    # Products in E3 recomputed from the structure constants in Python.
    r = centlab.top_row_ring(3)
    inv, table = r.invariants, r.table
    k = len(inv)

    def coords(x):
        out = []
        for d in inv:
            out.append(x % d)
            x //= d
        return out

    def index(c):
        x, s = 0, 1
        for ci, d in zip(c, inv):
            x += (ci % d) * s
            s *= d
        return x

    for x in range(r.order):
        for y in range(r.order):
            acc = [0] * k
            cx, cy = coords(x), coords(y)
            for i in range(k):
                for j in range(k):
                    e = coords(table[i * k + j])
                    acc = [a + cx[i] * cy[j] * b for a, b in zip(acc, e)]
            assert r.mul(x, y) == index(acc)


def test_enumerate_order_four():
    rings = centlab.enumerate_order(4)
    assert len(rings) == 11
    assert sum(not r.is_commutative() for r in rings) == 2
    assert [r.label for r in centlab.enumerate_order(4, workers=3)] == [r.label for r in rings]


def test_round_trip():
    for r in centlab.witness_rings():
        text = centlab.serialize_ring(r)
        assert centlab.serialize_ring(centlab.parse_ring(text)) == text
    cat = centlab.serialize_catalog(centlab.enumerate_order(4), "enumerated")
    assert len(centlab.parse_catalog(cat)) == 11


def test_errors_are_raised():
    with pytest.raises(centlab.CentlabError):
        centlab.validate_ring([2, 2], [2, 0, 1, 0])
    with pytest.raises(centlab.CentlabError):
        centlab.verify("NOT-AN-ID", centlab.top_row_ring(2))
    with pytest.raises(ValueError):
        centlab.parse_ring("ring v1\nadditive: 2 2\nsc 1 1: 2 0\n")


def test_verify_and_scan():
    assert centlab.verify("T-Z2CUBE", centlab.full_matrix_ring(2))["status"] == "PASS"
    assert centlab.verify("T6-INDEX", centlab.cyclic_ring(4))["status"] == "VACUOUS"
    report, failed = centlab.scan(centlab.enumerate_order(8), "ALL", workers=2)
    assert not failed
    assert "result: PASS" in report
    assert len(centlab.theorem_ids()) == 17
