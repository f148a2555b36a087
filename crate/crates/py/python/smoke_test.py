"""Smoke test for the qtbraid_py extension module.

Build and install first, e.g.
    pip install --no-build-isolation ./crates/py
then run
    python crates/py/python/smoke_test.py
"""

import json

import qtbraid_py as qb


def main():
    half = qb.Cyclotomic(1, 2)
    i = qb.Cyclotomic.root_of_unity(4, 1)
    assert i * i == -1
    assert (i + 1) * (1 - i) == 2
    assert abs(complex(qb.Cyclotomic.sqrt2()) - 2 ** 0.5) < 1e-12
    assert qb.Cyclotomic.from_json(half.to_json()) == half

    z2 = qb.GroupSpec([2])
    r = qb.universal_r(z2)
    assert r.legs == 2 and len(r.terms()) == 4
    assert qb.check_hopf_axioms(z2)
    assert qb.check_quasi_cocommutative(r)
    assert qb.check_quasitriangular(r)
    assert qb.check_algebraic_ybe(r)
    assert qb.check_hexagon_regular(r) == (True, True)

    gamma = qb.regular_image(r)
    assert gamma == qb.Matrix([[1, 1, 1, -1], [1, 1, -1, 1], [1, -1, 1, 1], [-1, 1, 1, 1]], 1, 2)

    rp = qb.braided_r(z2)
    assert rp.matrix == qb.flip_operator(2) @ gamma
    assert rp.matrix == qb.Matrix([[1, 1, 1, -1], [1, -1, 1, 1], [1, 1, -1, 1], [-1, 1, 1, 1]], 1, 2)
    assert rp.matrix.is_unitary()
    assert rp.check_ybe()
    assert rp.check_braid_relations(4)
    assert rp.evaluate_word(3, "1,2,1") == rp.evaluate_word(3, "2,1,2")
    assert rp.evaluate_word(3, "") == qb.Matrix.identity(8)
    assert all(holds for _, _, holds in rp.bell_actions())

    image = qb.bell_state("phi+").apply(rp.matrix, [0, 1])
    assert image == qb.bell_state("psi+")
    assert abs(image.concurrence() - 1.0) < 1e-12
    assert qb.StateVector.from_label("01").schmidt_rank(1) == 1
    state = json.loads(image.to_json())
    assert state["d"] == 2 and state["n"] == 2

    assert qb.kl_entangling_test(1, -1, 1, 1)[0]
    assert not qb.kl_entangling_test(1, 1, i, -i)[0]

    literal = qb.universal_r(qb.GroupSpec([2, 2]), form="literal")
    print("literal form, algebraic YBE on (2,2):", qb.check_algebraic_ybe(literal))

    try:
        qb.GroupSpec([0])
    except ValueError:
        pass
    else:
        raise AssertionError("GroupSpec([0]) should fail")
    try:
        qb.Cyclotomic(0).inverse()
    except ArithmeticError:
        pass
    else:
        raise AssertionError("inverse of zero should fail")

    print("smoke test passed")


if __name__ == "__main__":
    main()
