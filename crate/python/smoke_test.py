"""Smoke test for the macdual extension module."""

import macdual


def main():
    a = macdual.annihilator("x,y,z", ["Y^3", "Z^3"])
    assert a.generators == ["x", "y^4", "yz", "z^4"], a.generators

    rep = macdual.Ideal("x,y", "x^2, y^2").artinian_report()
    assert rep["hilbert"] == [1, 2, 1] and rep["level"], rep

    assert macdual.contract("x,y", "x", "X^2Y") == "XY"
    assert macdual.pairing("x,y", "x^2y", "X^2Y") == "1"

    fam = macdual.Family.cone("x,y,z", ["Y^3", "Z^3"], 5)
    assert fam.check()["admissible"] and fam.check_weak()
    ideal, extendable = fam.effective_construct()
    assert ideal.generators == ["y^4", "yz", "z^4"] and extendable, ideal
    assert macdual.Family.parse(fam.to_text()).to_text() == fam.to_text()

    lev = ideal.is_level(1)
    assert lev["level"] and lev["type"] == 2, lev

    sg = macdual.semigroup_ideal([6, 8, 10, 13])
    assert len(sg.generators) == 4
    assert sg.equals(macdual.Ideal("x,y,z,w", "y^2-xz, x^3-yz, x^2y-z^2, w^2-x^3y"))[0]

    for ex in macdual.EXAMPLES:
        ok, lines = macdual.run_example(ex)
        print(f"{ex}: {'PASS' if ok else 'FAIL'}: {lines[0]}")
        assert ok

    print("smoke test passed")


if __name__ == "__main__":
    main()
