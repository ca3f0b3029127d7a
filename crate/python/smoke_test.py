"""Smoke test for the `kmc` extension module.

Build and install first:  maturin build -m crates/py/Cargo.toml -o dist && pip install dist/kmc-*.whl
"""

import json
import pathlib

import kmc

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def main():
    trefoil = kmc.Diagram.from_pd((FIXTURES / "trefoil.pd").read_text())
    assert trefoil.crossing_count == 3 and trefoil.components == 1
    assert trefoil.bracket() == {-5: -1, 3: -1, 7: 1}
    assert trefoil.bracket_span() == (12, 12)
    assert trefoil.atom()["chi"] == 2

    kh = trefoil.kh("q")
    assert {(e["t"], e["q"]) for e in kh["entries"]} == {(-3, -9), (-2, -5), (0, -3), (0, -1)}

    cert = trefoil.certify()
    assert cert["verdict"] == "MINIMAL", cert["reasoning"]
    kinked = trefoil.r1_add(0, positive=False)
    assert kinked.certify()["verdict"] == "INCONCLUSIVE"
    assert trefoil.virtualize(0).certify()["verdict"] == "MINIMAL"

    vt = kmc.Diagram.from_gauss((FIXTURES / "virtual_trefoil.gauss").read_text())
    assert vt.atom()["orientable"] is False
    try:
        vt.kh("q")
    except RuntimeError:
        pass
    else:
        raise AssertionError("rational homology of a non-orientable atom must fail")
    assert vt.k1()["checks"]["constant_parity"] is None

    table = (FIXTURES / "13n3663_khq.json").read_text()
    assert kmc.certify_table(table, 13)["verdict"] == "MINIMAL"
    try:
        kmc.certify_table(table, 12)
    except ValueError:
        pass
    else:
        raise AssertionError("13n3663's table cannot come from 12 crossings")

    try:
        kmc.Diagram.from_pd("X 1 2 3")
    except ValueError:
        pass
    else:
        raise AssertionError("malformed PD must be rejected")

    roundtrip = kmc.Diagram.from_pd(trefoil.to_pd())
    assert roundtrip.certify() == cert
    print(json.dumps({"ok": True, "schema": kmc.SCHEMA_VERSION}))


if __name__ == "__main__":
    main()
