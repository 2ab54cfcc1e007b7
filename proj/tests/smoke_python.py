import math

import dressing_verify as dv


def main():
    ids = dv.property_ids()
    assert len(ids) == 24, ids
    assert "core.cocycle" in ids and "conformal.spin_isomorphism" in ids

    rep = dv.verify("brst", seed=7, trials=1, points=4)
    assert rep["schema"] == "dressing-report/1"
    assert rep["pass"] is True and rep["had_error"] is False
    assert len(rep["properties"]) == 4

    rep2 = dv.verify("brst", seed=7, trials=1, points=4)
    a, b = dict(rep), dict(rep2)
    a.pop("wall_seconds"), b.pop("wall_seconds")
    assert a == b, "report body must be deterministic for a fixed seed"

    text = dv.explain("ew.mass_ratio")
    assert "m_W / m_Z" in text

    try:
        dv.explain("no.such.property")
    except Exception as e:  # noqa: BLE001
        assert "valid ids" in str(e)
    else:
        raise AssertionError("unknown id must raise")

    m = dv.ew_masses(0.65, 0.35, -0.5, 0.3)
    assert abs(m["mW"] / m["mZ"] - 0.65 / math.hypot(0.65, 0.35)) < 1e-12
    assert dv.ew_masses(0.65, 0.35, 0.5, 0.3)["mZ"] == 0.0

    print("python smoke ok")


if __name__ == "__main__":
    main()
