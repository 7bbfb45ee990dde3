import json
from fractions import Fraction as F
from pathlib import Path

import pytest

import kssdomain as kss

GOLDEN = Path(__file__).resolve().parents[2] / "golden"


def test_validate_and_errors():
    c = kss.validate(4, [2], [1, 1])
    assert (c.dimension, c.level, c.k) == (3, 3, 2)
    assert c == kss.validate(4, [2], [1, 1])
    with pytest.raises(kss.ConfigError, match="DegreeExceedsLevel"):
        kss.validate(3, [], [5])
    with pytest.raises(kss.KssError):
        kss.validate(1, [], [1])
    assert c.absorb_boundary(0).level == 2
    assert kss.validate(3, [], [2]).absorb_boundary(0) is None


def test_beta_quantities():
    c = kss.validate(3, [], [2, 1])
    assert kss.log_discrepancy(c, [F(3, 4), F(1, 2)], 1) == F(1, 2)
    assert kss.s_invariant(c, [F(3, 4), F(1, 2)], 1) == F(1, 2)
    assert kss.beta(c, [0, 0], 1) == 0
    assert kss.volume_profile(kss.validate(3, [], [2, 2]), [0, 0], 0, 1) == 8
    with pytest.raises(kss.NotLogFano):
        kss.s_invariant(kss.validate(3, [], [2, 2]), [1, 1], 0)


def test_halfspace_and_vertices():
    c = kss.validate(3, [], [2, 1])
    forms = kss.halfspace_system(c)
    assert [f["label"] for f in forms][-2:] == ["Beta(1)", "Beta(2)"]
    assert forms[5]["coeffs"] == (F(-3, 4), F(1, 8))
    assert kss.enumerate_vertices(c) == [(0, 0), (F(2, 3), 0), (F(3, 4), F(1, 2))]
    assert kss.interior_vertex(c) == (F(3, 4), F(1, 2))
    assert kss.interior_vertex(kss.validate(3, [], [2, 2])) is None
    assert kss.kss_interval_k1(kss.validate(3, [], [3])) == F(8, 9)


@pytest.mark.parametrize("path", sorted(GOLDEN.glob("*.json")), ids=lambda p: p.stem)
def test_golden(path):
    g = json.loads(path.read_text())
    cfg = g["config"]
    c = kss.validate(cfg["ambient"]["projective_dim"], cfg["ambient"]["ci_degrees"], cfg["boundary_degrees"])
    expected = sorted(tuple(F(x) for x in v) for v in g["expected_vertices"])
    assert kss.enumerate_vertices(c) == expected
    assert sorted(kss.closed_form_vertices(c)["vertices"]) == expected


def test_compute_document():
    doc = kss.compute(kss.validate(3, [], [2, 2, 2]))
    assert len(doc["v_representation"]) == 7
    assert doc["closed_form"]["equal"] is True
    assert doc["certification"]["all_verified"] is True
    assert doc["branch"] == "critical"


def test_render():
    svg = kss.render_svg(kss.validate(3, [], [2, 1]))
    assert 'points="60,460 326.667,460 360,260"' in svg
    off = kss.render_off(kss.validate(4, [2], [1, 1, 1]))
    assert off.startswith("OFF\n")
    with pytest.raises(kss.WrongDimension):
        kss.render_off(kss.validate(3, [], [2, 1]))


def test_cli(tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"ambient": {"projective_dim": 3, "ci_degrees": []}, "boundary_degrees": [5]}))
    code, out, err = kss.run_cli(["compute", "--config", str(cfg)])
    assert code == 1
    assert json.loads(out)["error"]["kind"] == "DegreeExceedsLevel"
