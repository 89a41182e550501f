import json
import os
import subprocess

import pytest

import icplane


def test_tie_roundtrip():
    d = icplane.tie_drawing()
    assert (d.n, d.e, d.c) == (4, 4, 1)
    assert d.is_valid()
    again = icplane.parse_icpd(d.to_icpd())
    assert again.canonical() == d.canonical()


def test_h_family_counts():
    for k in range(1, 5):
        d = icplane.gen_H(k)
        assert (d.n, d.e) == (4 * k, 6 * k - 2)
        assert d.is_maximal()
        assert d.kappa() == 2


def test_census_of_h2():
    assert icplane.gen_H(2).face_census() == {"A6": 1, "B6": 2, "D4": 1, "F3": 2}


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        icplane.parse_icpd("icpd 1\nvertex 0 Q\n")


def test_enumerate_n4():
    codes = icplane.enumerate(4)
    assert len(codes) == 5
    assert len(set(codes)) == 5
    maximal = icplane.enumerate(4, filter="maximal,kappa>=2")
    assert len(maximal) == 2


def test_saturate_pdw_reaches_maximal():
    d = icplane.gen_pdw(8)
    assert not d.is_maximal()
    s = d.saturate()
    assert s.is_maximal() and s.is_valid()


def test_analyze_json():
    rep = json.loads(icplane.gen_G4(1).analyze())
    assert rep["report_version"] == 1
    assert rep["analysis"]["connectivity"]["kappa"] == 4


def test_search_csv_n4():
    csv = icplane.search_csv(4, "maximal,kappa>=2").splitlines()
    assert csv[0] == "n,kappa_class,min_e,witness_count,witness_file"
    assert csv[1].startswith("4,2,4,")


@pytest.mark.skipif("ICPLANE_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_generate_matches_binding(tmp_path):
    out = tmp_path / "h3.icpd"
    subprocess.run([os.environ["ICPLANE_CLI"], "generate", "H", "3", "-o", str(out)], check=True)
    assert out.read_text() == icplane.gen_H(3).to_icpd()
