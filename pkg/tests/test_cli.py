import io
import json

import pytest

from uniserial.cli import main
from uniserial.serialize import object_from_json, site_from_json
from uniserial.site import tube
from uniserial.tube import irreducibles_out, simple

T2 = '{"kind":"loop","base":"cyclic","rank":2}'
ZS = '{"kind":"loop","base":"int"}'


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_hom_example():
    code, out = run("hom", "--site", T2, "--from", '{"socle":0,"top":0,"winding":1}',
                    "--to", '{"socle":1,"top":0,"winding":0}')
    assert code == 0
    assert json.loads(out) == {"dim": 1, "basis": [0]}


def test_ext_and_ar():
    code, out = run("ext", "--site", T2, "--from", '{"socle":0,"top":0}', "--to", '{"socle":1,"top":1}')
    assert code == 0 and json.loads(out) == {"dim": 1}
    code, out = run("ar", "--site", T2, "--obj", '{"socle":0,"top":0,"winding":0}')
    assert code == 0
    data = json.loads(out)
    assert len(data["middle"]) == 1
    site = site_from_json(T2)
    for key in ("start", "end"):
        assert object_from_json(site, json.dumps(data[key])) == object_from_json(site, data[key])


def test_ar_quiver_dot_and_figure(tmp_path):
    fig = tmp_path / "ar.png"
    code, out = run("ar-quiver", "--site", ZS, "--center", '{"socle":0,"top":0,"winding":0}',
                    "--radius", "2", "--format", "dot", "--figure", str(fig))
    assert code == 0
    assert out.startswith("digraph AR {") and out.rstrip().endswith("}")
    assert fig.stat().st_size > 0
    # a simple sits on the boundary: one arrow in, one arrow out, nothing below it
    code, out = run("ar-quiver", "--site", ZS, "--center", '{"socle":0,"top":0,"winding":0}',
                    "--radius", "3", "--format", "json")
    g = json.loads(out)
    heights = {n["id"]: n["y"] for n in g["nodes"]}
    center = next(n["id"] for n in g["nodes"] if n["center"])
    assert min(heights.values()) == heights[center] == 0
    assert sum(1 for u, v in g["edges"] if u == center) == 1
    assert sum(1 for u, v in g["edges"] if v == center) == 1
    # heights grow with length: the triangle shape of a ZA_infinity component
    for n in g["nodes"]:
        obj = object_from_json(site_from_json(ZS), n["object"])
        assert n["y"] == obj.length - 1


def test_ar_quiver_tube_edges_are_irreducible():
    code, out = run("ar-quiver", "--site", T2, "--center", '{"socle":0,"top":0}', "--format", "json")
    g = json.loads(out)
    site = tube(2)
    objs = {n["id"]: object_from_json(site, n["object"]) for n in g["nodes"]}
    for u, v in g["edges"]:
        assert objs[v] in irreducibles_out(objs[u])
    assert simple(site, 0) in objs.values()


def test_subobjects_and_perp():
    code, out = run("subobjects", "--site", ZS, "--obj", '{"socle":0,"top":0,"winding":1}', "--limit", "4")
    data = json.loads(out)
    assert code == 0 and len(data["chain"]) == 4 and data["chain"][0] is None and not data["complete"]
    code, out = run("perp", "--site", ZS, "--keep", "[0,5]", "--obj", '{"socle":3,"top":8,"winding":0}')
    data = json.loads(out)
    assert data["inner"] == {"kind": "loop", "base": "cyclic", "rank": 2}
    assert data["reflect"]["inner"]["socle"] == 1


def test_oracle_check(tmp_path):
    fig = tmp_path / "hom.png"
    code, out = run("oracle-check", "--rank", "2", "--max-winding", "1", "--field", "Q", "--figure", str(fig))
    data = json.loads(out)
    assert code == 0 and data["mismatches"] == [] and data["pairs"] == 64 and data["objects"] == 8
    assert fig.exists()


def test_coalgebra_and_inj_matrix():
    code, out = run("coalgebra-check", "--rank", "2", "--trunc", "5")
    assert code == 0 and json.loads(out)["duality"]
    code, out = run("inj-matrix", "--site", ZS, "--keep", "[7,0,3]", "--products")
    data = json.loads(out)
    assert data["keep"] == [0, 3, 7]
    assert data["pattern"] == [[0, 1, 1], [0, 0, 1], [0, 0, 0]]
    assert data["matches_display"]
    assert len(data["products"]) == 27


def test_transport_check():
    code, out = run("transport-check", "--site", T2, "--pairs", "50")
    assert code == 0 and json.loads(out)["mismatches"] == []


@pytest.mark.parametrize("argv", [
    ["hom", "--site", "{bad", "--from", "{}", "--to", "{}"],
    ["hom", "--site", T2, "--from", '{"socle":5,"top":0}', "--to", '{"socle":0,"top":0}'],
    ["ar", "--site", '{"kind":"linear","base":"finite","size":3}', "--obj", '{"socle":1,"top":2}'],
    ["perp", "--site", ZS, "--keep", "[]"],
    ["oracle-check", "--rank", "0"],
    ["oracle-check", "--rank", "2", "--field", "10"],
    ["nonsense"],
])
def test_validation_errors_exit_2(argv):
    code, _ = run(*argv)
    assert code == 2


def test_check_failure_exits_3(monkeypatch):
    import uniserial.cli as cli
    monkeypatch.setattr(cli, "oracle_sweep", lambda objs, field: {"pairs": 1, "mismatches": [{"kind": "hom"}]})
    code, out = run("oracle-check", "--rank", "1")
    assert code == 3 and json.loads(out)["mismatches"]
