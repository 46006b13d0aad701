import json
import xml.etree.ElementTree as ET

import pytest
from hypothesis import given, strategies as st

from asmlab import codec
from asmlab.asm import enumerate_asms, identity
from asmlab.fpl import MINUS, LinkPattern, enumerate_fpls, enumerate_link_patterns, example_fpl_n3
from asmlab.height import asm_to_height
from asmlab.render import BadPayload, fpl_ascii, ice_ascii, render
from asmlab.sixvertex import asm_to_sixvertex, open_state_n1


def test_n1_fpl_sketch():
    (f,) = enumerate_fpls(1, MINUS)
    text = fpl_ascii(f)
    assert text.count("#") == 2 and text.count(".") == 2


def test_n1_ice_sketch():
    assert ice_ascii(open_state_n1()) == "  o\n  ^\no>+<o\n  v\n  o\n"


@pytest.mark.parametrize(
    "obj",
    [example_fpl_n3(), asm_to_sixvertex(identity(3)), LinkPattern.of([(1, 2), (3, 4)])],
)
def test_svg_is_well_formed(obj):
    root = ET.fromstring(render(obj, "svg"))
    assert root.tag.endswith("svg")


def test_link_svg_arcs():
    svg = render(LinkPattern.of([(1, 2), (3, 4)]), "svg")
    assert svg.count(" A ") == 2


def test_fpl_dot_styles():
    dot = render(example_fpl_n3(), "dot")
    assert dot.count("style=solid") == 12 and dot.count("style=dashed") == 12


def test_unsupported_format():
    with pytest.raises(BadPayload):
        render(identity(2), "svg")


def test_rendering_is_deterministic():
    f = example_fpl_n3()
    assert render(f, "svg") == render(f, "svg")


def test_matrix_ascii():
    assert render(asm_to_height(identity(1)), "ascii") == "0 1\n1 0\n"


@given(st.integers(1, 4), st.data())
def test_codec_roundtrip(n, data):
    a = data.draw(st.sampled_from(list(enumerate_asms(n))))
    for obj in (a, asm_to_sixvertex(a), asm_to_height(a)):
        text = codec.to_text(codec.dump(obj))
        assert codec.loads(text) == obj
    mu = data.draw(st.sampled_from(enumerate_link_patterns(n)))
    assert codec.loads(codec.to_text(codec.dump(mu))) == mu


def test_codec_errors():
    with pytest.raises(codec.PayloadError):
        codec.loads("[]")
    with pytest.raises(codec.PayloadError):
        codec.load({"schema": "other/2", "kind": "asm"})
    with pytest.raises(codec.PayloadError):
        codec.load({"kind": "asm", "n": 2})
    with pytest.raises(codec.PayloadError):
        codec.load({"kind": "sixvertex", "m": 1, "n": 1, "bits": "oA=="})


def test_sixvertex_payload_lists_types():
    data = codec.dump(open_state_n1())
    assert data["types"] == [["NS"]]
    assert json.loads(codec.to_text(data))["kind"] == "sixvertex"
