import json

import pytest

from app.core import linalg
from app.types.errors import DomainError
from app.types.schemas import (FramedPointModel, JobSpec, MultisegmentModel, RepPointModel, TableauModel,
                               parse_model)
from app.types.segments import Multisegment


def test_rep_point_model_round_trip():
    text = json.dumps({"dims": [1, 2], "maps": {"a1": [["1/2", 0]]}})
    p = parse_model(RepPointModel, text).to_point()
    assert p.dims == (1, 2)
    assert not p.is_double
    back = RepPointModel.from_point(p)
    assert back.maps == {"a1": [["1/2", "0"]]}


def test_rep_point_model_errors():
    with pytest.raises(DomainError):
        parse_model(RepPointModel, "{not json")
    with pytest.raises(DomainError):
        parse_model(RepPointModel, json.dumps({"dims": [1, 1], "maps": {"b7": [[1]]}})).to_point()
    with pytest.raises(DomainError):
        parse_model(RepPointModel, json.dumps({"dims": [1, 1], "maps": {"a1": [[1, 2]]}})).to_point()
    with pytest.raises(DomainError):
        parse_model(RepPointModel, json.dumps({"dims": [], "maps": {}})).to_point()


def test_framed_point_model_defaults_missing_framing_to_zero():
    text = json.dumps({"dims": [1, 1], "maps": {"a1": [[0]], "a1bar": [[1]]}, "wdims": [1, 0], "t": {"1": [[1]]}})
    fp = parse_model(FramedPointModel, text).to_framed()
    assert fp.framing[2].shape == (0, 1)
    assert linalg.equal(fp.framing[1], linalg.as_matrix([[1]]))
    with pytest.raises(DomainError):
        parse_model(FramedPointModel, json.dumps({"dims": [1], "maps": {}, "wdims": [1, 1]})).to_framed()


def test_multisegment_model():
    m = MultisegmentModel(segments=[(1, 2), (2, 2)]).to_multisegment(3)
    assert m == Multisegment.of(3, [(2, 2), (1, 2)])
    assert MultisegmentModel.from_multisegment(m).model_dump() == {"segments": [(2, 2), (1, 2)], "n": 3}
    with pytest.raises(DomainError):
        MultisegmentModel(segments=[(1, 1)]).to_multisegment()
    with pytest.raises(DomainError):
        MultisegmentModel(segments=[(2, 1)], n=2).to_multisegment()


def test_tableau_model():
    assert TableauModel(rows=[[1, 1], [2]]).to_tableau(2).key() == "(11/2)"


def test_job_spec_validation():
    assert JobSpec.build(command="gen-blambda", n=2, wdims=[1, 1]).seed == 0
    for bad in ({"wdims": [1, -1]}, {"wdims": [1]}, {"seed": -1}, {"jobs": 0}, {"depth": -2}):
        with pytest.raises(DomainError):
            JobSpec.build(command="gen-blambda", n=2, **bad)
